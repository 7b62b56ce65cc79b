#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "baxter/combination.hpp"

namespace baxter::models {

/// Values f(1), ..., f(M) of a sequence on a finite horizon M >= 1.
class FiniteSequence {
 public:
  explicit FiniteSequence(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("sequence horizon must be positive");
  }

  static FiniteSequence constant(std::size_t horizon, const Rational& v) {
    if (horizon == 0) throw std::invalid_argument("sequence horizon must be positive");
    return FiniteSequence(std::vector<Rational>(horizon, v));
  }
  static FiniteSequence ones(std::size_t horizon) { return constant(horizon, 1); }

  [[nodiscard]] std::size_t horizon() const { return values_.size(); }
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
  /// 1-based, matching f(m).
  [[nodiscard]] const Rational& at(std::size_t m) const { return values_.at(m - 1); }

  FiniteSequence& operator+=(const FiniteSequence& o) {
    require_same_horizon(o);
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
    return *this;
  }
  friend FiniteSequence operator+(FiniteSequence l, const FiniteSequence& r) { return l += r; }

  friend FiniteSequence operator*(const FiniteSequence& l, const FiniteSequence& r) {
    l.require_same_horizon(r);
    std::vector<Rational> v(l.values_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = l.values_[k] * r.values_[k];
    return FiniteSequence(std::move(v));
  }
  friend FiniteSequence operator*(FiniteSequence s, const Rational& c) {
    for (auto& v : s.values_) v *= c;
    return s;
  }

  friend bool operator==(const FiniteSequence&, const FiniteSequence&) = default;

 private:
  void require_same_horizon(const FiniteSequence& o) const {
    if (o.values_.size() != values_.size())
      throw std::invalid_argument("horizon mismatch: " + std::to_string(values_.size()) + " vs " +
                                  std::to_string(o.values_.size()));
  }

  std::vector<Rational> values_;
};

/// Weight -1 Rota-Baxter operator: P(f)(m) = f(1) + ... + f(m).
[[nodiscard]] inline FiniteSequence prefix_sum(const FiniteSequence& s) {
  std::vector<Rational> out(s.horizon());
  Rational acc = 0;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = acc += s.values()[k];
  return FiniteSequence(std::move(out));
}

[[nodiscard]] inline FiniteSequence prefix_sum_times(FiniteSequence s, std::uint32_t n) {
  for (std::uint32_t k = 0; k < n; ++k) s = prefix_sum(s);
  return s;
}

/// P^c(P^a(f)·P^b(g)) with pointwise products.
[[nodiscard]] inline FiniteSequence eval_tree_sum(const Tree& t, const FiniteSequence& f, const FiniteSequence& g) {
  return prefix_sum_times(prefix_sum_times(f, t.a) * prefix_sum_times(g, t.b), t.c);
}

/// Evaluates rhs at λ = -1 and compares both sides at every m <= M.
[[nodiscard]] inline bool check_combination_sum(const Tree& lhs, const Combination& rhs, const FiniteSequence& f,
                                                const FiniteSequence& g) {
  const FiniteSequence left = eval_tree_sum(lhs, f, g);
  FiniteSequence sum = FiniteSequence::constant(f.horizon(), 0);
  for (const auto& [tree, coeff] : evaluate_lambda(rhs, -1)) sum += eval_tree_sum(tree, f, g) * coeff;
  return sum == left;
}

/// P(u)P(v) = P(uP(v)) + P(P(u)v) - P(uv) exactly.
[[nodiscard]] inline bool rota_baxter_law_sum(const FiniteSequence& u, const FiniteSequence& v) {
  const auto pu = prefix_sum(u);
  const auto pv = prefix_sum(v);
  return pu * pv == prefix_sum(u * pv) + prefix_sum(pu * v) + prefix_sum(u * v) * Rational(-1);
}

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// |{(n_1..n_a) : 1 <= n_1 <= ... <= n_a <= m}| by walking every tuple.
[[nodiscard]] inline BigInt chain_count(std::uint32_t a, std::uint32_t m, std::uint64_t cap = kDefaultEnumerationCap) {
  if (a == 0 || m == 0) throw std::invalid_argument("chain_count needs a, m >= 1");
  std::vector<std::uint32_t> tuple(a, 1);
  std::uint64_t count = 0;
  while (true) {
    if (++count > cap) throw CapExceeded("chain enumeration exceeded " + std::to_string(cap) + " tuples");
    // advance to the next weakly increasing tuple
    std::size_t k = a;
    while (k > 0 && tuple[k - 1] == m) --k;
    if (k == 0) break;
    const std::uint32_t v = ++tuple[k - 1];
    for (std::size_t r = k; r < a; ++r) tuple[r] = v;
  }
  return count;
}

/// The a-fold prefix sum of the constant sequence 1, read at m.
[[nodiscard]] inline BigInt chain_count_by_prefix_sum(std::uint32_t a, std::uint32_t m) {
  const Rational v = prefix_sum_times(FiniteSequence::ones(m), a).at(m);
  return boost::multiprecision::numerator(v);
}

struct ChainCountRow {
  std::uint32_t a = 0;
  std::uint32_t m = 0;
  BigInt enumeration;
  BigInt prefix_sum;
  BigInt binomial_sum;  // Σ_{s=1..m} C(m,s) C(a,s)
  BigInt printed;       // C(a+m, m) - 1
  [[nodiscard]] bool operator_agrees() const { return enumeration == prefix_sum; }
  [[nodiscard]] bool printed_agrees() const { return enumeration == printed; }
};

struct ChainCountReport {
  std::vector<ChainCountRow> rows;  // ordered by (a, m)
  [[nodiscard]] std::vector<const ChainCountRow*> disagreements() const {
    std::vector<const ChainCountRow*> out;
    for (const auto& r : rows)
      if (!r.printed_agrees() || !r.operator_agrees()) out.push_back(&r);
    return out;
  }
};

[[nodiscard]] inline ChainCountReport chain_count_formula_report(std::uint32_t a_max, std::uint32_t m_max,
                                                                 std::uint64_t cap = kDefaultEnumerationCap) {
  ChainCountReport report;
  for (std::uint32_t a = 1; a <= a_max; ++a) {
    for (std::uint32_t m = 1; m <= m_max; ++m) {
      ChainCountRow row{a, m, chain_count(a, m, cap), chain_count_by_prefix_sum(a, m), 0,
                        binomial(a + m, m) - 1};
      for (std::uint32_t s = 1; s <= m; ++s) row.binomial_sum += binomial(m, s) * binomial(a, s);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

[[nodiscard]] inline Json to_json(const FiniteSequence& s) {
  Json out = Json::array();
  for (const auto& v : s.values()) out.push_back(to_fraction(v));
  return out;
}

[[nodiscard]] inline Json to_json(const ChainCountReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"a", row.a},
                    {"m", row.m},
                    {"enumeration", to_decimal(row.enumeration)},
                    {"prefix_sum", to_decimal(row.prefix_sum)},
                    {"binomial_sum", to_decimal(row.binomial_sum)},
                    {"printed", to_decimal(row.printed)},
                    {"agree", row.printed_agrees() && row.operator_agrees()}});
  return {{"rows", rows}, {"disagreements", r.disagreements().size()}};
}

}  // namespace baxter::models
