#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "baxter/lambda_poly.hpp"
#include "baxter/tree.hpp"

namespace baxter {

using Json = nlohmann::ordered_json;

/// Finite formal sum of trees with coefficients in Z[λ].
///
/// Keys iterate in (a,b,c) lexicographic order and zero coefficients are
/// pruned on every update, so equal sums compare and serialize identically.
class Combination {
 public:
  using Entries = std::map<Tree, LambdaPoly>;

  Combination() = default;
  Combination(std::initializer_list<std::pair<Tree, LambdaPoly>> init) {
    for (const auto& [t, p] : init) add(t, p);
  }

  static Combination single(const Tree& t) {
    Combination out;
    out.add(t, 1);
    return out;
  }

  void add(const Tree& t, const LambdaPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(t, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  /// Adds c·λ^e to the coefficient of t.
  void add_term(const Tree& t, LambdaPoly::Exponent e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace(t);
    it->second.add_term(e, c);
    if (it->second.is_zero()) entries_.erase(it);
  }

  [[nodiscard]] const Entries& entries() const { return entries_; }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }

  [[nodiscard]] LambdaPoly coeff(const Tree& t) const {
    auto it = entries_.find(t);
    return it == entries_.end() ? LambdaPoly{} : it->second;
  }

  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }

  Combination& operator+=(const Combination& o) {
    for (const auto& [t, p] : o.entries_) add(t, p);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [t, p] : o.entries_) add(t, -p);
    return *this;
  }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Entries entries_;
};

[[nodiscard]] inline Combination combination_add(const Combination& u, const Combination& v) {
  Combination out = u;
  out += v;
  return out;
}

[[nodiscard]] inline Combination combination_scale(const Combination& u, const LambdaPoly& p) {
  Combination out;
  if (p.is_zero()) return out;
  for (const auto& [t, q] : u) out.add(t, q * p);
  return out;
}

/// Every key T(a,b,c) becomes T(a,b,c+k).
[[nodiscard]] inline Combination neck_shift(const Combination& u, std::uint32_t k) {
  Combination out;
  for (const auto& [t, p] : u) out.add(Tree{t.a, t.b, t.c + k}, p);
  return out;
}

[[nodiscard]] inline std::map<Tree, Rational> evaluate_lambda(const Combination& u, const Rational& q) {
  std::map<Tree, Rational> out;
  for (const auto& [t, p] : u) {
    Rational v = p.evaluate(q);
    if (v != 0) out.emplace_hint(out.end(), t, std::move(v));
  }
  return out;
}

/// Specializes at λ = q and lifts the (integral) values back to constants.
[[nodiscard]] inline Combination specialize_lambda(const Combination& u, const BigInt& q) {
  Combination out;
  for (const auto& [t, v] : evaluate_lambda(u, Rational(q)))
    out.add(t, LambdaPoly(boost::multiprecision::numerator(v)));
  return out;
}

/// Swaps the legs of every key: T(a,b,c) -> T(b,a,c).
[[nodiscard]] inline Combination mirror(const Combination& u) {
  Combination out;
  for (const auto& [t, p] : u) out.add(Tree{t.b, t.a, t.c}, p);
  return out;
}

// JSON: [[e, "coeff"], ...] ascending e; combinations as arrays of
// {"tree": [a,b,c], "coeff": ...} in key order.

[[nodiscard]] inline Json to_json(const LambdaPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e, to_decimal(c)});
  return out;
}

[[nodiscard]] inline Json to_json(const Tree& t) { return Json::array({t.a, t.b, t.c}); }

[[nodiscard]] inline Json to_json(const Combination& u) {
  Json out = Json::array();
  for (const auto& [t, p] : u) out.push_back({{"tree", to_json(t)}, {"coeff", to_json(p)}});
  return out;
}

[[nodiscard]] inline LambdaPoly lambda_poly_from_json(const Json& j) {
  LambdaPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_string())
      throw std::invalid_argument("coefficient term must be [exponent, \"decimal\"]");
    p.add_term(term[0].get<LambdaPoly::Exponent>(), BigInt(term[1].get<std::string>()));
  }
  return p;
}

[[nodiscard]] inline Combination combination_from_json(const Json& j) {
  Combination out;
  for (const auto& entry : j) {
    const auto& t = entry.at("tree");
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("tree must be [a,b,c]");
    out.add(Tree{t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>(), t[2].get<std::uint32_t>()},
            lambda_poly_from_json(entry.at("coeff")));
  }
  return out;
}

}  // namespace baxter
