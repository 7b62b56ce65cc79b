#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "baxter/combination.hpp"
#include "baxter/rewrite.hpp"

namespace baxter {

/// Which version of the generic identity to generate.
///
/// kAsPublished follows the printed statement literally: the second sum uses
/// the printed c2 over the printed D2, and the third sum is also weighted by
/// the printed c2.  kReconciled uses the coefficients obtained by solving the
/// move-count constraints: c2 depends on i with its own domain D2', and the
/// third sum uses c3.
enum class Mode : std::uint8_t { kAsPublished, kReconciled };

[[nodiscard]] constexpr std::string_view mode_name(Mode m) {
  return m == Mode::kAsPublished ? "as-published" : "reconciled";
}

[[nodiscard]] inline Mode parse_mode(std::string_view s) {
  if (s == "as-published") return Mode::kAsPublished;
  if (s == "reconciled") return Mode::kReconciled;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

/// (i,j): surviving leg dots and number of moves.  i is 0 for the D5 family.
struct DomainPoint {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  friend auto operator<=>(const DomainPoint&, const DomainPoint&) = default;
};

/// n!/(k1! k2! k3!) when every part is nonnegative and they sum to n, else 0.
[[nodiscard]] inline BigInt multinomial(long long n, long long k1, long long k2, long long k3) {
  if (n < 0 || k1 < 0 || k2 < 0 || k3 < 0 || k1 + k2 + k3 != n) return 0;
  return binomial(n, k1) * binomial(n - k1, k2);
}

/// Arguments of one closed-form coefficient: C(n; k1,k2,k3)·λ^exponent.
struct CoefficientArgs {
  long long n = 0;
  long long k1 = 0;
  long long k2 = 0;
  long long k3 = 0;
  long long exponent = 0;
  friend bool operator==(const CoefficientArgs&, const CoefficientArgs&) = default;
};

/// Coefficient parameters weighting the given sum at (i,j).
[[nodiscard]] inline CoefficientArgs coefficient_args(Family sum, Mode mode, long long a, long long b, long long i,
                                                      long long j) {
  switch (sum) {
    case Family::kLeftMove:
      return {j - 1, i + j - b - 1, j - a, a + b - i - j, a + b - i - j};
    case Family::kMergeToRightLeg:
      if (mode == Mode::kAsPublished) return {j - 1, j - b, j - a, a + b - j - 1, a + b - j};
      return {j - 1, i + j - b, j - a, a + b - i - j - 1, a + b - i - j};
    case Family::kRightMove:
      // printed with the c2 label
      if (mode == Mode::kAsPublished) return {j - 1, j - b, j - a, a + b - j - 1, a + b - j};
      return {j - 1, j - b, i + j - a - 1, a + b - i - j, a + b - i - j};
    case Family::kMergeToLeftLeg:
      return {j - 1, j - b, i + j - a, a + b - i - j - 1, a + b - i - j};
    case Family::kMergeToNeck:
      return {j - 1, j - b, j - a, a + b - j - 1, a + b - j};
  }
  throw std::logic_error("unknown sum");
}

[[nodiscard]] inline bool in_domain(Family sum, Mode mode, long long a, long long b, long long i, long long j) {
  if (j < 1) return false;
  switch (sum) {
    case Family::kLeftMove:
      return 1 <= i && i <= b && a <= j && b - i + 1 <= j && j <= a + b - i;
    case Family::kMergeToRightLeg:
      if (mode == Mode::kAsPublished) return 1 <= i && i <= b - 1 && a <= j && b <= j && j <= a + b - 1;
      return 1 <= i && i <= b - 1 && a <= j && b - i <= j && j <= a + b - i - 1;
    case Family::kRightMove:
      return 1 <= i && i <= a && a - i + 1 <= j && b <= j && j <= a + b - i;
    case Family::kMergeToLeftLeg:
      return 1 <= i && i <= a - 1 && a - i <= j && b <= j && j <= a + b - i - 1;
    case Family::kMergeToNeck:
      return i == 0 && a <= j && b <= j && j <= a + b - 1;
  }
  return false;
}

/// Every (i,j) in the chosen domain, in (i,j) order.
[[nodiscard]] inline std::vector<DomainPoint> enumerate_domain(std::uint32_t a, std::uint32_t b, Family which,
                                                               Mode mode) {
  if (a == 0 || b == 0) throw std::invalid_argument("domains are defined for a, b >= 1");
  std::vector<DomainPoint> out;
  const long long imax = which == Family::kMergeToNeck ? 0 : static_cast<long long>(std::max(a, b));
  for (long long i = 0; i <= imax; ++i)
    for (long long j = 1; j <= static_cast<long long>(a) + b; ++j)
      if (in_domain(which, mode, a, b, i, j))
        out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  return out;
}

namespace detail {

class Factorials {
 public:
  const BigInt& operator()(std::size_t n) {
    while (table_.size() <= n) table_.push_back(table_.back() * table_.size());
    return table_[n];
  }
  BigInt multinomial(const CoefficientArgs& k) {
    if (k.n < 0 || k.k1 < 0 || k.k2 < 0 || k.k3 < 0 || k.k1 + k.k2 + k.k3 != k.n) return 0;
    (*this)(static_cast<std::size_t>(k.n));  // grow first; the references below must stay valid
    BigInt den = table_[k.k1] * table_[k.k2];
    den *= table_[k.k3];
    return table_[k.n] / den;
  }

 private:
  std::vector<BigInt> table_{BigInt(1)};
};

inline void require_legs(std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("closed forms need a, b >= 1; got a=" + std::to_string(a) + ", b=" + std::to_string(b));
}

}  // namespace detail

/// The five sums of the generic identity, one Combination per sum.
[[nodiscard]] inline FamilySplit generic_identity_sums(std::uint32_t a, std::uint32_t b, std::uint32_t c, Mode mode) {
  detail::require_legs(a, b);
  detail::Factorials fact;
  FamilySplit out;
  for (std::size_t s = 0; s < kFamilyCount; ++s) {
    const auto sum = static_cast<Family>(s);
    for (const DomainPoint& p : enumerate_domain(a, b, sum, mode)) {
      const CoefficientArgs k = coefficient_args(sum, mode, a, b, p.i, p.j);
      if (k.exponent < 0) continue;
      BigInt coeff = fact.multinomial(k);
      if (coeff == 0) continue;
      Tree target{0, 0, c + p.j};
      if (sum == Family::kLeftMove || sum == Family::kMergeToRightLeg) target.b = p.i;
      if (sum == Family::kRightMove || sum == Family::kMergeToLeftLeg) target.a = p.i;
      out[s].add_term(target, static_cast<LambdaPoly::Exponent>(k.exponent), coeff);
    }
  }
  return out;
}

[[nodiscard]] inline Combination generic_identity(std::uint32_t a, std::uint32_t b, std::uint32_t c, Mode mode) {
  Combination out;
  for (const auto& part : generic_identity_sums(a, b, c, mode)) out += part;
  return out;
}

/// Weight-zero identity: the sum landing on T(0,i,.) and the sum landing on
/// T(i,0,.).
[[nodiscard]] inline std::array<Combination, 2> restricted_identity_sums(std::uint32_t a, std::uint32_t b,
                                                                         std::uint32_t c) {
  detail::require_legs(a, b);
  std::array<Combination, 2> out;
  for (std::uint32_t i = 1; i <= b; ++i)
    out[0].add(Tree{0, i, a + b + c - i}, LambdaPoly(binomial(a - 1 + b - i, a - 1)));
  for (std::uint32_t i = 1; i <= a; ++i)
    out[1].add(Tree{i, 0, a + b + c - i}, LambdaPoly(binomial(b - 1 + a - i, b - 1)));
  return out;
}

[[nodiscard]] inline Combination restricted_identity(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  auto sums = restricted_identity_sums(a, b, c);
  return sums[0] += sums[1];
}

}  // namespace baxter
