#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "baxter/numeric.hpp"

namespace baxter {

/// Polynomial in the weight λ with exact integer coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// kept, so two equal polynomials always have identical term maps.
class LambdaPoly {
 public:
  using Exponent = std::uint32_t;
  using Terms = std::map<Exponent, BigInt>;

  LambdaPoly() = default;
  LambdaPoly(int constant) : LambdaPoly(BigInt(constant)) {}  // NOLINT
  LambdaPoly(BigInt constant) {                               // NOLINT
    if (constant != 0) terms_.emplace(0, std::move(constant));
  }

  static LambdaPoly monomial(Exponent e, BigInt coeff) {
    LambdaPoly p;
    if (coeff != 0) p.terms_.emplace(e, std::move(coeff));
    return p;
  }
  static LambdaPoly lambda() { return monomial(1, 1); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] BigInt coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(Exponent e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LambdaPoly& operator+=(const LambdaPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LambdaPoly& operator-=(const LambdaPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LambdaPoly operator+(LambdaPoly l, const LambdaPoly& r) { return l += r; }
  friend LambdaPoly operator-(LambdaPoly l, const LambdaPoly& r) { return l -= r; }
  friend LambdaPoly operator-(const LambdaPoly& p) { return LambdaPoly{} - p; }

  friend LambdaPoly operator*(const LambdaPoly& l, const LambdaPoly& r) {
    LambdaPoly out;
    for (const auto& [e1, c1] : l.terms_)
      for (const auto& [e2, c2] : r.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
  }
  LambdaPoly& operator*=(const LambdaPoly& o) { return *this = *this * o; }

  /// Multiplies by λ^k.
  [[nodiscard]] LambdaPoly shifted(Exponent k) const {
    LambdaPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    return out;
  }

  [[nodiscard]] Rational evaluate(const Rational& q) const {
    Rational acc = 0;
    Rational power = 1;
    Exponent at = 0;
    for (const auto& [e, c] : terms_) {
      for (; at < e; ++at) power *= q;
      acc += power * Rational(c);
    }
    return acc;
  }

  /// Every coefficient is nonnegative.
  [[nodiscard]] bool nonnegative() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

  /// Human-readable form such as "2λ^2 + λ + 1" (descending powers).
  [[nodiscard]] std::string to_string(const std::string& var = "λ") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (e == 0 || mag != 1) out += mag.str();
      if (e >= 1) out += var;
      if (e >= 2) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) { return os << p.to_string(); }

}  // namespace baxter
