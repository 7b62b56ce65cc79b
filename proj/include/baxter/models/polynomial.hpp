#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "baxter/combination.hpp"

namespace baxter::models {

/// Univariate polynomial with exact rational coefficients; index = power.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
  explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial{c}; }
  static RationalPolynomial monomial(std::size_t power, const Rational& c = 1) {
    std::vector<Rational> v(power + 1, Rational(0));
    v[power] = c;
    return RationalPolynomial(std::move(v));
  }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  RationalPolynomial& operator+=(const RationalPolynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  RationalPolynomial& operator-=(const RationalPolynomial& o) { return *this += o * Rational(-1); }

  friend RationalPolynomial operator+(RationalPolynomial l, const RationalPolynomial& r) { return l += r; }
  friend RationalPolynomial operator-(RationalPolynomial l, const RationalPolynomial& r) { return l -= r; }

  friend RationalPolynomial operator*(const RationalPolynomial& l, const RationalPolynomial& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Rational> v(l.coeffs_.size() + r.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < r.coeffs_.size(); ++j) v[i + j] += l.coeffs_[i] * r.coeffs_[j];
    return RationalPolynomial(std::move(v));
  }
  friend RationalPolynomial operator*(RationalPolynomial p, const Rational& s) {
    for (auto& c : p.coeffs_) c *= s;
    p.trim();
    return p;
  }

  [[nodiscard]] Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  [[nodiscard]] std::string to_string(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      const Rational mag = c < 0 ? Rational(-c) : c;
      if (k == 0 || mag != 1) out += to_fraction(mag);
      if (k >= 1) out += (mag != 1 ? "*" : "") + var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Weight-zero Rota-Baxter operator: f -> ∫_0^x f.
[[nodiscard]] inline RationalPolynomial integrate_from_zero(const RationalPolynomial& p) {
  std::vector<Rational> v(p.coeffs().size() + 1, Rational(0));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) v[k + 1] = p.coeffs()[k] / Rational(k + 1);
  return RationalPolynomial(std::move(v));
}

[[nodiscard]] inline RationalPolynomial integrate_times(const RationalPolynomial& p, std::uint32_t n) {
  RationalPolynomial out = p;
  for (std::uint32_t k = 0; k < n; ++k) out = integrate_from_zero(out);
  return out;
}

/// P^c(P^a(f)·P^b(g)) in the integral model.
[[nodiscard]] inline RationalPolynomial eval_tree_integral(const Tree& t, const RationalPolynomial& f,
                                                           const RationalPolynomial& g) {
  return integrate_times(integrate_times(f, t.a) * integrate_times(g, t.b), t.c);
}

/// Evaluates rhs at λ = 0 and checks lhs(f,g) == Σ coeff·tree(f,g).
[[nodiscard]] inline bool check_combination_integral(const Tree& lhs, const Combination& rhs,
                                                     const RationalPolynomial& f, const RationalPolynomial& g) {
  RationalPolynomial sum;
  for (const auto& [tree, coeff] : evaluate_lambda(rhs, 0)) sum += eval_tree_integral(tree, f, g) * coeff;
  return sum == eval_tree_integral(lhs, f, g);
}

/// P(u)P(v) = P(uP(v)) + P(P(u)v) exactly.
[[nodiscard]] inline bool rota_baxter_law_integral(const RationalPolynomial& u, const RationalPolynomial& v) {
  const auto pu = integrate_from_zero(u);
  const auto pv = integrate_from_zero(v);
  return pu * pv == integrate_from_zero(u * pv) + integrate_from_zero(pu * v);
}

/// v(x,y) stored as Σ_k coeff_k(y)·x^k.
class KernelPolynomial {
 public:
  KernelPolynomial() = default;
  explicit KernelPolynomial(std::vector<RationalPolynomial> by_x_power) : by_x_(std::move(by_x_power)) { trim(); }

  [[nodiscard]] const std::vector<RationalPolynomial>& by_x_power() const { return by_x_; }

  /// Coefficient of x^i y^j.
  [[nodiscard]] Rational coeff(std::size_t i, std::size_t j) const { return i < by_x_.size() ? by_x_[i][j] : Rational(0); }

  /// -1 for zero.
  [[nodiscard]] long long total_degree() const {
    long long d = -1;
    for (std::size_t k = 0; k < by_x_.size(); ++k)
      if (!by_x_[k].is_zero()) d = std::max(d, static_cast<long long>(k) + by_x_[k].degree());
    return d;
  }

  /// The univariate polynomial in x obtained at y = y0.
  [[nodiscard]] RationalPolynomial at_y(const Rational& y0) const {
    std::vector<Rational> v;
    v.reserve(by_x_.size());
    for (const auto& c : by_x_) v.push_back(c.evaluate(y0));
    return RationalPolynomial(std::move(v));
  }

  [[nodiscard]] Rational evaluate(const Rational& x, const Rational& y) const { return at_y(y).evaluate(x); }

  friend bool operator==(const KernelPolynomial&, const KernelPolynomial&) = default;

 private:
  void trim() {
    while (!by_x_.empty() && by_x_.back().is_zero()) by_x_.pop_back();
  }

  std::vector<RationalPolynomial> by_x_;
};

/// Volume v_a(x,y) of {x <= x_1 <= ... <= x_a <= y}, built by repeated
/// integration v_a(x,y) = ∫_x^y v_{a-1}(t,y) dt from v_0 = 1.
[[nodiscard]] inline KernelPolynomial simplex_volume(std::uint32_t a) {
  KernelPolynomial v({RationalPolynomial{1}});
  for (std::uint32_t step = 0; step < a; ++step) {
    const auto& g = v.by_x_power();
    // F(t,y) = Σ g_k(y) t^{k+1}/(k+1); result = F(y,y) - F(x,y)
    std::vector<RationalPolynomial> next(g.size() + 1);
    RationalPolynomial upper;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const RationalPolynomial antideriv = g[k] * Rational(1, static_cast<long long>(k + 1));
      next[k + 1] = antideriv * Rational(-1);
      upper += antideriv * RationalPolynomial::monomial(k + 1);
    }
    next[0] = upper;
    v = KernelPolynomial(std::move(next));
  }
  return v;
}

/// Checks P^{a+1}(f)(y0) == ∫_0^{y0} f(x) v_a(x,y0) dx at every sample.
/// Both sides are polynomials in y of degree deg f + a + 1, so at least that
/// many plus one distinct samples are required.
[[nodiscard]] inline bool kernel_representation_check(std::uint32_t a, const RationalPolynomial& f,
                                                      std::span<const Rational> samples) {
  const std::set<Rational> distinct(samples.begin(), samples.end());
  if (distinct.size() != samples.size()) throw std::invalid_argument("kernel samples must be distinct");
  const long long degree = std::max<long long>(f.degree(), 0) + a + 1;
  if (static_cast<long long>(samples.size()) < degree + 1)
    throw std::invalid_argument("kernel check needs at least " + std::to_string(degree + 1) + " samples, got " +
                                std::to_string(samples.size()));
  const KernelPolynomial kernel = simplex_volume(a);
  const RationalPolynomial direct = integrate_times(f, a + 1);
  for (const Rational& y0 : samples) {
    const RationalPolynomial integrand = f * kernel.at_y(y0);
    if (integrate_from_zero(integrand).evaluate(y0) != direct.evaluate(y0)) return false;
  }
  return true;
}

[[nodiscard]] inline Json to_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_fraction(c));
  return out;
}

}  // namespace baxter::models
