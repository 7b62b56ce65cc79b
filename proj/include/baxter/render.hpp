#pragma once

#include <string>

#include "baxter/combination.hpp"

namespace baxter {

namespace detail {

inline std::string latex_power(const std::string& base, std::uint32_t n) {
  if (n == 0) return "";
  if (n == 1) return base;
  return base + "^{" + std::to_string(n) + "}";
}

}  // namespace detail

/// P^c(P^a(x)P^b(y)) in the usual operator notation, e.g. P^{2}(xP(y)).
[[nodiscard]] inline std::string operator_latex(const Tree& t) {
  std::string left = t.a == 0 ? "x" : detail::latex_power("P", t.a) + "(x)";
  std::string right = t.b == 0 ? "y" : detail::latex_power("P", t.b) + "(y)";
  std::string body = left + right;
  if (t.c == 0) return body;
  return detail::latex_power("P", t.c) + "(" + body + ")";
}

[[nodiscard]] inline std::string tree_latex(const Tree& t) {
  return "T(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
}

[[nodiscard]] inline std::string lambda_poly_latex(const LambdaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0 || mag != 1) out += mag.str();
    if (e >= 1) out += detail::latex_power("\\lambda", e);
  }
  return out;
}

/// Text form: "T(1,1,0) = T(0,1,1) + T(1,0,1) + λ·T(0,0,1)".
[[nodiscard]] inline std::string render_text(const Tree& lhs, const Combination& rhs) {
  std::string out = lhs.to_string() + " =";
  if (rhs.empty()) return out + " 0";
  bool first = true;
  for (const auto& [t, p] : rhs) {
    LambdaPoly coeff = p;
    bool negate = p.size() == 1 && p.terms().begin()->second < 0;
    if (negate) coeff = -p;
    out += first ? (negate ? " -" : "") : (negate ? " -" : " +");
    out += " ";
    if (coeff != LambdaPoly(1)) out += (coeff.size() > 1 ? "(" + coeff.to_string() + ")" : coeff.to_string()) + "·";
    out += t.to_string();
    first = false;
  }
  return out;
}

/// LaTeX form, trees written as T(a,b,c) or in operator notation.
[[nodiscard]] inline std::string render_latex(const Tree& lhs, const Combination& rhs, bool operator_notation) {
  auto symbol = [&](const Tree& t) { return operator_notation ? operator_latex(t) : tree_latex(t); };
  std::string out = symbol(lhs) + " =";
  if (rhs.empty()) return out + " 0";
  bool first = true;
  for (const auto& [t, p] : rhs) {
    LambdaPoly coeff = p;
    bool negate = p.size() == 1 && p.terms().begin()->second < 0;
    if (negate) coeff = -p;
    out += first ? (negate ? " -" : "") : (negate ? " -" : " +");
    out += " ";
    if (coeff != LambdaPoly(1))
      out += (coeff.size() > 1 ? "\\left(" + lambda_poly_latex(coeff) + "\\right)" : lambda_poly_latex(coeff)) + " ";
    out += symbol(t);
    first = false;
  }
  return out;
}

}  // namespace baxter
