#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace baxter {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an input exceeds a configured size limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when expand_step is asked to rewrite a tree that is already normal.
class NoApplicableMove : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Renders a rational as "p/q", or "p" when the denominator is 1.
inline std::string to_fraction(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p", "-p" or "p/q".
inline Rational parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(BigInt(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

/// Binomial coefficient C(n,k), zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace baxter
