#ifndef TOROIDAL_RATIONAL_HPP
#define TOROIDAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "toroidal/errors.hpp"

namespace toroidal {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r = 1, b = base;
  unsigned long k = e;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// base^e for integer e (negative allowed when base != 0)
inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e > 0) {
    Rational r(pow_int(numerator(base), (unsigned long)e), pow_int(denominator(base), (unsigned long)e));
    return r;
  }
  require(base != 0, ErrorCode::MalformedInput, "0 to a negative power");
  return Rational(pow_int(denominator(base), (unsigned long)(-e)), pow_int(numerator(base), (unsigned long)(-e)));
}

// Exact n-th root of a nonnegative integer, if one exists.
inline std::optional<Int> nth_root_int(const Int& a, unsigned long n) {
  if (a < 0) return std::nullopt;
  if (a == 0 || a == 1 || n == 1) return a;
  Int lo = 0, hi = a + 1;
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (pow_int(mid, n) <= a)
      lo = mid;
    else
      hi = mid;
  }
  if (pow_int(lo, n) == a) return lo;
  return std::nullopt;
}

// Exact value of r^(p/q) as a rational, if it exists (q > 0).
inline std::optional<Rational> rational_pow_exact(const Rational& r, const Int& p, const Int& q) {
  require(q > 0, ErrorCode::MalformedInput, "power denominator must be positive");
  if (p == 0) {
    if (r == 0) return std::nullopt;
    return Rational(1);
  }
  if (r == 0) return p > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
  if (r < 0) return std::nullopt;  // odd roots of negatives not needed at desk scale
  auto rn = nth_root_int(numerator(r), (unsigned long)q);
  auto rd = nth_root_int(denominator(r), (unsigned long)q);
  if (!rn || !rd) return std::nullopt;
  Rational root(*rn, *rd);
  long pe = (long)p;
  return pow_rational(root, pe);
}

inline std::optional<Rational> rational_pow_exact(const Rational& r, const Rational& e) {
  return rational_pow_exact(r, numerator(e), denominator(e));
}

// Number of prime factors counted with multiplicity (trial division; desk scale).
inline std::size_t omega_with_multiplicity(Int n) {
  require(n > 0, ErrorCode::MalformedInput, "omega of nonpositive integer");
  std::size_t count = 0;
  for (Int p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    require(den != 0, ErrorCode::BadScenario, "zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    fail(ErrorCode::BadScenario, "bad rational literal '" + s + "'");
  }
}

}  // namespace toroidal

#endif
