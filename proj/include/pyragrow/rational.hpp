#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <stdexcept>
#include <string>

namespace pyragrow {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parse "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& r);

Integer floor_to_integer(const Rational& r);

/// Closed interval [lo, hi] enclosing a nonnegative real value, typically a
/// square root of an exact rational. Endpoints are exact rationals.
struct DistanceInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool is_exact() const { return lo == hi; }

  static DistanceInterval exact(const Rational& v) { return {v, v}; }
  static DistanceInterval zero() { return {Rational(0), Rational(0)}; }

  DistanceInterval operator+(const DistanceInterval& o) const {
    return {lo + o.lo, hi + o.hi};
  }
};

/// Interval of width <= tol around sqrt(s), s >= 0. Detects perfect squares
/// and returns a degenerate interval for them.
DistanceInterval sqrt_interval(const Rational& s, const Rational& tol);

}  // namespace pyragrow
