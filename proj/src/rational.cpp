#include "pyragrow/rational.hpp"

namespace pyragrow {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Integer num(s);
      return Rational(num);
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    // Division of canonical integers canonicalizes the quotient.
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Integer floor_to_integer(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

DistanceInterval sqrt_interval(const Rational& s, const Rational& tol) {
  if (s < 0) throw std::invalid_argument("sqrt_interval of negative value");
  if (tol <= 0) throw std::invalid_argument("sqrt_interval needs tol > 0");
  if (s == 0) return DistanceInterval::zero();

  // Perfect square: both parts of the reduced fraction are squares.
  const Integer num = numerator(s), den = denominator(s);
  if (mpz_perfect_square_p(num.backend().data()) &&
      mpz_perfect_square_p(den.backend().data())) {
    Integer rn = sqrt(num), rd = sqrt(den);
    return DistanceInterval::exact(Rational(rn) / Rational(rd));
  }

  // Scale by M = 2^m with 1/M <= tol, take integer sqrt of floor(s * M^2).
  Integer M = 1;
  Rational invM(1);
  while (invM > tol) {
    M <<= 1;
    invM /= 2;
  }
  const Integer a = floor_to_integer(s * Rational(M) * Rational(M));
  const Integer r = sqrt(a);  // floor of the integer square root
  Rational lo = Rational(r) / Rational(M);
  Rational hi = Rational(r + 1) / Rational(M);
  return {lo, hi};
}

}  // namespace pyragrow
