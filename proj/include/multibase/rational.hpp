#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace multibase {

using Integer = mpz_class;
using Rational = mpq_class;

/// Accepts "17/10", "-3", "1.25" and "-.5". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// n/d in lowest terms. mpq_class(n, d) alone does not reduce.
Rational ratio(long n, long d);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Decimal expansion rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& r, int digits);

int sign(const Rational& r);
Rational abs(const Rational& r);
Rational power(const Rational& base, unsigned exponent);
int compare(const Rational& a, const Rational& b);

/// Closed rational interval [lo, hi] with lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& r) { return {r, r}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& r) const { return lo <= r && r <= hi; }
  bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
  bool is_point() const { return lo == hi; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);

/// Intersection; returns false if disjoint.
bool intersect(const Interval& a, const Interval& b, Interval& out);

}  // namespace multibase
