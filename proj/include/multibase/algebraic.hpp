#pragma once

#include <compare>
#include <string>
#include <vector>

#include "multibase/polynomial.hpp"
#include "multibase/rational.hpp"

namespace multibase {

/// A real algebraic number: a square-free primitive integer polynomial together
/// with a rational interval isolating exactly one of its real roots.
///
/// Either the interval is a single rational point (the number is rational and
/// the defining polynomial is linear), or lo < hi, the polynomial is nonzero at
/// both endpoints with opposite signs, and the root lies strictly inside.
/// Values are immutable; refinement produces new values.
class AlgebraicReal {
 public:
  /// The number 0.
  AlgebraicReal();
  /// Exact rational number, defined by x - r.
  static AlgebraicReal rational(const Rational& r);

  const Polynomial& defining_poly() const { return poly_; }
  const Interval& interval() const { return interval_; }
  const Rational& lo() const { return interval_.lo; }
  const Rational& hi() const { return interval_.hi; }
  bool irreducible_verified() const { return irreducible_; }
  int degree() const { return poly_.degree(); }
  bool is_rational() const { return interval_.is_point(); }
  /// Only meaningful when is_rational().
  const Rational& rational_value() const { return interval_.lo; }

  /// One bisection step.
  AlgebraicReal bisected() const;
  /// Narrowed until the interval width is at most `width`.
  AlgebraicReal refined_to(const Rational& width) const;

  double approx() const;
  /// Rounded to `digits` decimal places, from an interval of width < 10^-(digits+2).
  std::string decimal(int digits) const;

  /// Internal; prefer make_algebraic.
  AlgebraicReal(Polynomial square_free, Interval isolating, bool irreducible);

 private:
  Polynomial poly_;
  Interval interval_;
  bool irreducible_ = false;
};

/// Unique real root of `poly` inside the closed window. Errors: ZeroPolynomial,
/// NoRootInWindow, MultipleRootsInWindow.
AlgebraicReal make_algebraic(const Polynomial& poly, const Interval& window);

/// Interval of width < 10^-digits containing `a`.
Interval refine(const AlgebraicReal& a, int digits);

/// Every distinct real root in the closed window, ascending, with pairwise
/// disjoint isolating intervals.
std::vector<AlgebraicReal> isolate_roots(const Polynomial& poly, const Interval& window);

/// Exact comparison between algebraic numbers of possibly different polynomials.
std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);
std::strong_ordering compare(const AlgebraicReal& a, const Rational& r);
inline bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b); }
inline std::strong_ordering operator<=>(const AlgebraicReal& a, const Rational& r) { return compare(a, r); }
inline bool operator==(const AlgebraicReal& a, const Rational& r) { return compare(a, r) == 0; }

/// Replaces the defining polynomial by the factor vanishing at `a`, splitting off
/// rational roots and integer quadratic factors. The result is flagged
/// irreducible when no further split is possible and its degree is at most 5
/// (a reducible quintic always has a factor of degree <= 2).
AlgebraicReal minimize(const AlgebraicReal& a);

/// Integer quadratic factor of a primitive polynomial with no rational roots, or
/// the zero polynomial if none exists.
Polynomial find_quadratic_factor(const Polynomial& primitive);

/// All rational roots of a nonzero polynomial (ascending).
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace multibase
