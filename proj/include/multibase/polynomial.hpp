#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multibase/rational.hpp"

namespace multibase {

/// Dense univariate polynomial over Q. Coefficients are stored lowest degree
/// first with no trailing zeros; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> low_first);

  /// Integer coefficients given leading first, e.g. {1, 0, -2} for x^2 - 2.
  static Polynomial from_leading_first(const std::vector<long>& coeffs);
  static Polynomial from_leading_first(const std::vector<Integer>& coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial linear_root(const Rational& r);  // x - r

  /// Comma-separated coefficients, leading first: "1,0,-2,-1,-1".
  static Polynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sign((*this)(x)); }
  /// Horner evaluation in rational interval arithmetic.
  Interval eval(const Interval& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  Polynomial primitive() const;
  /// Divides by |content| only, preserving the sign of every value.
  Polynomial positively_scaled() const;
  bool has_integer_coeffs() const;
  /// Leading first; the polynomial must have integer coefficients.
  std::vector<Integer> integer_coeffs_leading_first() const;

  /// Leading-first comma form (rational coefficients allowed).
  std::string to_string() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g;  // monic
  Polynomial s;  // s*a + t*b = g
  Polynomial t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made primitive.
Polynomial square_free_part(const Polynomial& p);

/// 1 + max(1, sum |a_i| / |a_n|); every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Polynomial& p);

/// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& square_free);

  int sign_changes(const Rational& x) const;
  /// Distinct roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  /// Distinct roots in the closed interval [lo, hi].
  int count_roots_closed(const Rational& lo, const Rational& hi) const;

  const Polynomial& base() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

}  // namespace multibase
