#pragma once

#include <memory>
#include <string>
#include <vector>

#include "multibase/algebraic.hpp"

namespace multibase {

class NumberField;
class FieldElement;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(theta) for a real algebraic theta with verified irreducible minimal polynomial.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Minimizes the generator's polynomial first. Throws NotIrreducible when the
  /// minimal polynomial cannot be certified.
  static FieldPtr create(const AlgebraicReal& generator);

  int degree() const { return modulus_.degree(); }
  const AlgebraicReal& generator() const { return generator_; }
  /// Monic minimal polynomial of the generator.
  const Polynomial& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;
  FieldElement from_rational(const Rational& r) const;
  /// Reduces p modulo the minimal polynomial.
  FieldElement from_poly(const Polynomial& p) const;
  /// Coefficients of theta^0 .. theta^(degree-1); shorter vectors are zero padded.
  FieldElement from_coeffs(std::vector<Rational> coeffs) const;

  bool same_as(const NumberField& other) const;

  NumberField(AlgebraicReal generator, Polynomial modulus);

 private:
  AlgebraicReal generator_;
  Polynomial modulus_;
};

/// Element of a NumberField, stored as a coefficient vector of length degree.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rational> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  Polynomial as_poly() const { return Polynomial(coeffs_); }

  FieldElement inverse() const;
  FieldElement pow(long n) const;

  /// Rational interval containing the value, from the generator's current interval.
  Interval enclosure() const;
  /// Enclosure of width at most `width` (or a sign-exact point for rationals).
  Interval enclosure(const Rational& width) const;
  double approx() const;
  bool is_rational() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const Rational& r);
  friend FieldElement operator-(const FieldElement& a, const Rational& r);
  friend FieldElement operator*(const Rational& r, const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// Exact sign: 0 iff the element is zero, otherwise from interval evaluation
/// over a refined generator interval.
int sign_of(const FieldElement& e);
/// sign_of(a - b).
int compare(const FieldElement& a, const FieldElement& b);

/// Throws FieldMismatch when the fields differ.
void require_same_field(const FieldElement& a, const FieldElement& b);

}  // namespace multibase
