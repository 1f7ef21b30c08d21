#include "multibase/number_field.hpp"

#include "multibase/error.hpp"

namespace multibase {

namespace {

Rational pow2_inv(unsigned bits) {
  Rational w(1);
  mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), bits);
  return w;
}

}  // namespace

NumberField::NumberField(AlgebraicReal generator, Polynomial modulus)
    : generator_(std::move(generator)), modulus_(std::move(modulus)) {}

FieldPtr NumberField::create(const AlgebraicReal& generator) {
  AlgebraicReal g = minimize(generator);
  if (!g.irreducible_verified()) {
    throw Error(ErrorCode::NotIrreducible,
                "cannot certify irreducibility of " + g.defining_poly().to_string());
  }
  g = g.refined_to(pow2_inv(96));
  Polynomial modulus = g.defining_poly().monic();
  return std::make_shared<NumberField>(std::move(g), std::move(modulus));
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  return modulus_ == other.modulus_ && generator_.interval().lo == other.generator_.interval().lo &&
         generator_.interval().hi == other.generator_.interval().hi;
}

FieldElement NumberField::zero() const { return from_coeffs({}); }
FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::gen() const {
  if (degree() == 1) return from_rational(generator_.rational_value());
  return from_coeffs({0, 1});
}

FieldElement NumberField::from_rational(const Rational& r) const { return from_coeffs({r}); }

FieldElement NumberField::from_poly(const Polynomial& p) const {
  Polynomial r = p % modulus_;
  return from_coeffs(r.coeffs());
}

FieldElement NumberField::from_coeffs(std::vector<Rational> coeffs) const {
  if (coeffs.size() > static_cast<size_t>(degree())) return from_poly(Polynomial(std::move(coeffs)));
  coeffs.resize(static_cast<size_t>(degree()));
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field() || !a.field()->same_as(*b.field())) {
    throw Error(ErrorCode::FieldMismatch, "operands belong to different number fields");
  }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c(a.coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> c(a.coeffs_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.coeffs_.size() == 1) return FieldElement(a.field_, {a.coeffs_[0] * b.coeffs_[0]});
  return a.field_->from_poly(a.as_poly() * b.as_poly());
}

FieldElement operator+(const FieldElement& a, const Rational& r) {
  std::vector<Rational> c(a.coeffs_);
  c[0] += r;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const Rational& r) { return a + Rational(-r); }

FieldElement operator*(const Rational& r, const FieldElement& a) {
  std::vector<Rational> c(a.coeffs_);
  for (auto& x : c) x *= r;
  return FieldElement(a.field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero field element");
  if (coeffs_.size() == 1) return FieldElement(field_, {1 / coeffs_[0]});
  // s*a + t*modulus = 1 because the modulus is irreducible
  ExtendedGcd eg = extended_gcd(as_poly(), field_->modulus());
  if (eg.g.degree() != 0) throw Error(ErrorCode::DivisionByZero, "element not invertible");
  return field_->from_poly(eg.s);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

FieldElement FieldElement::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

Interval FieldElement::enclosure() const {
  if (is_rational()) return Interval::point(coeffs_.empty() ? Rational(0) : coeffs_[0]);
  return as_poly().eval(field_->generator().interval());
}

Interval FieldElement::enclosure(const Rational& width) const {
  if (is_rational()) return enclosure();
  AlgebraicReal g = field_->generator();
  Polynomial p = as_poly();
  while (true) {
    Interval iv = p.eval(g.interval());
    if (iv.width() <= width || g.is_rational()) return iv;
    g = g.refined_to(g.interval().width() / 1024);
  }
}

double FieldElement::approx() const { return enclosure(pow2_inv(60)).midpoint().get_d(); }

int sign_of(const FieldElement& e) {
  if (e.is_zero()) return 0;
  if (e.is_rational()) return sgn(e.coeffs()[0]);
  Polynomial p = e.as_poly();
  AlgebraicReal g = e.field()->generator();
  while (true) {
    Interval iv = p.eval(g.interval());
    if (sgn(iv.lo) > 0) return 1;
    if (sgn(iv.hi) < 0) return -1;
    // nonzero elements do not vanish at the generator, so refinement terminates
    g = g.refined_to(g.interval().width() / 65536);
    if (g.is_rational()) return p.sign_at(g.rational_value());
  }
}

int compare(const FieldElement& a, const FieldElement& b) { return sign_of(a - b); }

}  // namespace multibase
