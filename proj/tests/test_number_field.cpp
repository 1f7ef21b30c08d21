#include <random>

#include "doctest.h"
#include "multibase/error.hpp"
#include "multibase/number_field.hpp"

using namespace multibase;

namespace {

Polynomial lf(std::vector<long> c) { return Polynomial::from_leading_first(c); }

FieldElement random_element(const FieldPtr& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-20, 20), d(1, 7);
  std::vector<Rational> c;
  for (int i = 0; i < f->degree(); ++i) c.push_back(ratio(n(rng), d(rng)));
  return f->from_coeffs(c);
}

}  // namespace

TEST_CASE("inverse of q in Q(1+sqrt 2) is q-2") {
  auto f = NumberField::create(make_algebraic(lf({1, -2, -1}), {2, 3}));
  FieldElement q = f->gen();
  CHECK(q * (q - Rational(2)) == f->one());
  CHECK(q.inverse() == q - Rational(2));
  CHECK(q.pow(-1) == q - Rational(2));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(5);
  for (auto gen : {make_algebraic(lf({1, -2, -1}), {2, 3}), make_algebraic(lf({1, -2, 1, -1}), {1, 2}),
                   make_algebraic(lf({1, -2, -2, -1, -1, -2}), {2, 3})}) {
    auto f = NumberField::create(gen);
    for (int t = 0; t < 40; ++t) {
      FieldElement a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == f->zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
      CHECK(a.pow(3) == a * a * a);
    }
  }
}

TEST_CASE("signs agree with floating point away from zero") {
  std::mt19937_64 rng(9);
  auto f = NumberField::create(make_algebraic(lf({1, 0, -2, -1, -1}), {1, 2}));
  for (int t = 0; t < 200; ++t) {
    FieldElement a = random_element(f, rng);
    double x = a.approx();
    if (std::abs(x) > 1e-9) CHECK(sign_of(a) == (x > 0 ? 1 : -1));
  }
  CHECK(sign_of(f->zero()) == 0);
}

TEST_CASE("sign of a tiny nonzero element") {
  auto f = NumberField::create(make_algebraic(lf({1, -2, -1}), {2, 3}));
  // (q - 2)^40 = (sqrt2 - 1)^40 ~ 5e-16
  FieldElement tiny = (f->gen() - Rational(2)).pow(40);
  CHECK(sign_of(tiny) == 1);
  CHECK(sign_of(-tiny) == -1);
  CHECK(compare(tiny, f->zero()) == 1);
}

TEST_CASE("field errors") {
  auto f = NumberField::create(make_algebraic(lf({1, -2, -1}), {2, 3}));
  auto g = NumberField::create(make_algebraic(lf({1, 0, -2}), {1, 2}));
  CHECK_THROWS_AS(f->zero().inverse(), Error);
  try {
    (void)(f->one() + g->one());
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldMismatch);
  }
}

TEST_CASE("create reduces a reducible generator") {
  auto f = NumberField::create(make_algebraic(lf({1, -2, -1}) * lf({1, -9}), {2, 3}));
  CHECK(f->degree() == 2);
  CHECK(f->modulus() == lf({1, -2, -1}));
}

TEST_CASE("reduction of long coefficient vectors") {
  auto f = NumberField::create(make_algebraic(lf({1, -2, -1}), {2, 3}));
  FieldElement q = f->gen();
  CHECK(f->from_coeffs({0, 0, 1}) == q * q);
  CHECK(f->from_coeffs({0, 0, 1}) == Rational(2) * q + Rational(1));
  CHECK(f->from_rational(Rational(3, 4)).is_rational());
}
