#include <cmath>
#include <random>

#include "doctest.h"
#include "multibase/algebraic.hpp"
#include "multibase/error.hpp"
#include "oracles.hpp"

using namespace multibase;

namespace {

Polynomial lf(std::vector<long> c) { return Polynomial::from_leading_first(c); }

}  // namespace

TEST_CASE("isolation finds every root of a product of quadratics") {
  // (x^2 - 2)(x^2 - 3)(x - 1/2)
  Polynomial p = lf({1, 0, -2}) * lf({1, 0, -3}) * Polynomial::linear_root(Rational(1, 2));
  auto roots = isolate_roots(p, {-10, 10});
  REQUIRE(roots.size() == 5);
  const double expected[] = {-std::sqrt(3.0), -std::sqrt(2.0), 0.5, std::sqrt(2.0), std::sqrt(3.0)};
  for (size_t i = 0; i < 5; ++i) CHECK(roots[i].approx() == doctest::Approx(expected[i]).epsilon(1e-12));
  for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(compare(roots[i], roots[i + 1]) < 0);
  CHECK(minimize(roots[2]).is_rational());
}

TEST_CASE("isolating intervals contain exactly one root") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int t = 0; t < 60; ++t) {
    std::vector<long> coeffs{1};
    for (int i = 0; i < 5; ++i) coeffs.push_back(c(rng));
    Polynomial p = lf(coeffs);
    auto roots = isolate_roots(p, {-20, 20});
    SturmSequence s(square_free_part(p));
    CHECK(static_cast<int>(roots.size()) == s.count_roots_closed(-20, 20));
    for (const auto& r : roots) CHECK(SturmSequence(r.defining_poly()).count_roots_closed(r.lo(), r.hi()) == 1);
  }
}

TEST_CASE("make_algebraic errors") {
  CHECK_THROWS_AS(make_algebraic(Polynomial(), {0, 1}), Error);
  try {
    make_algebraic(lf({1, 0, -2}), {2, 3});
    FAIL("expected NoRootInWindow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoRootInWindow);
  }
  try {
    make_algebraic(lf({1, 0, -2}), {-2, 2});
    FAIL("expected MultipleRootsInWindow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MultipleRootsInWindow);
  }
}

TEST_CASE("equality of the same number under different polynomials") {
  AlgebraicReal a = make_algebraic(lf({1, -2, -1}), {2, 3});
  AlgebraicReal b = make_algebraic(lf({1, -2, -1}) * lf({1, 0, 1}) * lf({1, -7}), {2, 3});
  AlgebraicReal c = make_algebraic(lf({1, 0, -6}), {2, 3});  // sqrt(6) ~ 2.449
  CHECK(a == b);
  CHECK(compare(a, c) < 0);
  CHECK(compare(c, a) > 0);
  CHECK(compare(a, Rational(12, 5)) > 0);
  CHECK(compare(a, Rational(5, 2)) < 0);
}

TEST_CASE("minimize strips rational and quadratic factors") {
  AlgebraicReal a = make_algebraic(lf({1, -2, -1}) * lf({1, 0, 1}) * lf({1, -7}), {2, 3});
  AlgebraicReal m = minimize(a);
  CHECK(m.defining_poly() == lf({1, -2, -1}));
  CHECK(m.irreducible_verified());
  CHECK(m == a);
  AlgebraicReal r = minimize(make_algebraic(lf({2, -3}) * lf({1, 0, 1}), {1, 2}));
  CHECK(r.is_rational());
  CHECK(r.rational_value() == Rational(3, 2));
}

TEST_CASE("rational roots") {
  Polynomial p = lf({6, -5, 1}) * lf({1, 0, -2});  // roots 1/3, 1/2, +-sqrt 2
  auto rr = rational_roots(p);
  REQUIRE(rr.size() == 2);
  CHECK(rr[0] == Rational(1, 3));
  CHECK(rr[1] == Rational(1, 2));
}

TEST_CASE("decimal output agrees with an independent bisection") {
  AlgebraicReal a = make_algebraic(lf({1, -3, -1}), {3, 4});
  CHECK(a.decimal(10) == "3.3027756377");
  Interval iv = oracle::bisect_enclosure(a.defining_poly(), a.interval(), Rational(1, 1000000000));
  Interval r = refine(a, 9);
  CHECK((r.hi >= iv.lo && iv.hi >= r.lo));
  AlgebraicReal n = make_algebraic(lf({1, 0, -2}), {-2, -1});
  CHECK(n.decimal(5) == "-1.41421");
}

TEST_CASE("refined_to keeps the root") {
  AlgebraicReal a = make_algebraic(lf({1, 0, -2, -1, -1}), {1, 2});
  AlgebraicReal b = a.refined_to(Rational(1, 1) / power(Rational(2), 100));
  CHECK(b.interval().width() <= Rational(1) / power(Rational(2), 100));
  CHECK(a == b);
}
