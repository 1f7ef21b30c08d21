#include <random>

#include "doctest.h"
#include "multibase/bases.hpp"
#include "multibase/error.hpp"
#include "multibase/expansions.hpp"
#include "oracles.hpp"

using namespace multibase;

namespace {

Polynomial lf(std::vector<long> c) { return Polynomial::from_leading_first(c); }

std::vector<Variant> variants_for(int M) {
  if (M % 2 == 0) return {Variant::Even};
  return {Variant::Odd1, Variant::Odd2, Variant::Odd3};
}

}  // namespace

TEST_CASE("critical bases") {
  CHECK(p1(4) == Rational(3));
  CHECK(p2(2) == make_algebraic(lf({1, -2, -1}), {2, 3}));
  CHECK(q2(2) == p2(2));
  CHECK(p1(1) == make_algebraic(lf({1, -1, -1}), {1, 2}));  // golden ratio
  CHECK(p2(1) == make_algebraic(lf({1, -2, 1, -1}), {1, 2}));
  CHECK(q2(6) == make_algebraic(lf({1, -4, -1}), {4, 5}));
  CHECK(q2(1).approx() == doctest::Approx(1.71064).epsilon(1e-5));
  for (int M = 1; M <= 10; ++M) {
    CHECK(compare(p1(M), q2(M)) < 0);
    CHECK(compare(q2(M), p2(M)) <= 0);
    CHECK(compare(p1(M), window_interior_base(M)) < 0);
    CHECK(compare(window_interior_base(M), p2(M)) < 0);
  }
}

TEST_CASE("even family values at known roots") {
  auto f = NumberField::create(p2(2));
  CHECK(family_value({Variant::Even, 1, 0, 0, 0}, 2, f->gen()).is_zero());
  for (int m = 1; m <= 4; ++m) {
    CHECK(family_value({Variant::Even, 0, 0, 0, 0}, 2 * m, Rational(2 * m)) == 0);
    CHECK_FALSE(family_has_root({Variant::Even, 0, 0, m, m}, 2 * m));
    CHECK(family_root({Variant::Even, 2, 0, m, m - 1}, 2 * m) == p2(2 * m));
    CHECK(family_root({Variant::Even, 1, 0, m - 1, m - 1}, 2 * m) == q2(2 * m));
    CHECK(family_root({Variant::Odd2, 2, 0, m - 1, m - 1}, 2 * m - 1) == q2(2 * m - 1));
  }
  CHECK(family_value({Variant::Odd2, 2, 0, 0, 0}, 1, q2(1)).is_zero());
}

TEST_CASE("family function is a positive multiple of the witness difference") {
  // even: left - right = f / (q^2 (q - 1)); odd: left - right = f / (q (q^2 - 1)).
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> num(1, 3000);
  for (int M = 1; M <= 7; ++M) {
    for (const auto& id : all_families(M, 3)) {
      auto [left, right] = family_witness_sequences(id, M);
      for (int t = 0; t < 3; ++t) {
        Rational q = Rational(M + 1) + ratio(num(rng), 1000);
        Rational diff = oracle::series_value(left, q) - oracle::series_value(right, q);
        Rational scale = M % 2 == 0 ? Rational(q * q * (q - 1)) : Rational(q * (q * q - 1));
        CHECK(diff * scale == family_value(id, M, q));
      }
    }
  }
}

TEST_CASE("two-expansion identity holds at every family root") {
  for (int M = 1; M <= 5; ++M) {
    for (const auto& id : all_families(M, 3)) {
      if (!family_has_root(id, M)) continue;
      AlgebraicReal r = family_root(id, M);
      if (compare(r, Rational(M + 1)) > 0) continue;
      BaseContext ctx = make_context(M, r);
      auto [left, right] = family_witness_sequences(id, M);
      CHECK(evaluate(left, ctx) == evaluate(right, ctx));
      CHECK(family_value(id, M, r).is_zero());
    }
  }
}

TEST_CASE("closed-form criterion agrees with the sign at p1") {
  for (int M = 1; M <= 9; ++M) {
    for (const auto& id : all_families(M, 5)) {
      CHECK_MESSAGE(family_has_root(id, M) == family_criterion_closed_form(id, M), to_string(id), " M=", M);
    }
  }
}

TEST_CASE("odd-case coincidence between the third and second families") {
  for (int m = 2; m <= 4; ++m) {
    const int M = 2 * m - 1;
    for (int k = 1; k <= 3; ++k) {
      FamilyId a{Variant::Odd3, k + 1, 0, m - 1, m - 1}, b{Variant::Odd2, k, 0, 0, m - 1};
      if (!family_has_root(a, M) || !family_has_root(b, M)) continue;
      CHECK(family_root(a, M) == family_root(b, M));
    }
  }
}

TEST_CASE("root is the unique sign change above p1") {
  for (int M = 2; M <= 5; ++M) {
    for (const auto& id : all_families(M, 2)) {
      if (!family_has_root(id, M)) {
        CHECK_THROWS_AS(family_root(id, M), Error);
        continue;
      }
      AlgebraicReal r = family_root(id, M);
      CHECK(compare(r, p1(M)) > 0);
      Rational below = r.lo() - Rational(1, 1000), above = r.hi() + Rational(1, 1000);
      if (compare(p1(M), below) < 0) CHECK(family_value(id, M, below) < 0);
      CHECK(family_value(id, M, above) > 0);
    }
  }
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(validate_family({Variant::Odd1, 0, 0, 0, 0}, 4), Error);
  CHECK_THROWS_AS(validate_family({Variant::Even, -1, 0, 0, 0}, 4), Error);
  CHECK_THROWS_AS(validate_family({Variant::Even, 0, 0, 3, 0}, 4), Error);
  CHECK_NOTHROW(validate_family({Variant::Even, 0, 0, 2, 2}, 4));
  CHECK(parse_variant("ODD2") == Variant::Odd2);
  CHECK_THROWS_AS(parse_variant("odd4"), Error);
  CHECK(to_string(FamilyId{Variant::Odd2, 2, 0, 1, 1}) == "odd2(2,0,1,1)");
  for (int M = 1; M <= 6; ++M) {
    for (auto v : variants_for(M)) CHECK_NOTHROW(validate_family({v, 1, 1, 0, 0}, M));
  }
}

TEST_CASE("window enumeration examples") {
  auto w2 = enumerate_B2_window(2);
  REQUIRE(w2.size() == 1);
  CHECK(w2[0].base == p2(2));
  auto w4 = enumerate_B2_window(4);
  REQUIRE(w4.size() == 2);
  CHECK(w4[0].base == q2(4));
  CHECK(w4[1].base == family_root({Variant::Even, 1, 0, 0, 1}, 4));
  CHECK(compare(w4[0].base, w4[1].base) < 0);
  auto w3 = enumerate_B2_window(3);
  CHECK(w3.front().base == q2(3));
  for (size_t i = 0; i + 1 < w3.size(); ++i) CHECK(compare(w3[i].base, w3[i + 1].base) < 0);
}

TEST_CASE("serial and parallel sweeps agree") {
  for (int M : {3, 4}) {
    auto a = sweep_window(M, 5), b = sweep_window_omp(M, 5);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].family == b[i].family);
      CHECK(a[i].root == b[i].root);
    }
  }
}

TEST_CASE("known constants for M = 1") {
  KnownBasesM1 kb = known_bases_M1();
  CHECK(kb.q2 == q2(1));
  CHECK(kb.qk == p2(1));
  CHECK(kb.q_aleph0_second.approx() == doctest::Approx(1.64541).epsilon(1e-5));
}
