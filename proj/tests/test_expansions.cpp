#include <random>

#include "doctest.h"
#include "multibase/bases.hpp"
#include "multibase/error.hpp"
#include "multibase/expansions.hpp"
#include "oracles.hpp"

using namespace multibase;

namespace {

const BaseContext& golden() {
  static const BaseContext ctx = make_context(2, make_algebraic(Polynomial::from_leading_first(std::vector<long>{1, -2, -1}), {2, 3}));
  return ctx;
}

DigitSeq S(const char* text) { return DigitSeq::parse(text); }

}  // namespace

TEST_CASE("evaluation at 1+sqrt 2") {
  const BaseContext& ctx = golden();
  CHECK(evaluate(S("(0)"), ctx).is_zero());
  CHECK(evaluate(S("(20)"), ctx) == ctx.field->one());
  CHECK(evaluate(S("1(2)"), ctx) == ctx.field->one());
  CHECK(evaluate(S("(2)"), ctx) == ctx.upper);
  CHECK_THROWS_AS(evaluate(S("3(0)"), ctx), Error);
}

TEST_CASE("evaluation matches the rational series at a rational base") {
  BaseContext ctx = make_context(3, AlgebraicReal::rational(Rational(5, 2)));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> len(0, 5), plen(1, 4), dig(0, 3);
    Word pre(static_cast<size_t>(len(rng))), per(static_cast<size_t>(plen(rng)));
    for (int& d : pre) d = dig(rng);
    for (int& d : per) d = dig(rng);
    DigitSeq s(pre, per);
    FieldElement v = evaluate(s, ctx);
    REQUIRE(v.is_rational());
    CHECK(v.coeffs().empty() ? Rational(0) == oracle::series_value(s, Rational(5, 2))
                             : v.coeffs()[0] == oracle::series_value(s, Rational(5, 2)));
  }
}

TEST_CASE("reflection round trip: value(reflect s) = M/(q-1) - value(s)") {
  std::mt19937_64 rng(6);
  for (int M = 1; M <= 4; ++M) {
    BaseContext ctx = make_context(M, q2(M));
    for (int t = 0; t < 50; ++t) {
      std::uniform_int_distribution<int> len(0, 4), plen(1, 3), dig(0, M);
      Word pre(static_cast<size_t>(len(rng))), per(static_cast<size_t>(plen(rng)));
      for (int& d : pre) d = dig(rng);
      for (int& d : per) d = dig(rng);
      DigitSeq s(pre, per);
      CHECK(evaluate(reflect(s, ctx.alphabet), ctx) == ctx.upper - evaluate(s, ctx));
    }
  }
}

TEST_CASE("quasi-greedy expansions of 1 at the presets") {
  CHECK(golden().alpha_seq().to_string() == "(20)");
  for (int m = 1; m <= 4; ++m) {
    BaseContext even_p1 = make_context(2 * m, p1(2 * m));
    CHECK(even_p1.alpha_seq() == DigitSeq({}, {m}));
    BaseContext odd_p2 = make_context(2 * m - 1, p2(2 * m - 1));
    CHECK(odd_p2.alpha_seq() == DigitSeq({}, {m, m, m - 1, m - 1}));
    BaseContext even_p2 = make_context(2 * m, p2(2 * m));
    CHECK(even_p2.alpha_seq() == DigitSeq({}, {m + 1, m - 1}));
  }
  // terminating greedy expansion: q = 2, M = 1 gives 1 = (1)_2 -> quasi-greedy 1^inf
  BaseContext two = make_context(1, AlgebraicReal::rational(2));
  CHECK(two.alpha_seq().to_string() == "(1)");
  BaseContext three = make_context(2, AlgebraicReal::rational(3));
  CHECK(three.alpha_seq().to_string() == "(2)");
  // a non-integer rational base has no periodic greedy orbit of 1
  BaseContext five_halves = make_context(2, AlgebraicReal::rational(Rational(5, 2)));
  CHECK_FALSE(five_halves.alpha.decided);
}

TEST_CASE("every decided alpha is admissible and evaluates to 1") {
  for (int M = 1; M <= 6; ++M) {
    std::vector<AlgebraicReal> qs = {p1(M), p2(M), window_interior_base(M)};
    if (M % 2 == 0) qs.push_back(q2(M));
    for (const auto& q : qs) {
      BaseContext ctx = make_context(M, q);
      REQUIRE(ctx.alpha.decided);
      CHECK(is_admissible_alpha(ctx.alpha_seq()));
      CHECK(evaluate(ctx.alpha_seq(), ctx) == ctx.field->one());
    }
  }
  CHECK(is_admissible_alpha(S("(20)")));
  CHECK_FALSE(is_admissible_alpha(S("(02)")));
  CHECK(is_admissible_alpha(S("(2211)")));
}

TEST_CASE("alpha is strictly increasing in q") {
  for (int M = 1; M <= 6; ++M) {
    std::vector<AlgebraicReal> qs = {p1(M), window_interior_base(M), p2(M)};
    if (M % 2 == 0) qs.push_back(q2(M));
    qs = distinct_sorted(qs);
    for (size_t i = 0; i + 1 < qs.size(); ++i) {
      BaseContext a = make_context(M, qs[i]), b = make_context(M, qs[i + 1]);
      CHECK(lex_compare(a.alpha_seq(), b.alpha_seq()) < 0);
    }
  }
}

TEST_CASE("odd q2 has no periodic alpha within the default horizon") {
  for (int M : {1, 3, 5}) {
    BaseContext ctx = make_context(M, q2(M));
    CHECK_FALSE(ctx.alpha.decided);
    CHECK(ctx.alpha.prefix.size() == static_cast<size_t>(kDefaultAlphaHorizon));
    CHECK_THROWS_AS(is_unique_expansion(DigitSeq::parse("(0)"), ctx), Error);
  }
}

TEST_CASE("alpha horizon") {
  // a base whose greedy orbit of 1 is long; with horizon 1 it must report undecided
  BaseContext ctx = make_context(3, window_interior_base(3));
  AlphaResult r = quasi_greedy_alpha(ctx, 1);
  CHECK_FALSE(r.decided);
  CHECK_FALSE(r.prefix.empty());
}

TEST_CASE("uniqueness examples") {
  for (int m = 1; m <= 3; ++m) {
    const int M = 2 * m;
    BaseContext ctx = make_context(M, p2(M));
    for (int k = 0; k <= 3; ++k) {
      for (int u = 0; u <= m; ++u) {
        Word pre(static_cast<size_t>(k), 0);
        pre.push_back(u);
        DigitSeq s(pre, {m});
        CHECK(is_unique_expansion(s, ctx));
        CHECK(is_unique_expansion(reflect(s, ctx.alphabet), ctx));
      }
    }
    CHECK(is_unique_expansion(S("(0)"), ctx));
    CHECK_FALSE(is_unique_expansion(DigitSeq({}, {m + 1, m - 1}), ctx));
  }
}

TEST_CASE("catalog agrees with the uniqueness test and the shape oracle") {
  for (int M = 1; M <= 4; ++M) {
    BaseContext ctx = make_context(M, window_interior_base(M));
    for (const auto& s : unique_set_catalog(ctx, 3)) {
      CHECK(is_unique_expansion(s, ctx));
      CHECK(oracle::matches_catalog_shape(s, M));
    }
  }
}

TEST_CASE("catalog errors and order") {
  BaseContext below = make_context(2, AlgebraicReal::rational(Rational(3, 2)));
  CHECK_THROWS_AS(unique_set_catalog(below, 2), Error);
  BaseContext ctx = make_context(2, p2(2));
  auto cat = unique_set_catalog(ctx, 2);
  for (size_t i = 0; i + 1 < cat.size(); ++i) {
    const auto& a = cat[i].preperiod();
    const auto& b = cat[i + 1].preperiod();
    CHECK(a.size() <= b.size());
    if (a.size() == b.size()) CHECK(lex_compare(cat[i], cat[i + 1]) < 0);
  }
}

TEST_CASE("make_context rejects bases outside (1, M+1]") {
  CHECK_THROWS_AS(make_context(2, AlgebraicReal::rational(1)), Error);
  CHECK_THROWS_AS(make_context(2, AlgebraicReal::rational(Rational(7, 2))), Error);
  CHECK_NOTHROW(make_context(2, AlgebraicReal::rational(3)));
}

TEST_CASE("serial and parallel classification agree") {
  BaseContext ctx = make_context(3, p2(3));
  auto seqs = enumerate_canonical(3, 3, 3);
  CHECK(classify_unique(seqs, ctx.alpha_seq(), ctx.alphabet) == classify_unique_omp(seqs, ctx.alpha_seq(), ctx.alphabet));
}
