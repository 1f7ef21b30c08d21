#include "multibase/verify.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>

#include "multibase/bases.hpp"
#include "multibase/counting.hpp"
#include "multibase/error.hpp"
#include "multibase/expansions.hpp"

namespace multibase {

namespace {

void add(SuiteReport& r, std::string name, bool ok, std::string detail = {}) {
  r.passed = r.passed && ok;
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

Polynomial poly(std::vector<long> leading_first) { return Polynomial::from_leading_first(leading_first); }

bool near(const AlgebraicReal& a, const std::string& printed, const Rational& tol) {
  Interval iv = refine(a, 12);
  return abs(iv.midpoint() - parse_rational(printed)) <= tol;
}

/// x^4 - (m-1)x^3 - 2m x^2 - m x - 1 evaluated exactly in Q(q).
bool odd_quartic_vanishes(const AlgebraicReal& q, int m) {
  auto field = NumberField::create(q);
  FieldElement x = field->gen();
  FieldElement val = x.pow(4) - Rational(m - 1) * x.pow(3) - Rational(2 * m) * x.pow(2) - Rational(m) * x - Rational(1);
  return val.is_zero();
}

void suite_table1(SuiteReport& r) {
  const std::vector<std::string> table = {"1.71064", "2.41421", "2.75965", "3.30278", "3.80320", "4.23607", "4.83469"};
  const Rational tol(1, 100000);
  for (int M = 1; M <= 7; ++M) {
    AlgebraicReal q = q2(M);
    add(r, "q2(" + std::to_string(M) + ") ~ " + table[M - 1], near(q, table[M - 1], tol), q.decimal(10));
  }
  add(r, "q2(2) = 1+sqrt(2)", q2(2) == make_algebraic(poly({1, -2, -1}), {2, 3}));
  add(r, "q2(4) = (3+sqrt(13))/2", q2(4) == make_algebraic(poly({1, -3, -1}), {3, 4}));
  add(r, "q2(6) = 2+sqrt(5)", q2(6) == make_algebraic(poly({1, -4, -1}), {4, 5}));
  for (int m = 1; m <= 4; ++m) {
    add(r, "q2(" + std::to_string(2 * m - 1) + ") is a root of the odd quartic", odd_quartic_vanishes(q2(2 * m - 1), m));
  }
}

void suite_thm13(SuiteReport& r) {
  for (int k = 1; k <= 6; ++k) {
    ConstructedPoint pt = construct_xk(k);
    CountResult c = count_expansions(pt.x, pt.ctx);
    bool ok = c.kind == CountKind::Exactly && c.count == static_cast<std::uint64_t>(k);
    add(r, "x_" + std::to_string(k) + " has exactly " + std::to_string(k) + " expansions", ok,
        std::string(count_kind_name(c.kind)) + "(" + std::to_string(c.count) + ")");
  }
  const BaseContext& ctx = golden_context_M2();
  CountOptions opt;
  opt.depth_cap = 60;
  CountResult one = count_expansions(ctx.field->one(), ctx, opt);
  add(r, "x = 1 has at least 20 expansions", one.kind == CountKind::AtLeast && one.count >= 20,
      std::string(count_kind_name(one.kind)) + "(" + std::to_string(one.count) + ")");
  bool all_one = true;
  auto seqs = expansions_of_one_M2(8);
  for (const auto& s : seqs) all_one = all_one && evaluate(s, ctx) == ctx.field->one();
  add(r, "expansions of 1 evaluate to 1", all_one, std::to_string(seqs.size()) + " sequences");
}

bool dominated(const FamilyId& a, const FamilyId& b) {
  return a.variant == b.variant && a != b && a.k <= b.k && a.j <= b.j && a.u >= b.u && a.v >= b.v;
}

void suite_monotonicity(SuiteReport& r) {
  std::mt19937_64 rng(20240611);
  for (int M = 1; M <= 6; ++M) {
    std::vector<FamilyId> fams = all_families(M, 4);
    // Rational samples strictly above p1.
    Rational base = p1(M).hi();
    std::uniform_int_distribution<long> num(1, 4000);
    long value_violations = 0, samples = 0;
    for (const auto& id : fams) {
      for (int s = 0; s < 50; ++s) {
        Rational a = base + ratio(num(rng), 1000), b = base + ratio(num(rng), 1000);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        ++samples;
        if (!(family_value(id, M, a) < family_value(id, M, b))) ++value_violations;
      }
    }
    add(r, "M=" + std::to_string(M) + " family value increasing in q", value_violations == 0,
        std::to_string(samples) + " pairs, " + std::to_string(value_violations) + " violations");

    std::vector<std::pair<FamilyId, AlgebraicReal>> roots;
    for (const auto& id : fams) {
      if (family_has_root(id, M)) roots.emplace_back(id, family_root(id, M).refined_to(Rational(1, 1 << 30)));
    }
    long pairs = 0, root_violations = 0;
    for (const auto& [a, ra] : roots) {
      for (const auto& [b, rb] : roots) {
        if (!dominated(a, b)) continue;
        ++pairs;
        if (compare(ra, rb) >= 0) ++root_violations;
      }
    }
    add(r, "M=" + std::to_string(M) + " family root monotone in parameters", root_violations == 0,
        std::to_string(pairs) + " pairs, " + std::to_string(root_violations) + " violations");
  }
}

void suite_catalogs(SuiteReport& r) {
  for (int M = 2; M <= 4; ++M) {
    for (const auto& [label, q] : {std::pair<std::string, AlgebraicReal>{"mid", window_interior_base(M)},
                                   std::pair<std::string, AlgebraicReal>{"p2", p2(M)}}) {
      BaseContext ctx = make_context(M, q);
      std::vector<DigitSeq> seqs = enumerate_canonical(M, 4, 4);
      std::vector<char> unique = classify_unique_omp(seqs, ctx.alpha_seq(), ctx.alphabet);
      std::vector<DigitSeq> catalog = unique_set_catalog(ctx, 5);
      std::set<DigitSeq> members(catalog.begin(), catalog.end());
      long mismatches = 0, count = 0;
      for (size_t i = 0; i < seqs.size(); ++i) {
        bool in = members.count(seqs[i]) > 0;
        count += unique[i];
        if (in != static_cast<bool>(unique[i])) ++mismatches;
      }
      add(r, "M=" + std::to_string(M) + " " + label + " unique set equals catalog", mismatches == 0,
          std::to_string(seqs.size()) + " sequences, " + std::to_string(count) + " unique, " +
              std::to_string(mismatches) + " mismatches");
    }
  }
}

void suite_b2_sweep(SuiteReport& r) {
  for (int M = 1; M <= 8; ++M) {
    std::vector<B2Witness> ws;
    try {
      ws = enumerate_B2_window(M);
    } catch (const Error& e) {
      add(r, "M=" + std::to_string(M) + " sweep matches theorem sets", false, e.what());
      continue;
    }
    add(r, "M=" + std::to_string(M) + " sweep matches theorem sets", true, std::to_string(ws.size()) + " bases");
    if (M % 2 == 0) {
      add(r, "M=" + std::to_string(M) + " has m bases", static_cast<int>(ws.size()) == M / 2);
    }
    add(r, "M=" + std::to_string(M) + " smallest window base is q2", !ws.empty() && ws.front().base == q2(M));
    bool identities = true, twos = true;
    for (const auto& w : ws) {
      BaseContext ctx = make_context(M, w.base);
      FieldElement left = evaluate(w.left_seq, ctx), right = evaluate(w.right_seq, ctx);
      identities = identities && left == right;
      CountResult c = count_expansions(left, ctx);
      twos = twos && c.kind == CountKind::Exactly && c.count == 2;
    }
    add(r, "M=" + std::to_string(M) + " witnesses satisfy the two-expansion identity", identities);
    add(r, "M=" + std::to_string(M) + " witnesses have exactly two expansions", twos);
  }
}

void suite_known_m1(SuiteReport& r) {
  KnownBasesM1 kb = known_bases_M1();
  const Rational tol(1, 100000);
  add(r, "M=1 q2 ~ 1.71064", near(kb.q2, "1.71064", tol), kb.q2.decimal(10));
  add(r, "M=1 q2 equals the library q2(1)", kb.q2 == q2(1));
  add(r, "M=1 cubic base ~ 1.75488", near(kb.qk, "1.75488", tol), kb.qk.decimal(10));
  add(r, "M=1 sextic base ~ 1.64541", near(kb.q_aleph0_second, "1.64541", tol), kb.q_aleph0_second.decimal(10));

  const AlgebraicReal golden = make_algebraic(poly({1, -2, -1}), {2, 3});
  const std::set<FamilyId> expected = {{Variant::Even, 2, 1, 1, 1},
                                       {Variant::Even, 2, 0, 1, 0},
                                       {Variant::Even, 1, 1, 1, 0},
                                       {Variant::Even, 1, 1, 0, 1},
                                       {Variant::Even, 1, 0, 0, 0}};
  std::set<FamilyId> found;
  bool all_golden = true;
  for (const auto& h : sweep_window(2, 8)) {
    if (h.family.k < h.family.j) continue;
    found.insert(h.family);
    all_golden = all_golden && h.root == golden;
  }
  add(r, "m=1 window families are the five coincident ones", found == expected,
      std::to_string(found.size()) + " families with k >= j");
  add(r, "m=1 window roots all equal 1+sqrt(2)", all_golden);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"table1", "thm13", "monotonicity", "catalogs", "b2-sweep", "known-m1"};
  return names;
}

SuiteReport run_suite(std::string_view name) {
  SuiteReport r;
  r.suite = std::string(name);
  auto start = std::chrono::steady_clock::now();
  if (name == "table1") suite_table1(r);
  else if (name == "thm13") suite_thm13(r);
  else if (name == "monotonicity") suite_monotonicity(r);
  else if (name == "catalogs") suite_catalogs(r);
  else if (name == "b2-sweep") suite_b2_sweep(r);
  else if (name == "known-m1") suite_known_m1(r);
  else throw Error(ErrorCode::ParseError, "unknown suite '" + std::string(name) + "'");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace multibase
