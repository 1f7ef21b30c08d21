#include "multibase/bases.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "multibase/error.hpp"

namespace multibase {

namespace {

Polynomial poly(std::vector<long> leading_first) { return Polynomial::from_leading_first(leading_first); }

Polynomial x_pow(int n) { return Polynomial::monomial(1, n); }

/// The single root of p above `floor` inside [floor.lo, hi]; a logic error if
/// there is not exactly one.
AlgebraicReal root_above(const Polynomial& p, const AlgebraicReal& floor, const Rational& hi, const char* what) {
  std::vector<AlgebraicReal> found;
  for (auto& r : isolate_roots(p, {floor.lo(), hi})) {
    if (compare(r, floor) > 0) found.push_back(std::move(r));
  }
  if (found.size() != 1) {
    throw Error(ErrorCode::VerificationFailed, std::string(what) + ": expected one root above p1, found " +
                                                   std::to_string(found.size()));
  }
  return found.front();
}

void require_M(int M) {
  if (M < 1) throw Error(ErrorCode::InvalidBase, "M must be >= 1");
}

}  // namespace

AlgebraicReal p1(int M) {
  require_M(M);
  long m = (M + 1) / 2;
  if (M % 2 == 0) return AlgebraicReal::rational(m + 1);
  return make_algebraic(poly({1, -m, -m}), {m, m + 1});
}

AlgebraicReal p2(int M) {
  require_M(M);
  long m = (M + 1) / 2;
  if (M % 2 == 0) return make_algebraic(poly({1, -(m + 1), -m}), {m + 1, m + 2});
  Polynomial p = poly({1, -(m + 1), 1, -m});
  return root_above(p, p1(M), cauchy_bound(p), "p2");
}

AlgebraicReal q2(int M) {
  require_M(M);
  long m = (M + 1) / 2;
  if (M % 2 == 0) return make_algebraic(poly({1, -(m + 1), -1}), {m + 1, m + 2});
  AlgebraicReal upper = p2(M);
  AlgebraicReal r = root_above(poly({1, -(m - 1), -2 * m, -m, -1}), p1(M), upper.hi(), "q2");
  if (compare(r, upper) > 0) throw Error(ErrorCode::VerificationFailed, "q2 root exceeds p2");
  return minimize(r);
}

AlgebraicReal window_interior_base(int M) {
  require_M(M);
  long m = (M + 1) / 2;
  Polynomial p = M % 2 == 0 ? poly({1, -(m + 1), 0, -1})
                            : poly({1, -m, -m, -(m - 1), -(m - 1), -(m - 1) - 1});
  return minimize(root_above(p, p1(M), M + 1, "interior base"));
}

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Even: return "even";
    case Variant::Odd1: return "odd1";
    case Variant::Odd2: return "odd2";
    case Variant::Odd3: return "odd3";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  std::string s(text);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "even") return Variant::Even;
  if (s == "odd1") return Variant::Odd1;
  if (s == "odd2") return Variant::Odd2;
  if (s == "odd3") return Variant::Odd3;
  throw Error(ErrorCode::InvalidFamily, "unknown variant '" + std::string(text) + "'");
}

std::string to_string(const FamilyId& id) {
  return std::string(variant_name(id.variant)) + "(" + std::to_string(id.k) + "," + std::to_string(id.j) + "," +
         std::to_string(id.u) + "," + std::to_string(id.v) + ")";
}

void validate_family(const FamilyId& id, int M) {
  if (M < 1) throw Error(ErrorCode::InvalidFamily, "M must be >= 1");
  const int m = (M + 1) / 2;
  const bool even = M % 2 == 0;
  if (even != (id.variant == Variant::Even)) {
    throw Error(ErrorCode::InvalidFamily, "variant " + std::string(variant_name(id.variant)) +
                                              " does not match the parity of M=" + std::to_string(M));
  }
  const int digit_max = even ? m : m - 1;
  if (id.k < 0 || id.j < 0 || id.u < 0 || id.v < 0 || id.u > digit_max || id.v > digit_max) {
    throw Error(ErrorCode::InvalidFamily, "parameters out of range: " + to_string(id));
  }
}

LaurentForm family_laurent(const FamilyId& id, int M) {
  validate_family(id, M);
  const long m = (M + 1) / 2;
  const int k = id.k, j = id.j;
  const long u = id.u, v = id.v;
  if (id.variant == Variant::Even) {
    int s = std::max(k, j);
    Polynomial p = x_pow(s + 2) - Polynomial::monomial(2 * m + 1, s + 1) +
                   x_pow(s - k) * poly({u, m - u}) + x_pow(s - j) * poly({v, m - v});
    return {p, s};
  }
  int s = std::max(k, j) + 1;
  auto tail_a = [&](int e, long d) { return x_pow(s - e - 1) * poly({d, m, m - 1 - d}); };
  auto tail_b = [&](int e, long d) { return x_pow(s - e - 1) * poly({d, m - 1, m - d}); };
  Polynomial common = x_pow(s) * poly({1, 1 - 2 * m, -2 * m});
  switch (id.variant) {
    case Variant::Odd1: return {common + tail_a(k, u) + tail_a(j, v), s};
    case Variant::Odd2: return {common + tail_b(k, u) + tail_b(j, v), s};
    default: return {common + tail_a(k, u) + tail_b(j, v), s};
  }
}

FieldElement family_value(const FamilyId& id, int M, const FieldElement& q) {
  LaurentForm f = family_laurent(id, M);
  const auto& c = f.numerator.coeffs();
  FieldElement acc = q.field()->zero();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + *it;
  return acc * q.pow(-f.shift);
}

Rational family_value(const FamilyId& id, int M, const Rational& q) {
  if (sgn(q) == 0) throw Error(ErrorCode::DivisionByZero, "family value at q = 0");
  LaurentForm f = family_laurent(id, M);
  return f.numerator(q) / power(q, static_cast<unsigned>(f.shift));
}

FieldElement family_value(const FamilyId& id, int M, const AlgebraicReal& q) {
  FieldPtr field = NumberField::create(q);
  return family_value(id, M, field->gen());
}

namespace {

bool has_root_at(const FamilyId& id, int M, const FieldElement& p1_elem) {
  return sign_of(family_value(id, M, p1_elem)) < 0;
}

AlgebraicReal root_unchecked(const FamilyId& id, int M, const AlgebraicReal& floor) {
  Polynomial p = family_laurent(id, M).numerator;
  std::vector<AlgebraicReal> found;
  for (auto& r : isolate_roots(p, {floor.lo(), cauchy_bound(p)})) {
    if (compare(r, floor) > 0) found.push_back(std::move(r));
  }
  if (found.empty()) throw Error(ErrorCode::NoRoot, "no root above p1 for " + to_string(id));
  if (found.size() > 1) {
    throw Error(ErrorCode::VerificationFailed, "several roots above p1 for " + to_string(id));
  }
  return found.front();
}

}  // namespace

bool family_has_root(const FamilyId& id, int M) {
  validate_family(id, M);
  FieldPtr field = NumberField::create(p1(M));
  return has_root_at(id, M, field->gen());
}

bool family_criterion_closed_form(const FamilyId& id, int M) {
  validate_family(id, M);
  const long m = (M + 1) / 2;
  const long u = id.u, v = id.v;
  if (id.variant == Variant::Even) {
    Rational lhs = Rational(u + 1) / power(Rational(m + 1), static_cast<unsigned>(id.k + 1)) +
                   Rational(v + 1) / power(Rational(m + 1), static_cast<unsigned>(id.j + 1));
    return lhs < 1;
  }
  FieldPtr field = NumberField::create(p1(M));
  FieldElement t = field->gen();
  auto first_kind = [&](long d, int e) { return Rational(d + 1) / Rational(m) * t.pow(-e); };
  auto second_kind = [&](long d, int e) { return (Rational(d) * t + Rational(d) + t) * t.pow(-(e + 2)); };
  FieldElement lhs;
  switch (id.variant) {
    case Variant::Odd1: lhs = first_kind(u, id.k) + first_kind(v, id.j); break;
    case Variant::Odd2: lhs = second_kind(u, id.k) + second_kind(v, id.j); break;
    default: lhs = first_kind(u, id.k) + second_kind(v, id.j); break;
  }
  return sign_of(lhs - Rational(1)) < 0;
}

AlgebraicReal family_root(const FamilyId& id, int M, bool minimal) {
  if (!family_has_root(id, M)) throw Error(ErrorCode::NoRoot, "no root above p1 for " + to_string(id));
  AlgebraicReal r = root_unchecked(id, M, p1(M));
  return minimal ? minimize(r) : r;
}

std::pair<DigitSeq, DigitSeq> family_witness_sequences(const FamilyId& id, int M) {
  validate_family(id, M);
  const int m = (M + 1) / 2;
  const Word hi_lo{m, m - 1}, lo_hi{m - 1, m};
  Word left_tail, right_tail;
  switch (id.variant) {
    case Variant::Even: left_tail = right_tail = {m}; break;
    case Variant::Odd1: left_tail = right_tail = hi_lo; break;
    case Variant::Odd2: left_tail = right_tail = lo_hi; break;
    case Variant::Odd3: left_tail = hi_lo; right_tail = lo_hi; break;
  }
  Word left_pre{1};
  left_pre.insert(left_pre.end(), static_cast<size_t>(id.k), 0);
  left_pre.push_back(id.u);
  Word right_inner(static_cast<size_t>(id.j), 0);
  right_inner.push_back(id.v);
  DigitSeq right = reflect(DigitSeq(right_inner, right_tail), Alphabet{M}).prepend({0});
  return {DigitSeq(left_pre, left_tail), right};
}

std::vector<FamilyId> all_families(int M, int K) {
  const int m = (M + 1) / 2;
  std::vector<Variant> variants;
  int digit_max;
  if (M % 2 == 0) {
    variants = {Variant::Even};
    digit_max = m;
  } else {
    variants = {Variant::Odd1, Variant::Odd2, Variant::Odd3};
    digit_max = m - 1;
  }
  std::vector<FamilyId> out;
  for (Variant var : variants)
    for (int k = 0; k <= K; ++k)
      for (int j = 0; j <= K; ++j)
        for (int u = 0; u <= digit_max; ++u)
          for (int v = 0; v <= digit_max; ++v) out.push_back({var, k, j, u, v});
  return out;
}

namespace {

struct SweepSetup {
  AlgebraicReal lower;
  AlgebraicReal upper;
  FieldPtr p1_field;
};

std::optional<SweepHit> sweep_one(const FamilyId& id, int M, const SweepSetup& s) {
  if (!has_root_at(id, M, s.p1_field->gen())) return std::nullopt;
  AlgebraicReal r = root_unchecked(id, M, s.lower);
  if (compare(r, s.upper) > 0) return std::nullopt;
  return SweepHit{id, r};
}

SweepSetup make_setup(int M) {
  AlgebraicReal lo = p1(M);
  return {lo, p2(M), NumberField::create(lo)};
}

}  // namespace

std::vector<SweepHit> sweep_window(int M, int K) {
  SweepSetup setup = make_setup(M);
  std::vector<SweepHit> out;
  for (const auto& id : all_families(M, K)) {
    if (auto hit = sweep_one(id, M, setup)) out.push_back(std::move(*hit));
  }
  return out;
}

std::vector<SweepHit> sweep_window_omp(int M, int K) {
  SweepSetup setup = make_setup(M);
  const std::vector<FamilyId> ids = all_families(M, K);
  std::vector<std::optional<SweepHit>> slots(ids.size());
  const long n = static_cast<long>(ids.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) slots[static_cast<size_t>(i)] = sweep_one(ids[static_cast<size_t>(i)], M, setup);
  std::vector<SweepHit> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

std::vector<FamilyId> theorem_families(int M) {
  const int m = (M + 1) / 2;
  std::vector<FamilyId> out;
  if (M % 2 == 0) {
    for (int u = 0; u <= m - 1; ++u) out.push_back({Variant::Even, 1, 0, u, m - 1});
    return out;
  }
  for (int k = 2; k <= 3; ++k) {
    for (int u = 0; u <= m - 1; ++u) out.push_back({Variant::Odd2, k, 0, u, m - 1});
    for (int u = 0; u <= m - 2; ++u) out.push_back({Variant::Odd3, k, 0, u, m - 1});
  }
  return out;
}

std::vector<AlgebraicReal> distinct_sorted(std::vector<AlgebraicReal> xs) {
  std::sort(xs.begin(), xs.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; });
  xs.erase(std::unique(xs.begin(), xs.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) {
             return compare(a, b) == 0;
           }),
           xs.end());
  return xs;
}

std::vector<SweepHit> odd1_witnesses(const std::vector<SweepHit>& hits, int M) {
  // For m = 1 the tails (10)^inf and (01)^inf give the same sequence sets, so an
  // odd1 equation can coincide digit for digit with an odd2/odd3 one.
  std::vector<std::pair<DigitSeq, DigitSeq>> other_pairs;
  for (const auto& h : hits) {
    if (h.family.variant != Variant::Odd1) other_pairs.push_back(family_witness_sequences(h.family, M));
  }
  std::vector<SweepHit> out;
  for (const auto& h : hits) {
    if (h.family.variant != Variant::Odd1) continue;
    auto pair = family_witness_sequences(h.family, M);
    if (std::find(other_pairs.begin(), other_pairs.end(), pair) == other_pairs.end()) out.push_back(h);
  }
  return out;
}

std::vector<B2Witness> enumerate_B2_window(int M, int sweep_k) {
  require_M(M);
  std::vector<SweepHit> hits = sweep_window_omp(M, sweep_k);
  if (!odd1_witnesses(hits, M).empty()) {
    throw Error(ErrorCode::VerificationFailed,
                "odd1 root in window: " + to_string(odd1_witnesses(hits, M).front().family));
  }
  std::vector<AlgebraicReal> swept;
  for (const auto& h : hits) swept.push_back(h.root);
  swept = distinct_sorted(std::move(swept));

  const AlgebraicReal lo = p1(M), hi = p2(M);
  std::vector<std::pair<FamilyId, AlgebraicReal>> named;
  for (const auto& id : theorem_families(M)) {
    AlgebraicReal r = family_root(id, M);
    if (compare(r, lo) <= 0 || compare(r, hi) > 0) {
      throw Error(ErrorCode::VerificationFailed, "theorem family outside window: " + to_string(id));
    }
    named.emplace_back(id, r);
  }
  std::vector<AlgebraicReal> expected;
  for (const auto& [id, r] : named) expected.push_back(r);
  expected = distinct_sorted(std::move(expected));

  bool same = swept.size() == expected.size();
  for (size_t i = 0; same && i < swept.size(); ++i) same = compare(swept[i], expected[i]) == 0;
  if (!same) {
    throw Error(ErrorCode::VerificationFailed, "sweep found " + std::to_string(swept.size()) +
                                                   " bases in the window, theorem sets give " +
                                                   std::to_string(expected.size()));
  }

  std::vector<B2Witness> out;
  for (const auto& base : expected) {
    for (const auto& [id, r] : named) {
      if (compare(r, base) == 0) {
        auto [left, right] = family_witness_sequences(id, M);
        out.push_back({r, id, left, right});
        break;
      }
    }
  }
  return out;
}

KnownBasesM1 known_bases_M1() {
  return {make_algebraic(poly({1, 0, -2, -1, -1}), {1, 2}), make_algebraic(poly({1, -2, 1, -1}), {1, 2}),
          make_algebraic(poly({1, 0, -1, -1, -2, -1, -1}), {1, 2})};
}

}  // namespace multibase
