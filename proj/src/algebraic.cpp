#include "multibase/algebraic.hpp"

#include <cassert>
#include <functional>

#include "multibase/error.hpp"

namespace multibase {

AlgebraicReal::AlgebraicReal(Polynomial square_free, Interval isolating, bool irreducible)
    : poly_(std::move(square_free)), interval_(std::move(isolating)), irreducible_(irreducible) {}

AlgebraicReal::AlgebraicReal() : poly_(Polynomial::linear_root(0)), interval_(Interval::point(0)), irreducible_(true) {}

AlgebraicReal AlgebraicReal::rational(const Rational& r) {
  return AlgebraicReal(Polynomial::linear_root(r).primitive(), Interval::point(r), true);
}

AlgebraicReal AlgebraicReal::bisected() const {
  if (is_rational()) return *this;
  Rational mid = interval_.midpoint();
  int s = poly_.sign_at(mid);
  if (s == 0) return rational(mid);
  if (s == poly_.sign_at(interval_.lo)) return AlgebraicReal(poly_, {mid, interval_.hi}, irreducible_);
  return AlgebraicReal(poly_, {interval_.lo, mid}, irreducible_);
}

AlgebraicReal AlgebraicReal::refined_to(const Rational& width) const {
  if (is_rational() || interval_.width() <= width) return *this;
  // Bisect in place; the sign at lo is invariant because lo only moves to
  // points where the polynomial has that same sign.
  Rational lo = interval_.lo, hi = interval_.hi;
  const int sign_lo = poly_.sign_at(lo);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int s = poly_.sign_at(mid);
    if (s == 0) return rational(mid);
    if (s == sign_lo) lo = mid;
    else hi = mid;
  }
  return AlgebraicReal(poly_, {lo, hi}, irreducible_);
}

double AlgebraicReal::approx() const {
  Rational w(1);
  mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), 60);
  return refined_to(w).interval().midpoint().get_d();
}

std::string AlgebraicReal::decimal(int digits) const {
  Rational w = Rational(1) / power(Rational(10), static_cast<unsigned>(digits + 2));
  return to_decimal(refined_to(w).interval().midpoint(), digits);
}

Interval refine(const AlgebraicReal& a, int digits) {
  Rational w = Rational(1, 2) / power(Rational(10), static_cast<unsigned>(digits));
  return a.refined_to(w).interval();
}

namespace {

bool has_no_rational_root(const Polynomial& p) { return rational_roots(p).empty(); }

void isolate_recursive(const Polynomial& p, const SturmSequence& sturm, bool irreducible, Rational a,
                       Rational b, int n, std::vector<AlgebraicReal>& out) {
  if (n <= 0) return;
  if (n == 1) {
    if (p.sign_at(b) == 0) {
      out.push_back(AlgebraicReal::rational(b));
      return;
    }
    while (p.sign_at(a) == 0) {
      Rational mid = (a + b) / 2;
      if (p.sign_at(mid) == 0) {
        out.push_back(AlgebraicReal::rational(mid));
        return;
      }
      if (sturm.count_roots(mid, b) == 1) a = mid;
      else b = mid;
    }
    out.emplace_back(p, Interval{a, b}, irreducible);
    return;
  }
  Rational mid = (a + b) / 2;
  int left = sturm.count_roots(a, mid);
  isolate_recursive(p, sturm, irreducible, a, mid, left, out);
  isolate_recursive(p, sturm, irreducible, mid, b, n - left, out);
}

}  // namespace

namespace {

std::vector<AlgebraicReal> isolate_impl(const Polynomial& poly, const Interval& window, bool flag_irreducible) {
  if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "isolate_roots: zero polynomial");
  Polynomial p = square_free_part(poly);
  std::vector<AlgebraicReal> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) {
    Rational r = -p.coeff(0) / p.coeff(1);
    if (window.contains(r)) out.push_back(AlgebraicReal::rational(r));
    return out;
  }
  bool irreducible = flag_irreducible && p.degree() <= 3 && has_no_rational_root(p);
  SturmSequence sturm(p);
  if (p.sign_at(window.lo) == 0) out.push_back(AlgebraicReal::rational(window.lo));
  if (window.lo < window.hi) {
    isolate_recursive(p, sturm, irreducible, window.lo, window.hi, sturm.count_roots(window.lo, window.hi), out);
  }
  return out;
}

}  // namespace

std::vector<AlgebraicReal> isolate_roots(const Polynomial& poly, const Interval& window) {
  return isolate_impl(poly, window, true);
}

AlgebraicReal make_algebraic(const Polynomial& poly, const Interval& window) {
  if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "make_algebraic: zero polynomial");
  if (window.lo > window.hi) throw Error(ErrorCode::ParseError, "make_algebraic: empty window");
  auto roots = isolate_roots(poly, window);
  if (roots.empty()) {
    throw Error(ErrorCode::NoRootInWindow, "no root of " + poly.to_string() + " in [" + to_string(window.lo) +
                                               ", " + to_string(window.hi) + "]");
  }
  if (roots.size() > 1) {
    throw Error(ErrorCode::MultipleRootsInWindow, std::to_string(roots.size()) + " roots of " + poly.to_string() +
                                                      " in [" + to_string(window.lo) + ", " +
                                                      to_string(window.hi) + "]");
  }
  return roots.front();
}

std::strong_ordering compare(const AlgebraicReal& a, const Rational& r) {
  if (a.is_rational()) return cmp(a.rational_value(), r) <=> 0;
  if (r <= a.lo()) return std::strong_ordering::greater;
  if (r >= a.hi()) return std::strong_ordering::less;
  int s = a.defining_poly().sign_at(r);
  if (s == 0) return std::strong_ordering::equal;
  // root lies in (r, hi) iff p(r) has the same sign as p(lo)
  return s == a.defining_poly().sign_at(a.lo()) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.is_rational()) return 0 <=> compare(b, a.rational_value());
  if (b.is_rational()) return compare(a, b.rational_value());

  auto disjoint = [](const AlgebraicReal& x, const AlgebraicReal& y) -> int {
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    return 0;
  };
  if (int d = disjoint(a, b); d != 0) return d <=> 0;

  // Overlapping intervals: equal iff gcd of the defining polynomials has a root
  // in the overlap (its roots there can only be a, and only be b).
  Polynomial g = gcd(a.defining_poly(), b.defining_poly());
  if (g.degree() >= 1) {
    Interval overlap;
    if (intersect(a.interval(), b.interval(), overlap)) {
      SturmSequence sg(square_free_part(g));
      if (sg.count_roots_closed(overlap.lo, overlap.hi) >= 1) return std::strong_ordering::equal;
    }
  }
  AlgebraicReal x = a, y = b;
  while (true) {
    if (x.interval().width() >= y.interval().width()) x = x.bisected();
    else y = y.bisected();
    if (x.is_rational()) return 0 <=> compare(y, x.rational_value());
    if (y.is_rational()) return compare(x, y.rational_value());
    if (int d = disjoint(x, y); d != 0) return d <=> 0;
  }
}

namespace {

void divisors(Integer n, std::vector<Integer>& out) {
  if (n < 0) n = -n;
  out.clear();
  if (n == 0) return;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  out.insert(out.end(), large.rbegin(), large.rend());
}

bool divides_exactly(const Polynomial& factor, const Polynomial& p) { return (p % factor).is_zero(); }

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& poly) {
  if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "rational_roots: zero polynomial");
  Polynomial p = square_free_part(poly);
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  // Distinct rationals a/b with b | lead are at least 1/lead^2 apart, so an
  // isolating interval narrower than that contains at most one candidate per b.
  Integer lead = p.leading().get_num();
  std::vector<Integer> lead_divisors;
  divisors(lead, lead_divisors);
  Rational bound = cauchy_bound(p);
  Rational width = Rational(1) / (Rational(lead) * Rational(lead) * 2);
  for (const auto& root : isolate_impl(p, {-bound, bound}, false)) {
    if (root.is_rational()) {
      out.push_back(root.rational_value());
      continue;
    }
    AlgebraicReal narrow = root.refined_to(width);
    if (narrow.is_rational()) {
      out.push_back(narrow.rational_value());
      continue;
    }
    for (const auto& b : lead_divisors) {
      Rational lo_scaled = narrow.lo() * Rational(b);
      Rational hi_scaled = narrow.hi() * Rational(b);
      Integer first, last;
      mpz_cdiv_q(first.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
      mpz_fdiv_q(last.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
      bool found = false;
      for (Integer a = first; a <= last; ++a) {
        Rational candidate(a, b);
        candidate.canonicalize();
        if (p(candidate) == 0) {
          out.push_back(candidate);
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  return out;
}

Polynomial find_quadratic_factor(const Polynomial& primitive) {
  const Polynomial& p = primitive;
  if (p.degree() < 4) return {};
  Integer lead = p.leading().get_num();
  Integer constant = p.coeff(0).get_num();
  if (constant == 0) return {};
  // |c| up to 10^12 keeps divisor enumeration cheap; larger constants never
  // arise here and are reported as "no factor found".
  if (abs(constant) > Integer("1000000000000")) return {};

  Rational root_bound = cauchy_bound(p);
  Integer p_at_one = p(Rational(1)).get_num();
  Integer p_at_minus_one = p(Rational(-1)).get_num();
  std::vector<Integer> lead_divs, const_divs;
  divisors(lead, lead_divs);
  divisors(constant, const_divs);
  for (const auto& a : lead_divs) {
    Rational bb = 2 * Rational(a) * root_bound;
    Integer b_max = bb.get_num() / bb.get_den();
    for (const auto& c_abs : const_divs) {
      for (int c_sign : {1, -1}) {
        Integer c = c_abs * c_sign;
        for (Integer b = -b_max; b <= b_max; ++b) {
          // g(t) | p(t) for integers t is necessary for g | p over Z
          Integer g1 = a + b + c;
          if (g1 == 0 || p_at_one % g1 != 0) continue;
          Integer gm1 = a - b + c;
          if (gm1 == 0 || p_at_minus_one % gm1 != 0) continue;
          Polynomial g = Polynomial::from_leading_first(std::vector<Integer>{a, b, c});
          if (divides_exactly(g, p)) return g;
        }
      }
    }
  }
  return {};
}

AlgebraicReal minimize(const AlgebraicReal& a) {
  if (a.is_rational()) return AlgebraicReal::rational(a.rational_value());
  Polynomial p = a.defining_poly().primitive();

  for (const auto& r : rational_roots(p)) {
    if (compare(a, r) == 0) return AlgebraicReal::rational(r);
    p = divmod(p, Polynomial::linear_root(r)).quotient.primitive();
  }

  auto vanishes_inside = [&](const Polynomial& f) {
    return f.sign_at(a.lo()) != f.sign_at(a.hi());
  };
  bool split_failed = false;
  while (p.degree() >= 4) {
    Polynomial g = find_quadratic_factor(p);
    if (g.is_zero()) {
      split_failed = true;
      break;
    }
    Polynomial rest = divmod(p, g).quotient.primitive();
    p = vanishes_inside(g) ? g : rest;
  }
  bool verified = p.degree() <= 3 || (split_failed && p.degree() <= 5);
  return AlgebraicReal(p, a.interval(), verified);
}

}  // namespace multibase
