#include "multibase/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "multibase/error.hpp"

namespace multibase {

Polynomial::Polynomial(std::vector<Rational> low_first) : coeffs_(std::move(low_first)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_leading_first(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) c.emplace_back(*it);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_leading_first(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) c.emplace_back(*it);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial(std::vector<Rational>{-r, 1}); }

Polynomial Polynomial::parse(std::string_view text) {
  std::vector<Rational> leading_first;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    leading_first.push_back(parse_rational(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::reverse(leading_first.begin(), leading_first.end());
  return Polynomial(std::move(leading_first));
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval Polynomial::eval(const Interval& x) const {
  if (coeffs_.empty()) return Interval::point(0);
  Interval acc = Interval::point(coeffs_.back());
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    acc = acc * x;
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational lead = leading();
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::positively_scaled() const {
  if (is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : coeffs_) {
    Integer n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x *= scale;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::primitive() const {
  Polynomial p = positively_scaled();
  if (!p.is_zero() && sgn(p.leading()) < 0) return -p;
  return p;
}

bool Polynomial::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<Integer> Polynomial::integer_coeffs_leading_first() const {
  assert(has_integer_coeffs());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out.push_back(it->get_num());
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (it != coeffs_.rbegin()) os << ',';
    os << multibase::to_string(*it);
  }
  return os.str();
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> c(a.coeffs_);
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const Rational& lead = b.leading();
  const auto& bc = b.coeffs();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rational f = rem[static_cast<size_t>(i)] / lead;
    if (sgn(f) == 0) continue;
    size_t shift = static_cast<size_t>(i - b.degree());
    quo[shift] = f;
    for (size_t j = 0; j < bc.size(); ++j) rem[shift + j] -= f * bc[j];
  }
  rem.resize(static_cast<size_t>(b.degree()));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = (x % y).positively_scaled();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Polynomial s2 = s0 - qr.quotient * s1;
    Polynomial t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.primitive();
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).quotient.primitive();
}

Rational cauchy_bound(const Polynomial& p) {
  Rational sum = 0;
  for (int i = 0; i < p.degree(); ++i) sum += abs(p.coeff(i));
  sum /= abs(p.leading());
  return 1 + (sum > 1 ? sum : Rational(1));
}

SturmSequence::SturmSequence(const Polynomial& square_free) {
  chain_.push_back(square_free.positively_scaled());
  chain_.push_back(square_free.derivative().positively_scaled());
  while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
    Polynomial r = -(chain_[chain_.size() - 2] % chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(r.positively_scaled());
  }
  if (chain_.back().is_zero()) chain_.pop_back();
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  if (lo >= hi) return 0;
  return sign_changes(lo) - sign_changes(hi);
}

int SturmSequence::count_roots_closed(const Rational& lo, const Rational& hi) const {
  int at_lo = base().sign_at(lo) == 0 ? 1 : 0;
  return at_lo + count_roots(lo, hi);
}

}  // namespace multibase
