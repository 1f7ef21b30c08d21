#include "multibase/json_io.hpp"

#include "multibase/error.hpp"

namespace multibase {

namespace {

int parse_M(std::string_view text) {
  Rational r = parse_rational(text);
  if (r.get_den() != 1 || r < 1 || r > 1000) throw Error(ErrorCode::ParseError, "invalid M '" + std::string(text) + "'");
  return static_cast<int>(r.get_num().get_si());
}

}  // namespace

Interval parse_interval(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "interval must be lo:hi");
  Interval iv{parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
  if (iv.lo > iv.hi) throw Error(ErrorCode::ParseError, "interval lo exceeds hi");
  return iv;
}

AlgebraicReal parse_base_spec(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::ParseError, "invalid base spec '" + std::string(spec) + "'");
  std::string_view kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  if (kind == "q2") return q2(parse_M(rest));
  if (kind == "p1") return p1(parse_M(rest));
  if (kind == "p2") return p2(parse_M(rest));
  if (kind == "mid") return window_interior_base(parse_M(rest));
  if (kind == "poly") {
    auto at = rest.find('@');
    if (at == std::string_view::npos) throw Error(ErrorCode::ParseError, "poly base needs @lo:hi");
    Polynomial p = Polynomial::parse(rest.substr(0, at));
    if (!p.has_integer_coeffs()) throw Error(ErrorCode::ParseError, "polynomial coefficients must be integers");
    return make_algebraic(p, parse_interval(rest.substr(at + 1)));
  }
  throw Error(ErrorCode::ParseError, "unknown base kind '" + std::string(kind) + "'");
}

FieldElement parse_point(std::string_view text, const BaseContext& ctx) {
  if (text.find('(') != std::string_view::npos) return evaluate(DigitSeq::parse(text), ctx);
  if (text.substr(0, 5) == "elem:") {
    std::vector<Rational> coeffs;
    std::string_view rest = text.substr(5);
    size_t start = 0;
    while (true) {
      size_t comma = rest.find(',', start);
      coeffs.push_back(parse_rational(rest.substr(start, comma == std::string_view::npos ? comma : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return ctx.field->from_coeffs(std::move(coeffs));
  }
  return ctx.field->from_rational(parse_rational(text));
}

Json to_json(const Interval& iv) { return Json::array({to_string(iv.lo), to_string(iv.hi)}); }

Json to_json(const AlgebraicReal& a, int digits) {
  Json j;
  j["poly"] = a.defining_poly().to_string();
  j["interval"] = to_json(a.interval());
  j["decimal"] = a.decimal(digits);
  j["degree"] = a.degree();
  j["irreducible"] = a.irreducible_verified();
  return j;
}

Json to_json(const FieldElement& e, int digits) {
  Json j;
  Json coeffs = Json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back(to_string(c));
  j["coeffs"] = coeffs;
  Rational w = Rational(1) / power(Rational(10), static_cast<unsigned>(digits + 2));
  j["decimal"] = to_decimal(e.enclosure(w).midpoint(), digits);
  j["sign"] = sign_of(e);
  return j;
}

Json to_json(const FamilyId& id) {
  return Json{{"variant", std::string(variant_name(id.variant))}, {"k", id.k}, {"j", id.j}, {"u", id.u}, {"v", id.v}};
}

Json count_certificate(const std::string& input, const CountResult& result, const BaseContext& ctx) {
  const int M = ctx.alphabet.M;
  const bool comma = M >= 10;
  Json j;
  j["input"] = input;
  j["base"] = Json{{"poly", ctx.q.defining_poly().to_string()}, {"interval", to_json(ctx.q.interval())}};
  j["result"] = Json{{"kind", std::string(count_kind_name(result.kind))},
                     {"count", result.count},
                     {"depth", result.depth_used},
                     {"states", result.states},
                     {"graph_closed", result.graph_closed},
                     {"infinite_proven", result.infinite_proven}};
  Json branches = Json::array();
  for (const auto& b : result.branches) {
    branches.push_back(Json{{"prefix", word_to_string(b.prefix, comma)}, {"digit_options", b.digit_options}});
  }
  j["branches"] = branches;
  Json leaves = Json::array();
  for (const auto& l : result.leaves) {
    leaves.push_back(Json{{"prefix", word_to_string(l.prefix, comma)},
                          {"tail", l.tail.to_string(M)},
                          {"expansion", l.tail.prepend(l.prefix).to_string(M)},
                          {"certificate", "unique-cycle"}});
  }
  j["leaves"] = leaves;
  return j;
}

}  // namespace multibase
