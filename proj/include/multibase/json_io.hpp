#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "multibase/bases.hpp"
#include "multibase/counting.hpp"

namespace multibase {

using Json = nlohmann::ordered_json;

/// `q2:M`, `p1:M`, `p2:M`, `mid:M` (window interior preset), or
/// `poly:<coeffs>@<lo>:<hi>`. Throws ParseError.
AlgebraicReal parse_base_spec(std::string_view spec);

/// `lo:hi` with rational endpoints.
Interval parse_interval(std::string_view text);

/// A rational, a digit sequence (anything containing '('), or `elem:c0,c1,...`
/// giving coefficients of q^0, q^1, ... in Q(q).
FieldElement parse_point(std::string_view text, const BaseContext& ctx);

Json to_json(const AlgebraicReal& a, int digits);
Json to_json(const FieldElement& e, int digits);
Json to_json(const FamilyId& id);
Json to_json(const Interval& iv);

/// {input, base: {poly, interval}, result: {kind, count, depth}, branches, leaves}.
Json count_certificate(const std::string& input, const CountResult& result, const BaseContext& ctx);

}  // namespace multibase
