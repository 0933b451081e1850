#pragma once

#include <json.hpp>

#include "fz/laurent.hpp"
#include "fz/reduction.hpp"

namespace fz {

using Json = nlohmann::ordered_json;

/// {"p", "m", "modulus"}; modulus is null for prime fields.
Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

/// Integer for prime fields, coordinate list over F_p otherwise.
Json elem_to_json(const FieldPtr& f, Elem c);
Elem elem_from_json(const FieldPtr& f, const Json& j);

Json to_json(const UniPoly& p);
Json to_json(const BiPoly& p);
Json to_json(const RationalFunction& r);
Json to_json(const LaurentSeries& s);
/// Ordered slot list of {l, j, value} with values in the text grammar.
Json to_json(const EPoint& e);

UniPoly uni_from_json(const Json& j);
BiPoly bi_from_json(const Json& j);
RationalFunction rational_from_json(const Json& j);
LaurentSeries laurent_from_json(const Json& j);
EPoint epoint_from_json(const Json& j, const FieldPtr& f);

}  // namespace fz
