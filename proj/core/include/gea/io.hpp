#pragma once

#include "gea/cfinite.hpp"
#include "gea/dice.hpp"
#include "gea/gasolver.hpp"
#include "gea/laurent.hpp"
#include "gea/ratfun.hpp"
#include "gea/tales.hpp"

#include <nlohmann/json.hpp>

namespace gea {

// JSON encodings. Rationals are always strings ("p/q" or "p"), never
// numbers, and objects keep a fixed key order so output is byte-stable.
// Decoders throw ParseError on malformed input and DomainError when the
// decoded value breaks a type invariant.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
Json to_json(const LaurentPoly& p);
Json to_json(const Poly& p);
Json to_json(const RationalFunction& f);
Json to_json(const GASolution& sol);
Json to_json(const LinearRecurrence& rec);
Json to_json(const EqualityVerdict& v);
Json to_json(const Tale& t);
Json to_json(const TaleSearch& s);
Json to_json(const GeorgeReport& r);
Json to_json(const DieSpec& die);

Rational rational_from_json(const Json& j);
std::vector<Rational> rationals_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RationalFunction ratfun_from_json(const Json& j);
GASolution ga_solution_from_json(const Json& j);
LinearRecurrence recurrence_from_json(const Json& j);
/// Accepts {"faces": [...]} or the bare face array.
DieSpec die_from_json(const Json& j);

/// Parses text as JSON, turning library exceptions into ParseError.
Json parse_json(std::string_view text);

}  // namespace gea
