#pragma once

// JSON encodings of c-sets, relations, spans and cospans.
//
// Encoders emit keys in a fixed order and spans in canonical form, so equal
// arrows print identically. Decoders throw ParseError for malformed or
// mistyped JSON and DomainError when a well-formed value violates an
// invariant (e.g. a leg that is not a c-relation).

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "linking/cospan.hpp"
#include "linking/crel.hpp"
#include "linking/multiset.hpp"
#include "linking/span_c.hpp"
#include "linking/span_m.hpp"

namespace linking {

using Json = nlohmann::ordered_json;

Json to_json(const CSet& c);
Json to_json(const CRel& f);
Json to_json(const MRel& f);
Json to_json(const SpanC& s);
Json to_json(const SpanM& s);
Json to_json(const Cospan& c);

CSet cset_from_json(const Json& j);
CRel crel_from_json(const Json& j);
MRel mrel_from_json(const Json& j);
SpanC span_c_from_json(const Json& j);
SpanM span_m_from_json(const Json& j);
Cospan cospan_from_json(const Json& j);

using AnySpan = std::variant<SpanC, SpanM>;
/// Dispatches on the "model" field.
AnySpan span_from_json(const Json& j);

/// Throws ParseError with the byte offset on malformed text.
Json parse_json(const std::string& text);

}  // namespace linking
