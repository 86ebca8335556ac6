#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ulrich/invariants.hpp"

namespace ulrich {

/// SurfaceDocument: the JSON exchange format for polarized surfaces.
///
///   { "name", "basis", "gram", "K", "h", "pg", "q", "kind", "flags", "provenance" }
///
/// Required: basis, gram, K, h, pg, q. Missing name/provenance default to "",
/// a missing kind to "abstract", missing flags to "unknown". Integers must fit
/// in 64 bits. Unknown keys are rejected.
///
/// Errors: ParseError for malformed JSON, ValidationError (with the field
/// path, e.g. "gram" or "flags.non_special") for anything else.
PolarizedSurface parse_surface(std::string_view text);
PolarizedSurface surface_from_json(const nlohmann::json& doc);

/// Canonical text: keys in the order above, two-space indentation, integer
/// arrays on one line, trailing newline. parse_surface(serialize_surface(s))
/// == s and serialize_surface is idempotent under that round trip.
std::string serialize_surface(const PolarizedSurface& s);
nlohmann::ordered_json surface_to_json(const PolarizedSurface& s);

}  // namespace ulrich
