#pragma once

#include <string>

#include <json.hpp>

#include "qfold/error.hpp"
#include "qfold/explorer.hpp"
#include "qfold/folding.hpp"

// JSON forms of the core types. Vertex indices are 1-based on the wire, 0-based in
// memory. Malformed input throws Error("invalid_json").
namespace qfold::json_io {

using Json = nlohmann::json;

Json to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j);

/// {"generators": [...]}
Json to_json(const GroupPtr& g);
GroupPtr group_from_json(const Json& j);

/// {"terms": [{"g": ..., "num": n, "den": d}, ...]} in canonical term order. A plain
/// string such as "1 - w" is accepted on input too.
Json to_json(const GroupRingElement& a);
GroupRingElement group_ring_from_json(const GroupPtr& g, const Json& j);

/// {"n": n, "frozen": [...], "b": [[...], ...]}
Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

/// {"group", "m", "stab_orders", "reps"?, "entries"}; validated on input.
Json to_json(const FoldedMatrix& b);
FoldedMatrix folded_from_json(const Json& j);

/// {"group", "vertex_maps", "reps"?}; on output also "orbits" and "stab_orders".
Json to_json(const QuiverAction& a);
QuiverAction action_from_json(const Quiver& q, const Json& j);

/// {"steps": [...], "perm": [...]?}
Json to_json(const MutationSequence& s);
MutationSequence sequence_from_json(const Json& j);

/// {"complete", "nodes": [{"id", "key", "matrix" | "quiver", "terminal", "note"?}],
///  "edges": [{"from", "index", "to"}]}; node ids are 0-based, indices 1-based.
Json to_json(const ExchangeGraph& g);

/// {"error": code, "detail": text, "witness": [...]?}
Json error_json(const Error& e);

Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace qfold::json_io
