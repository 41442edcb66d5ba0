#pragma once

#include <string>

#include "json.hpp"

#include "hexbrace/augment.hpp"
#include "hexbrace/brace.hpp"
#include "hexbrace/diagnostics.hpp"
#include "hexbrace/hexagon.hpp"
#include "hexbrace/pipeline.hpp"

namespace hexbrace {

using Json = nlohmann::ordered_json;

// Malformed documents throw Error("json_format").

Json to_json(const LabeledGraph& g);  // {"vertices": [...], "edges": [[u, v], ...]}
LabeledGraph graph_from_json(const Json& j);

Json to_json(const Diagnostics& d);  // [{"clause", "message"}, ...]
Json to_json(const BraceResult& r);

// Vertices carry source vertex, index and side; edges carry a colour tag.
Json to_json(const HexagonGraph& h);
// Red and blue edges coloured, white edges black.
std::string to_dot(const HexagonGraph& h);

Json to_json(const BlueMatching& m);

Json to_json(const DcdcCertificate& c);  // {"cycles": [[[u, v], ...], ...]}
DcdcCertificate certificate_from_json(const Json& j);

Json to_json(const RotationSystem& r);  // {"rotation": {"v": [n0, n1, n2], ...}}
RotationSystem rotation_from_json(const Json& j);

Json to_json(const FaceSet& f);

// {"kind": "type1", "edge": [a, b]}; type2 adds x, n1, n2, x1, v, x2, w;
// expand is type2 without w; type3/type4 carry "expansions": [e, e].
Json to_json(const AugmentationStep& s);
AugmentationStep step_from_json(const Json& j);

// {"base": {"name": "L8", "labels": [...]} | {"graph": {...}}, "steps": [...]}
Json to_json(const AugmentationTrace& t);
AugmentationTrace trace_from_json(const Json& j);

// Per-ear entries, double augmentation count and the full trace.
Json to_json(const PipelineReport& r);

Json parse_json_text(const std::string& text);

}  // namespace hexbrace
