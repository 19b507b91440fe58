#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "entrocone/cones.hpp"
#include "entrocone/graph.hpp"
#include "entrocone/vectors.hpp"
#include "entrocone/volumes.hpp"

namespace entrocone::io {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);

// {"parties": n, "vertices": [{"id", "color"?}], "edges": [{"u", "v", "w"}]}
GraphSpec graph_spec_from_json(const Json& j);
Json to_json(const GraphModel& g);

// {"parties": n, "kind": "entropy" | "sym", "entries": [...]}
using AnyVector = std::variant<EntropyVector, SymVector>;
AnyVector vector_from_json(const Json& j);
Json to_json(const EntropyVector& v);
Json to_json(const SymVector& v);

// {"parties": n, "kind": "inequality" | "sym-inequality", "coeffs": {key: value}}
// Keys are comma-separated parties for full inequalities and cardinalities
// "1".."ceil(n/2)" for symmetric ones. Omitted keys are zero.
using AnyInequality = std::variant<Inequality, SymInequality>;
AnyInequality inequality_from_json(const Json& j);
Json to_json(const Inequality& q);
Json to_json(const SymInequality& q);

// {"parties": n, "rays": [[...], ...], "facets": [[...], ...]}; rays are
// listed one vector per ray. Either key may be absent.
struct ConeDocument {
  int parties = 0;
  std::optional<RMatrix> rays;  // columns are rays
  std::optional<RMatrix> facets;
};
ConeDocument cone_from_json(const Json& j);
Json cone_to_json(int parties, const RMatrix* rays, const RMatrix* facets);

Json cross_section_to_json(const std::vector<std::vector<Rational>>& vertices);

Json to_json(const RatioRow& row);
Json volume_to_json(int parties, const std::string& cone, const VolumeReport& report);

/// Reads a whole JSON document from a path, or standard input for "-".
Json read_document(const std::string& path);

}  // namespace entrocone::io
