#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entrocone/rational.hpp"
#include "entrocone/subsystem.hpp"
#include "entrocone/vectors.hpp"

namespace entrocone {

/// File-level description of a graph model: vertex ids, optional boundary
/// colors in [n+1], and weighted edges between ids. Not yet validated.
struct GraphSpec {
  struct Vertex {
    std::string id;
    std::optional<int> color;  // absent for bulk vertices
  };
  struct Edge {
    std::string u;
    std::string v;
    Rational weight;
  };

  int parties = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

enum class GraphIssue {
  BadPartyCount,
  DuplicateVertex,
  ColorOutOfRange,
  MissingColor,
  UnknownVertex,
  SelfLoop,
  NegativeWeight,
};

struct GraphDiagnostic {
  GraphIssue issue;
  std::string message;
};

/// Thrown when building a GraphModel from an invalid spec.
class GraphError : public std::invalid_argument {
 public:
  explicit GraphError(GraphDiagnostic d) : std::invalid_argument(d.message), diagnostic_(std::move(d)) {}
  const GraphDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  GraphDiagnostic diagnostic_;
};

/// A computation would exceed a configured size cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// First violation found in `spec`, or nullopt when it is a valid graph model.
std::optional<GraphDiagnostic> validate_graph(const GraphSpec& spec);

/// Validated, immutable weighted graph with a surjective boundary coloring
/// onto [n+1]. Parallel edges are merged by summing weights.
class GraphModel {
 public:
  struct Vertex {
    std::string id;
    std::optional<int> color;
  };
  struct Edge {
    std::size_t u;
    std::size_t v;
    Rational weight;
  };

  /// Throws GraphError with the first diagnostic if `spec` is invalid.
  static GraphModel build(const GraphSpec& spec);

  int parties() const { return parties_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t bulk_vertex_count() const;

  GraphSpec spec() const;

 private:
  int parties_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// A vertex set W with its cut edges { (v, v') : v in W, v' not in W } and
/// their total weight.
struct Cut {
  std::vector<std::size_t> side;       // ascending vertex indices
  std::vector<std::size_t> cut_edges;  // ascending edge indices
  Rational weight;
};

enum class MinCutBackend {
  Flow,       // s-t max-flow on integer-scaled capacities
  Enumerate,  // brute force over bulk-vertex subsets, per connected component
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

struct MinCutOptions {
  MinCutBackend backend = MinCutBackend::Flow;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

/// Cut of minimum weight whose boundary part is exactly the vertices colored
/// by `subsystem` (a nonempty proper subset of [n+1], raw form allowed).
Cut min_cut(const GraphModel& g, const Subsystem& subsystem, const MinCutOptions& options = {});

/// Weight of the cut defined by `side` (ascending or not).
Rational cut_weight(const GraphModel& g, const std::vector<std::size_t>& side);

/// Min-cut entropies of every canonical subsystem, in subsystem_order(n).
EntropyVector entropy_vector(const GraphModel& g, const MinCutOptions& options = {});

/// One bulk vertex joined to leaves colored 1..n+1; weight 1 on leaves
/// 1..n and weight w on the purifier leaf.
GraphModel star_graph(int parties, const Rational& purifier_weight);

/// Replaces every boundary color c by sigma(c).
GraphModel recolor(const GraphModel& g, const Permutation& sigma);

enum class CombineMode { Disjoint, Glued };

/// Graph whose entropy vector is the sum of both inputs'. Disjoint mode keeps
/// the two vertex sets apart (ids prefixed "a." and "b."); glued mode merges
/// all boundary vertices of each color into one vertex "c<color>".
GraphModel combine(const GraphModel& first, const GraphModel& second, CombineMode mode = CombineMode::Disjoint);

/// Multiplies every edge weight by c >= 0.
GraphModel scale_weights(const GraphModel& g, const Rational& c);

/// Connected components (zero-weight edges included), as sorted vertex lists
/// ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const GraphModel& g);

}  // namespace entrocone
