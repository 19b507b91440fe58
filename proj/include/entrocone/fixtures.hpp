#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entrocone/vectors.hpp"

namespace entrocone {

/// Extreme ray of the n-party holographic cone (n <= 5) with its tabulated
/// symmetrization.
struct FixtureRay {
  int parties;
  int row;  // 1-based row number in the source table
  EntropyVector vector;
  std::vector<BigInt> expected_sym;  // primitive form
  bool extremal;
  std::optional<int> star_weight;  // purifier weight of the realizing star graph
  bool any_weight = false;         // n = 2: every positive weight realizes the ray
};

enum class FacetTable {
  Holographic,  // facets of the holographic cone, compared with the SHEC
  Quantum,      // SA and SSA instances, compared with the SQEC
};

struct FixtureFacet {
  int parties;
  int row;
  FacetTable table;
  Inequality inequality;
  std::vector<BigInt> expected_sym;  // primitive form
  bool is_facet;
};

/// Parses the grouped digit layout "(110; 011; 0)": one group per
/// cardinality, one decimal digit per coordinate in subsystem order.
EntropyVector parse_grouped_vector(int parties, std::string_view text);

const std::vector<FixtureRay>& holographic_rays();
const std::vector<FixtureFacet>& holographic_facets();
const std::vector<FixtureFacet>& quantum_facets();

struct VerifyLine {
  std::string table;  // "HEC rays", "HEC facets", "SA+SSA facets"
  int parties;
  int row;
  bool passed;
  std::string detail;
};

/// Recomputes every fixture for the given n (2..5) and checks it against the
/// tabulated symmetrization, the star-graph rays, and the cone facets.
std::vector<VerifyLine> verify_appendix(int parties);

}  // namespace entrocone
