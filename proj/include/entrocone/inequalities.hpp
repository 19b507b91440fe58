#pragma once

#include <string_view>

#include "entrocone/subsystem.hpp"
#include "entrocone/vectors.hpp"

namespace entrocone {

/// Subadditivity S_I + S_J - S_{IJ} >= 0 for disjoint I, J.
Inequality sa_instance(const Subsystem& i, const Subsystem& j);

/// Strong subadditivity S_I + S_J - S_{I∩J} - S_{I∪J} >= 0 for overlapping
/// I, J with neither containing the other.
Inequality ssa_instance(const Subsystem& i, const Subsystem& j);

/// Monogamy of mutual information for pairwise disjoint I, J, K:
/// S_IJ + S_IK + S_JK - S_I - S_J - S_K - S_IJK >= 0.
Inequality mmi_instance(const Subsystem& i, const Subsystem& j, const Subsystem& k);

/// A six-party holographic inequality that is not a lift of any
/// inequality on fewer parties.
Inequality hec6_sample();

/// Parses a signed sum of subsystem terms written with party letters
/// (A = 1, B = 2, ...), e.g. "2ABC + ABD - AB - ABCD". Terms are
/// canonicalized, so the purifier letter may appear. Repeated terms add up.
Inequality parse_letter_inequality(int parties, std::string_view text);

}  // namespace entrocone
