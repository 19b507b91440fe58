#pragma once

#include <cstdint>

#include "entrocone/graph.hpp"
#include "entrocone/matrix.hpp"
#include "entrocone/vectors.hpp"

namespace entrocone {

/// The ceil(n/2) x (2^n - 1) averaging map S -> S~. Row k averages the
/// entropies of all k-subsets of [n+1], each folded onto its canonical
/// coordinate: entry mult(I,k) / C(n+1,k) where mult is 2 for the
/// self-complementary cardinality (n odd, |I| = k = (n+1)/2), 1 when
/// |I| is k or n+1-k, and 0 otherwise.
RMatrix m_matrix(int parties);

/// The ceil(n/2) x (2^n - 1) map q -> q~. Row k has a 1 at every canonical
/// coordinate of cardinality k or n+1-k. Each coordinate is counted once,
/// including the self-complementary cardinality, so that M N^T = 1.
RMatrix n_matrix(int parties);

/// N^T M, the projector onto the permutation-symmetric subspace.
RMatrix projection_matrix(int parties);

SymVector symmetrize_vector(const EntropyVector& s);
SymInequality symmetrize_inequality(const Inequality& q);

/// Sum of the inequality over its Sym_{n+1} orbit:
/// q'_I = k!(n+1-k)! * sum over J in Q_n(k) of q_canonical(J),
/// with k = min(|I|, n+1-|I|).
Inequality orbit_sum(const Inequality& q);

/// Action of sigma on an inequality: the coefficient of canonical J moves to
/// canonical(sigma(J)).
Inequality permute_inequality(const Inequality& q, const Permutation& sigma);

/// Embeds an n-party inequality into n_target >= n parties; coordinates
/// touching parties n+1..n_target get coefficient 0.
Inequality lift_inequality(const Inequality& q, int target_parties);

inline constexpr std::uint64_t kDefaultAverageCopyCap = 40320;  // 8!

/// Disjoint union of all (n+1)! recolorings of g, weights scaled by
/// 1/(n+1)!. Vertex ids are prefixed "p<index>." in permutation order.
GraphModel average_graph(const GraphModel& g, std::uint64_t copy_cap = kDefaultAverageCopyCap);

}  // namespace entrocone
