#pragma once

// Slow, independent reference implementations used to cross-check the
// library. They deliberately avoid the library's own ordering, canonical-form
// and flow code: everything here is plain enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "entrocone/graph.hpp"
#include "entrocone/matrix.hpp"
#include "entrocone/rational.hpp"

namespace oracle {

using entrocone::GraphModel;
using entrocone::GraphSpec;
using entrocone::Rational;
using entrocone::RMatrix;

/// Party subsets of [n] (bit p-1 for party p), by size then lexicographically.
inline std::vector<std::uint64_t> ordered_masks(int n) {
  std::vector<std::uint64_t> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint64_t m = 0;
      for (int p : pick) m |= std::uint64_t{1} << p;
      out.push_back(m);
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

inline std::map<std::uint64_t, std::size_t> mask_positions(int n) {
  std::map<std::uint64_t, std::size_t> pos;
  const auto masks = ordered_masks(n);
  for (std::size_t i = 0; i < masks.size(); ++i) pos[masks[i]] = i;
  return pos;
}

/// Maps a nonempty proper subset of [n+1] to its representative inside [n].
inline std::uint64_t purify(int n, std::uint64_t mask) {
  const std::uint64_t all = (std::uint64_t{1} << (n + 1)) - 1;
  return (mask >> n) & 1u ? all & ~mask : mask;
}

/// Minimum cut weight for party set `mask` by trying every bulk assignment.
inline Rational min_cut_weight(const GraphModel& g, std::uint64_t mask) {
  const auto& verts = g.vertices();
  std::vector<std::size_t> bulk;
  std::vector<int> side(verts.size(), 0);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (!verts[v].color) {
      bulk.push_back(v);
    } else {
      const int c = *verts[v].color;
      side[v] = c <= g.parties() && ((mask >> (c - 1)) & 1u) ? 1 : 0;
    }
  }
  std::optional<Rational> best;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << bulk.size()); ++pick) {
    for (std::size_t i = 0; i < bulk.size(); ++i) side[bulk[i]] = static_cast<int>((pick >> i) & 1u);
    Rational w;
    for (const auto& e : g.edges()) {
      if (side[e.u] != side[e.v]) w += e.weight;
    }
    if (!best || w < *best) best = w;
  }
  return *best;
}

inline std::vector<Rational> entropy_vector(const GraphModel& g) {
  std::vector<Rational> out;
  for (std::uint64_t m : ordered_masks(g.parties())) out.push_back(min_cut_weight(g, m));
  return out;
}

/// S~_k: plain average of S over all k-subsets of [n+1].
inline std::vector<Rational> symmetrize(int n, const std::vector<Rational>& s) {
  const auto pos = mask_positions(n);
  const int d = (n + 1) / 2;
  std::vector<Rational> sum(d), count(d);
  for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << (n + 1)); ++m) {
    const int k = std::popcount(m);
    if (k > d) continue;
    sum[k - 1] += s[pos.at(purify(n, m))];
    count[k - 1] += 1;
  }
  for (int k = 0; k < d; ++k) sum[k] /= count[k];
  return sum;
}

/// Sum of the inequality over every permutation of [n+1].
inline std::vector<Rational> orbit_sum(int n, const std::vector<Rational>& q) {
  const auto masks = ordered_masks(n);
  const auto pos = mask_positions(n);
  std::vector<Rational> out(q.size());
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (q[i].is_zero()) continue;
      std::uint64_t image = 0;
      for (int p = 0; p <= n; ++p) {
        if ((masks[i] >> p) & 1u) image |= std::uint64_t{1} << perm[p];
      }
      out[pos.at(purify(n, image))] += q[i];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Determinant by the Leibniz permutation expansion.
inline Rational leibniz_det(const RMatrix& a) {
  const std::size_t d = a.rows();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) inversions += perm[i] > perm[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < d; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Star graph entropy: leaves of weight 1 for parties 1..n, weight w for the
/// purifier; a k-party region pays either its own k leaves or everything else.
inline Rational star_entropy(int n, int k, const Rational& w) {
  const Rational inside = k;
  const Rational outside = Rational(n - k) + w;
  return inside < outside ? inside : outside;
}

/// Random valid graph: every color 1..n+1 used, at most `max_vertices` vertices.
inline GraphSpec random_graph(std::mt19937_64& rng, int n, int max_vertices, int max_weight) {
  GraphSpec s;
  s.parties = n;
  std::uniform_int_distribution<int> color(1, n + 1);
  std::uniform_int_distribution<int> extra(0, max_vertices - (n + 1));
  std::uniform_int_distribution<int> weight(0, max_weight);
  std::bernoulli_distribution edge(0.5);
  for (int c = 1; c <= n + 1; ++c) s.vertices.push_back({"b" + std::to_string(c), c});
  const int more = extra(rng);
  for (int i = 0; i < more; ++i) {
    if (edge(rng)) {
      s.vertices.push_back({"x" + std::to_string(i), color(rng)});
    } else {
      s.vertices.push_back({"m" + std::to_string(i), std::nullopt});
    }
  }
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
      if (edge(rng)) s.edges.push_back({s.vertices[i].id, s.vertices[j].id, weight(rng)});
    }
  }
  return s;
}

}  // namespace oracle
