#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "entrocone/graph.hpp"
#include "entrocone/parallel.hpp"

namespace entrocone {

namespace {

// Edge weights multiplied by the lcm of their denominators.
struct ScaledWeights {
  BigInt scale = 1;
  std::vector<BigInt> caps;
};

ScaledWeights scale_to_integers(const GraphModel& g) {
  ScaledWeights s;
  for (const auto& e : g.edges()) mpz_lcm(s.scale.get_mpz_t(), s.scale.get_mpz_t(), e.weight.denominator().get_mpz_t());
  s.caps.reserve(g.edges().size());
  for (const auto& e : g.edges()) s.caps.push_back(e.weight.numerator() * (s.scale / e.weight.denominator()));
  return s;
}

bool in_subsystem(const GraphModel::Vertex& v, const Subsystem& s) { return v.color && s.contains(*v.color); }

class Dinic {
 public:
  explicit Dinic(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  void add_arc_pair(std::size_t u, std::size_t v, const BigInt& forward, const BigInt& backward) {
    adj_[u].push_back(arcs_.size());
    arcs_.push_back({v, forward});
    adj_[v].push_back(arcs_.size());
    arcs_.push_back({u, backward});
  }

  BigInt max_flow(std::size_t s, std::size_t t) {
    BigInt total = 0;
    while (bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (true) {
        BigInt pushed = augment(s, t);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  // Nodes reachable from s in the residual graph.
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t a : adj_[u]) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    BigInt cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t a : adj_[u]) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  // One blocking-flow path found by iterative DFS on the level graph.
  BigInt augment(std::size_t s, std::size_t t) {
    std::vector<std::size_t> path;  // arc indices
    std::size_t u = s;
    while (true) {
      if (u == t) {
        BigInt bottleneck = arcs_[path.front()].cap;
        for (std::size_t a : path) {
          if (arcs_[a].cap < bottleneck) bottleneck = arcs_[a].cap;
        }
        for (std::size_t a : path) {
          arcs_[a].cap -= bottleneck;
          arcs_[a ^ 1].cap += bottleneck;
        }
        return bottleneck;
      }
      bool advanced = false;
      for (; next_[u] < adj_[u].size(); ++next_[u]) {
        const std::size_t a = adj_[u][next_[u]];
        const std::size_t v = arcs_[a].to;
        if (arcs_[a].cap > 0 && level_[v] == level_[u] + 1) {
          path.push_back(a);
          u = v;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        if (path.empty()) return 0;
        level_[u] = -1;  // dead end
        const std::size_t a = path.back();
        path.pop_back();
        u = arcs_[a ^ 1].to;
        ++next_[u];
      }
    }
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

std::vector<std::size_t> flow_side(const GraphModel& g, const Subsystem& subsystem) {
  const ScaledWeights w = scale_to_integers(g);
  const std::size_t n = g.vertices().size();
  const std::size_t source = n, sink = n + 1;
  BigInt infinity = 1;
  for (const auto& c : w.caps) infinity += c;

  Dinic net(n + 2);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (w.caps[i] > 0) net.add_arc_pair(g.edges()[i].u, g.edges()[i].v, w.caps[i], w.caps[i]);
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto& vert = g.vertices()[v];
    if (!vert.color) continue;
    if (in_subsystem(vert, subsystem)) {
      net.add_arc_pair(source, v, infinity, 0);
    } else {
      net.add_arc_pair(v, sink, infinity, 0);
    }
  }
  net.max_flow(source, sink);
  const auto reach = net.source_side(source);
  std::vector<std::size_t> side;
  for (std::size_t v = 0; v < n; ++v) {
    if (reach[v]) side.push_back(v);
  }
  return side;
}

// Minimizes over bulk assignments of one component; Weight is an integer type.
template <class Weight>
void enumerate_component(const GraphModel& g, const Subsystem& subsystem, const std::vector<std::size_t>& members,
                         const std::vector<std::size_t>& edge_ids, const std::vector<Weight>& caps,
                         std::vector<bool>& in_side) {
  std::vector<std::size_t> bulk;
  for (std::size_t v : members) {
    const auto& vert = g.vertices()[v];
    if (vert.color) {
      in_side[v] = in_subsystem(vert, subsystem);
    } else {
      bulk.push_back(v);
    }
  }
  const std::uint64_t candidates = std::uint64_t{1} << bulk.size();
  std::uint64_t best_mask = 0;
  Weight best = 0;
  bool have_best = false;
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    for (std::size_t b = 0; b < bulk.size(); ++b) in_side[bulk[b]] = (mask >> b) & 1u;
    Weight total = 0;
    for (std::size_t k = 0; k < edge_ids.size(); ++k) {
      const auto& e = g.edges()[edge_ids[k]];
      if (in_side[e.u] != in_side[e.v]) total += caps[k];
    }
    if (!have_best || total < best) {
      best = total;
      best_mask = mask;
      have_best = true;
    }
  }
  for (std::size_t b = 0; b < bulk.size(); ++b) in_side[bulk[b]] = (best_mask >> b) & 1u;
}

std::vector<std::size_t> enumeration_side(const GraphModel& g, const Subsystem& subsystem, std::uint64_t cap) {
  const auto components = connected_components(g);
  std::vector<std::size_t> component_of(g.vertices().size());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t v : components[c]) component_of[v] = c;

  std::uint64_t total = 0;
  for (const auto& comp : components) {
    const auto bulk = static_cast<std::size_t>(
        std::count_if(comp.begin(), comp.end(), [&](std::size_t v) { return !g.vertices()[v].color; }));
    if (bulk >= 63 || (std::uint64_t{1} << bulk) > cap - std::min(cap, total)) {
      throw ResourceLimitError("min-cut enumeration exceeds cap of " + std::to_string(cap) + " candidate sets");
    }
    total += std::uint64_t{1} << bulk;
  }

  const ScaledWeights w = scale_to_integers(g);
  BigInt sum = 0;
  for (const auto& c : w.caps) sum += c;
  const bool fits_int64 = sum < BigInt(std::numeric_limits<std::int64_t>::max() / 2);

  std::vector<std::vector<std::size_t>> edge_ids(components.size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) edge_ids[component_of[g.edges()[i].u]].push_back(i);

  std::vector<bool> in_side(g.vertices().size(), false);
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (fits_int64) {
      std::vector<std::int64_t> caps;
      for (std::size_t i : edge_ids[c]) caps.push_back(w.caps[i].get_si());
      enumerate_component(g, subsystem, components[c], edge_ids[c], caps, in_side);
    } else {
      std::vector<BigInt> caps;
      for (std::size_t i : edge_ids[c]) caps.push_back(w.caps[i]);
      enumerate_component(g, subsystem, components[c], edge_ids[c], caps, in_side);
    }
  }
  std::vector<std::size_t> side;
  for (std::size_t v = 0; v < in_side.size(); ++v) {
    if (in_side[v]) side.push_back(v);
  }
  return side;
}

}  // namespace

Rational cut_weight(const GraphModel& g, const std::vector<std::size_t>& side) {
  std::vector<bool> in(g.vertices().size(), false);
  for (std::size_t v : side) in.at(v) = true;
  Rational total;
  for (const auto& e : g.edges()) {
    if (in[e.u] != in[e.v]) total += e.weight;
  }
  return total;
}

Cut min_cut(const GraphModel& g, const Subsystem& subsystem, const MinCutOptions& options) {
  if (subsystem.parties() != g.parties()) {
    throw std::invalid_argument("subsystem ambient n=" + std::to_string(subsystem.parties()) +
                                " does not match graph with n=" + std::to_string(g.parties()));
  }
  if (subsystem.mask() == full_mask(g.parties() + 1)) {
    throw std::invalid_argument("min_cut needs a proper subset of the parties");
  }
  Cut cut;
  cut.side = options.backend == MinCutBackend::Flow ? flow_side(g, subsystem)
                                                      : enumeration_side(g, subsystem, options.enumeration_cap);
  std::vector<bool> in(g.vertices().size(), false);
  for (std::size_t v : cut.side) in[v] = true;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (in[e.u] != in[e.v]) {
      cut.cut_edges.push_back(i);
      cut.weight += e.weight;
    }
  }
  return cut;
}

EntropyVector entropy_vector(const GraphModel& g, const MinCutOptions& options) {
  const auto order = subsystem_order(g.parties());
  std::vector<Rational> entries(order.size());
  parallel_for(order.size(), [&](std::size_t i) { entries[i] = min_cut(g, order[i], options).weight; });
  return EntropyVector(g.parties(), std::move(entries));
}

}  // namespace entrocone
