#include "entrocone/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace entrocone {

namespace {

GraphDiagnostic diag(GraphIssue issue, std::string message) { return {issue, std::move(message)}; }

}  // namespace

std::optional<GraphDiagnostic> validate_graph(const GraphSpec& spec) {
  if (spec.parties < 1 || spec.parties > kMaxParties) {
    return diag(GraphIssue::BadPartyCount, "party count " + std::to_string(spec.parties) + " outside 1.." +
                                               std::to_string(kMaxParties));
  }
  const int colors = spec.parties + 1;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<bool> used(colors + 1, false);
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    const auto& v = spec.vertices[i];
    if (!index.emplace(v.id, i).second) {
      return diag(GraphIssue::DuplicateVertex, "vertex " + std::to_string(i) + ": duplicate id \"" + v.id + "\"");
    }
    if (v.color) {
      if (*v.color < 1 || *v.color > colors) {
        return diag(GraphIssue::ColorOutOfRange, "vertex \"" + v.id + "\": color " + std::to_string(*v.color) +
                                                     " outside 1.." + std::to_string(colors));
      }
      used[*v.color] = true;
    }
  }
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const auto& e = spec.edges[i];
    const std::string where = "edge " + std::to_string(i) + ": ";
    for (const auto* end : {&e.u, &e.v}) {
      if (!index.contains(*end)) return diag(GraphIssue::UnknownVertex, where + "unknown vertex \"" + *end + "\"");
    }
    if (e.u == e.v) return diag(GraphIssue::SelfLoop, where + "self-loop on \"" + e.u + "\"");
    if (e.weight.sign() < 0) return diag(GraphIssue::NegativeWeight, where + "negative weight " + e.weight.str());
  }
  for (int c = 1; c <= colors; ++c) {
    if (!used[c]) return diag(GraphIssue::MissingColor, "color " + std::to_string(c) + " unused");
  }
  return std::nullopt;
}

GraphModel GraphModel::build(const GraphSpec& spec) {
  if (auto d = validate_graph(spec)) throw GraphError(std::move(*d));
  GraphModel g;
  g.parties_ = spec.parties;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& v : spec.vertices) {
    index.emplace(v.id, g.vertices_.size());
    g.vertices_.push_back({v.id, v.color});
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (const auto& e : spec.edges) {
    std::size_t u = index.at(e.u), v = index.at(e.v);
    if (u > v) std::swap(u, v);
    auto [it, fresh] = slot.emplace(std::make_pair(u, v), g.edges_.size());
    if (fresh) {
      g.edges_.push_back({u, v, e.weight});
    } else {
      g.edges_[it->second].weight += e.weight;
    }
  }
  return g;
}

std::size_t GraphModel::bulk_vertex_count() const {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return !v.color; }));
}

GraphSpec GraphModel::spec() const {
  GraphSpec s;
  s.parties = parties_;
  for (const auto& v : vertices_) s.vertices.push_back({v.id, v.color});
  for (const auto& e : edges_) s.edges.push_back({vertices_[e.u].id, vertices_[e.v].id, e.weight});
  return s;
}

GraphModel star_graph(int parties, const Rational& purifier_weight) {
  if (purifier_weight.sign() <= 0) throw std::invalid_argument("star purifier weight must be positive");
  GraphSpec s;
  s.parties = parties;
  s.vertices.push_back({"c", std::nullopt});
  for (int p = 1; p <= parties + 1; ++p) {
    const std::string leaf = "b" + std::to_string(p);
    s.vertices.push_back({leaf, p});
    s.edges.push_back({"c", leaf, p == parties + 1 ? purifier_weight : Rational(1)});
  }
  return GraphModel::build(s);
}

GraphModel recolor(const GraphModel& g, const Permutation& sigma) {
  if (sigma.size() != g.parties() + 1) {
    throw std::invalid_argument("recolor: permutation acts on [" + std::to_string(sigma.size()) + "], graph has " +
                                std::to_string(g.parties() + 1) + " colors");
  }
  GraphSpec s = g.spec();
  for (auto& v : s.vertices) {
    if (v.color) v.color = sigma(*v.color);
  }
  return GraphModel::build(s);
}

GraphModel combine(const GraphModel& first, const GraphModel& second, CombineMode mode) {
  if (first.parties() != second.parties()) {
    throw std::invalid_argument("combine: party counts " + std::to_string(first.parties()) + " and " +
                                std::to_string(second.parties()) + " differ");
  }
  GraphSpec s;
  s.parties = first.parties();
  if (mode == CombineMode::Disjoint) {
    for (const auto& [prefix, g] : {std::pair{"a.", &first}, std::pair{"b.", &second}}) {
      for (const auto& v : g->vertices()) s.vertices.push_back({prefix + v.id, v.color});
      for (const auto& e : g->edges()) {
        s.edges.push_back({prefix + g->vertices()[e.u].id, prefix + g->vertices()[e.v].id, e.weight});
      }
    }
    return GraphModel::build(s);
  }

  for (int c = 1; c <= s.parties + 1; ++c) s.vertices.push_back({"c" + std::to_string(c), c});
  for (const auto& [prefix, g] : {std::pair{"a.", &first}, std::pair{"b.", &second}}) {
    auto name = [&, prefix = std::string(prefix), g = g](std::size_t i) {
      const auto& v = g->vertices()[i];
      return v.color ? "c" + std::to_string(*v.color) : prefix + v.id;
    };
    for (const auto& v : g->vertices()) {
      if (!v.color) s.vertices.push_back({prefix + v.id, std::nullopt});
    }
    for (const auto& e : g->edges()) {
      const std::string u = name(e.u), v = name(e.v);
      // Edges between equally colored boundary vertices never cross a cut.
      if (u != v) s.edges.push_back({u, v, e.weight});
    }
  }
  return GraphModel::build(s);
}

GraphModel scale_weights(const GraphModel& g, const Rational& c) {
  if (c.sign() < 0) throw std::invalid_argument("scale factor must be nonnegative");
  GraphSpec s = g.spec();
  for (auto& e : s.edges) e.weight *= c;
  return GraphModel::build(s);
}

std::vector<std::vector<std::size_t>> connected_components(const GraphModel& g) {
  const std::size_t n = g.vertices().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) {
    const std::size_t a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace entrocone
