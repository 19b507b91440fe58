#include "entrocone/symmetrizer.hpp"

#include <algorithm>

namespace entrocone {

namespace {

// Symmetric class of a canonical coordinate: min(|I|, n+1-|I|), 1-based.
int sym_class(const Subsystem& s) { return std::min(s.size(), s.parties() + 1 - s.size()); }

}  // namespace

RMatrix m_matrix(int parties) {
  const int d = sym_dimension(parties);
  RMatrix m(d, coordinate_count(parties));
  for (int k = 1; k <= d; ++k) {
    const Rational weight = Rational(BigInt(1), binomial(parties + 1, k));
    for (const auto& raw : q_n_k(parties, k)) m(k - 1, coordinate_index(canonical_subsystem(raw))) += weight;
  }
  return m;
}

RMatrix n_matrix(int parties) {
  const int d = sym_dimension(parties);
  RMatrix m(d, coordinate_count(parties));
  const auto order = subsystem_order(parties);
  for (std::size_t i = 0; i < order.size(); ++i) m(sym_class(order[i]) - 1, i) = 1;
  return m;
}

RMatrix projection_matrix(int parties) { return n_matrix(parties).transpose() * m_matrix(parties); }

SymVector symmetrize_vector(const EntropyVector& s) {
  return SymVector(s.parties(), m_matrix(s.parties()) * s.span());
}

SymInequality symmetrize_inequality(const Inequality& q) {
  return SymInequality(q.parties(), n_matrix(q.parties()) * q.span());
}

Inequality orbit_sum(const Inequality& q) {
  const int n = q.parties();
  const int d = sym_dimension(n);
  std::vector<Rational> per_class(d + 1);
  for (int k = 1; k <= d; ++k) {
    Rational sum;
    for (const auto& raw : q_n_k(n, k)) sum += q[coordinate_index(canonical_subsystem(raw))];
    per_class[k] = Rational(BigInt(factorial(k) * factorial(n + 1 - k))) * sum;
  }
  Inequality out(n);
  const auto order = subsystem_order(n);
  for (std::size_t i = 0; i < order.size(); ++i) out[i] = per_class[sym_class(order[i])];
  return out;
}

Inequality permute_inequality(const Inequality& q, const Permutation& sigma) {
  Inequality out(q.parties());
  const auto order = subsystem_order(q.parties());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (q[i].is_zero()) continue;
    out[coordinate_index(canonical_subsystem(apply_permutation(sigma, order[i])))] += q[i];
  }
  return out;
}

Inequality lift_inequality(const Inequality& q, int target_parties) {
  if (target_parties < q.parties()) {
    throw std::invalid_argument("cannot lift an n=" + std::to_string(q.parties()) + " inequality to n=" +
                                std::to_string(target_parties));
  }
  Inequality out(target_parties);
  const auto order = subsystem_order(q.parties());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (q[i].is_zero()) continue;
    out[coordinate_index(Subsystem(target_parties, order[i].mask()))] = q[i];
  }
  return out;
}

GraphModel average_graph(const GraphModel& g, std::uint64_t copy_cap) {
  const int colors = g.parties() + 1;
  const BigInt copies = factorial(colors);
  if (copies > BigInt(std::to_string(copy_cap))) {
    throw ResourceLimitError("averaging needs " + copies.get_str() + " graph copies, cap is " +
                             std::to_string(copy_cap));
  }
  const Rational scale(BigInt(1), copies);
  GraphSpec out;
  out.parties = g.parties();
  const auto perms = all_permutations(colors);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const std::string prefix = "p" + std::to_string(i) + ".";
    for (const auto& v : g.vertices()) {
      out.vertices.push_back({prefix + v.id, v.color ? std::optional<int>(perms[i](*v.color)) : std::nullopt});
    }
    for (const auto& e : g.edges()) {
      out.edges.push_back({prefix + g.vertices()[e.u].id, prefix + g.vertices()[e.v].id, e.weight * scale});
    }
  }
  return GraphModel::build(out);
}

}  // namespace entrocone
