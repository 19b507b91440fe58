#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "entrocone/matrix.hpp"
#include "entrocone/vectors.hpp"

namespace entrocone {

/// Full-dimensional simplicial cone in the ceil(n/2) symmetric variables.
/// Column l of `rays` and row l of `facets` are dual: facet l vanishes on
/// every ray except ray l.
struct SimplicialCone {
  int parties = 0;
  RMatrix rays;    // columns are extreme rays
  RMatrix facets;  // rows f with f . S~ >= 0

  int dimension() const { return static_cast<int>(rays.rows()); }
};

/// Conjectured symmetrized holographic cone: column l (w = n - 2(l-1) star
/// graph) has entries k (n + 1 - max(k, l)).
RMatrix shec_rays(int parties);

/// Conjectured SHEC facets: 2 S~_1 - S~_2 and, for l = 2..d,
/// -l(l+1) S~_{l-1} + 2(l-1)(l+1) S~_l - (l-1) l S~_{l+1}, with S~_0 = 0 and
/// S~_{d+1} read as S~_{floor(n/2)}. Rows in primitive integer form.
RMatrix shec_facets(int parties);

/// Symmetrized quantum cone rays: column l has entries min(k, l).
RMatrix sqec_rays(int parties);

/// SQEC facets -S~_{l-1} + 2 S~_l - S~_{l+1}, with S~_0 = 0 and
/// S~_{d+1} read as S~_d.
RMatrix sqec_facets(int parties);

/// Rows of the inverse of a square ray matrix, each in primitive integer
/// form. Throws SingularMatrixError when the rays are not independent.
RMatrix facets_from_rays(const RMatrix& rays);

SimplicialCone shec_cone(int parties);
SimplicialCone sqec_cone(int parties);

/// Cone from its rays alone; facets are derived by inversion.
SimplicialCone cone_from_rays(int parties, const RMatrix& rays);

struct Member {
  std::vector<Rational> coefficients;  // v = sum_l coefficients[l] * ray l, all >= 0
};

struct Outside {
  std::size_t facet;  // index of the first violated facet
  std::vector<Rational> facet_row;
  Rational value;  // facet . v < 0
  std::vector<Rational> coefficients;
};

using MembershipResult = std::variant<Member, Outside>;

/// Decomposes v over the cone's rays by an exact solve.
MembershipResult membership(const SimplicialCone& cone, const SymVector& v);

Rational evaluate(const Inequality& q, const EntropyVector& s);
Rational evaluate(const SymInequality& q, const SymVector& s);

/// Each ray divided by its coordinate sum: the vertices of the cone's slice
/// through sum_k S~_k = 1.
std::vector<std::vector<Rational>> cross_section(const SimplicialCone& cone);

}  // namespace entrocone
