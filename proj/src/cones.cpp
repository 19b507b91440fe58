#include "entrocone/cones.hpp"

#include <algorithm>

namespace entrocone {

namespace {

void require_parties(int parties) {
  if (parties < 2) throw std::invalid_argument("cones are defined for n >= 2, got n=" + std::to_string(parties));
  (void)sym_dimension(parties);
}

// Writes coefficient c of S~_j into row r, applying the boundary rules
// S~_0 = 0 and S~_{d+1} -> S~_{fold}.
void add_term(RMatrix& m, std::size_t r, int j, int d, int fold, long c) {
  if (j == 0) return;
  if (j == d + 1) j = fold;
  m(r, j - 1) += Rational(c);
}

}  // namespace

RMatrix shec_rays(int parties) {
  require_parties(parties);
  const int d = sym_dimension(parties);
  RMatrix m(d, d);
  for (int k = 1; k <= d; ++k)
    for (int l = 1; l <= d; ++l) m(k - 1, l - 1) = Rational(k * (parties + 1 - std::max(k, l)));
  return m;
}

RMatrix shec_facets(int parties) {
  require_parties(parties);
  const int d = sym_dimension(parties);
  const int fold = parties / 2;
  RMatrix m(d, d);
  add_term(m, 0, 1, d, fold, 2);
  add_term(m, 0, 2, d, fold, -1);
  for (int l = 2; l <= d; ++l) {
    add_term(m, l - 1, l - 1, d, fold, -static_cast<long>(l) * (l + 1));
    add_term(m, l - 1, l, d, fold, 2L * (l - 1) * (l + 1));
    add_term(m, l - 1, l + 1, d, fold, -static_cast<long>(l - 1) * l);
  }
  return primitive_rows(m);
}

RMatrix sqec_rays(int parties) {
  require_parties(parties);
  const int d = sym_dimension(parties);
  RMatrix m(d, d);
  for (int k = 1; k <= d; ++k)
    for (int l = 1; l <= d; ++l) m(k - 1, l - 1) = std::min(k, l);
  return m;
}

RMatrix sqec_facets(int parties) {
  require_parties(parties);
  const int d = sym_dimension(parties);
  RMatrix m(d, d);
  for (int l = 1; l <= d; ++l) {
    add_term(m, l - 1, l - 1, d, d, -1);
    add_term(m, l - 1, l, d, d, 2);
    add_term(m, l - 1, l + 1, d, d, -1);
  }
  return primitive_rows(m);
}

RMatrix facets_from_rays(const RMatrix& rays) {
  // Row l of the inverse evaluates to 1 on ray l, so a positive rescaling
  // already has the orientation that keeps every ray on the nonnegative side.
  return primitive_rows(invert(rays));
}

SimplicialCone shec_cone(int parties) { return {parties, shec_rays(parties), shec_facets(parties)}; }

SimplicialCone sqec_cone(int parties) { return {parties, sqec_rays(parties), sqec_facets(parties)}; }

SimplicialCone cone_from_rays(int parties, const RMatrix& rays) {
  if (!rays.is_square() || static_cast<int>(rays.rows()) != sym_dimension(parties)) {
    throw ShapeError("ray matrix must be " + std::to_string(sym_dimension(parties)) + "x" +
                     std::to_string(sym_dimension(parties)) + " for n=" + std::to_string(parties));
  }
  return {parties, rays, facets_from_rays(rays)};
}

MembershipResult membership(const SimplicialCone& cone, const SymVector& v) {
  if (v.parties() != cone.parties || static_cast<int>(v.size()) != cone.dimension()) {
    throw ShapeError("vector with n=" + std::to_string(v.parties()) + " does not match cone with n=" +
                     std::to_string(cone.parties));
  }
  auto x = solve(cone.rays, v.span());
  for (std::size_t f = 0; f < cone.facets.rows(); ++f) {
    Rational value = dot(cone.facets.row(f), v.span());
    if (value.sign() < 0) {
      const auto row = cone.facets.row(f);
      return Outside{f, {row.begin(), row.end()}, std::move(value), std::move(x)};
    }
  }
  if (std::any_of(x.begin(), x.end(), [](const Rational& c) { return c.sign() < 0; })) {
    // Facets inconsistent with the rays; report via the coefficient sign.
    const auto l = static_cast<std::size_t>(
        std::find_if(x.begin(), x.end(), [](const Rational& c) { return c.sign() < 0; }) - x.begin());
    const RMatrix inv = invert(cone.rays);
    const auto row = inv.row(l);
    return Outside{l, {row.begin(), row.end()}, x[l], x};
  }
  return Member{std::move(x)};
}

Rational evaluate(const Inequality& q, const EntropyVector& s) {
  if (q.parties() != s.parties()) throw std::invalid_argument("inequality and vector have different party counts");
  return dot(q.span(), s.span());
}

Rational evaluate(const SymInequality& q, const SymVector& s) {
  if (q.parties() != s.parties()) throw std::invalid_argument("inequality and vector have different party counts");
  return dot(q.span(), s.span());
}

std::vector<std::vector<Rational>> cross_section(const SimplicialCone& cone) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t l = 0; l < cone.rays.cols(); ++l) {
    auto ray = cone.rays.column(l);
    Rational sum;
    for (const auto& x : ray) {
      if (x.sign() < 0) throw std::invalid_argument("cross-section needs nonnegative rays");
      sum += x;
    }
    if (sum.is_zero()) throw std::invalid_argument("cross-section of a zero ray");
    for (auto& x : ray) x /= sum;
    out.push_back(std::move(ray));
  }
  return out;
}

}  // namespace entrocone
