#include <algorithm>
#include <sstream>

#include "entrocone/cones.hpp"
#include "entrocone/fixtures.hpp"
#include "entrocone/graph.hpp"
#include "entrocone/symmetrizer.hpp"

namespace entrocone {

namespace {

std::string show(const std::vector<BigInt>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].get_str();
  os << ")";
  return os.str();
}

std::string show(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << ")";
  return os.str();
}

bool matches_some_row(const RMatrix& m, const std::vector<BigInt>& prim) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (primitive(m.row(r)) == prim) return true;
  }
  return false;
}

VerifyLine check_ray(const FixtureRay& f, const SimplicialCone& shec) {
  VerifyLine line{"HEC rays", f.parties, f.row, false, ""};
  const SymVector sym = symmetrize_vector(f.vector);
  const auto prim = primitive(sym.span());
  if (prim != f.expected_sym) {
    line.detail = "symmetrizes to " + show(prim) + ", table has " + show(f.expected_sym);
    return line;
  }
  const auto result = membership(shec, sym);
  const auto* member = std::get_if<Member>(&result);
  if (!member) {
    line.detail = "symmetrization lies outside the conjectured SHEC";
    return line;
  }
  const auto nonzero = std::count_if(member->coefficients.begin(), member->coefficients.end(),
                                     [](const Rational& c) { return !c.is_zero(); });
  if (f.extremal) {
    if (!f.star_weight) {
      line.detail = "extremal row without star weight";
      return line;
    }
    const auto star = symmetrize_vector(entropy_vector(star_graph(f.parties, *f.star_weight)));
    if (primitive(star.span()) != prim) {
      line.detail = "star graph with w=" + std::to_string(*f.star_weight) + " gives " + show(primitive(star.span()));
      return line;
    }
    if (nonzero != 1) {
      line.detail = "extremal but ray coefficients are " + show(member->coefficients);
      return line;
    }
    line.detail = "sym " + show(prim) + " = star ray w=" + std::to_string(*f.star_weight);
  } else {
    if (nonzero < 2) {
      line.detail = "marked non-extremal but coincides with a single ray";
      return line;
    }
    line.detail = "sym " + show(prim) + " = " + show(member->coefficients) + " over SHEC rays";
  }
  line.passed = true;
  return line;
}

VerifyLine check_facet(const FixtureFacet& f, const SimplicialCone& cone) {
  VerifyLine line{f.table == FacetTable::Holographic ? "HEC facets" : "SA+SSA facets", f.parties, f.row, false, ""};
  const auto prim = primitive(symmetrize_inequality(f.inequality).span());
  if (prim != f.expected_sym) {
    line.detail = "symmetrizes to " + show(prim) + ", table has " + show(f.expected_sym);
    return line;
  }
  const bool is_row = matches_some_row(cone.facets, prim);
  if (f.is_facet) {
    if (!is_row) {
      line.detail = show(prim) + " is not a facet of the symmetrized cone";
      return line;
    }
    line.detail = "sym " + show(prim) + " is a facet";
  } else {
    if (is_row) {
      line.detail = show(prim) + " marked non-facet but equals a facet";
      return line;
    }
    const auto q = to_rationals(prim);
    for (std::size_t l = 0; l < cone.rays.cols(); ++l) {
      if (dot(q, cone.rays.column(l)).sign() < 0) {
        line.detail = show(prim) + " is violated by ray " + std::to_string(l + 1);
        return line;
      }
    }
    line.detail = "sym " + show(prim) + " is implied, not a facet";
  }
  line.passed = true;
  return line;
}

}  // namespace

std::vector<VerifyLine> verify_appendix(int parties) {
  if (parties < 2 || parties > 5) throw std::out_of_range("fixtures cover n = 2..5");
  const SimplicialCone shec = shec_cone(parties);
  const SimplicialCone sqec = sqec_cone(parties);
  std::vector<VerifyLine> out;
  for (const auto& r : holographic_rays()) {
    if (r.parties == parties) out.push_back(check_ray(r, shec));
  }
  for (const auto& f : holographic_facets()) {
    if (f.parties != parties) continue;
    VerifyLine line = check_facet(f, shec);
    // A facet of the holographic cone must hold on every one of its rays.
    if (line.passed) {
      for (const auto& r : holographic_rays()) {
        if (r.parties == parties && evaluate(f.inequality, r.vector).sign() < 0) {
          line.passed = false;
          line.detail = "violated by HEC ray " + std::to_string(r.row);
          break;
        }
      }
    }
    out.push_back(std::move(line));
  }
  for (const auto& f : quantum_facets()) {
    if (f.parties == parties) out.push_back(check_facet(f, sqec));
  }
  return out;
}

}  // namespace entrocone
