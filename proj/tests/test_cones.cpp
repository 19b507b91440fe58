#include <gtest/gtest.h>

#include "entrocone/cones.hpp"
#include "entrocone/graph.hpp"
#include "entrocone/symmetrizer.hpp"
#include "entrocone/volumes.hpp"
#include "oracles.hpp"

using namespace entrocone;

namespace {

RMatrix from_ints(const std::vector<std::vector<int>>& rows) {
  RMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace

TEST(Cones, TenPartyHolographicRays) {
  const RMatrix expected = from_ints({{10, 9, 8, 7, 6},
                                      {18, 18, 16, 14, 12},
                                      {24, 24, 24, 21, 18},
                                      {28, 28, 28, 28, 24},
                                      {30, 30, 30, 30, 30}});
  EXPECT_EQ(shec_rays(10), expected);
}

TEST(Cones, TenPartyHolographicFacetsAreInverseRows) {
  const RMatrix displayed{{1, Rational(-1, 2), 0, 0, 0},
                          {-1, 1, Rational(-1, 3), 0, 0},
                          {0, Rational(-1, 2), Rational(2, 3), Rational(-1, 4), 0},
                          {0, 0, Rational(-1, 3), Rational(1, 2), Rational(-1, 5)},
                          {0, 0, 0, Rational(-1, 4), Rational(7, 30)}};
  const RMatrix scaled_inverse = invert(shec_rays(10));
  const RMatrix facets = shec_facets(10);
  EXPECT_EQ(facets, facets_from_rays(shec_rays(10)));
  for (std::size_t r = 0; r < 5; ++r) {
    EXPECT_TRUE(same_ray(facets.row(r), displayed.row(r))) << "row " << r;
    EXPECT_TRUE(same_ray(facets.row(r), scaled_inverse.row(r))) << "row " << r;
  }
}

TEST(Cones, TenPartyQuantumMatrices) {
  const RMatrix facets = from_ints({{2, -1, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, 0}, {0, 0, -1, 2, -1}, {0, 0, 0, -1, 1}});
  const RMatrix rays = from_ints({{1, 1, 1, 1, 1}, {1, 2, 2, 2, 2}, {1, 2, 3, 3, 3}, {1, 2, 3, 4, 4}, {1, 2, 3, 4, 5}});
  EXPECT_EQ(sqec_facets(10), facets);
  EXPECT_EQ(sqec_rays(10), rays);
  EXPECT_EQ(facets * rays, RMatrix::identity(5));
}

TEST(Cones, BoundaryFacetForms) {
  // Small n collapse to the special boundary rows.
  EXPECT_EQ(shec_facets(3), from_ints({{2, -1}, {-4, 3}}));
  EXPECT_EQ(shec_facets(4), from_ints({{2, -1}, {-3, 2}}));
  EXPECT_EQ(shec_facets(5), from_ints({{2, -1, 0}, {-3, 3, -1}, {0, -9, 8}}));
  EXPECT_EQ(shec_facets(6), from_ints({{2, -1, 0}, {-3, 3, -1}, {0, -6, 5}}));
  EXPECT_EQ(shec_facets(2), from_ints({{1}}));
  EXPECT_THROW(shec_rays(1), std::invalid_argument);
}

TEST(Cones, FacetsAreDualToRays) {
  for (int n = 2; n <= 16; ++n) {
    for (const auto& cone : {shec_cone(n), sqec_cone(n)}) {
      const RMatrix prod = cone.facets * cone.rays;
      for (std::size_t r = 0; r < prod.rows(); ++r)
        for (std::size_t c = 0; c < prod.cols(); ++c) {
          if (r == c) {
            EXPECT_GT(prod(r, c), Rational(0));
          } else {
            EXPECT_EQ(prod(r, c), Rational(0));
          }
        }
      EXPECT_EQ(primitive_rows(cone.facets), cone.facets);
    }
  }
}

TEST(Cones, HolographicInsideQuantum) {
  for (int n = 2; n <= 14; ++n) {
    const RMatrix prod = sqec_facets(n) * shec_rays(n);
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c) EXPECT_GE(prod(r, c), Rational(0));
  }
}

TEST(Cones, StarGraphsRealizeRays) {
  for (int n = 2; n <= 7; ++n) {
    const RMatrix rays = shec_rays(n);
    for (int l = 1; l <= sym_dimension(n); ++l) {
      const auto sym = symmetrize_vector(entropy_vector(star_graph(n, n - 2 * (l - 1))));
      EXPECT_TRUE(same_ray(sym.span(), rays.column(static_cast<std::size_t>(l - 1)))) << "n=" << n << " l=" << l;
    }
  }
}

TEST(Cones, Membership) {
  const SimplicialCone cone = shec_cone(5);
  SymVector v(5, {5, 10, 12});
  const auto result = membership(cone, v);
  ASSERT_TRUE(std::holds_alternative<Member>(result));
  EXPECT_EQ(std::get<Member>(result).coefficients, (std::vector<Rational>{0, 1, Rational(1, 3)}));

  SymVector outside(5, {1, 0, 0});
  const auto miss = membership(cone, outside);
  ASSERT_TRUE(std::holds_alternative<Outside>(miss));
  const auto& o = std::get<Outside>(miss);
  EXPECT_LT(o.value, Rational(0));
  EXPECT_EQ(dot(o.facet_row, outside.span()), o.value);

  EXPECT_THROW(membership(cone, SymVector(4)), std::invalid_argument);
}

TEST(Cones, CrossSectionOnSimplex) {
  const auto verts = cross_section(sqec_cone(4));
  ASSERT_EQ(verts.size(), 2u);
  EXPECT_EQ(verts[0], (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(verts[1], (std::vector<Rational>{Rational(1, 3), Rational(2, 3)}));
}

TEST(Cones, FromRaysRejectsSingular) {
  EXPECT_THROW(cone_from_rays(3, RMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
  EXPECT_THROW(cone_from_rays(5, RMatrix{{1, 2}, {2, 4}}), ShapeError);
}

TEST(Volumes, SmallCasesAgainstLeibniz) {
  for (int n = 2; n <= 12; ++n) {
    for (const RMatrix& rays : {shec_rays(n), sqec_rays(n)}) {
      const auto report = cone_volume(rays);
      EXPECT_EQ(report.determinant, oracle::leibniz_det(rays).abs());
      Rational norms = 1;
      for (std::size_t c = 0; c < rays.cols(); ++c) {
        Rational col;
        for (std::size_t r = 0; r < rays.rows(); ++r) col += rays(r, c).abs();
        norms *= col;
      }
      EXPECT_EQ(report.norm_product, norms);
      EXPECT_EQ(report.volume, report.determinant / (Rational(factorial(report.dimension)) * norms));
    }
  }
}

TEST(Volumes, KnownValues) {
  EXPECT_EQ(cone_volume(shec_rays(3)).volume, Rational(1, 21));
  EXPECT_EQ(cone_volume(sqec_rays(5)).volume, Rational(1, 540));
  EXPECT_EQ(cone_volume(shec_rays(10)).volume, Rational(BigInt(1), BigInt(1906410000)));
  EXPECT_EQ(sqec_norm_product_closed(10), Rational(113400));
  EXPECT_EQ(shec_norm_product_closed(10), Rational(BigInt("11438460000")));
  EXPECT_EQ(shec_determinant_closed(10), Rational(720));
  EXPECT_EQ(shec_norm_product_closed(3), Rational(42));
  EXPECT_EQ(shec_determinant_closed(3), Rational(4));
  EXPECT_EQ(shec_norm_product_closed(4), Rational(90));
}

TEST(Volumes, ClosedFormsMatchDeterminants) {
  for (int n = 2; n <= 24; ++n) {
    const auto hol = cone_volume(shec_rays(n));
    const auto qua = cone_volume(sqec_rays(n));
    EXPECT_EQ(hol.volume, shec_volume_closed(n)) << n;
    EXPECT_EQ(hol.determinant, shec_determinant_closed(n)) << n;
    EXPECT_EQ(hol.norm_product, shec_norm_product_closed(n)) << n;
    EXPECT_EQ(qua.volume, sqec_volume_closed(n)) << n;
    EXPECT_EQ(qua.norm_product, sqec_norm_product_closed(n)) << n;
  }
}

TEST(Volumes, RatioTable) {
  const auto rows = ratio_table(10);
  ASSERT_EQ(rows.size(), 9u);
  const char* rendered[] = {"1", "0.571", "0.4", "0.195", "0.119", "0.0537", "0.0305", "0.0131", "0.00714"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].parties, static_cast<int>(i) + 2);
    EXPECT_EQ(rows[i].ratio, rows[i].inv_sqec / rows[i].inv_shec);
    EXPECT_EQ(rows[i].ratio_3sf, rendered[i]);
  }
}
