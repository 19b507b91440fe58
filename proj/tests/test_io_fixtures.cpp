#include <gtest/gtest.h>

#include "entrocone/fixtures.hpp"
#include "entrocone/inequalities.hpp"
#include "entrocone/io.hpp"
#include "entrocone/symmetrizer.hpp"

using namespace entrocone;
using io::Json;

TEST(Fixtures, TableSizes) {
  EXPECT_EQ(holographic_rays().size(), 25u);
  EXPECT_EQ(holographic_facets().size(), 13u);
  EXPECT_EQ(quantum_facets().size(), 18u);
}

TEST(Fixtures, EveryRowVerifies) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& line : verify_appendix(n)) {
      EXPECT_TRUE(line.passed) << line.table << " n=" << n << " #" << line.row << ": " << line.detail;
    }
  }
  EXPECT_THROW(verify_appendix(6), std::out_of_range);
}

TEST(Fixtures, GroupedVectorParsing) {
  const auto v = parse_grouped_vector(3, "(110; 011; 0)");
  EXPECT_EQ(v.entries(), (std::vector<Rational>{1, 1, 0, 0, 1, 1, 0}));
  EXPECT_THROW(parse_grouped_vector(3, "(11; 011; 0)"), std::invalid_argument);
  EXPECT_THROW(parse_grouped_vector(3, "110; 011; 0"), std::invalid_argument);
}

TEST(Fixtures, LetterInequalities) {
  const auto q = parse_letter_inequality(3, "AB + AC + BC - A - B - C - ABC");
  EXPECT_EQ(q, mmi_instance(Subsystem::of(3, {1}), Subsystem::of(3, {2}), Subsystem::of(3, {3})));
  const auto r = parse_letter_inequality(4, "2ABC - AB - AB");
  EXPECT_EQ(r[coordinate_index(Subsystem::of(4, {1, 2}))], Rational(-2));
  EXPECT_THROW(parse_letter_inequality(2, "A + D"), std::invalid_argument);
  EXPECT_THROW(parse_letter_inequality(2, "A +"), std::invalid_argument);
}

TEST(Io, RationalJson) {
  EXPECT_EQ(io::rational_from_json(Json("-5/4")), Rational(-5, 4));
  EXPECT_EQ(io::rational_from_json(Json(7)), Rational(7));
  EXPECT_THROW(io::rational_from_json(Json(0.5)), io::FormatError);
  EXPECT_THROW(io::rational_from_json(Json("x")), io::FormatError);
}

TEST(Io, GraphRoundTrip) {
  const GraphModel g = star_graph(3, Rational(3, 2));
  const Json j = io::to_json(g);
  const GraphModel back = GraphModel::build(io::graph_spec_from_json(j));
  EXPECT_EQ(io::to_json(back), j);
  EXPECT_EQ(entropy_vector(back), entropy_vector(g));

  Json extra = j;
  extra["colour"] = 1;
  EXPECT_THROW(io::graph_spec_from_json(extra), io::FormatError);
  Json bad_weight = j;
  bad_weight["edges"][0]["w"] = 1.5;
  EXPECT_THROW(io::graph_spec_from_json(bad_weight), io::FormatError);
}

TEST(Io, VectorAndInequalityRoundTrip) {
  const auto s = entropy_vector(star_graph(4, 2));
  const auto any = io::vector_from_json(io::to_json(s));
  EXPECT_EQ(std::get<EntropyVector>(any), s);

  const auto sym = symmetrize_vector(s);
  EXPECT_EQ(std::get<SymVector>(io::vector_from_json(io::to_json(sym))), sym);

  const Inequality h = hec6_sample();
  const Json hj = io::to_json(h);
  EXPECT_EQ(hj["coeffs"].size(), 17u);
  EXPECT_EQ(hj["coeffs"]["1,2"], "-1");
  EXPECT_EQ(std::get<Inequality>(io::inequality_from_json(hj)), h);

  const auto sh = symmetrize_inequality(h);
  EXPECT_EQ(std::get<SymInequality>(io::inequality_from_json(io::to_json(sh))), sh);

  Json wrong_length = io::to_json(s);
  wrong_length["entries"].push_back("1");
  EXPECT_THROW(io::vector_from_json(wrong_length), io::FormatError);
  Json wrong_key = hj;
  wrong_key["coeffs"]["1,7"] = "1";
  EXPECT_THROW(io::inequality_from_json(wrong_key), io::FormatError);
  Json bad_kind = hj;
  bad_kind["kind"] = "equality";
  EXPECT_THROW(io::inequality_from_json(bad_kind), io::FormatError);
}

TEST(Io, ConeDocument) {
  const auto cone = shec_cone(5);
  const Json j = io::cone_to_json(5, &cone.rays, &cone.facets);
  EXPECT_EQ(j["rays"][0], Json::array({"5", "8", "9"}));
  const auto doc = io::cone_from_json(j);
  ASSERT_TRUE(doc.rays && doc.facets);
  EXPECT_EQ(*doc.rays, cone.rays);
  EXPECT_EQ(*doc.facets, cone.facets);

  Json short_rays = j;
  short_rays["rays"].erase(0);
  EXPECT_THROW(io::cone_from_json(short_rays), io::FormatError);
}

TEST(Io, VolumeAndTableJson) {
  const Json v = io::volume_to_json(3, "shec", cone_volume(shec_rays(3)));
  EXPECT_EQ(v["volume"], "1/21");
  EXPECT_EQ(v["inverse_volume"], "21");
  const Json row = io::to_json(ratio_table(3).back());
  EXPECT_EQ(row["ratio_3sf"], "0.571");
  EXPECT_EQ(row["ratio"], "4/7");
}
