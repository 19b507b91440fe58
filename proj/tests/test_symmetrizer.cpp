#include <gtest/gtest.h>

#include <random>

#include "entrocone/cones.hpp"
#include "entrocone/inequalities.hpp"
#include "entrocone/symmetrizer.hpp"
#include "oracles.hpp"

using namespace entrocone;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

Inequality random_inequality(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Inequality q(n);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = coeff(rng);
  return q;
}

Inequality singleton_mmi(int n) {
  return mmi_instance(Subsystem::of(n, {1}), Subsystem::of(n, {2}), Subsystem::of(n, {3}));
}

}  // namespace

TEST(Symmetrizer, ThreePartyMatrices) {
  const Rational q = Rational(1, 4), t = Rational(1, 3);
  EXPECT_EQ(m_matrix(3), (RMatrix{{q, q, q, 0, 0, 0, q}, {0, 0, 0, t, t, t, 0}}));
  EXPECT_EQ(n_matrix(3), (RMatrix{{1, 1, 1, 0, 0, 0, 1}, {0, 0, 0, 1, 1, 1, 0}}));
  const RMatrix p = projection_matrix(3);
  for (std::size_t r = 0; r < 7; ++r) {
    for (std::size_t c = 0; c < 7; ++c) {
      const bool outer_r = r < 3 || r == 6, outer_c = c < 3 || c == 6;
      const Rational expected = outer_r && outer_c ? q : (!outer_r && !outer_c ? t : Rational(0));
      EXPECT_EQ(p(r, c), expected) << r << "," << c;
    }
  }
}

TEST(Symmetrizer, MatrixIdentities) {
  for (int n = 2; n <= 6; ++n) {
    const RMatrix m = m_matrix(n), nm = n_matrix(n);
    const auto d = static_cast<std::size_t>(sym_dimension(n));
    EXPECT_EQ(m * nm.transpose(), RMatrix::identity(d)) << "n=" << n;
    const RMatrix p = projection_matrix(n);
    EXPECT_EQ(p * p, p) << "n=" << n;
    EXPECT_EQ(nm.transpose(), m.transpose() * invert(m * m.transpose())) << "n=" << n;
  }
}

TEST(Symmetrizer, VectorMatchesAveragingOracle) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(0, 9);
  for (int n = 1; n <= 7; ++n) {
    EntropyVector s(n);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = Rational(entry(rng), 1 + i % 3);
    EXPECT_EQ(symmetrize_vector(s).entries(), oracle::symmetrize(n, s.entries())) << "n=" << n;
  }
}

TEST(Symmetrizer, OrbitSumMatchesPermutationOracle) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const Inequality q = random_inequality(rng, n);
      EXPECT_EQ(orbit_sum(q).entries(), oracle::orbit_sum(n, q.entries())) << "n=" << n;
    }
  }
}

TEST(Symmetrizer, OrbitSumOfSubadditivity) {
  // Every canonical coordinate of [3] is hit by 2 of the 6 permutation images.
  const Inequality sa = sa_instance(Subsystem::of(2, {1}), Subsystem::of(2, {2}));
  const Inequality orbit = orbit_sum(sa);
  EXPECT_EQ(orbit.entries(), oracle::orbit_sum(2, sa.entries()));
  for (const auto& c : orbit.entries()) EXPECT_EQ(c, Rational(2));
}

TEST(Symmetrizer, InequalityAgreesOnSymmetricVectors) {
  // q~ . S~ must equal q . S whenever S is constant on cardinality classes.
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 8; ++n) {
    const Inequality q = random_inequality(rng, n);
    const auto sq = symmetrize_inequality(q);
    SymVector sym(n);
    for (std::size_t k = 0; k < sym.size(); ++k) sym[k] = Rational(static_cast<int>(3 * k + 1), 2);
    EntropyVector s(n);
    const auto order = subsystem_order(n);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int k = order[i].size();
      s[i] = sym[static_cast<std::size_t>(std::min(k, n + 1 - k) - 1)];
    }
    EXPECT_EQ(evaluate(sq, sym), evaluate(q, s)) << "n=" << n;
  }
}

TEST(Symmetrizer, SingletonMonogamy) {
  EXPECT_EQ(primitive(symmetrize_inequality(singleton_mmi(3)).span()), ints({-4, 3}));
  EXPECT_EQ(primitive(symmetrize_inequality(singleton_mmi(4)).span()), ints({-3, 2}));
  for (int n = 5; n <= 10; ++n) {
    const auto p = primitive(symmetrize_inequality(singleton_mmi(n)).span());
    ASSERT_EQ(p.size(), static_cast<std::size_t>(sym_dimension(n)));
    EXPECT_EQ(p[0], -3);
    EXPECT_EQ(p[1], 3);
    EXPECT_EQ(p[2], -1);
    for (std::size_t k = 3; k < p.size(); ++k) EXPECT_EQ(p[k], 0);
  }
}

TEST(Symmetrizer, LiftPreservesValuesOnLiftedVectors) {
  const Inequality sa = sa_instance(Subsystem::of(2, {1}), Subsystem::of(2, {2}));
  const Inequality lifted = lift_inequality(sa, 4);
  EXPECT_EQ(lifted.parties(), 4);
  EXPECT_EQ(lifted[coordinate_index(Subsystem::of(4, {1}))], Rational(1));
  EXPECT_EQ(lifted[coordinate_index(Subsystem::of(4, {1, 2}))], Rational(-1));
  Rational total;
  for (const auto& c : lifted.entries()) total += c.abs();
  EXPECT_EQ(total, Rational(3));
  EXPECT_THROW(lift_inequality(sa, 1), std::invalid_argument);
}

TEST(Symmetrizer, SixPartySample) {
  const Inequality h = hec6_sample();
  EXPECT_EQ(h.parties(), 6);
  Rational sum;
  int terms = 0;
  for (const auto& c : h.entries()) {
    sum += c;
    terms += !c.is_zero();
  }
  EXPECT_EQ(terms, 17);
  EXPECT_EQ(sum, Rational(-1));
  EXPECT_EQ(primitive(symmetrize_inequality(h).span()), ints({0, -6, 5}));
  EXPECT_EQ(primitive(symmetrize_inequality(lift_inequality(h, 7)).span()), ints({0, -6, 8, -3}));
}

TEST(Symmetrizer, AveragedGraphCommutes) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 3;
    const GraphModel g = GraphModel::build(oracle::random_graph(rng, n, 7, 5));
    const auto averaged = entropy_vector(average_graph(g));
    const auto sym = symmetrize_vector(entropy_vector(g));
    const auto order = subsystem_order(n);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int k = std::min(order[i].size(), n + 1 - order[i].size());
      EXPECT_EQ(averaged[i], sym[static_cast<std::size_t>(k - 1)]);
    }
  }
  EXPECT_THROW(average_graph(star_graph(8, 1)), ResourceLimitError);
}
