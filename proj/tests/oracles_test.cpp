#include <gtest/gtest.h>

#include "frustum/cliques.hpp"
#include "frustum/errors.hpp"
#include "frustum/generator.hpp"
#include "frustum/oracles.hpp"
#include "support/reference.hpp"

namespace frustum::oracles {
namespace {

ModelParams model(std::int64_t n, SequenceSpec f, SequenceSpec g, std::int64_t horizon) {
  ModelParams p;
  p.n = n;
  p.f = std::move(f);
  p.g = std::move(g);
  p.horizon = horizon;
  return p;
}

TEST(Cone, OrderEdgesDegreeExamples) {
  EXPECT_EQ(cone_order_closed(SequenceSpec::affine(1, 0), 6), 5040);
  EXPECT_EQ(cone_order_closed(SequenceSpec::constant(2), 4), 81);
  EXPECT_EQ(cone_order_closed(SequenceSpec::constant(2), 0), 1);
  EXPECT_EQ(cone_edges_closed(SequenceSpec::constant(1), 2), 3);
  EXPECT_EQ(cone_edges_closed(SequenceSpec::constant(1), 3), 7);
  EXPECT_EQ(cone_edges_closed(SequenceSpec::constant(1), 0), 0);
  EXPECT_EQ(cone_degree_closed(SequenceSpec::affine(1, 0), 2, 4), 9);
  EXPECT_EQ(cone_degree_closed(SequenceSpec::affine(1, 0), 2, 3), 5);
  EXPECT_THROW(cone_degree_closed(SequenceSpec::affine(1, 0), 4, 3), InputError);
  EXPECT_EQ(cone_diameter_closed(4), 7);
  EXPECT_THROW(cone_diameter_closed(0), InputError);
  EXPECT_EQ(cone_clustering_bound(SequenceSpec::constant(2), 3), Rational(1, 3));
  EXPECT_EQ(cone_clustering_bound(SequenceSpec::constant(1), 1), Rational(1, 4));
}

TEST(Cone, PrintedEdgeSumDropsFirstStep) {
  const auto g = SequenceSpec::constant(1);
  for (std::int64_t t = 1; t <= 5; ++t) {
    EXPECT_EQ(cone_edges_closed(g, t) - cone_edges_printed_sum(g, t), 1) << "t=" << t;
  }
}

TEST(Cone, ClosedFormsMatchSimulation) {
  for (const auto& g : {SequenceSpec::constant(1), SequenceSpec::constant(2), SequenceSpec::affine(1, 0),
                        SequenceSpec::table({3, 1, 2})}) {
    const auto sim = reference::simulate(1, [](std::int64_t) { return 1; }, [&](std::int64_t t) { return g(t); }, 3);
    for (std::int64_t t = 0; t <= 3; ++t) {
      EXPECT_EQ(cone_order_closed(g, t), sim.order_at[static_cast<std::size_t>(t)]) << g.compact();
      EXPECT_EQ(cone_edges_closed(g, t), sim.edges_at[static_cast<std::size_t>(t)]) << g.compact();
    }
  }
}

TEST(Wiener, TriangleCandidates) {
  const auto g = SequenceSpec::constant(2);
  EXPECT_EQ(wiener_theorem_statement(g, 1), 6);
  EXPECT_EQ(wiener_proof_final(g, 1), 9);
  EXPECT_EQ(wiener_recurrence(g, 1), 3);
  EXPECT_EQ(wiener_recurrence(SequenceSpec::constant(1), 2), 10);
}

TEST(Wiener, RecurrenceMatchesFloydWarshall) {
  for (const auto& g : {SequenceSpec::constant(1), SequenceSpec::constant(2), SequenceSpec::affine(1, 0),
                        SequenceSpec::table({2, 1, 3})}) {
    const auto sim = reference::simulate(1, [](std::int64_t) { return 1; }, [&](std::int64_t t) { return g(t); }, 3);
    const auto d = reference::distances(sim.adjacency);
    for (std::int64_t t = 0; t <= 3; ++t) {
      const std::size_t n = sim.order_at[static_cast<std::size_t>(t)];
      BigInt w = 0;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) w += d[u][v];  // snapshots are id prefixes
      }
      EXPECT_EQ(wiener_recurrence(g, t), w) << g.compact() << " t=" << t;
    }
  }
}

TEST(Wiener, CalibrationRecommendsRecurrence) {
  const auto& cal = wiener_calibration();
  EXPECT_EQ(cal.recommended, kWienerRecurrence);
  EXPECT_EQ(cal.matching, std::vector<std::string>{kWienerRecurrence});
  EXPECT_FALSE(cal.samples.empty());
  const auto forms = cone_wiener_closed(SequenceSpec::constant(1), 2);
  EXPECT_EQ(forms.recommended, kWienerRecurrence);
  EXPECT_EQ(forms.recommended_value, 10);
  EXPECT_EQ(forms.candidates.size(), 3u);
}

TEST(Cylinder, ClosedForms) {
  const auto c = cylinder_constant_closed(2, 1);
  EXPECT_EQ(c.cliques, 6);
  EXPECT_EQ(c.order, 4);
  EXPECT_EQ(c.edges, 6);
  EXPECT_EQ(c.limit_ratio, Rational(5, 2));
  const auto d = cylinder_constant_closed(1, 2);
  EXPECT_EQ(d.cliques, 4);
  EXPECT_EQ(d.order, 4);
  EXPECT_EQ(d.edges, 3);
  EXPECT_EQ(d.limit_ratio, Rational(1));
}

TEST(Cylinder, ClosedFormsMatchSimulation) {
  for (std::int64_t n = 1; n <= 3; ++n) {
    const auto k = [n](std::int64_t) { return n; };
    const auto sim = reference::simulate(static_cast<std::size_t>(n), k, k, 3);
    for (std::int64_t t = 0; t <= 3; ++t) {
      const auto c = cylinder_constant_closed(n, t);
      EXPECT_EQ(c.order, sim.order_at[static_cast<std::size_t>(t)]) << "n=" << n << " t=" << t;
      EXPECT_EQ(c.edges, sim.edges_at[static_cast<std::size_t>(t)]) << "n=" << n << " t=" << t;
    }
    // Clique count at the final step, by exhaustive subsets.
    EXPECT_EQ(cylinder_constant_closed(n, 3).cliques, reference::cliques(sim.adjacency, static_cast<std::size_t>(n)).size());
  }
}

TEST(General, EdgeIncrementRatioAndGain) {
  EXPECT_EQ(edge_increment_ratio(1, 1), Rational(1));
  EXPECT_EQ(edge_increment_ratio(2, 2), Rational(5, 2));
  EXPECT_EQ(clique_gain_per_parent(2, 2, 2), 2);  // binom(3,1) - binom(1,1)
  EXPECT_EQ(clique_gain_per_parent(2, 1, 3), 1);  // binom(2,2) - binom(1,2)
}

TEST(Diagnostics, ConeGrowthFactors) {
  const std::vector<std::pair<SequenceSpec, Rational>> cases = {
      {SequenceSpec::constant(1), Rational(1)},
      {SequenceSpec::constant(2), Rational(2)},
      {SequenceSpec::affine(1, 0), Rational(2)},
  };
  for (const auto& [g, want] : cases) {
    const auto p = model(1, SequenceSpec::constant(1), g, 4);
    const auto d = densification_diagnostic(generate(p), p);
    ASSERT_TRUE(d.min_growth_factor.has_value());
    EXPECT_EQ(*d.min_growth_factor, want) << g.compact();
    EXPECT_TRUE(d.growth_inequality_all);
    EXPECT_TRUE(d.clique_bound_all);
    EXPECT_EQ(d.steps.size(), 4u);
  }
}

TEST(Diagnostics, CliqueMinimumMatchesExhaustiveCount) {
  const auto p = model(3, SequenceSpec::constant(2), SequenceSpec::constant(2), 3);
  const auto g = generate(p);
  const auto d = densification_diagnostic(g, p);
  const auto sim = reference::simulate(3, [](std::int64_t) { return 2; }, [](std::int64_t) { return 2; }, 2);
  const std::size_t n2 = sim.order_at[2];
  reference::Matrix prefix(n2, std::vector<bool>(n2));
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = 0; j < n2; ++j) prefix[i][j] = sim.adjacency[i][j];
  }
  const auto per = reference::cliques_per_vertex(prefix, 2);
  EXPECT_EQ(d.steps[2].clique_min, *std::min_element(per.begin(), per.end()));
}

TEST(Diagnostics, CliqueRecurrenceHolds) {
  for (const auto& p : {model(3, SequenceSpec::constant(2), SequenceSpec::constant(2), 3),
                        model(2, SequenceSpec::constant(2), SequenceSpec::constant(1), 3),
                        model(3, SequenceSpec::table({2, 3, 3}), SequenceSpec::table({2, 2, 3}), 3)}) {
    const auto g = generate(p);
    for (std::int64_t t = 2; t <= 3; ++t) {
      const auto c = clique_recurrence_check(g, p, t);
      EXPECT_EQ(c.mismatches, 0u) << p.label() << " t=" << t;
      EXPECT_EQ(c.vertices_checked, g.order_at(t - 2));
    }
    EXPECT_THROW(clique_recurrence_check(g, p, 1), InputError);
  }
}

}  // namespace
}  // namespace frustum::oracles
