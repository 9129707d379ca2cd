#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "frustum/errors.hpp"
#include "frustum/generator.hpp"
#include "frustum/metrics.hpp"
#include "frustum/spectral.hpp"
#include "support/reference.hpp"

namespace frustum::spectral {
namespace {

constexpr double kTol = 1e-9;
using Edge = std::pair<VertexId, VertexId>;

TEST(Laplacian, EdgeMatrix) {
  const auto m = normalized_laplacian(FrustumGraph::complete(2));
  EXPECT_NEAR(m(0, 0), 1.0, kTol);
  EXPECT_NEAR(m(0, 1), -1.0, kTol);
  EXPECT_NEAR(m(1, 0), -1.0, kTol);
}

TEST(Laplacian, IsolatedVertexIsAnError) {
  const std::vector<Edge> one = {{0, 1}};
  EXPECT_THROW(normalized_laplacian(FrustumGraph::from_edges(3, one)), GraphError);
}

TEST(Spectrum, CompleteGraphs) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto s = eigenvalues_symmetric(normalized_laplacian(FrustumGraph::complete(n)));
    ASSERT_EQ(s.eigenvalues.size(), n);
    EXPECT_NEAR(s.eigenvalues[0], 0.0, kTol);
    for (std::size_t i = 1; i < n; ++i) EXPECT_NEAR(s.eigenvalues[i], double(n) / double(n - 1), kTol);
  }
  EXPECT_NEAR(spectral_gap(FrustumGraph::complete(3)), 0.5, kTol);
  EXPECT_NEAR(spectral_gap(FrustumGraph::complete(2)), 1.0, kTol);
}

TEST(Spectrum, Star) {
  const std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}};
  const auto s = eigenvalues_symmetric(normalized_laplacian(FrustumGraph::from_edges(4, star)));
  const std::vector<double> want = {0.0, 1.0, 1.0, 2.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(s.eigenvalues[i], want[i], kTol);
}

TEST(Spectrum, IdentityAndAsymmetry) {
  const auto s = eigenvalues_symmetric(Eigen::MatrixXd::Identity(3, 3));
  for (double v : s.eigenvalues) EXPECT_NEAR(v, 1.0, kTol);
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_THROW(eigenvalues_symmetric(m), std::invalid_argument);
}

TEST(Spectrum, PreconditionsOfReport) {
  EXPECT_THROW(spectral_report(FrustumGraph::complete(1)), GraphError);
  const std::vector<Edge> two = {{0, 1}, {2, 3}};
  EXPECT_THROW(spectral_report(FrustumGraph::from_edges(4, two)), GraphError);
}

class RandomGraphs : public ::testing::TestWithParam<std::uint32_t> {};

// Trace identities give an oracle that does not depend on any eigensolver:
// sum(l_i) = n and sum(l_i^2) = n + sum over edges 2 / (d_u d_v).
TEST_P(RandomGraphs, TraceIdentitiesRangeAndKernel) {
  auto g = reference::random_graph(16, 0.25, GetParam());
  std::vector<Edge> edges = g.edges();
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      const VertexId w = (v + 1) % static_cast<VertexId>(g.order());
      edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g = FrustumGraph::from_edges(16, edges);

  const auto s = eigenvalues_symmetric(normalized_laplacian(g));
  double sum = 0.0;
  double sq = 0.0;
  for (double v : s.eigenvalues) {
    EXPECT_GE(v, -kTol);
    EXPECT_LE(v, 2.0 + kTol);
    sum += v;
    sq += v * v;
  }
  double want_sq = static_cast<double>(g.order());
  for (auto [u, v] : g.edges()) want_sq += 2.0 / (double(g.degree(u)) * double(g.degree(v)));
  EXPECT_NEAR(sum, double(g.order()), 1e-8);
  EXPECT_NEAR(sq, want_sq, 1e-8);
  EXPECT_LE(s.residual, 1e-9);

  std::size_t zeros = 0;
  for (double v : s.eigenvalues) zeros += std::abs(v) < 1e-8;
  EXPECT_EQ(zeros, connected_components(g));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphs, ::testing::Values(11u, 12u, 13u, 77u));

TEST(Mixing, WholeAndEmptySets) {
  const auto g = FrustumGraph::complete(4);
  const double lambda = spectral_gap(g);
  const auto empty = mixing_check(g, {}, lambda);
  EXPECT_EQ(empty.vol_x, 0u);
  EXPECT_EQ(empty.lhs, Rational(0));
  EXPECT_TRUE(empty.holds);
  const auto all = mixing_check(g, {3, 1, 0, 2}, lambda);
  EXPECT_EQ(all.vol_x, 12u);
  EXPECT_EQ(all.vol_g, 12u);
  EXPECT_EQ(all.e_xx, 12u);
  EXPECT_EQ(all.lhs, Rational(0));
  EXPECT_TRUE(all.holds);
  EXPECT_THROW(mixing_check(g, {1, 1}, lambda), InputError);
  EXPECT_THROW(mixing_check(g, {9}, lambda), InputError);
}

TEST(Mixing, ExhaustiveOnSmallGraphs) {
  ModelParams p;
  p.g = SequenceSpec::constant(2);
  p.horizon = 2;
  const auto g = generate(p);  // 9 vertices
  const double lambda = spectral_gap(g);
  EXPECT_TRUE(mixing_failures_all_subsets(g, lambda).empty());
  // With lambda = 0 the inequality demands e(X,X) = vol(X)^2 / vol(G), which fails somewhere.
  EXPECT_FALSE(mixing_failures_all_subsets(g, 0.0).empty());
}

}  // namespace
}  // namespace frustum::spectral
