#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "frustum/exact.hpp"
#include "frustum/graph.hpp"

namespace frustum::spectral {

/// I - D^{-1/2} A D^{-1/2}. Throws GraphError if any vertex is isolated.
Eigen::MatrixXd normalized_laplacian(const FrustumGraph& g);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double residual = 0.0;            // max ||M v - lambda v|| over eigenpairs
};

/// Full spectrum of a symmetric matrix. Throws std::invalid_argument for a
/// non-square or non-symmetric input (within 1e-12 relative) and
/// std::runtime_error if the solver fails or its residual is too large.
Spectrum eigenvalues_symmetric(const Eigen::MatrixXd& m);

struct SpectralReport {
  std::vector<double> eigenvalues;
  double lambda_gap = 0.0;  // max(|l_1 - 1|, |l_{n-1} - 1|)
  double residual = 0.0;
};

/// Needs n >= 2 and a connected graph (GraphError otherwise).
SpectralReport spectral_report(const FrustumGraph& g);
double spectral_gap(const FrustumGraph& g);

/// One side of the expander mixing inequality for a vertex set X.
/// Inner edges are counted twice, so e_xx = 2|E(X)|.
struct MixingCheck {
  std::vector<VertexId> x;
  std::uint64_t e_xx = 0;
  std::uint64_t vol_x = 0;
  std::uint64_t vol_xbar = 0;
  std::uint64_t vol_g = 0;
  Rational lhs;      // |e(X,X) - vol(X)^2 / vol(G)|
  double rhs = 0.0;  // lambda * vol(X) vol(Xbar) / vol(G)
  bool holds = false;
};

inline constexpr double kMixingSlack = 1e-9;

/// X need not be sorted; duplicates and out-of-range ids throw InputError.
/// vol(G) must be positive.
MixingCheck mixing_check(const FrustumGraph& g, std::vector<VertexId> x, double lambda);

/// Mixing check for every subset of V(g), given as bitmasks. n <= 20.
/// Returns the subsets (as masks) where the inequality fails.
std::vector<std::uint32_t> mixing_failures_all_subsets(const FrustumGraph& g, double lambda);

}  // namespace frustum::spectral
