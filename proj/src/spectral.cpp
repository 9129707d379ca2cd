#include "frustum/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "frustum/errors.hpp"
#include "frustum/metrics.hpp"

namespace frustum::spectral {

Eigen::MatrixXd normalized_laplacian(const FrustumGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  std::vector<double> inv_sqrt(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw GraphError("normalized Laplacian undefined: vertex " + std::to_string(v) + " is isolated");
    }
    inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (VertexId v = 0; v < g.order(); ++v) {
    for (VertexId w : g.neighbors(v)) m(v, w) = -inv_sqrt[v] * inv_sqrt[w];
  }
  return m;
}

Spectrum eigenvalues_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigensolve needs a square matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("eigensolve needs a symmetric matrix");
  }
  Spectrum out;
  if (m.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const Eigen::VectorXd r = m * vectors.col(i) - values(i) * vectors.col(i);
    out.residual = std::max(out.residual, r.norm());
  }
  if (out.residual > 1e-9 * std::max(1.0, m.norm())) {
    throw std::runtime_error("eigensolve residual too large: " + std::to_string(out.residual));
  }
  return out;
}

SpectralReport spectral_report(const FrustumGraph& g) {
  if (g.order() < 2) throw GraphError("spectral gap needs at least two vertices");
  if (connected_components(g) != 1) throw GraphError("spectral gap needs a connected graph");
  const auto spectrum = eigenvalues_symmetric(normalized_laplacian(g));
  SpectralReport r;
  r.eigenvalues = spectrum.eigenvalues;
  r.residual = spectrum.residual;
  r.lambda_gap = std::max(std::abs(r.eigenvalues[1] - 1.0), std::abs(r.eigenvalues.back() - 1.0));
  return r;
}

double spectral_gap(const FrustumGraph& g) { return spectral_report(g).lambda_gap; }

MixingCheck mixing_check(const FrustumGraph& g, std::vector<VertexId> x, double lambda) {
  std::sort(x.begin(), x.end());
  if (std::adjacent_find(x.begin(), x.end()) != x.end()) throw InputError("vertex set has duplicates");
  if (!x.empty() && x.back() >= g.order()) throw InputError("vertex set has an out-of-range id");

  std::vector<char> in_x(g.order(), 0);
  for (VertexId v : x) in_x[v] = 1;
  MixingCheck c;
  for (VertexId v = 0; v < g.order(); ++v) {
    const std::uint64_t d = g.degree(v);
    c.vol_g += d;
    if (in_x[v]) {
      c.vol_x += d;
      for (VertexId w : g.neighbors(v)) c.e_xx += in_x[w];
    }
  }
  if (c.vol_g == 0) throw GraphError("mixing check needs a graph with at least one edge");
  c.vol_xbar = c.vol_g - c.vol_x;
  const Rational vx = BigInt(c.vol_x);
  const Rational diff = Rational(BigInt(c.e_xx)) - vx * vx / BigInt(c.vol_g);
  c.lhs = diff < 0 ? Rational(-diff) : diff;
  c.rhs = lambda * static_cast<double>(c.vol_x) * static_cast<double>(c.vol_xbar) /
          static_cast<double>(c.vol_g);
  c.holds = to_double(c.lhs) <= c.rhs + kMixingSlack;
  c.x = std::move(x);
  return c;
}

std::vector<std::uint32_t> mixing_failures_all_subsets(const FrustumGraph& g, double lambda) {
  if (g.order() > 20) throw InputError("exhaustive subset check limited to 20 vertices");
  std::vector<std::uint32_t> failures;
  const std::uint32_t limit = 1u << g.order();
  std::vector<VertexId> x;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    x.clear();
    for (VertexId v = 0; v < g.order(); ++v) {
      if (mask & (1u << v)) x.push_back(v);
    }
    if (!mixing_check(g, x, lambda).holds) failures.push_back(mask);
  }
  return failures;
}

}  // namespace frustum::spectral
