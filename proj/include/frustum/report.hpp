#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frustum/exact.hpp"
#include "frustum/graph.hpp"

namespace frustum {

struct MetricsOptions {
  bool distances = true;   // diameter, Wiener index, average distance
  bool clustering = true;
  bool spectral = false;   // spectral gap of the normalized Laplacian
};

/// Measurements for the snapshot at one time step. Optional fields are absent
/// when the group was not requested or the quantity does not apply (for example
/// average distance on one vertex); failures land in `errors`.
struct StepMetrics {
  std::int64_t t = 0;
  std::uint64_t order = 0;
  std::uint64_t edges = 0;
  Rational density;  // e / n
  std::optional<std::uint64_t> diameter;
  std::optional<BigInt> wiener;
  std::optional<Rational> average_distance;
  std::optional<Rational> clustering;
  std::optional<double> lambda;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::vector<std::string> errors;
};

struct MetricsReport {
  std::vector<StepMetrics> steps;
};

/// One record per snapshot 0..horizon.
MetricsReport build_metrics_report(const FrustumGraph& g, const MetricsOptions& options);

/// Tab-separated, fixed column order, header first:
///   t n e density diameter wiener avg_distance clustering lambda degree_histogram errors
/// Rationals print as p/q, absent values as "-", lambda with 12 significant digits.
void write_metrics_report(std::ostream& out, const MetricsReport& report);

/// Plot-ready decimal series: t density diameter clustering lambda.
void write_series(std::ostream& out, const MetricsReport& report);

}  // namespace frustum
