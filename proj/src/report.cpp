#include "frustum/report.hpp"

#include <cstdio>
#include <ostream>

#include "frustum/errors.hpp"
#include "frustum/metrics.hpp"
#include "frustum/spectral.hpp"

namespace frustum {
namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

template <class T, class F>
std::string or_dash(const std::optional<T>& v, F format) {
  return v ? format(*v) : std::string("-");
}

}  // namespace

MetricsReport build_metrics_report(const FrustumGraph& g, const MetricsOptions& options) {
  MetricsReport report;
  for (std::int64_t t = 0; t <= g.horizon(); ++t) {
    const FrustumGraph snap = snapshot_at(g, t);
    StepMetrics m;
    m.t = t;
    m.order = snap.order();
    m.edges = snap.edge_count();
    m.density = snap.order() ? Rational(BigInt(m.edges), BigInt(m.order)) : Rational(0);
    m.degree_histogram = degree_histogram(snap);

    if (options.distances) {
      const auto d = distance_summary(snap);
      if (d.connected) {
        m.diameter = d.diameter;
        m.wiener = d.wiener;
        if (snap.order() >= 2) {
          const BigInt n = snap.order();
          m.average_distance = Rational(d.wiener, n * (n - 1) / 2);
        }
      } else {
        m.errors.push_back("distances: graph is disconnected");
      }
    }
    if (options.clustering) m.clustering = global_clustering(snap);
    if (options.spectral && snap.order() >= 2) {
      try {
        m.lambda = spectral::spectral_gap(snap);
      } catch (const GraphError& e) {
        m.errors.push_back(std::string("spectral: ") + e.what());
      } catch (const std::runtime_error& e) {
        m.errors.push_back(std::string("spectral: ") + e.what());
      }
    }
    report.steps.push_back(std::move(m));
  }
  return report;
}

void write_metrics_report(std::ostream& out, const MetricsReport& report) {
  out << "t\tn\te\tdensity\tdiameter\twiener\tavg_distance\tclustering\tlambda\tdegree_histogram\terrors\n";
  auto rat = [](const Rational& r) { return to_string(r); };
  for (const auto& m : report.steps) {
    out << m.t << '\t' << m.order << '\t' << m.edges << '\t' << to_string(m.density) << '\t'
        << or_dash(m.diameter, [](std::uint64_t v) { return std::to_string(v); }) << '\t'
        << or_dash(m.wiener, [](const BigInt& v) { return to_string(v); }) << '\t'
        << or_dash(m.average_distance, rat) << '\t' << or_dash(m.clustering, rat) << '\t'
        << or_dash(m.lambda, fmt_double) << '\t';
    bool first = true;
    for (const auto& [deg, count] : m.degree_histogram) {
      if (!first) out << ',';
      out << deg << ':' << count;
      first = false;
    }
    if (first) out << '-';
    out << '\t';
    if (m.errors.empty()) {
      out << '-';
    } else {
      for (std::size_t i = 0; i < m.errors.size(); ++i) out << (i ? "; " : "") << m.errors[i];
    }
    out << '\n';
  }
}

void write_series(std::ostream& out, const MetricsReport& report) {
  out << "t\tdensity\tdiameter\tclustering\tlambda\n";
  for (const auto& m : report.steps) {
    out << m.t << '\t' << fmt_double(to_double(m.density)) << '\t'
        << or_dash(m.diameter, [](std::uint64_t v) { return std::to_string(v); }) << '\t'
        << or_dash(m.clustering, [](const Rational& r) { return fmt_double(to_double(r)); }) << '\t'
        << or_dash(m.lambda, fmt_double) << '\n';
  }
}

}  // namespace frustum
