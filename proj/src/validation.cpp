#include "frustum/validation.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <set>

#include <json.hpp>

#include "frustum/cliques.hpp"
#include "frustum/errors.hpp"
#include "frustum/generator.hpp"
#include "frustum/metrics.hpp"
#include "frustum/oracles.hpp"
#include "frustum/spectral.hpp"

namespace frustum::validation {

using frustum::to_string;
namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

class Sink {
 public:
  Sink(std::string run, const Options& options, Report& report)
      : run_(std::move(run)), options_(options), report_(report) {}

  void equal(const std::string& quantity, std::int64_t t, BigInt expected, const BigInt& measured,
             bool mandatory = true) {
    if (faulted(quantity)) expected += 1;
    push(quantity, t, to_string(expected), to_string(measured), expected == measured, mandatory);
  }

  void equal(const std::string& quantity, std::int64_t t, Rational expected, const Rational& measured,
             bool mandatory = true) {
    if (faulted(quantity)) expected += 1;
    push(quantity, t, to_string(expected), to_string(measured), expected == measured, mandatory);
  }

  void holds(const std::string& quantity, std::int64_t t, const std::string& expected,
             const std::string& measured, bool ok, bool mandatory = true) {
    if (faulted(quantity)) ok = !ok;
    push(quantity, t, expected, measured, ok, mandatory);
  }

  void skipped(const std::string& quantity, std::int64_t t, const std::string& why) {
    report_.rows.push_back({run_, quantity, t, "-", why, Verdict::kNotApplicable, false});
  }

  const Options& options() const { return options_; }

 private:
  bool faulted(const std::string& quantity) {
    if (options_.fault && *options_.fault == quantity) {
      ++report_.faults_applied;
      return true;
    }
    return false;
  }

  void push(const std::string& quantity, std::int64_t t, std::string expected, std::string measured,
            bool ok, bool mandatory) {
    report_.rows.push_back({run_, quantity, t, std::move(expected), std::move(measured),
                            ok ? Verdict::kMatch : Verdict::kMismatch, mandatory});
  }

  std::string run_;
  const Options& options_;
  Report& report_;
};

bool is_cone(const ModelParams& p) {
  if (p.n != 1) return false;
  for (std::int64_t t = 1; t <= p.horizon; ++t) {
    if (p.f(t) != 1) return false;
  }
  return true;
}

bool is_constant_cylinder(const ModelParams& p) {
  for (std::int64_t t = 1; t <= p.horizon; ++t) {
    if (p.f(t) != p.n || p.g(t) != p.n) return false;
  }
  return true;
}

void check_growth(Sink& sink, const ModelParams& p, const FrustumGraph& g,
                  const std::vector<TrajectoryPoint>& points) {
  for (std::int64_t t = 1; t <= p.horizon; ++t) {
    const auto& prev = points[static_cast<std::size_t>(t - 1)];
    const auto& cur = points[static_cast<std::size_t>(t)];
    const std::int64_t f = p.f(t);
    const std::int64_t gt = p.g(t);
    const FrustumGraph snap = snapshot_at(g, t - 1);
    const BigInt cliques = count_k_cliques(snap, static_cast<std::size_t>(f));
    sink.equal("order-increment", t, BigInt(gt) * cliques, BigInt(cur.order - prev.order));
    sink.equal("edge-increment", t, (binomial(f + gt, 2) - binomial(f, 2)) * cliques,
               BigInt(cur.edges - prev.edges));
    if (cur.order > prev.order) {
      sink.equal("edge-increment-ratio", t, oracles::edge_increment_ratio(f, gt),
                 Rational(BigInt(cur.edges - prev.edges), BigInt(cur.order - prev.order)));
    }
  }

  // Caps: new vertices see exactly their parent clique and cap-mates at birth.
  std::vector<std::size_t> bad(static_cast<std::size_t>(p.horizon) + 1, 0);
  for (const auto& cap : g.caps()) {
    std::vector<VertexId> closed = cap.parent_clique;
    closed.insert(closed.end(), cap.new_vertices.begin(), cap.new_vertices.end());
    std::sort(closed.begin(), closed.end());
    const auto limit = static_cast<VertexId>(g.order_at(cap.time));
    for (VertexId y : cap.new_vertices) {
      std::vector<VertexId> nb;
      for (VertexId w : g.neighbors(y)) {
        if (w < limit) nb.push_back(w);
      }
      nb.push_back(y);
      std::sort(nb.begin(), nb.end());
      if (nb != closed) ++bad[static_cast<std::size_t>(cap.time)];
    }
    for (std::size_t i = 0; i < cap.parent_clique.size(); ++i) {
      for (std::size_t j = i + 1; j < cap.parent_clique.size(); ++j) {
        if (!g.adjacent(cap.parent_clique[i], cap.parent_clique[j])) ++bad[static_cast<std::size_t>(cap.time)];
      }
    }
  }
  for (std::int64_t t = 1; t <= p.horizon; ++t) {
    sink.equal("cap-structure-violations", t, BigInt(0), BigInt(bad[static_cast<std::size_t>(t)]));
  }
}

void check_diagnostics(Sink& sink, const ModelParams& p, const FrustumGraph& g) {
  const auto d = oracles::densification_diagnostic(g, p);
  for (const auto& s : d.steps) {
    sink.holds("growth-inequality", s.t,
               ">= n_{t-1}*" + std::to_string(s.clique_min) + "*" + std::to_string(s.g_t),
               "(n_t-n_{t-1})*f_t=" + std::to_string((s.order - s.order_prev) * static_cast<std::uint64_t>(s.f_t)),
               s.growth_inequality);
    if (s.clique_lower_bound) {
      sink.holds("clique-lower-bound", s.t, ">= " + to_string(*s.clique_lower_bound),
                 "min=" + std::to_string(s.clique_min) + " violations=" +
                     std::to_string(s.clique_bound_violations),
                 s.clique_bound_violations == 0);
    }
  }
  for (std::int64_t t = 2; t <= p.horizon; ++t) {
    if (g.order_at(t - 1) > 20000) {
      sink.skipped("clique-recurrence", t, "snapshot too large");
      continue;
    }
    const auto c = oracles::clique_recurrence_check(g, p, t);
    sink.equal("clique-recurrence-mismatches", t, BigInt(0), BigInt(c.mismatches));
  }
}

void check_cone(Sink& sink, const ModelParams& p, const FrustumGraph& g,
                const std::vector<TrajectoryPoint>& points) {
  const Options& opt = sink.options();
  const auto& cal = oracles::wiener_calibration();
  for (std::int64_t t = 0; t <= p.horizon; ++t) {
    const auto& pt = points[static_cast<std::size_t>(t)];
    sink.equal("cone-order", t, oracles::cone_order_closed(p.g, t), BigInt(pt.order));
    sink.equal("cone-edges", t, oracles::cone_edges_closed(p.g, t), BigInt(pt.edges));
    sink.equal("cone-edges-printed-sum", t, oracles::cone_edges_printed_sum(p.g, t), BigInt(pt.edges),
               false);
  }

  for (std::int64_t t = 0; t <= p.horizon; ++t) {
    const FrustumGraph snap = snapshot_at(g, t);
    const std::size_t n = snap.order();

    // Distances.
    if (n > opt.max_distance_order) {
      sink.skipped("diameter", t, "order " + std::to_string(n) + " above BFS limit");
    } else {
      const auto dist = distance_summary(snap);
      if (t >= 1) {
        sink.equal("diameter", t, BigInt(oracles::cone_diameter_closed(t)), BigInt(dist.diameter));
      }
      const auto w = oracles::cone_wiener_closed(p.g, t);
      for (const auto& c : w.candidates) {
        sink.equal("wiener:" + c.label, t, c.value, dist.wiener, c.label == cal.recommended);
      }
      if (n >= 2) {
        const BigInt pairs = BigInt(n) * (n - 1) / 2;
        sink.equal("average-distance", t, Rational(w.recommended_value, pairs), Rational(dist.wiener, pairs));
      }
    }

    if (t >= 1 && n <= opt.max_distance_order) {
      const FrustumGraph prev = snapshot_at(g, t - 1);
      const auto before = all_pairs_distances(prev);
      const auto after = all_pairs_distances(snap);
      std::vector<VertexId> parent(n);
      for (VertexId v = 0; v < prev.order(); ++v) parent[v] = v;
      for (const auto& cap : g.caps()) {
        if (cap.time != t) continue;
        for (VertexId y : cap.new_vertices) parent[y] = cap.parent_clique.front();
      }
      std::uint64_t violations[3] = {0, 0, 0};
      const std::size_t n_old = prev.order();
      for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
          const VertexId x = parent[a];
          const VertexId y = parent[b];
          if (x == y) continue;
          const int fresh = (a >= n_old) + (b >= n_old);
          const std::uint64_t want = before[x].distances[y] + static_cast<std::uint64_t>(fresh);
          if (after[a].distances[b] != want) ++violations[fresh];
        }
      }
      static const char* const kNames[] = {"distance-old-old", "distance-old-new", "distance-new-new"};
      for (int i = 0; i < 3; ++i) sink.equal(std::string(kNames[i]) + "-violations", t, BigInt(0), BigInt(violations[i]));
    }

    // Degrees by birth step.
    for (std::int64_t j = 1; j <= t; ++j) {
      const auto lo = static_cast<VertexId>(g.order_at(j - 1));
      const auto hi = static_cast<VertexId>(g.order_at(j));
      std::set<std::uint64_t> seen;
      for (VertexId x = lo; x < hi; ++x) seen.insert(degree_at(g, x, t));
      const BigInt want = oracles::cone_degree_closed(p.g, j, t);
      const std::string quantity = "degree-born-" + std::to_string(j);
      if (seen.size() == 1) {
        sink.equal(quantity, t, want, BigInt(*seen.begin()));
      } else {
        std::string measured;
        for (auto d : seen) measured += (measured.empty() ? "" : ",") + std::to_string(d);
        sink.holds(quantity, t, to_string(want), measured, false);
      }
    }

    if (t >= 1) {
      const Rational bound = oracles::cone_clustering_bound(p.g, t);
      const Rational c = global_clustering(snap);
      // The bound's derivation needs binom(g_i, 2) >= g_i^2 / 4, i.e. every g_i >= 2;
      // with some g_i = 1 the row is recorded but not asserted.
      bool premise = true;
      for (std::int64_t i = 1; i <= t; ++i) premise = premise && p.g(i) >= 2;
      sink.holds("clustering-bound", t, ">= " + to_string(bound), to_string(c), c >= bound, premise);

      // Volume bookkeeping and mixing on X = V_t.
      const auto& prev_pt = points[static_cast<std::size_t>(t - 1)];
      const BigInt gt = p.g(t);
      std::vector<VertexId> x;
      for (VertexId v = static_cast<VertexId>(prev_pt.order); v < n; ++v) x.push_back(v);
      if (n > opt.max_spectral_order) {
        sink.skipped("spectral-gap", t, "order " + std::to_string(n) + " above eigensolve limit");
      } else {
        const double lambda = spectral::spectral_gap(snap);
        sink.holds("spectral-gap", t, ">= 0.5 - 1e-9", fmt_double(lambda), lambda >= 0.5 - 1e-9, t >= 2);
        const auto mix = spectral::mixing_check(snap, x, lambda);
        sink.holds("mixing-new-vertices", t, "<= " + fmt_double(mix.rhs), fmt_double(to_double(mix.lhs)),
                   mix.holds);
        sink.equal("volume-new", t, BigInt(prev_pt.order) * gt * gt, BigInt(mix.vol_x));
        sink.equal("volume-graph", t, 2 * BigInt(prev_pt.edges) + (gt * gt + gt) * prev_pt.order,
                   BigInt(mix.vol_g));
        sink.equal("inner-edges-new", t, gt * (gt - 1) * prev_pt.order, BigInt(mix.e_xx));
      }
    }

    if (n >= 2 && n <= opt.max_subset_order) {
      const double lambda = spectral::spectral_gap(snap);
      const auto failures = spectral::mixing_failures_all_subsets(snap, lambda);
      sink.equal("mixing-all-subsets-failures", t, BigInt(0), BigInt(failures.size()));
    }
  }
}

void check_cylinder(Sink& sink, const ModelParams& p, const FrustumGraph& g,
                    const std::vector<TrajectoryPoint>& points) {
  const Rational limit = oracles::cylinder_constant_closed(p.n, 0).limit_ratio;
  std::optional<Rational> prev_gap;
  for (std::int64_t t = 0; t <= p.horizon; ++t) {
    const auto closed = oracles::cylinder_constant_closed(p.n, t);
    const auto& pt = points[static_cast<std::size_t>(t)];
    const FrustumGraph snap = snapshot_at(g, t);
    sink.equal("cylinder-cliques", t, closed.cliques, BigInt(count_k_cliques(snap, static_cast<std::size_t>(p.n))));
    sink.equal("cylinder-order", t, closed.order, BigInt(pt.order));
    sink.equal("cylinder-edges", t, closed.edges, BigInt(pt.edges));
    const Rational density(BigInt(pt.edges), BigInt(pt.order));
    sink.holds("cylinder-density-below-limit", t, "< " + to_string(limit), to_string(density), density < limit);
    const Rational gap = limit - density;
    if (prev_gap) {
      sink.holds("cylinder-gap-shrinking", t, "< " + to_string(*prev_gap), to_string(gap), gap < *prev_gap);
    }
    prev_gap = gap;
  }
}

void check_small_graph_mixing(Sink& sink, const ModelParams& p, const FrustumGraph& g) {
  for (std::int64_t t = 0; t <= p.horizon; ++t) {
    const FrustumGraph snap = snapshot_at(g, t);
    if (snap.order() < 2 || snap.order() > sink.options().max_subset_order) continue;
    const double lambda = spectral::spectral_gap(snap);
    const auto failures = spectral::mixing_failures_all_subsets(snap, lambda);
    sink.equal("mixing-all-subsets-failures", t, BigInt(0), BigInt(failures.size()));
  }
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kMatch:
      return "match";
    case Verdict::kMismatch:
      return "mismatch";
    case Verdict::kNotApplicable:
      return "not-applicable";
  }
  return "?";
}

bool Report::passed() const { return failures().empty(); }

std::vector<Row> Report::failures() const {
  std::vector<Row> out;
  for (const auto& r : rows) {
    if (r.mandatory && r.verdict == Verdict::kMismatch) out.push_back(r);
  }
  return out;
}

void Report::append(const Report& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  faults_applied += other.faults_applied;
  if (wiener_recommended.empty()) {
    wiener_recommended = other.wiener_recommended;
    wiener_matching = other.wiener_matching;
  }
}

Report validate_model(const std::string& run, const ModelParams& p, const Options& options) {
  require_valid(p);
  Report report;
  const auto& cal = oracles::wiener_calibration();
  report.wiener_recommended = cal.recommended;
  report.wiener_matching = cal.matching;

  Sink sink(run, options, report);
  const FrustumGraph g = generate(p);
  const auto points = trajectory(g);
  check_growth(sink, p, g, points);
  check_diagnostics(sink, p, g);
  if (is_cone(p)) {
    check_cone(sink, p, g, points);
  } else {
    check_small_graph_mixing(sink, p, g);
  }
  if (is_constant_cylinder(p)) check_cylinder(sink, p, g, points);
  return report;
}

Report validate_complete_graph(std::size_t n, const Options& options) {
  Report report;
  Sink sink("K_" + std::to_string(n), options, report);
  const FrustumGraph g = FrustumGraph::complete(n);
  const auto spectrum = spectral::eigenvalues_symmetric(spectral::normalized_laplacian(g));
  const double top = static_cast<double>(n) / static_cast<double>(n - 1);
  double worst = std::abs(spectrum.eigenvalues.front());
  for (std::size_t i = 1; i < n; ++i) worst = std::max(worst, std::abs(spectrum.eigenvalues[i] - top));
  sink.holds("complete-spectrum", 0, "{0, n/(n-1) x (n-1)} within 1e-9", "max deviation " + fmt_double(worst),
             worst <= 1e-9);
  const double lambda = spectral::spectral_gap(g);
  sink.equal("mixing-all-subsets-failures", 0, BigInt(0),
             BigInt(spectral::mixing_failures_all_subsets(g, lambda).size()));
  return report;
}

std::vector<std::pair<std::string, ModelParams>> default_suite() {
  auto model = [](std::int64_t n, SequenceSpec f, SequenceSpec g, std::int64_t T) {
    ModelParams p;
    p.n = n;
    p.f = std::move(f);
    p.g = std::move(g);
    p.horizon = T;
    return p;
  };
  using S = SequenceSpec;
  std::vector<std::pair<std::string, ModelParams>> suite = {
      // cone runs
      {"cone g=(1,1)", model(1, S::constant(1), S::table({1, 1}), 2)},
      {"cone g_1=2", model(1, S::constant(1), S::table({2}), 1)},
      {"cone g=2", model(1, S::constant(1), S::constant(2), 5)},
      {"cone g_t=t", model(1, S::constant(1), S::affine(1, 0), 6)},
      {"cone g=1", model(1, S::constant(1), S::constant(1), 4)},
      {"cone g=3", model(1, S::constant(1), S::constant(3), 4)},
      {"cone g=(1,1,2,3)", model(1, S::constant(1), S::table({1, 1, 2, 3}), 4)},
      {"cone g=2t-1", model(1, S::constant(1), S::affine(2, -1), 4)},
      {"cone g=(2,2,3,5)", model(1, S::constant(1), S::table({2, 2, 3, 5}), 4)},
      {"cone g=4", model(1, S::constant(1), S::constant(4), 4)},
      // cylinders
      {"cylinder n=1", model(1, S::constant(1), S::constant(1), 3)},
      {"cylinder n=2", model(2, S::constant(2), S::constant(2), 3)},
      {"cylinder f=g=t", model(1, S::affine(1, 0), S::affine(1, 0), 4)},
      // general frustum battery
      {"frus(2,2,1)", model(2, S::constant(2), S::constant(1), 4)},
      {"frus(3,2,2)", model(3, S::constant(2), S::constant(2), 3)},
      {"frus(2,1,2)", model(2, S::constant(1), S::constant(2), 4)},
      {"frus(3,3,1)", model(3, S::constant(3), S::constant(1), 4)},
      {"frus(3,3,2)", model(3, S::constant(3), S::constant(2), 3)},
      {"frus(4,2,3)", model(4, S::constant(2), S::constant(3), 3)},
      {"frus(2,t+1,1)", model(2, S::affine(1, 1), S::constant(1), 4)},
      {"frus(1,t,t+1)", model(1, S::affine(1, 0), S::affine(1, 1), 3)},
      {"frus(1,table,table) a", model(1, S::table({1, 2, 2, 3}), S::table({1, 2, 2, 2}), 4)},
      {"frus(1,table,table) b", model(1, S::table({1, 1, 2, 2}), S::table({1, 2, 2, 3}), 4)},
  };
  return suite;
}

Report run_default_suite(const Options& options) {
  Report report;
  for (std::size_t n = 2; n <= 5; ++n) report.append(validate_complete_graph(n, options));
  for (const auto& [name, p] : default_suite()) report.append(validate_model(name, p, options));
  const auto& cal = oracles::wiener_calibration();
  report.wiener_recommended = cal.recommended;
  report.wiener_matching = cal.matching;
  return report;
}

void write_text(std::ostream& out, const Report& report) {
  out << "run\tquantity\tt\texpected\tmeasured\tverdict\n";
  for (const auto& r : report.rows) {
    out << r.run << '\t' << r.quantity << '\t' << r.t << '\t' << r.expected << '\t' << r.measured << '\t'
        << to_string(r.verdict) << (r.mandatory ? "" : " (informational)") << '\n';
  }
  out << "# wiener arbitration: recommended=" << report.wiener_recommended << " matching=";
  for (std::size_t i = 0; i < report.wiener_matching.size(); ++i) {
    out << (i ? "," : "") << report.wiener_matching[i];
  }
  out << '\n';
  const auto failures = report.failures();
  out << "# result: " << (failures.empty() ? "PASS" : "FAIL") << " (" << report.rows.size() << " rows, "
      << failures.size() << " mandatory mismatches)\n";
}

void write_json(std::ostream& out, const Report& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    checks.push_back({{"run", r.run},
                      {"quantity", r.quantity},
                      {"t", r.t},
                      {"expected", r.expected},
                      {"measured", r.measured},
                      {"verdict", to_string(r.verdict)},
                      {"mandatory", r.mandatory}});
  }
  nlohmann::ordered_json doc = {{"wiener_recommended", report.wiener_recommended},
                                {"wiener_matching", report.wiener_matching},
                                {"passed", report.passed()},
                                {"checks", std::move(checks)}};
  out << doc.dump(2) << '\n';
}

}  // namespace frustum::validation
