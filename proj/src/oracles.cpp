#include "frustum/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "frustum/cliques.hpp"
#include "frustum/errors.hpp"
#include "frustum/generator.hpp"
#include "frustum/metrics.hpp"

namespace frustum::oracles {
namespace {

void require_t(std::int64_t t) {
  if (t < 0) throw InputError("step t must be >= 0");
}

BigInt one_plus(const SequenceSpec& g, std::int64_t i) { return BigInt(1) + g(i); }

// prod_{j=lo}^{hi} (1 + g_j); empty product is 1.
BigInt product(const SequenceSpec& g, std::int64_t lo, std::int64_t hi) {
  BigInt p = 1;
  for (std::int64_t j = lo; j <= hi; ++j) p *= one_plus(g, j);
  return p;
}

}  // namespace

BigInt cone_order_closed(const SequenceSpec& g, std::int64_t t) {
  require_t(t);
  return product(g, 1, t);
}

BigInt cone_edges_closed(const SequenceSpec& g, std::int64_t t) {
  require_t(t);
  BigInt e = 0;
  BigInt n = 1;
  for (std::int64_t i = 1; i <= t; ++i) {
    e += n * binomial(g(i) + 1, 2);
    n *= one_plus(g, i);
  }
  return e;
}

BigInt cone_edges_printed_sum(const SequenceSpec& g, std::int64_t t) {
  require_t(t);
  BigInt e = 0;
  for (std::int64_t i = 1; i <= t - 1; ++i) e += binomial(g(i + 1) + 1, 2) * product(g, 1, i);
  return e;
}

BigInt wiener_theorem_statement(const SequenceSpec& g, std::int64_t t) {
  require_t(t);
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= t - 1; ++i) {
    sum += BigInt(g(t - i)) * product(g, 1, t - i - 1) * product(g, t - i + 1, t);
  }
  return product(g, 1, t) * sum;
}

BigInt wiener_proof_final(const SequenceSpec& g, std::int64_t t) {
  require_t(t);
  if (t == 0) return 0;
  return wiener_theorem_statement(g, t) + BigInt(g(t)) * product(g, 1, t) / 2;
}

BigInt wiener_recurrence(const SequenceSpec& g, std::int64_t t) {
  require_t(t);
  BigInt w = 0;
  BigInt n = 1;
  for (std::int64_t i = 1; i <= t; ++i) {
    const BigInt gi = g(i);
    const BigInt cap_pairs = gi * (gi + 1);
    w = (gi + 1) * (gi + 1) * w + cap_pairs * n * (n - 1) + cap_pairs * n / 2;
    n *= gi + 1;
  }
  return w;
}

std::vector<std::pair<std::string, ModelParams>> wiener_calibration_runs() {
  auto cone = [](SequenceSpec g, std::int64_t T) {
    ModelParams p;
    p.n = 1;
    p.f = SequenceSpec::constant(1);
    p.g = std::move(g);
    p.horizon = T;
    return p;
  };
  return {
      {"cone g=(1,1)", cone(SequenceSpec::table({1, 1}), 2)},
      {"cone g_1=2", cone(SequenceSpec::table({2}), 1)},
      {"cone g=2", cone(SequenceSpec::constant(2), 3)},
      {"cone g_t=t", cone(SequenceSpec::affine(1, 0), 3)},
  };
}

const WienerCalibration& wiener_calibration() {
  static const WienerCalibration calibration = [] {
    WienerCalibration c;
    const std::vector<std::string> labels = {kWienerTheorem, kWienerProofFinal, kWienerRecurrence};
    std::vector<bool> all_match(labels.size(), true);
    for (const auto& [name, p] : wiener_calibration_runs()) {
      const FrustumGraph full = generate(p);
      for (std::int64_t t = 0; t <= p.horizon; ++t) {
        WienerCalibration::Sample s;
        s.run = name;
        s.t = t;
        s.brute_force = wiener_index(snapshot_at(full, t));
        s.candidates = {{kWienerTheorem, wiener_theorem_statement(p.g, t)},
                        {kWienerProofFinal, wiener_proof_final(p.g, t)},
                        {kWienerRecurrence, wiener_recurrence(p.g, t)}};
        for (std::size_t i = 0; i < labels.size(); ++i) {
          if (s.candidates[i].value != s.brute_force) all_match[i] = false;
        }
        c.samples.push_back(std::move(s));
      }
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (all_match[i]) c.matching.push_back(labels[i]);
    }
    if (c.matching.empty()) {
      throw std::runtime_error("Wiener calibration: no closed-form candidate matches brute force");
    }
    c.recommended = c.matching.front();
    return c;
  }();
  return calibration;
}

WienerClosedForms cone_wiener_closed(const SequenceSpec& g, std::int64_t t) {
  WienerClosedForms out;
  out.candidates = {{kWienerTheorem, wiener_theorem_statement(g, t)},
                    {kWienerProofFinal, wiener_proof_final(g, t)},
                    {kWienerRecurrence, wiener_recurrence(g, t)}};
  out.recommended = wiener_calibration().recommended;
  for (const auto& c : out.candidates) {
    if (c.label == out.recommended) out.recommended_value = c.value;
  }
  return out;
}

std::int64_t cone_diameter_closed(std::int64_t t) {
  if (t < 1) throw InputError("cone diameter closed form needs t >= 1");
  return 2 * t - 1;
}

BigInt cone_degree_closed(const SequenceSpec& g, std::int64_t j, std::int64_t t) {
  if (j < 1 || j > t) {
    throw InputError("cone degree closed form needs 1 <= j <= t (got j=" + std::to_string(j) +
                     ", t=" + std::to_string(t) + ")");
  }
  BigInt sum = 0;
  for (std::int64_t i = j; i <= t; ++i) sum += g(i);
  return sum;
}

Rational cone_clustering_bound(const SequenceSpec& g, std::int64_t t) {
  if (t < 1) throw InputError("cone clustering bound needs t >= 1");
  const BigInt gt = g(t);
  return Rational(gt, 2 * (1 + gt));
}

CylinderClosedForms cylinder_constant_closed(std::int64_t n, std::int64_t t) {
  if (n < 1) throw InputError("cylinder closed forms need n >= 1");
  require_t(t);
  const BigInt b = binomial(2 * n, n);
  const BigInt bt = boost::multiprecision::pow(b, static_cast<unsigned>(t));
  const BigInt geometric = (bt - 1) / (b - 1);  // b >= 2
  CylinderClosedForms out;
  out.cliques = bt;
  out.order = BigInt(n) + BigInt(n) * geometric;
  out.edges = binomial(n, 2) + (BigInt(3) * n * n - n) / 2 * geometric;
  out.limit_ratio = Rational(BigInt(3 * n - 1), BigInt(2));
  return out;
}

Rational edge_increment_ratio(std::int64_t f_t, std::int64_t g_t) {
  return Rational(BigInt(g_t), BigInt(2)) + BigInt(f_t) - Rational(BigInt(1), BigInt(2));
}

BigInt clique_gain_per_parent(std::int64_t f, std::int64_t g, std::int64_t k) {
  return binomial(g + f - 1, k - 1) - binomial(f - 1, k - 1);
}

DensificationDiagnostic densification_diagnostic(const FrustumGraph& g, const ModelParams& p) {
  if (g.horizon() < p.horizon) throw InputError("graph does not reach the model horizon");
  DensificationDiagnostic d;
  const auto points = trajectory(g);
  for (std::int64_t t = 1; t <= p.horizon; ++t) {
    DiagnosticStep s;
    s.t = t;
    s.f_t = p.f(t);
    s.g_t = p.g(t);
    s.order_prev = points[static_cast<std::size_t>(t - 1)].order;
    s.order = points[static_cast<std::size_t>(t)].order;

    const FrustumGraph prev = snapshot_at(g, t - 1);
    const auto counts = clique_counts_per_vertex(prev, static_cast<std::size_t>(s.f_t));
    s.clique_min = counts.empty() ? 0 : *std::min_element(counts.begin(), counts.end());
    s.growth_factor = Rational(BigInt(s.clique_min) * s.g_t, BigInt(s.f_t));
    s.growth_inequality = BigInt(s.order - s.order_prev) * s.f_t >=
                          BigInt(s.order_prev) * s.clique_min * s.g_t;
    d.growth_inequality_all = d.growth_inequality_all && s.growth_inequality;

    if (t >= 2) {
      const std::int64_t f_prev = p.f(t - 1);
      const std::int64_t g_prev = p.g(t - 1);
      const BigInt bound = binomial(g_prev + f_prev - 1, s.f_t - 1) - binomial(f_prev - 1, s.f_t - 1);
      s.clique_lower_bound = bound;
      s.clique_bound_violations = static_cast<std::uint64_t>(
          std::count_if(counts.begin(), counts.end(), [&](std::uint64_t c) { return BigInt(c) < bound; }));
      d.clique_bound_all = d.clique_bound_all && s.clique_bound_violations == 0;
      const std::int64_t prev_sum = f_prev + g_prev;
      s.corollary_exception = prev_sum == s.f_t - 1 || prev_sum == s.f_t - 2;
      if (s.corollary_exception) d.corollary_exceptions.push_back(t);
    }
    d.steps.push_back(std::move(s));
  }

  for (const auto& s : d.steps) {
    if (p.horizon >= 2 && s.t < 2) continue;
    if (!d.min_growth_factor || s.growth_factor < *d.min_growth_factor) d.min_growth_factor = s.growth_factor;
  }

  if (p.horizon >= 2) {
    bool nondecreasing = true;
    for (std::int64_t t = 2; t <= p.horizon; ++t) {
      if (p.f(t) + p.g(t) < p.f(t - 1) + p.g(t - 1)) nondecreasing = false;
    }
    d.sum_growing = nondecreasing && p.f(p.horizon) + p.g(p.horizon) > p.f(1) + p.g(1);
  }
  d.theorem2_hypothesis = d.sum_growing && d.min_growth_factor && *d.min_growth_factor > 1;

  bool big_enough = false;
  for (const auto& s : d.steps) big_enough = big_enough || (s.f_t >= 3 && s.g_t >= 2);
  const bool tail_clean = d.corollary_exceptions.empty() || d.corollary_exceptions.back() != p.horizon;
  d.corollary1_hypothesis = d.sum_growing && big_enough && tail_clean;
  return d;
}

CliqueRecurrenceCheck clique_recurrence_check(const FrustumGraph& g, const ModelParams& p,
                                              std::int64_t t) {
  if (t < 2 || t > p.horizon || t > g.horizon()) {
    throw InputError("clique recurrence check needs 2 <= t <= horizon");
  }
  const auto k = static_cast<std::size_t>(p.f(t));
  const std::int64_t f_prev = p.f(t - 1);
  const std::int64_t g_prev = p.g(t - 1);
  const FrustumGraph older = snapshot_at(g, t - 2);
  const FrustumGraph newer = snapshot_at(g, t - 1);
  const std::size_t n_old = older.order();
  const auto before = clique_counts_per_vertex(older, k);
  const auto parents = clique_counts_per_vertex(older, static_cast<std::size_t>(f_prev));
  const auto after = clique_counts_per_vertex(newer, k, n_old);
  const BigInt gain = clique_gain_per_parent(f_prev, g_prev, static_cast<std::int64_t>(k));

  CliqueRecurrenceCheck out;
  out.t = t;
  out.vertices_checked = n_old;
  for (std::size_t u = 0; u < n_old; ++u) {
    if (BigInt(after[u]) != BigInt(before[u]) + gain * parents[u]) ++out.mismatches;
  }
  return out;
}

}  // namespace frustum::oracles
