#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frustum/exact.hpp"
#include "frustum/graph.hpp"
#include "frustum/params.hpp"
#include "frustum/sequence.hpp"

namespace frustum::oracles {

// --- Cone model frus(1, 1, g) ---------------------------------------------

/// n_t = prod_{i=1}^{t} (1 + g_i); 1 at t = 0.
BigInt cone_order_closed(const SequenceSpec& g, std::int64_t t);

/// e_t via e_t = e_{t-1} + n_{t-1} * binom(g_t + 1, 2), e_0 = 0.
BigInt cone_edges_closed(const SequenceSpec& g, std::int64_t t);

/// The printed sum_{i=1}^{t-1} binom(g_{i+1}+1, 2) prod_{j<=i}(1+g_j). It drops
/// the first step's edges; kept only so reports can show the discrepancy.
BigInt cone_edges_printed_sum(const SequenceSpec& g, std::int64_t t);

inline constexpr const char* kWienerTheorem = "theorem-statement";
inline constexpr const char* kWienerProofFinal = "proof-final";
inline constexpr const char* kWienerRecurrence = "pair-recurrence";

/// prod(1+g_i) * sum_{i=0}^{t-1} g_{t-i} prod_{j=1}^{t-i-1}(1+g_j) prod_{j=t-i+1}^{t}(1+g_j)
BigInt wiener_theorem_statement(const SequenceSpec& g, std::int64_t t);
/// The above plus g_t * prod(1+g_i) / 2.
BigInt wiener_proof_final(const SequenceSpec& g, std::int64_t t);
/// W_t = (1+g_t)^2 W_{t-1} + g_t(1+g_t) n_{t-1}(n_{t-1}-1) + g_t(1+g_t) n_{t-1} / 2, W_0 = 0.
///
/// Distinct old x, y contribute (1+g)^2 d(x,y) + 2g(1+g) over the four pair
/// classes; each old x adds binom(g+1, 2) pairs at distance 1 inside its cap.
BigInt wiener_recurrence(const SequenceSpec& g, std::int64_t t);

struct WienerCandidate {
  std::string label;
  BigInt value;
};

struct WienerClosedForms {
  std::vector<WienerCandidate> candidates;  // theorem, proof-final, recurrence
  std::string recommended;                  // label chosen by calibration
  BigInt recommended_value;
};

/// Outcome of comparing every candidate with brute-force BFS on the
/// calibration runs.
struct WienerCalibration {
  struct Sample {
    std::string run;
    std::int64_t t = 0;
    BigInt brute_force;
    std::vector<WienerCandidate> candidates;
  };
  std::vector<Sample> samples;
  std::vector<std::string> matching;  // candidates that agree on every sample
  std::string recommended;
};

/// Cone runs used for calibration: g=(1,1) T=2, g_1=2 T=1, g=2 T=3, g_t=t T=3.
std::vector<std::pair<std::string, ModelParams>> wiener_calibration_runs();

/// Runs the calibration once per process. Throws std::runtime_error if no
/// candidate matches brute force on every sample.
const WienerCalibration& wiener_calibration();

WienerClosedForms cone_wiener_closed(const SequenceSpec& g, std::int64_t t);

/// 2t - 1; InputError for t < 1.
std::int64_t cone_diameter_closed(std::int64_t t);

/// sum_{i=j}^{t} g_i; InputError unless 1 <= j <= t.
BigInt cone_degree_closed(const SequenceSpec& g, std::int64_t j, std::int64_t t);

/// g_t / (2 (1 + g_t)); InputError for t < 1.
Rational cone_clustering_bound(const SequenceSpec& g, std::int64_t t);

// --- Cylinder with f = g = n constant, seed K_n -----------------------------

struct CylinderClosedForms {
  BigInt cliques;  // C_t, number of n-cliques
  BigInt order;    // n_t
  BigInt edges;    // e_t
  Rational limit_ratio;  // (3n - 1) / 2
};

CylinderClosedForms cylinder_constant_closed(std::int64_t n, std::int64_t t);

// --- General frustum model --------------------------------------------------

/// g_t / 2 + f_t - 1/2.
Rational edge_increment_ratio(std::int64_t f_t, std::int64_t g_t);

/// binom(g+f-1, k-1) - binom(f-1, k-1): k-cliques through u gained per
/// f-clique containing u when that clique is extended by g vertices.
BigInt clique_gain_per_parent(std::int64_t f, std::int64_t g, std::int64_t k);

struct DiagnosticStep {
  std::int64_t t = 0;
  std::int64_t f_t = 0;
  std::int64_t g_t = 0;
  std::uint64_t order_prev = 0;  // n_{t-1}
  std::uint64_t order = 0;       // n_t
  std::uint64_t clique_min = 0;  // min_{u in V(G_{t-1})} C^{f_t}_{t-1}(u)
  Rational growth_factor;        // clique_min * g_t / f_t
  bool growth_inequality = false;  // (n_t - n_{t-1}) f_t >= n_{t-1} clique_min g_t
  std::optional<BigInt> clique_lower_bound;  // t >= 2 only
  std::uint64_t clique_bound_violations = 0;
  bool corollary_exception = false;  // g_{t-1}+f_{t-1} in {f_t-1, f_t-2}
};

/// Finite-horizon evidence for the densification hypotheses. Nothing here
/// proves an asymptotic statement.
struct DensificationDiagnostic {
  std::vector<DiagnosticStep> steps;
  std::optional<Rational> min_growth_factor;  // over t >= 2, or t = 1 when T = 1
  bool growth_inequality_all = true;
  bool clique_bound_all = true;
  bool sum_growing = false;  // f_t + g_t non-decreasing and f_T + g_T > f_1 + g_1
  bool theorem2_hypothesis = false;
  bool corollary1_hypothesis = false;
  std::vector<std::int64_t> corollary_exceptions;
};

/// `g` must be generate(p) (or any graph carrying its snapshots up to p.horizon).
DensificationDiagnostic densification_diagnostic(const FrustumGraph& g, const ModelParams& p);

/// Exact check, for every u in V(G_{t-2}) with k = f_t, of
///   C^k_{t-1}(u) = C^k_{t-2}(u) + clique_gain_per_parent(f_{t-1}, g_{t-1}, k) C^{f_{t-1}}_{t-2}(u).
struct CliqueRecurrenceCheck {
  std::int64_t t = 0;
  std::size_t vertices_checked = 0;
  std::size_t mismatches = 0;
};

/// Needs 2 <= t <= p.horizon.
CliqueRecurrenceCheck clique_recurrence_check(const FrustumGraph& g, const ModelParams& p,
                                              std::int64_t t);

}  // namespace frustum::oracles
