#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frustum/graph.hpp"
#include "frustum/params.hpp"

namespace frustum {

struct StepOutcome {
  std::int64_t t = 0;
  std::uint64_t cliques_extended = 0;  // C^{f_t}_{t-1}
  std::uint64_t order = 0;             // n_t
  std::uint64_t edges = 0;             // e_t
};

struct Generation {
  FrustumGraph graph;
  std::vector<StepOutcome> steps;     // one per t in [1, T]
  std::vector<std::string> warnings;  // e.g. steps that extended no clique
};

/// Applies step t to the snapshot G_{t-1}: every f_t-clique, in lexicographic
/// order, receives a cap of g_t fresh vertices with sequential ids.
///
/// Throws ResourceError when the projected order exceeds `vertex_budget` or a
/// projected count overflows. A step with no f_t-clique is allowed; it adds a
/// warning and leaves the graph unchanged apart from the horizon.
FrustumGraph extend_step(const FrustumGraph& g, std::int64_t t, std::int64_t f_t, std::int64_t g_t,
                         std::uint64_t vertex_budget = ModelParams::kDefaultVertexBudget,
                         std::vector<std::string>* warnings = nullptr);

/// Runs frus(n, f, g) from K_n for T steps. Requires validate_params(p) to be empty
/// (throws InputError otherwise). Deterministic.
Generation generate_run(const ModelParams& p);

/// Final snapshot only.
inline FrustumGraph generate(const ModelParams& p) { return generate_run(p).graph; }

}  // namespace frustum
