#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "frustum/sequence.hpp"

namespace frustum {

/// A frustum model instance frus(n, f, g) run to a finite horizon.
struct ModelParams {
  static constexpr std::uint64_t kDefaultVertexBudget = 5'000'000;

  std::int64_t n = 1;  // order of the seed clique K_n
  SequenceSpec f = SequenceSpec::constant(1);
  SequenceSpec g = SequenceSpec::constant(1);
  std::int64_t horizon = 0;
  std::uint64_t vertex_budget = kDefaultVertexBudget;

  ModelParams with_horizon(std::int64_t t) const {
    ModelParams p = *this;
    p.horizon = t;
    return p;
  }

  /// "frus(n, f, g) T=.." for logs and report labels.
  std::string label() const;
};

struct Violation {
  std::string condition;  // stable identifier, e.g. "f-nondecreasing"
  std::int64_t t = 0;     // step the condition failed at (0 for global conditions)
  std::string message;
};

/// Every violated model condition, in a fixed order; empty means valid.
///
/// The seed conditions are checked against the first step's values (f_1 <= n,
/// n < f_1 + g_1) and the clique-availability condition f_t <= f_{t-1} + g_{t-1}
/// for 2 <= t <= T. Both sequences must be positive and non-decreasing on [1, T].
std::vector<Violation> validate_params(const ModelParams& p);

/// Throws InputError listing every violation.
void require_valid(const ModelParams& p);

/// Flat key-value model file:
///   n = 1
///   f.kind = constant
///   f.params = 1
///   g.kind = affine
///   g.params = 1 0
///   horizon = 6
///   vertex_budget = 1000000     (optional)
/// Blank lines and '#' comments are ignored. Unknown or duplicate keys are errors.
ModelParams parse_model(std::istream& in);
ModelParams load_model(const std::string& path);
void write_model(std::ostream& out, const ModelParams& p);

}  // namespace frustum
