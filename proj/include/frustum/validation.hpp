#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frustum/params.hpp"

namespace frustum::validation {

enum class Verdict { kMatch, kMismatch, kNotApplicable };

const char* to_string(Verdict v);

/// One closed form (or bound) against one measurement.
struct Row {
  std::string run;
  std::string quantity;
  std::int64_t t = 0;
  std::string expected;
  std::string measured;
  Verdict verdict = Verdict::kNotApplicable;
  bool mandatory = true;  // informational rows never fail the report
};

struct Report {
  std::vector<Row> rows;
  std::string wiener_recommended;
  std::vector<std::string> wiener_matching;
  std::size_t faults_applied = 0;

  /// Every mandatory row is a match (or not applicable).
  bool passed() const;
  std::vector<Row> failures() const;
  void append(const Report& other);
};

struct Options {
  /// Negative control: the expected value of this quantity is perturbed by +1.
  std::optional<std::string> fault;
  /// Largest snapshot order for all-pairs BFS checks.
  std::size_t max_distance_order = 2000;
  /// Largest snapshot order for dense eigensolves.
  std::size_t max_spectral_order = 1000;
  /// Largest order for exhaustive mixing-lemma subset checks.
  std::size_t max_subset_order = 12;
};

/// Checks for one model instance: growth identities and densification
/// diagnostics always; cone closed forms when n = 1 and f = 1; cylinder closed
/// forms when f = g = n throughout. Throws InputError for an invalid model.
Report validate_model(const std::string& run, const ModelParams& p, const Options& options = {});

/// Spectrum of K_n against {0, n/(n-1) x (n-1)}.
Report validate_complete_graph(std::size_t n, const Options& options = {});

/// The built-in calibration suite.
std::vector<std::pair<std::string, ModelParams>> default_suite();
Report run_default_suite(const Options& options = {});

/// Columnar text: run, quantity, t, expected, measured, verdict, and a trailer
/// with the Wiener arbitration outcome and the overall verdict.
void write_text(std::ostream& out, const Report& report);
/// JSON array of {run, quantity, t, expected, measured, verdict, mandatory}.
void write_json(std::ostream& out, const Report& report);

}  // namespace frustum::validation
