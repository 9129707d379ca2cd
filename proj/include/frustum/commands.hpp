#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace frustum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitInput = 2,
  kExitResource = 3,
};

enum class Command { kGenerate, kAnalyze, kValidate, kSweep };

struct RunConfig {
  Command command = Command::kGenerate;
  std::optional<std::filesystem::path> model;  // --model
  std::optional<std::filesystem::path> input;  // --in: a directory written by generate
  std::optional<std::filesystem::path> out;    // --out
  std::optional<std::int64_t> horizon;         // --horizon override
  std::optional<std::uint64_t> budget;         // --budget override
  bool distances = false;                      // --distances
  bool spectral = false;                       // --spectral
  int workers = 0;                             // --workers, 0 = OpenMP default
  std::optional<std::string> fault;            // hidden negative-control switch

  // sweep
  std::optional<std::filesystem::path> grid;  // lines "n f g" in compact form
  std::vector<std::string> f_specs;           // cross product with g_specs
  std::vector<std::string> g_specs;
  std::int64_t seed_order = 1;
};

/// Each command writes its report to `out`, diagnostics to `err`, and returns
/// an ExitCode. Exceptions are mapped to exit codes by run().
int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace frustum::cli
