#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polarimeter {

enum class Subcommand { Index, Compare, Sweep, Axioms, Thresholds, Experiments };
enum class OutputFormat { Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
  Subcommand subcommand = Subcommand::Index;
  std::optional<std::string> dist;
  std::optional<std::string> dist2;
  std::optional<double> alpha;
  std::optional<std::string> alienation;
  std::optional<std::string> spec;  // `alpha=<a>,<alienation>`
  std::optional<double> bound;
  std::optional<double> tolerance;
  std::optional<std::pair<double, double>> alpha_range;
  std::optional<int> grid;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::Json;
  bool strict = false;
  bool merge_duplicates = false;
  std::optional<std::uint64_t> samples;
  std::string experiment = "all";  // middle | cluster | all
  std::vector<double> md_values;
};

/// Dispatches one subcommand and writes its report to `out` (or the
/// `--out` file). Returns 0 on success, 1 when `--strict` is set and an
/// axiom check fails, 2 on error (message on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polarimeter
