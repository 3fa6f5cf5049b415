#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "onefact/coloring.hpp"

namespace onefact {

/// Bad flags or parameter values (exit code 1).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unreadable input or unwritable output (exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerification = 2, kExitIo = 3 };

enum class Format { Text, Csv, Json };

struct ExperimentConfig {
  std::string command;     // generate | experiment | verify | classes
  std::string algorithm;   // empty: command default
  std::string experiment;
  std::string input;       // verify
  int n = 8;
  std::optional<std::uint64_t> seed;
  std::int64_t runs = 0;     // 0: command default
  std::int64_t samples = 10'000;
  std::int64_t max_steps = 0;  // 0: algorithm default
  std::optional<double> epsilon;
  double p = 0.1;
  bool force_change = false;
  int d = 5;
  std::vector<int> n_list;
  double ds_step1 = 0.9;
  std::optional<Format> format;
  std::string output;   // empty: stdout
  std::string summary;  // generate: per-run CSV next to the text output
  std::string trace;    // per-step CSV of every run
};

inline constexpr const char* kAlgorithms[] = {"mild", "strict", "weak", "metropolis", "ds", "four-switch", "latin"};
inline constexpr const char* kExperiments[] = {"convergence-scaling", "of8-distribution", "spectra", "restart",
                                               "epsilon-scan"};

/// Fills command defaults and checks every parameter. Throws UsageError.
ExperimentConfig validated(ExperimentConfig config);

/// Default step cap of a generator at order n.
std::int64_t default_cap(const std::string& algorithm, int n);

/// One generator run. `lines` holds the text serialization (an OF, or a Latin
/// square for "latin"); empty when the run did not finish.
struct RunRecord {
  std::int64_t run = 0;
  std::int64_t steps = 0;
  std::int64_t final_psi = 0;
  std::string status;
  std::int64_t flips_executed = 0;
  std::int64_t escapes_case_a = 0;
  std::int64_t escapes_case_b = 0;
  std::int64_t max_psi_excess = 0;
  double wall_ms = 0.0;
  std::optional<Coloring> of;
  std::string text;
  std::string trace_csv;  // rows without header, when requested
};

/// Runs `algorithm` once with the replica stream (seed, run).
RunRecord generate_one(const std::string& algorithm, int n, std::uint64_t seed, std::int64_t run,
                       std::int64_t max_steps, double epsilon, double ds_step1, bool record_trace);

/// generate: factorizations to `out` (text) or the summary (csv) or both
/// (json); optional summary and trace streams. Returns an exit code.
int cmd_generate(const ExperimentConfig& config, std::ostream& out, std::ostream* summary, std::ostream* trace,
                 std::ostream& log);

struct ConvergenceRow {
  int n = 0;
  std::int64_t runs = 0;
  std::int64_t reached = 0;
  double median_steps = 0, p10 = 0, p90 = 0;
};
std::vector<ConvergenceRow> convergence_scaling(const std::string& algorithm, const std::vector<int>& n_list,
                                                std::int64_t runs, std::uint64_t seed, std::int64_t max_steps);

struct ClassCounts {
  std::map<char, std::int64_t> counts;  // A..F
  std::int64_t failed = 0;              // runs that did not reach an OF
};
ClassCounts of8_distribution(const std::string& algorithm, std::int64_t runs, std::uint64_t seed,
                             std::int64_t max_steps, double epsilon = 0.1);

/// Reference shares per 10^6 from the published table, by label.
struct Of8Reference {
  double uniform, strict, mild;
};
const std::map<char, Of8Reference>& of8_reference();

struct SpectraResult {
  int n = 0, d = 0;
  std::int64_t samples = 0;
  std::vector<double> lambda2;
  std::int64_t ramanujan = 0;
  double max_abs_eigenvalue = 0;   // over all samples
  double max_lambda1_error = 0;    // |lambda1 - d|
  double max_trace_error = 0;      // |sum lambda|
  double max_square_error = 0;     // |sum lambda^2 - n d|
  double bin_width = 0.02;
  std::vector<std::int64_t> histogram;  // bins [k w, (k+1) w) over [0, d]
  double mode_center() const;
};
/// d-class unions of one OF_n produced by the strict algorithm.
SpectraResult spectra(int n, int d, std::int64_t samples, std::uint64_t seed);

/// Dispatches the experiment and writes its CSV (or JSON) to `out`.
int cmd_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& log);

/// Reads a coloring and reports on it. Exit code 2 when it is not an OF or
/// does not parse.
int cmd_verify(const ExperimentConfig& config, std::istream& in, std::ostream& out, std::ostream& log);

/// Writes the OF_8 class table as JSON.
int cmd_classes(const ExperimentConfig& config, std::ostream& out, std::ostream& log);

}  // namespace onefact
