#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxdeg/graph.hpp"
#include "maxdeg/limits.hpp"
#include "maxdeg/sampler.hpp"

namespace cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kSampler = 3,
  kSchedule = 4,
  kParse = 5,
  kOracleMismatch = 6,
};

// Raised for a bad flag combination the option parser cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested schedule cannot be run (empty lattice, budget, ...).
struct ScheduleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An oracle comparison failed.
struct OracleMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output goes to `path`, or stdout when the path is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<int> parse_int_list(const std::string& text);
std::vector<maxdeg::Graph> read_graph_file(const std::string& path);

// "# seed=<seed> version=<ver>"
void write_metadata(std::ostream& out, std::optional<std::uint64_t> seed);

// Caps and mode shared by sample / experiment commands.
struct SamplingFlags {
  std::string mode = "auto";  // auto | exact | truncated
  std::optional<std::int64_t> cap_low, floor_high, cap_high;
  std::int64_t max_restarts = 1'000'000;

  // Throws UsageError on unknown modes.
  maxdeg::SamplerSpec spec(int n, int R, std::uint64_t seed) const;
};

// Builds a sampler, mapping infeasible specifications to ScheduleError.
maxdeg::GraphSampler make_sampler(const maxdeg::SamplerSpec& spec);

struct ExperimentConfig {
  std::string name;
  int R = 3;
  std::vector<int> n_schedule;
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  SamplingFlags sampling;
  std::string output;
  unsigned workers = 1;
  // experiment specific
  std::string sentence;
  int threshold = 10;
  int max_cycle = 6;
  int max_path = 3;
};

// Writes the experiment CSV; throws ScheduleError / UsageError.
void run_experiment(const ExperimentConfig& config, std::ostream& out);

// Monte Carlo limit of a sentence over the schedule, seed + i for the i-th n.
maxdeg::LimitEstimate run_limit(const std::string& sentence, int R,
                                const std::vector<int>& schedule, std::int64_t samples,
                                std::uint64_t seed, unsigned workers, const SamplingFlags& flags);

// "n,samples,satisfied,frequency,ci_low,ci_high" plus point and trend rows.
void write_limit_csv(std::ostream& out, const maxdeg::LimitEstimate& estimate);

}  // namespace cli
