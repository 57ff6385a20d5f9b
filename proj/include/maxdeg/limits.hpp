#pragma once

// Limiting probabilities of graph properties as n grows: Monte Carlo for
// arbitrary sentences, exact sums of truncated-Poisson masses for
// properties of the structure profile.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "maxdeg/census.hpp"
#include "maxdeg/logic.hpp"
#include "maxdeg/sampler.hpp"
#include "maxdeg/stats.hpp"

namespace maxdeg {

struct LimitPoint {
  int n = 0;
  std::int64_t samples = 0;
  std::int64_t satisfied = 0;
  double frequency = 0.0;
  Interval ci;
};

struct LimitEstimate {
  std::vector<LimitPoint> per_n;  // in schedule order
  double point = 0.0;             // frequency at the largest n
  Interval ci;                    // its Wilson interval
  std::int64_t total_samples = 0;
  // Trend diagnostics over the schedule sorted by n.
  bool nondecreasing = true;
  bool nonincreasing = true;
  double last_step = 0.0;         // change between the two largest n
  bool last_two_overlap = true;   // their intervals intersect
};

struct LimitOptions {
  std::uint64_t seed = 0;
  unsigned workers = 1;
  // Exact sampling when the class lattice fits the sampler's budget,
  // otherwise truncated; set to force one mode.
  std::optional<SamplerMode> mode;
  std::optional<TruncationCaps> caps;
  double z = 1.959963984540054;
  EvalOptions eval;
};

// Draws for the i-th scheduled n use master seed seed + i.
LimitEstimate limit_mc(const Formula& sentence, int R, std::span<const int> n_schedule,
                       std::int64_t samples_per_n, const LimitOptions& options = {});

// Same estimate for an arbitrary graph predicate.
LimitEstimate limit_mc(const std::function<bool(const Graph&)>& property, int R,
                       std::span<const int> n_schedule, std::int64_t samples_per_n,
                       const LimitOptions& options = {});

// One coordinate of the profile: q, a cycle count r_p or a path count s_p.
struct ProfileCoordinate {
  enum class Kind { low_degree, cycle, path } kind = Kind::low_degree;
  int p = 0;
};

// Limit probability of { profile : pred(profile) }. The predicate may only
// read the listed coordinates; every other coordinate is summed out (each
// contributes a factor 1). Throws BudgetExceeded when (k+1)^|coords|
// exceeds `budget`.
double limit_profile_property(std::span<const ProfileCoordinate> coords,
                              const std::function<bool(const StructureProfile&)>& pred, int k,
                              int R, std::uint64_t budget = 10'000'000);

// Mean of the Poisson variable behind a coordinate.
double coordinate_mean(const ProfileCoordinate& c, int R);

}  // namespace maxdeg
