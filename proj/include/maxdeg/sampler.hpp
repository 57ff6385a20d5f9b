#pragma once

// Uniform sampling of labelled graphs with maximum degree at most R through
// the configuration model:
//   1. draw a degree class with probability proportional to its weight,
//   2. spread the degrees over the vertices uniformly,
//   3. draw a uniform perfect matching of the points,
//   4. project; a non-simple image restarts the whole pipeline at step 1.
// A simple graph in class d has prod_i (i!)^{d_i} preimage configurations,
// which cancels the same factor in the class weight, so accepted graphs are
// uniform. Restarting at step 1 matters: acceptance varies across classes.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "maxdeg/counting.hpp"
#include "maxdeg/graph.hpp"
#include "maxdeg/random.hpp"

namespace maxdeg {

enum class SamplerMode { exact, truncated };

// Where to restart after a non-simple image. Only full_pipeline is
// uniform; same_class exists to demonstrate the bias of the shortcut.
enum class RestartPolicy { full_pipeline, same_class };

// Truncated mode keeps classes with d_i = 0 for i < R-2,
// d_{R-2} <= cap_low and floor_high <= d_{R-1} <= cap_high.
struct TruncationCaps {
  std::int64_t cap_low = 0;
  std::int64_t floor_high = 0;
  std::int64_t cap_high = 0;

  // cap_low = max(30, 2 n^{1/4}), floor_high = 0, cap_high = ceil(4 sqrt(Rn))
  static TruncationCaps defaults(int n, int R);
  friend bool operator==(const TruncationCaps&, const TruncationCaps&) = default;
};

struct SamplerSpec {
  int n = 0;
  int R = 0;
  SamplerMode mode = SamplerMode::exact;
  std::optional<TruncationCaps> caps;  // truncated mode; defaults when empty
  std::uint64_t seed = 0;
  std::int64_t max_restarts = 1'000'000;
  double exact_class_budget = 1e7;     // bound on binom(n+R, R)
  RestartPolicy restart = RestartPolicy::full_pipeline;

  // Throws ContractViolation on bad n, R or caps, BudgetExceeded when exact
  // mode is asked for a lattice beyond the budget.
  void validate() const;
  TruncationCaps effective_caps() const;
};

struct WeightedClass {
  DegreeClass degrees;
  double log_weight = 0.0;  // natural log of the class weight
};

// Every even-sum class admitted by the mode, weighted in log space.
std::vector<WeightedClass> enumerate_degree_classes(const SamplerSpec& spec);

struct SampleTrace {
  std::optional<DegreeClass> chosen;        // class of the accepted draw
  std::vector<DegreeClass> attempt_classes; // one per pipeline attempt
  std::vector<bool> accepted;               // one per pipeline attempt
  std::int64_t restarts = 0;                // attempts - 1 on success
  std::optional<TruncationCaps> caps;
};

// CSV "class,restarts,accepted": one row per attempt, restarts is the
// attempt index and the class is written "d0;d1;...;dR".
void write_trace_csv(std::ostream& out, const SampleTrace& trace, bool header = true);

// Uniform perfect matching on the points of the given cells.
Configuration sample_configuration(std::vector<int> cell_sizes, Rng& rng);

// Uniform arrangement of the class's degree multiset over vertices 0..n-1.
std::vector<int> assign_degrees(const DegreeClass& d, Rng& rng);

class GraphSampler {
 public:
  explicit GraphSampler(SamplerSpec spec);
  // Explicit class table; used to study restart policies on hand-built
  // lattices. Every class must have R + 1 entries summing to n.
  GraphSampler(SamplerSpec spec, std::vector<WeightedClass> classes);

  const SamplerSpec& spec() const noexcept { return spec_; }
  std::span<const WeightedClass> classes() const noexcept { return classes_; }
  // Normalised class probabilities in table order.
  std::vector<double> class_probabilities() const;

  std::size_t sample_class_index(Rng& rng) const;
  // Steps 1-3 without rejection, degrees drawn fresh.
  Multigraph sample_multigraph(Rng& rng, std::size_t* class_index = nullptr) const;
  // Full pipeline with rejection. Throws RestartBudgetExhausted.
  Graph sample_graph(Rng& rng, SampleTrace* trace = nullptr) const;

 private:
  Multigraph draw_image(std::size_t class_index, Rng& rng) const;

  SamplerSpec spec_;
  std::vector<WeightedClass> classes_;
  std::vector<double> cumulative_;  // unnormalised running sums
};

std::pair<Graph, SampleTrace> sample_uniform_graph(const SamplerSpec& spec, Rng& rng);
Multigraph sample_uniform_multigraph(const SamplerSpec& spec, Rng& rng);

// Uniform simple graph with exactly these degrees. The acceptance chance is
// the same for every configuration here, so restarts redraw only the
// matching. max_degree < 0 uses the largest entry.
Graph sample_graph_given_degrees(std::span<const int> degrees, Rng& rng,
                                 std::int64_t max_restarts = 1'000'000, int max_degree = -1);

// Runs body(i, rng_i) for i in [0, count) on `workers` threads, rng_i being
// draw_stream(seed, i). The first exception thrown by a body is rethrown.
void for_each_draw(std::size_t count, std::uint64_t seed, unsigned workers,
                   const std::function<void(std::size_t, Rng&)>& body);

// `count` graphs in draw order; identical for any worker count.
std::vector<Graph> batch_sample(const SamplerSpec& spec, std::size_t count, unsigned workers = 1,
                                std::vector<SampleTrace>* traces = nullptr);

}  // namespace maxdeg
