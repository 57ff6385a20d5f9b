#include "maxdeg/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "maxdeg/errors.hpp"

namespace maxdeg {

TruncationCaps TruncationCaps::defaults(int n, int R) {
  TruncationCaps caps;
  caps.cap_low = std::max<std::int64_t>(30, static_cast<std::int64_t>(
                                                std::ceil(2.0 * std::pow(n, 0.25))));
  caps.floor_high = 0;
  caps.cap_high = static_cast<std::int64_t>(std::ceil(4.0 * std::sqrt(double(R) * n)));
  return caps;
}

namespace {

double lattice_size(int n, int R) {
  // binom(n + R, R) in floating point; only compared with a budget.
  double out = 1.0;
  for (int i = 1; i <= R; ++i) out = out * (n + i) / i;
  return out;
}

}  // namespace

void SamplerSpec::validate() const {
  if (n < 1) throw ContractViolation("sampler: n must be positive");
  if (R < 1) throw ContractViolation("sampler: R must be positive");
  if (max_restarts < 0) throw ContractViolation("sampler: max_restarts must be non-negative");
  if (mode == SamplerMode::exact) {
    if (lattice_size(n, R) > exact_class_budget)
      throw BudgetExceeded("exact degree-class lattice binom(n+R, R) exceeds the class budget");
    return;
  }
  if (R < 2) throw ContractViolation("truncated mode needs R >= 2");
  const TruncationCaps c = effective_caps();
  if (c.cap_low < 0 || c.floor_high < 0 || c.cap_high < c.floor_high)
    throw ContractViolation("truncation caps must satisfy 0 <= floor_high <= cap_high, cap_low >= 0");
}

TruncationCaps SamplerSpec::effective_caps() const {
  return caps ? *caps : TruncationCaps::defaults(n, R);
}

std::vector<WeightedClass> enumerate_degree_classes(const SamplerSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int R = spec.R;
  std::vector<WeightedClass> out;
  auto emit = [&](std::vector<std::int64_t> counts) {
    DegreeClass d(std::move(counts));
    if (!d.even()) return;
    const double lw = degree_class_log_weight(d);
    out.push_back({std::move(d), lw});
  };

  if (spec.mode == SamplerMode::exact) {
    // Compositions of n into R + 1 parts, d_0 varying slowest.
    std::vector<std::int64_t> counts(R + 1, 0);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
      if (i == R) {
        counts[R] = left;
        emit(counts);
        return;
      }
      for (std::int64_t c = left; c >= 0; --c) {
        counts[i] = c;
        rec(i + 1, left - c);
      }
    };
    rec(0, n);
    return out;
  }

  const TruncationCaps caps = spec.effective_caps();
  for (std::int64_t a = 0; a <= std::min<std::int64_t>(caps.cap_low, n); ++a) {
    for (std::int64_t b = caps.floor_high; b <= std::min<std::int64_t>(caps.cap_high, n - a); ++b) {
      std::vector<std::int64_t> counts(R + 1, 0);
      counts[R - 2] += a;
      counts[R - 1] += b;
      counts[R] += n - a - b;
      emit(std::move(counts));
    }
  }
  return out;
}

void write_trace_csv(std::ostream& out, const SampleTrace& trace, bool header) {
  if (header) out << "class,restarts,accepted\n";
  for (std::size_t i = 0; i < trace.attempt_classes.size(); ++i)
    out << trace.attempt_classes[i].to_string() << ',' << i << ','
        << (trace.accepted[i] ? 1 : 0) << '\n';
}

Configuration sample_configuration(std::vector<int> cell_sizes, Rng& rng) {
  std::int64_t total = 0;
  for (int s : cell_sizes) {
    if (s < 0) throw ContractViolation("sample_configuration: negative cell size");
    total += s;
  }
  if (total % 2 != 0) throw ContractViolation("sample_configuration: odd number of points");
  // A uniform permutation paired off consecutively hits every matching
  // m! 2^m times.
  std::vector<int> order(static_cast<std::size_t>(total));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> partner(order.size());
  for (std::size_t i = 0; i < order.size(); i += 2) {
    partner[order[i]] = order[i + 1];
    partner[order[i + 1]] = order[i];
  }
  return Configuration(std::move(cell_sizes), std::move(partner));
}

std::vector<int> assign_degrees(const DegreeClass& d, Rng& rng) {
  std::vector<int> degrees;
  degrees.reserve(static_cast<std::size_t>(d.order()));
  for (int i = 0; i <= d.max_degree(); ++i) degrees.insert(degrees.end(), d[i], i);
  std::shuffle(degrees.begin(), degrees.end(), rng);
  return degrees;
}

GraphSampler::GraphSampler(SamplerSpec spec)
    : GraphSampler(spec, enumerate_degree_classes(spec)) {}

GraphSampler::GraphSampler(SamplerSpec spec, std::vector<WeightedClass> classes)
    : spec_(spec), classes_(std::move(classes)) {
  if (classes_.empty()) throw ContractViolation("sampler: no admissible degree class");
  for (const WeightedClass& c : classes_) {
    if (c.degrees.max_degree() != spec_.R || c.degrees.order() != spec_.n || !c.degrees.even())
      throw ContractViolation("sampler: class table entry does not fit (n, R)");
  }
  double top = -INFINITY;
  for (const WeightedClass& c : classes_) top = std::max(top, c.log_weight);
  // Compensated running sum of exp(log_weight - top).
  cumulative_.resize(classes_.size());
  double sum = 0.0, carry = 0.0;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const double y = std::exp(classes_[i].log_weight - top) - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    cumulative_[i] = sum;
  }
}

std::vector<double> GraphSampler::class_probabilities() const {
  std::vector<double> out(cumulative_.size());
  const double total = cumulative_.back();
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (cumulative_[i] - (i ? cumulative_[i - 1] : 0.0)) / total;
  return out;
}

std::size_t GraphSampler::sample_class_index(Rng& rng) const {
  std::uniform_real_distribution<double> unit(0.0, cumulative_.back());
  const double u = unit(rng);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                               cumulative_.size() - 1);
}

Multigraph GraphSampler::draw_image(std::size_t class_index, Rng& rng) const {
  std::vector<int> degrees = assign_degrees(classes_[class_index].degrees, rng);
  return graph_image(sample_configuration(std::move(degrees), rng));
}

Multigraph GraphSampler::sample_multigraph(Rng& rng, std::size_t* class_index) const {
  const std::size_t idx = sample_class_index(rng);
  if (class_index) *class_index = idx;
  return draw_image(idx, rng);
}

Graph GraphSampler::sample_graph(Rng& rng, SampleTrace* trace) const {
  if (trace) {
    *trace = SampleTrace{};
    if (spec_.mode == SamplerMode::truncated) trace->caps = spec_.effective_caps();
  }
  std::size_t idx = sample_class_index(rng);
  for (std::int64_t attempt = 0; attempt <= spec_.max_restarts; ++attempt) {
    if (attempt > 0 && spec_.restart == RestartPolicy::full_pipeline) idx = sample_class_index(rng);
    Multigraph image = draw_image(idx, rng);
    const bool ok = image.is_simple();
    if (trace) {
      trace->attempt_classes.push_back(classes_[idx].degrees);
      trace->accepted.push_back(ok);
      trace->restarts = attempt;
    }
    if (ok) {
      if (trace) trace->chosen = classes_[idx].degrees;
      return to_graph(image, spec_.R);
    }
  }
  throw RestartBudgetExhausted("no simple image within " + std::to_string(spec_.max_restarts) +
                               " restarts");
}

std::pair<Graph, SampleTrace> sample_uniform_graph(const SamplerSpec& spec, Rng& rng) {
  GraphSampler sampler(spec);
  SampleTrace trace;
  Graph g = sampler.sample_graph(rng, &trace);
  return {std::move(g), std::move(trace)};
}

Multigraph sample_uniform_multigraph(const SamplerSpec& spec, Rng& rng) {
  return GraphSampler(spec).sample_multigraph(rng);
}

Graph sample_graph_given_degrees(std::span<const int> degrees, Rng& rng,
                                 std::int64_t max_restarts, int max_degree) {
  int top = 0;
  std::int64_t total = 0;
  for (int d : degrees) {
    if (d < 0) throw ContractViolation("sample_graph_given_degrees: negative degree");
    top = std::max(top, d);
    total += d;
  }
  if (total % 2 != 0) throw ContractViolation("sample_graph_given_degrees: odd degree sum");
  if (max_degree < 0) max_degree = top;
  if (top > max_degree) throw ContractViolation("sample_graph_given_degrees: degree above bound");
  const std::vector<int> cells(degrees.begin(), degrees.end());
  for (std::int64_t attempt = 0; attempt <= max_restarts; ++attempt) {
    Multigraph image = graph_image(sample_configuration(cells, rng));
    if (image.is_simple()) return to_graph(image, max_degree);
  }
  throw RestartBudgetExhausted("no simple realisation within " + std::to_string(max_restarts) +
                               " restarts");
}

void for_each_draw(std::size_t count, std::uint64_t seed, unsigned workers,
                   const std::function<void(std::size_t, Rng&)>& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng = draw_stream(seed, i);
      body(i, rng);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        Rng rng = draw_stream(seed, i);
        body(i, rng);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  for (unsigned t = 0; t < used; ++t) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<Graph> batch_sample(const SamplerSpec& spec, std::size_t count, unsigned workers,
                                std::vector<SampleTrace>* traces) {
  if (count < 1) throw ContractViolation("batch_sample: count must be at least 1");
  const GraphSampler sampler(spec);
  std::vector<Graph> out(count);
  if (traces) traces->assign(count, SampleTrace{});
  for_each_draw(count, spec.seed, workers, [&](std::size_t i, Rng& rng) {
    out[i] = sampler.sample_graph(rng, traces ? &(*traces)[i] : nullptr);
  });
  return out;
}

}  // namespace maxdeg
