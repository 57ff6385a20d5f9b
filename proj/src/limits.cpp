#include "maxdeg/limits.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "maxdeg/counting.hpp"
#include "maxdeg/errors.hpp"

namespace maxdeg {

namespace {

SamplerSpec spec_for(int n, int R, std::uint64_t seed, const LimitOptions& options) {
  SamplerSpec spec;
  spec.n = n;
  spec.R = R;
  spec.seed = seed;
  spec.caps = options.caps;
  if (options.mode) {
    spec.mode = *options.mode;
  } else {
    spec.mode = SamplerMode::exact;
    try {
      spec.validate();
    } catch (const BudgetExceeded&) {
      spec.mode = SamplerMode::truncated;
    }
  }
  return spec;
}

}  // namespace

LimitEstimate limit_mc(const std::function<bool(const Graph&)>& property, int R,
                       std::span<const int> n_schedule, std::int64_t samples_per_n,
                       const LimitOptions& options) {
  if (n_schedule.empty()) throw ContractViolation("limit_mc: empty n schedule");
  if (samples_per_n < 1) throw ContractViolation("limit_mc: samples_per_n must be positive");
  LimitEstimate out;
  for (std::size_t i = 0; i < n_schedule.size(); ++i) {
    const SamplerSpec spec = spec_for(n_schedule[i], R, options.seed + i, options);
    const GraphSampler sampler(spec);
    std::atomic<std::int64_t> hits{0};
    for_each_draw(static_cast<std::size_t>(samples_per_n), spec.seed, options.workers,
                  [&](std::size_t, Rng& rng) {
                    if (property(sampler.sample_graph(rng))) hits.fetch_add(1);
                  });
    LimitPoint pt;
    pt.n = spec.n;
    pt.samples = samples_per_n;
    pt.satisfied = hits.load();
    pt.frequency = static_cast<double>(pt.satisfied) / static_cast<double>(pt.samples);
    pt.ci = wilson_interval(pt.satisfied, pt.samples, options.z);
    out.per_n.push_back(pt);
    out.total_samples += samples_per_n;
  }

  std::vector<LimitPoint> sorted = out.per_n;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const LimitPoint& a, const LimitPoint& b) { return a.n < b.n; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].frequency < sorted[i - 1].frequency) out.nondecreasing = false;
    if (sorted[i].frequency > sorted[i - 1].frequency) out.nonincreasing = false;
  }
  const LimitPoint& last = sorted.back();
  out.point = last.frequency;
  out.ci = last.ci;
  if (sorted.size() >= 2) {
    const LimitPoint& prev = sorted[sorted.size() - 2];
    out.last_step = last.frequency - prev.frequency;
    out.last_two_overlap = last.ci.low <= prev.ci.high && prev.ci.low <= last.ci.high;
  }
  return out;
}

LimitEstimate limit_mc(const Formula& sentence, int R, std::span<const int> n_schedule,
                       std::int64_t samples_per_n, const LimitOptions& options) {
  if (!free_variables(sentence).empty())
    throw ContractViolation("limit_mc: formula has free variables");
  return limit_mc([&](const Graph& g) { return eval(g, sentence, options.eval); }, R, n_schedule,
                  samples_per_n, options);
}

double coordinate_mean(const ProfileCoordinate& c, int R) {
  switch (c.kind) {
    case ProfileCoordinate::Kind::low_degree: return degree_poisson_mean(R);
    case ProfileCoordinate::Kind::cycle: return lambda_p(R, c.p).get_d();
    case ProfileCoordinate::Kind::path: return mu_p(R, c.p).get_d();
  }
  return 0.0;
}

double limit_profile_property(std::span<const ProfileCoordinate> coords,
                              const std::function<bool(const StructureProfile&)>& pred, int k,
                              int R, std::uint64_t budget) {
  if (R < 2) throw ContractViolation("limit_profile_property: needs R >= 2");
  StructureProfile profile = StructureProfile::zero(k);
  const std::int64_t m = profile.length();
  for (const ProfileCoordinate& c : coords) {
    const bool ok = c.kind == ProfileCoordinate::Kind::low_degree ||
                    (c.kind == ProfileCoordinate::Kind::cycle && c.p >= 3 && c.p <= m) ||
                    (c.kind == ProfileCoordinate::Kind::path && c.p >= 1 && c.p <= m);
    if (!ok) throw ContractViolation("limit_profile_property: coordinate outside the profile");
  }
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j)
      if (coords[i].kind == coords[j].kind &&
          (coords[i].p == coords[j].p || coords[i].kind == ProfileCoordinate::Kind::low_degree))
        throw ContractViolation("limit_profile_property: repeated coordinate");
  double lattice = 1.0;
  for (std::size_t i = 0; i < coords.size(); ++i) lattice *= k + 1;
  if (lattice > static_cast<double>(budget))
    throw BudgetExceeded("limit_profile_property: marginal lattice exceeds budget");

  // mass[i][x] = P_k(x, mean_i)
  std::vector<std::vector<double>> mass(coords.size(), std::vector<double>(k + 1));
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (int x = 0; x <= k; ++x) mass[i][x] = truncated_poisson(k, x, coordinate_mean(coords[i], R));

  auto slot = [&](const ProfileCoordinate& c) -> int& {
    switch (c.kind) {
      case ProfileCoordinate::Kind::low_degree: return profile.q;
      case ProfileCoordinate::Kind::cycle: return profile.cycles[c.p];
      case ProfileCoordinate::Kind::path: return profile.paths[c.p];
    }
    return profile.q;
  };

  double total = 0.0;
  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double weight) {
    if (i == coords.size()) {
      if (pred(profile)) total += weight;
      return;
    }
    for (int x = 0; x <= k; ++x) {
      slot(coords[i]) = x;
      rec(i + 1, weight * mass[i][x]);
    }
    slot(coords[i]) = 0;
  };
  rec(0, 1.0);
  return total;
}

}  // namespace maxdeg
