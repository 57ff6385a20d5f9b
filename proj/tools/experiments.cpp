// Monte Carlo experiment suites. Every suite samples each scheduled n with
// master seed seed + i, keeps per-draw results in draw order and only then
// aggregates, so the CSV is identical for any worker count.

#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "cli_common.hpp"
#include "maxdeg/counting.hpp"
#include "maxdeg/errors.hpp"
#include "maxdeg/limits.hpp"
#include "maxdeg/logic.hpp"
#include "maxdeg/stats.hpp"
#include "maxdeg/structure.hpp"

namespace cli {

namespace {

using maxdeg::Graph;

class Table {
 public:
  explicit Table(std::ostream& out) : out_(out) {
    out_ << "n,samples,statistic,observed,predicted\n";
    out_ << std::setprecision(10);
  }

  void row(int n, std::int64_t samples, const std::string& stat, double observed,
           std::optional<double> predicted = std::nullopt) {
    out_ << n << ',' << samples << ',' << stat << ',' << observed << ',';
    if (predicted) out_ << *predicted;
    out_ << '\n';
  }

 private:
  std::ostream& out_;
};

double mean(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

double fraction(const std::vector<char>& x) {
  std::int64_t s = 0;
  for (char v : x) s += v ? 1 : 0;
  return x.empty() ? 0.0 : static_cast<double>(s) / static_cast<double>(x.size());
}

// Draws `samples` graphs for one n and hands each to `record(i, g)`.
template <typename Record>
void draw_graphs(const ExperimentConfig& c, int n, std::size_t schedule_index, Record&& record) {
  const maxdeg::SamplerSpec spec = c.sampling.spec(n, c.R, c.seed + schedule_index);
  const maxdeg::GraphSampler sampler = make_sampler(spec);
  maxdeg::for_each_draw(static_cast<std::size_t>(c.samples), spec.seed, c.workers,
                        [&](std::size_t i, maxdeg::Rng& rng) {
                          maxdeg::SampleTrace trace;
                          const Graph g = sampler.sample_graph(rng, &trace);
                          record(i, g, trace);
                        });
}

void degree_dist(const ExperimentConfig& c, Table& t) {
  const int R = c.R;
  const double mean_low = maxdeg::degree_poisson_mean(R);
  for (std::size_t si = 0; si < c.n_schedule.size(); ++si) {
    const int n = c.n_schedule[si];
    std::vector<double> low(c.samples), high(c.samples);
    draw_graphs(c, n, si, [&](std::size_t i, const Graph& g, const maxdeg::SampleTrace&) {
      const auto h = g.degree_histogram();
      low[i] = R >= 2 ? h[R - 2] : 0;
      high[i] = h[R - 1];
    });
    // Poisson(R-1) fit over bins 0..8, the last bin holding the tail.
    std::vector<std::int64_t> bins(9, 0);
    std::vector<double> expected(9, 0.0);
    std::vector<char> zero(c.samples);
    for (std::int64_t i = 0; i < c.samples; ++i) {
      ++bins[std::min<std::int64_t>(8, static_cast<std::int64_t>(low[i]))];
      zero[i] = low[i] == 0;
    }
    double below = 0.0;
    for (int x = 0; x < 8; ++x) below += expected[x] = maxdeg::poisson_pmf(x, mean_low);
    expected[8] = std::max(0.0, 1.0 - below);
    const auto chi = maxdeg::chi_square_test(bins, expected);
    std::vector<double> scaled(high);
    for (double& v : scaled) v /= std::sqrt(static_cast<double>(n));

    t.row(n, c.samples, "mean_degree_R-2", mean(low), mean_low);
    t.row(n, c.samples, "fraction_no_degree_R-2", fraction(zero), std::exp(-mean_low));
    t.row(n, c.samples, "degree_R-2_chi2_p", chi.p_value);
    t.row(n, c.samples, "degree_R-2_tv", maxdeg::total_variation(bins, expected), 0.0);
    t.row(n, c.samples, "mean_degree_R-1_over_sqrt_n", mean(scaled), std::sqrt(double(R)));
  }
}

void poisson_census(const ExperimentConfig& c, Table& t) {
  const int R = c.R;
  if (c.max_cycle < 4 || c.max_path < 1) throw UsageError("poisson-census needs max-cycle >= 4");
  for (std::size_t si = 0; si < c.n_schedule.size(); ++si) {
    const int n = c.n_schedule[si];
    std::vector<std::vector<double>> cycles(c.max_cycle + 1, std::vector<double>(c.samples));
    std::vector<std::vector<double>> paths(c.max_path + 1, std::vector<double>(c.samples));
    std::vector<double> low(c.samples);
    draw_graphs(c, n, si, [&](std::size_t i, const Graph& g, const maxdeg::SampleTrace&) {
      for (int p = 3; p <= c.max_cycle; ++p)
        cycles[p][i] = static_cast<double>(maxdeg::count_cycles(g, p));
      for (int p = 1; p <= c.max_path; ++p)
        paths[p][i] = static_cast<double>(maxdeg::count_paths_endpoints_degree(g, p, R - 1));
      low[i] = R >= 2 ? g.degree_histogram()[R - 2] : 0;
    });
    for (int p = 3; p <= c.max_cycle; ++p)
      t.row(n, c.samples, "mean_cycles_" + std::to_string(p), mean(cycles[p]),
            maxdeg::lambda_p(R, p).get_d());
    for (int p = 1; p <= c.max_path; ++p)
      t.row(n, c.samples, "mean_paths_" + std::to_string(p), mean(paths[p]),
            maxdeg::mu_p(R, p).get_d());
    t.row(n, c.samples, "mean_degree_R-2", mean(low), maxdeg::degree_poisson_mean(R));
    const std::vector<std::pair<std::string, const std::vector<double>*>> vars{
        {"cycles_3", &cycles[3]}, {"cycles_4", &cycles[4]}, {"paths_1", &paths[1]},
        {"degree_R-2", &low}};
    for (std::size_t a = 0; a < vars.size(); ++a)
      for (std::size_t b = a + 1; b < vars.size(); ++b)
        t.row(n, c.samples, "corr_" + vars[a].first + "_" + vars[b].first,
              maxdeg::pearson_correlation(*vars[a].second, *vars[b].second), 0.0);
  }
}

void simplicity(const ExperimentConfig& c, Table& t) {
  for (std::size_t si = 0; si < c.n_schedule.size(); ++si) {
    const int n = c.n_schedule[si];
    std::vector<std::int64_t> attempts(c.samples);
    draw_graphs(c, n, si, [&](std::size_t i, const Graph&, const maxdeg::SampleTrace& trace) {
      attempts[i] = static_cast<std::int64_t>(trace.accepted.size());
    });
    std::int64_t total = 0;
    for (std::int64_t a : attempts) total += a;
    const maxdeg::Interval ci = maxdeg::wilson_interval(c.samples, total);
    const double predicted = maxdeg::simplicity_constant(c.R);
    t.row(n, c.samples, "attempts", static_cast<double>(total));
    t.row(n, c.samples, "acceptance_rate", static_cast<double>(c.samples) / total, predicted);
    t.row(n, c.samples, "acceptance_ci_low", ci.low, predicted);
    t.row(n, c.samples, "acceptance_ci_high", ci.high, predicted);
  }
}

void connectivity_rigidity(const ExperimentConfig& c, Table& t) {
  const int R = c.R;
  for (std::size_t si = 0; si < c.n_schedule.size(); ++si) {
    const int n = c.n_schedule[si];
    std::vector<int> kappa(c.samples);
    std::vector<char> rigid(c.samples);
    draw_graphs(c, n, si, [&](std::size_t i, const Graph& g, const maxdeg::SampleTrace&) {
      kappa[i] = maxdeg::vertex_connectivity(g);
      rigid[i] = maxdeg::is_rigid(g);
    });
    std::vector<char> expected(c.samples);
    std::map<int, std::int64_t> histogram;
    std::vector<double> as_double(c.samples);
    for (std::int64_t i = 0; i < c.samples; ++i) {
      expected[i] = kappa[i] == R - 2 || kappa[i] == R - 1;
      ++histogram[kappa[i]];
      as_double[i] = kappa[i];
    }
    t.row(n, c.samples, "fraction_connectivity_R-2_or_R-1", fraction(expected), 1.0);
    t.row(n, c.samples, "fraction_rigid", fraction(rigid), 1.0);
    t.row(n, c.samples, "mean_connectivity", mean(as_double));
    for (auto [k, count] : histogram)
      t.row(n, c.samples, "fraction_connectivity_" + std::to_string(k),
            static_cast<double>(count) / static_cast<double>(c.samples));
  }
}

void small_components(const ExperimentConfig& c, Table& t) {
  for (std::size_t si = 0; si < c.n_schedule.size(); ++si) {
    const int n = c.n_schedule[si];
    std::vector<double> smallest(c.samples);
    draw_graphs(c, n, si, [&](std::size_t i, const Graph& g, const maxdeg::SampleTrace&) {
      smallest[i] = maxdeg::component_sizes(g).front();
    });
    std::vector<char> has_small(c.samples);
    for (std::int64_t i = 0; i < c.samples; ++i) has_small[i] = smallest[i] < c.threshold;
    t.row(n, c.samples, "fraction_component_below_" + std::to_string(c.threshold),
          fraction(has_small), 0.0);
    t.row(n, c.samples, "mean_smallest_component", mean(smallest));
  }
}

}  // namespace

void write_limit_csv(std::ostream& out, const maxdeg::LimitEstimate& e) {
  out << std::setprecision(10);
  out << "n,samples,satisfied,frequency,ci_low,ci_high\n";
  for (const maxdeg::LimitPoint& p : e.per_n)
    out << p.n << ',' << p.samples << ',' << p.satisfied << ',' << p.frequency << ','
        << p.ci.low << ',' << p.ci.high << '\n';
  const maxdeg::LimitPoint* last = &e.per_n.front();
  for (const maxdeg::LimitPoint& p : e.per_n)
    if (p.n > last->n) last = &p;
  out << "point," << last->samples << ',' << last->satisfied << ',' << e.point << ','
      << e.ci.low << ',' << e.ci.high << '\n';
  out << "trend_nondecreasing,,," << (e.nondecreasing ? 1 : 0) << ",,\n";
  out << "trend_nonincreasing,,," << (e.nonincreasing ? 1 : 0) << ",,\n";
  out << "trend_last_step,,," << e.last_step << ",,\n";
  out << "trend_last_two_overlap,,," << (e.last_two_overlap ? 1 : 0) << ",,\n";
}

maxdeg::LimitEstimate run_limit(const std::string& sentence, int R,
                                const std::vector<int>& schedule, std::int64_t samples,
                                std::uint64_t seed, unsigned workers, const SamplingFlags& flags) {
  const maxdeg::Formula f = maxdeg::parse(sentence);
  maxdeg::LimitOptions opt;
  opt.seed = seed;
  opt.workers = workers;
  for (int n : schedule) {
    // Resolve mode and caps per n exactly as the other suites do.
    (void)make_sampler(flags.spec(n, R, seed));
  }
  if (flags.mode == "exact") opt.mode = maxdeg::SamplerMode::exact;
  if (flags.mode == "truncated") opt.mode = maxdeg::SamplerMode::truncated;
  if (flags.cap_low || flags.floor_high || flags.cap_high)
    opt.caps = flags.spec(schedule.back(), R, seed).caps;
  return maxdeg::limit_mc(f, R, schedule, samples, opt);
}

void run_experiment(const ExperimentConfig& c, std::ostream& out) {
  if (c.R < 1 || c.samples < 1 || c.workers < 1 || c.n_schedule.empty())
    throw UsageError("R, samples, workers and the n schedule must be positive");
  for (int n : c.n_schedule)
    if (n < 1) throw UsageError("n schedule entries must be positive");
  if (c.name == "fo-limit") {
    if (c.sentence.empty()) throw UsageError("fo-limit needs --sentence");
    write_limit_csv(out, run_limit(c.sentence, c.R, c.n_schedule, c.samples, c.seed, c.workers,
                                   c.sampling));
    write_metadata(out, c.seed);
    return;
  }
  for (int n : c.n_schedule) (void)make_sampler(c.sampling.spec(n, c.R, c.seed));
  Table t(out);
  if (c.name == "degree-dist") degree_dist(c, t);
  else if (c.name == "poisson-census") poisson_census(c, t);
  else if (c.name == "simplicity") simplicity(c, t);
  else if (c.name == "connectivity-rigidity") connectivity_rigidity(c, t);
  else if (c.name == "small-components") small_components(c, t);
  else throw UsageError("unknown experiment " + c.name);
  write_metadata(out, c.seed);
}

}  // namespace cli
