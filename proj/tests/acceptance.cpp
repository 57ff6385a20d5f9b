// Acceptance run: exact oracle equivalence at tiny n plus Monte Carlo checks
// at moderate n. One PASS/FAIL line per criterion; the exit status is
// nonzero when any criterion fails. Seeds are fixed so the run is reproducible.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "brute.hpp"
#include "formula_gen.hpp"
#include "helpers.hpp"
#include "maxdeg/counting.hpp"
#include "maxdeg/limits.hpp"
#include "maxdeg/logic.hpp"
#include "maxdeg/oracle.hpp"
#include "maxdeg/sampler.hpp"
#include "maxdeg/stats.hpp"
#include "maxdeg/structure.hpp"

using namespace maxdeg;

namespace {

const unsigned kWorkers = std::max(1u, std::thread::hardware_concurrency());

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool within(double x, double target, double tol) { return std::fabs(x - target) <= tol; }

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Draws `count` graphs and hands each to record(i, g, attempts).
void draw(const SamplerSpec& spec, std::size_t count,
          const std::function<void(std::size_t, const Graph&, std::size_t)>& record) {
  const GraphSampler sampler(spec);
  for_each_draw(count, spec.seed, kWorkers, [&](std::size_t i, Rng& rng) {
    SampleTrace trace;
    const Graph g = sampler.sample_graph(rng, &trace);
    record(i, g, trace.accepted.size());
  });
}

SamplerSpec spec_of(int n, int R, std::uint64_t seed, SamplerMode mode) {
  SamplerSpec s;
  s.n = n;
  s.R = R;
  s.seed = seed;
  s.mode = mode;
  return s;
}

void criterion1(Outcome& o) {
  const std::int64_t expected[] = {1, 3, 15, 105, 945};
  for (int m = 1; m <= 5; ++m)
    o.require(matchings(2 * m) == expected[m - 1], "M(" + std::to_string(2 * m) + ")");
  for (int two_m = 2; two_m <= 10; two_m += 2) {
    const auto table = oracle::enumerate_configurations(std::vector<int>(two_m, 1));
    o.require(mpz_class(static_cast<long>(table.configurations.size())) == matchings(two_m),
              "matching enumeration at 2m=" + std::to_string(two_m));
  }
  o.require(degree_class_weight(DegreeClass({0, 2, 1})).value == mpq_class(9, 2),
            "weight of (0,2,1)");
  int classes = 0;
  for (int n = 1; n <= 4; ++n)
    for (int R = 1; R <= 3; ++R)
      for (const WeightedClass& c : enumerate_degree_classes(spec_of(n, R, 0, SamplerMode::exact))) {
        ++classes;
        o.require(degree_class_weight(c.degrees).value ==
                      oracle::class_configuration_mass(c.degrees),
                  "class " + c.degrees.to_string());
      }
  o.detail << " M(2..10)=1,3,15,105,945; N(0,2,1)=9/2; " << classes
           << " classes at n<=4 match enumeration";
}

void criterion2(Outcome& o) {
  const std::pair<int, int> cases[] = {{3, 2}, {4, 1}, {4, 2}, {5, 2}};
  std::uint64_t seed = 2001;
  for (auto [n, R] : cases) {
    const oracle::EnsembleTable table = oracle::enumerate_graphs(n, R);
    const std::size_t draws = 100000;
    std::vector<std::int64_t> counts(table.graphs.size(), 0);
    std::vector<std::size_t> index(draws);
    draw(spec_of(n, R, seed++, SamplerMode::exact), draws,
         [&](std::size_t i, const Graph& g, std::size_t) { index[i] = table.index_of(g); });
    for (std::size_t i : index) ++counts[i];
    const std::vector<double> uniform(table.graphs.size(), 1.0 / double(table.graphs.size()));
    const ChiSquareResult chi = chi_square_test(counts, uniform);
    const double tv = total_variation(counts, uniform);
    o.require(tv < 0.02 && chi.p_value > 1e-3,
              "(" + std::to_string(n) + "," + std::to_string(R) + ")");
    // Expected TV of an exact sampler: about sqrt(K / (2 pi N)) for K cells.
    const double floor = std::sqrt(double(table.graphs.size()) / (2.0 * M_PI * double(draws)));
    o.detail << " (" << n << "," << R << "): |G|=" << table.graphs.size() << " TV=" << tv
             << " (sampling floor " << floor << ") p=" << chi.p_value << ";";
  }
}

void criterion3(Outcome& o) {
  struct Case {
    int R, n;
    std::size_t samples;
  };
  for (const Case c : {Case{3, 1000, 20000}, Case{2, 10000, 6000}}) {
    std::vector<std::size_t> attempts(c.samples);
    draw(spec_of(c.n, c.R, 3000 + c.R, SamplerMode::truncated), c.samples,
         [&](std::size_t i, const Graph&, std::size_t a) { attempts[i] = a; });
    const double total = std::accumulate(attempts.begin(), attempts.end(), 0.0);
    const double rate = static_cast<double>(c.samples) / total;
    const double target = simplicity_constant(c.R);
    o.require(total >= 1e4, "fewer than 1e4 attempts");
    o.require(within(rate, target, 0.01), "R=" + std::to_string(c.R));
    o.detail << " R=" << c.R << " n=" << c.n << ": " << rate << " vs " << target << " over "
             << total << " attempts;";
  }
}

void criterion4(Outcome& o) {
  const std::size_t samples = 5000;
  std::vector<int> low(samples);
  draw(spec_of(1000, 3, 4000, SamplerMode::truncated), samples,
       [&](std::size_t i, const Graph& g, std::size_t) { low[i] = g.degree_histogram()[1]; });
  std::vector<std::int64_t> bins(9, 0);
  for (int x : low) ++bins[std::min(x, 8)];
  std::vector<double> expected(9);
  double below = 0.0;
  for (int x = 0; x < 8; ++x) below += expected[x] = std::exp(-2.0) * std::pow(2.0, x) / std::tgamma(x + 1.0);
  expected[8] = 1.0 - below;
  const ChiSquareResult chi = chi_square_test(bins, expected);
  const double zero = static_cast<double>(bins[0]) / samples;
  o.require(chi.p_value > 1e-3, "chi-square");
  o.require(within(zero, std::exp(-2.0), 0.02), "P(count=0)");
  o.detail << " chi2=" << chi.statistic << " df=" << chi.degrees_of_freedom << " p=" << chi.p_value
           << "; P(0)=" << zero << " vs " << std::exp(-2.0);
}

void criterion5(Outcome& o) {
  const std::size_t samples = 2000;
  const int n = 2000;
  std::vector<double> high(samples);
  draw(spec_of(n, 3, 5000, SamplerMode::truncated), samples,
       [&](std::size_t i, const Graph& g, std::size_t) {
         high[i] = g.degree_histogram()[2] / std::sqrt(double(n));
       });
  const double m = mean(high);
  const double root3 = std::sqrt(3.0);
  o.require(m >= 0.95 * root3 && m <= 1.05 * root3, "mean outside [0.95, 1.05] sqrt 3");
  o.detail << " mean/sqrt(n)=" << m << " = " << m / root3 << " sqrt 3";
}

void criterion6(Outcome& o) {
  const std::size_t samples = 20000;
  std::vector<double> c3(samples), c4(samples), p1(samples), low(samples);
  draw(spec_of(1000, 3, 6000, SamplerMode::truncated), samples,
       [&](std::size_t i, const Graph& g, std::size_t) {
         c3[i] = static_cast<double>(count_cycles(g, 3));
         c4[i] = static_cast<double>(count_cycles(g, 4));
         p1[i] = static_cast<double>(count_paths_endpoints_degree(g, 1, 2));
         low[i] = g.degree_histogram()[1];
       });
  const double m3 = mean(c3), m4 = mean(c4), mp = mean(p1);
  o.require(within(m3, 4.0 / 3.0, 0.07 * 4.0 / 3.0), "3-cycles");
  o.require(within(m4, 2.0, 0.07 * 2.0), "4-cycles");
  o.require(within(mp, 2.0, 0.10 * 2.0), "1-paths");
  o.detail << " E[C3]=" << m3 << " E[C4]=" << m4 << " E[P1]=" << mp << "; rho:";
  const std::vector<const std::vector<double>*> vars{&c3, &c4, &p1, &low};
  const char* names[] = {"C3", "C4", "P1", "q"};
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      const double rho = pearson_correlation(*vars[a], *vars[b]);
      o.require(std::fabs(rho) < 0.05, std::string("rho ") + names[a] + "," + names[b]);
      o.detail << ' ' << names[a] << '/' << names[b] << '=' << rho;
    }
}

void criterion7(Outcome& o) {
  LimitOptions opt;
  opt.workers = kWorkers;
  opt.seed = 7000;
  const std::vector<int> schedule{500, 1000, 2000};
  const LimitEstimate deg = limit_mc(parse("exists x. deg(x) = 1"), 3, schedule, 3000, opt);
  const double deg_target = 1.0 - std::exp(-2.0);
  o.require(within(deg.point, deg_target, 0.03), "degree sentence");
  opt.seed = 7100;
  const LimitEstimate tri = limit_mc(
      parse("exists x. exists y. E(x, y) & exists z. E(y, z) & E(x, z)"), 2, schedule, 4000, opt);
  const double tri_target = 1.0 - std::exp(-1.0 / 6.0);
  o.require(within(tri.point, tri_target, 0.02), "triangle sentence");
  o.detail << " deg=1 at R=3: " << deg.point << " vs " << deg_target << "; triangle at R=2: "
           << tri.point << " vs " << tri_target;
}

void criterion8(Outcome& o) {
  const int R = 3;
  const std::vector<ProfileCoordinate> q{{ProfileCoordinate::Kind::low_degree, 0}};
  const double analytic =
      limit_profile_property(q, [](const StructureProfile& p) { return p.q == 0; }, 1, R);
  const double closed = std::exp(-double(R - 1));
  o.require(std::fabs(analytic - closed) <= 1e-12, "analytic value");
  LimitOptions opt;
  opt.workers = kWorkers;
  opt.seed = 8000;
  const std::vector<int> schedule{2000, 8000};
  const LimitEstimate mc = limit_mc(parse("!exists x. deg(x) = 1"), R, schedule, 4000, opt);
  o.require(mc.ci.contains(analytic), "Monte Carlo interval");
  o.detail << " analytic=" << analytic << " closed form=" << closed << "; MC=" << mc.point
           << " CI=[" << mc.ci.low << ", " << mc.ci.high << "]";
}

Graph permuted(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int u = perm[e.u], v = perm[e.v];
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return Graph(g.order(), g.max_degree(), edges);
}

void criterion9(Outcome& o) {
  gen::SentenceGenerator sentences(9000);
  std::vector<Formula> corpus;
  for (int rank = 1; rank <= 3; ++rank)
    for (int i = 0; i < 60; ++i) {
      Formula f = sentences.sentence(rank);
      if (qrank(f) <= 3) corpus.push_back(std::move(f));
    }

  std::mt19937_64 rng(9001);
  std::uniform_int_distribution<int> size(1, 8);
  const std::vector<std::pair<Graph, Graph>> families{
      {testing::cycle(6), testing::disjoint(testing::cycle(3), testing::cycle(3), 2)},
      {testing::cycle(8), testing::disjoint(testing::cycle(4), testing::cycle(4), 2)},
      {testing::path(8), testing::disjoint(testing::path(4), testing::path(4), 2)},
      {testing::empty(3), testing::empty(4)},
      {testing::complete(2), testing::disjoint(testing::empty(1), testing::empty(1), 0)},
      {testing::cycle(7), testing::path(7)},
  };
  int instances = 0, duplicator = 0, checks = 0, violations = 0;
  for (int t = 0; t < 240; ++t) {
    const int k = 1 + t % 3;
    const int R = 1 + static_cast<int>(rng() % 3);
    Graph g, h;
    switch (t % 4) {
      case 0: {
        const int n = size(rng);
        g = brute::random_graph(n, R, 0.5, rng);
        h = brute::random_graph(n, R, 0.5, rng);
        break;
      }
      case 1:
        g = brute::random_graph(size(rng), R, 0.5, rng);
        h = permuted(g, rng);
        break;
      case 2:
        g = brute::random_graph(size(rng), R, 0.4, rng);
        h = brute::random_graph(size(rng), R, 0.4, rng);
        break;
      default: {
        const auto& pair = families[static_cast<std::size_t>(t / 4) % families.size()];
        g = permuted(pair.first, rng);
        h = permuted(pair.second, rng);
      }
    }
    ++instances;
    if (ef_game(g, h, k) != Winner::duplicator) continue;
    ++duplicator;
    for (const Formula& f : corpus) {
      if (qrank(f) > k) continue;
      ++checks;
      if (eval(g, f) != eval(h, f)) ++violations;
    }
  }
  o.require(instances >= 200, "corpus too small");
  o.require(duplicator > 0, "no Duplicator wins exercised");
  o.require(violations == 0, "rank-k disagreement under a Duplicator win");
  o.detail << ' ' << instances << " instances, " << corpus.size() << " sentences, " << duplicator
           << " Duplicator wins, " << checks << " sentence checks, " << violations
           << " violations";
}

void criterion10(Outcome& o) {
  const std::size_t samples = 200;
  std::vector<char> connected(samples), rigid(samples);
  draw(spec_of(300, 5, 10000, SamplerMode::truncated), samples,
       [&](std::size_t i, const Graph& g, std::size_t) {
         const int kappa = vertex_connectivity(g);
         connected[i] = kappa == 3 || kappa == 4;
         rigid[i] = is_rigid(g);
       });
  const double fc = std::count(connected.begin(), connected.end(), 1) / double(samples);
  const double fr = std::count(rigid.begin(), rigid.end(), 1) / double(samples);
  o.require(fc >= 0.9, "connectivity");
  o.require(fr >= 0.9, "rigidity");
  o.detail << " connectivity in {3,4}: " << fc << "; rigid: " << fr;
}

void criterion11(Outcome& o) {
  LimitOptions opt;
  opt.workers = kWorkers;
  opt.seed = 11000;
  const std::vector<int> schedule{200, 1000};
  const LimitEstimate e = limit_mc(
      [](const Graph& g) { return component_sizes(g).front() < 10; }, 3, schedule, 5000, opt);
  const double small = e.per_n[0].frequency, large = e.per_n[1].frequency;
  o.require(large < small, "not strictly decreasing");
  o.require(large < 0.2, "fraction at n=1000");
  o.detail << " P(component < 10): n=200 " << small << ", n=1000 " << large;
}

void criterion12(Outcome& o) {
  double worst_pk = 0.0;
  for (int k = 0; k <= 12; ++k)
    for (double mu : {0.01, 0.5, 1.0, 4.0 / 3.0, 2.0, 4.5, 8.0, 16.0, 32.0}) {
      double s = 0.0;
      for (int x = 0; x <= k; ++x) s += truncated_poisson(k, x, mu);
      worst_pk = std::max(worst_pk, std::fabs(s - 1.0));
    }
  o.require(worst_pk <= 1e-12, "P_k normalisation");

  // Full profiles with three free coordinates; every other coordinate is
  // held at 0 and divided out through its own P_k(0, mean).
  double worst_profile = 0.0;
  for (int R : {2, 3, 4}) {
    for (int k : {1, 2, 3}) {
      const StructureProfile base = StructureProfile::zero(k);
      const double all_zero = profile_limit_probability(base, R);
      const double free_zero = truncated_poisson(k, 0, R - 1.0) *
                               truncated_poisson(k, 0, lambda_p(R, 3).get_d()) *
                               truncated_poisson(k, 0, mu_p(R, 1).get_d());
      const double rest = all_zero / free_zero;
      double s = 0.0;
      for (int q = 0; q <= k; ++q)
        for (int r = 0; r <= k; ++r)
          for (int p = 0; p <= k; ++p) {
            StructureProfile prof = base;
            prof.q = q;
            prof.cycles[3] = r;
            prof.paths[1] = p;
            s += profile_limit_probability(prof, R);
          }
      worst_profile = std::max(worst_profile, std::fabs(s / rest - 1.0));
      std::vector<ProfileCoordinate> coords{{ProfileCoordinate::Kind::low_degree, 0},
                                            {ProfileCoordinate::Kind::cycle, 3},
                                            {ProfileCoordinate::Kind::cycle, 4},
                                            {ProfileCoordinate::Kind::path, 1},
                                            {ProfileCoordinate::Kind::path, 2}};
      const double marginal =
          limit_profile_property(coords, [](const StructureProfile&) { return true; }, k, R);
      worst_profile = std::max(worst_profile, std::fabs(marginal - 1.0));
    }
  }
  o.require(worst_profile <= 1e-9, "profile normalisation");
  o.detail << " max |sum P_k - 1| = " << worst_pk << "; max profile deviation = "
           << worst_profile;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria{
      {"exact counting", criterion1},
      {"sampler uniformity against enumeration", criterion2},
      {"simplicity constant", criterion3},
      {"Poisson law of degree R-2 count", criterion4},
      {"degree R-1 count scale", criterion5},
      {"cycle and path census", criterion6},
      {"first-order limit pipeline", criterion7},
      {"analytic and Monte Carlo agreement", criterion8},
      {"EF game soundness", criterion9},
      {"connectivity and rigidity", criterion10},
      {"small components vanish", criterion11},
      {"normalisation", criterion12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %zu (%s):%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
