// maxdeg command-line front end. Every command writes CSV with a header row
// and a trailing "# seed=... version=..." line; exit codes follow
// cli::ExitCode.

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "cli_common.hpp"
#include "maxdeg/census.hpp"
#include "maxdeg/counting.hpp"
#include "maxdeg/errors.hpp"
#include "maxdeg/logic.hpp"
#include "maxdeg/oracle.hpp"
#include "maxdeg/stats.hpp"
#include "maxdeg/structure.hpp"

namespace {

using namespace cli;

struct CountArgs {
  std::optional<std::int64_t> matchings;
  bool stirling = false;
  std::string degree_class;
  bool lambda = false, mu = false, simplicity = false, pk = false;
  std::optional<int> R, p, k, x;
  std::optional<double> mean;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

void cmd_count(const CountArgs& a) {
  std::ostringstream out;
  out << std::setprecision(15) << "quantity,value\n";
  bool any = false;
  if (a.matchings) {
    any = true;
    out << "matchings_" << *a.matchings << ',' << maxdeg::matchings(*a.matchings).get_str()
        << '\n';
    if (a.stirling)
      out << "matchings_stirling_" << *a.matchings << ','
          << maxdeg::matchings_stirling(*a.matchings) << '\n';
  }
  if (!a.degree_class.empty()) {
    any = true;
    const std::vector<int> list = parse_int_list(a.degree_class);
    if (a.R && *a.R + 1 != static_cast<int>(list.size()))
      throw UsageError("--class needs R + 1 entries");
    const maxdeg::DegreeClass d(std::vector<std::int64_t>(list.begin(), list.end()));
    if (!d.even()) throw UsageError("degree class has odd degree sum");
    out << "class_weight_" << d.to_string() << ','
        << maxdeg::degree_class_weight(d).value.get_str() << '\n';
  }
  if (a.lambda || a.mu) {
    any = true;
    const int R = need(a.R, "--R");
    const int p = need(a.p, "--p");
    if (a.lambda) {
      if (p < 3) throw UsageError("cycle length --p must be at least 3");
      out << "lambda_" << p << ',' << maxdeg::lambda_p(R, p).get_str() << '\n';
    }
    if (a.mu) {
      if (p < 1) throw UsageError("path length --p must be at least 1");
      out << "mu_" << p << ',' << maxdeg::mu_p(R, p).get_str() << '\n';
    }
  }
  if (a.simplicity) {
    any = true;
    out << "simplicity_constant," << maxdeg::simplicity_constant(need(a.R, "--R")) << '\n';
  }
  if (a.pk) {
    any = true;
    if (!a.mean) throw UsageError("missing --mean");
    const int k = need(a.k, "--k");
    const int x = need(a.x, "--x");
    if (k < 0 || x < 0 || x > k) throw UsageError("--pk needs 0 <= x <= k");
    out << "P_" << k << "(" << x << ")," << maxdeg::truncated_poisson(k, x, *a.mean) << '\n';
  }
  if (!any) throw UsageError("count: nothing requested");
  write_metadata(out, std::nullopt);
  std::cout << out.str();
}

struct SampleArgs {
  int n = 0, R = 0;
  std::int64_t count = 1;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  SamplingFlags sampling;
  std::string out, trace;
};

void cmd_sample(const SampleArgs& a) {
  if (a.n < 1 || a.R < 1 || a.count < 1) throw UsageError("n, R and count must be positive");
  const maxdeg::SamplerSpec spec = a.sampling.spec(a.n, a.R, a.seed);
  (void)make_sampler(spec);
  std::vector<maxdeg::SampleTrace> traces;
  const std::vector<maxdeg::Graph> graphs =
      maxdeg::batch_sample(spec, static_cast<std::size_t>(a.count), a.workers, &traces);
  Output o(a.out);
  for (const maxdeg::Graph& g : graphs) {
    maxdeg::write_graph(o.stream(), g);
    o.stream() << '\n';
  }
  if (!a.trace.empty()) {
    Output t(a.trace);
    t.stream() << "draw,class,restarts,accepted\n";
    for (std::size_t i = 0; i < traces.size(); ++i)
      for (std::size_t j = 0; j < traces[i].attempt_classes.size(); ++j)
        t.stream() << i << ',' << traces[i].attempt_classes[j].to_string() << ',' << j << ','
                   << (traces[i].accepted[j] ? 1 : 0) << '\n';
    write_metadata(t.stream(), a.seed);
  }
}

struct CensusArgs {
  std::string graph;
  int k = 1;
  bool connectivity = false, rigidity = false;
  int max_length = 0;
  std::string out;
};

void cmd_census(const CensusArgs& a) {
  const std::vector<maxdeg::Graph> graphs = read_graph_file(a.graph);
  if (graphs.size() != 1) throw UsageError("census expects exactly one graph");
  maxdeg::CensusOptions opt;
  opt.connectivity = a.connectivity;
  opt.rigidity = a.rigidity;
  opt.max_length = a.max_length;
  maxdeg::StructureProfile profile;
  maxdeg::CensusReport report;
  try {
    std::tie(profile, report) = maxdeg::census(graphs.front(), a.k, opt);
  } catch (const maxdeg::ContractViolation& e) {
    throw UsageError(e.what());
  }
  Output o(a.out);
  maxdeg::write_census_csv(o.stream(), profile, report);
  write_metadata(o.stream(), std::nullopt);
}

struct FoArgs {
  std::string graph, sentence, g, h, out;
  int k = 1;
  int R = 3;
  std::string n_list;
  std::int64_t samples = 1000;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  SamplingFlags sampling;
};

maxdeg::Graph single_graph(const std::string& path) {
  const std::vector<maxdeg::Graph> graphs = read_graph_file(path);
  if (graphs.size() != 1) throw UsageError(path + " must hold exactly one graph");
  return graphs.front();
}

void cmd_fo_eval(const FoArgs& a) {
  const maxdeg::Formula f = maxdeg::parse(a.sentence);
  const maxdeg::Graph g = single_graph(a.graph);
  std::cout << (maxdeg::eval(g, f) ? "true" : "false") << '\n';
}

void cmd_fo_limit(const FoArgs& a) {
  if (!a.seed) throw UsageError("fo limit needs --seed");
  if (a.samples < 1 || a.workers < 1) throw UsageError("samples and workers must be positive");
  const maxdeg::LimitEstimate e =
      run_limit(a.sentence, a.R, parse_int_list(a.n_list), a.samples, *a.seed, a.workers,
                a.sampling);
  Output o(a.out);
  write_limit_csv(o.stream(), e);
  write_metadata(o.stream(), a.seed);
}

void cmd_fo_ef(const FoArgs& a) {
  if (a.k < 0) throw UsageError("--k must be non-negative");
  const maxdeg::Winner w = maxdeg::ef_game(single_graph(a.g), single_graph(a.h), a.k);
  std::cout << maxdeg::to_string(w) << '\n';
}

struct OracleArgs {
  int n = 3, R = 2;
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  double alpha = 1e-3, tv = 0.02;
  std::string cells, statistic = "edges", out;
};

void cmd_oracle_compare(const OracleArgs& a) {
  if (a.samples < 1) throw UsageError("samples must be positive");
  const maxdeg::oracle::EnsembleTable table = maxdeg::oracle::enumerate_graphs(a.n, a.R);
  maxdeg::SamplerSpec spec;
  spec.n = a.n;
  spec.R = a.R;
  spec.seed = a.seed;
  (void)make_sampler(spec);
  const std::vector<maxdeg::Graph> graphs =
      maxdeg::batch_sample(spec, static_cast<std::size_t>(a.samples), a.workers);
  std::vector<std::int64_t> observed(table.graphs.size(), 0);
  for (const maxdeg::Graph& g : graphs) ++observed[table.index_of(g)];
  const std::vector<double> expected(table.graphs.size(), 1.0 / double(table.graphs.size()));
  const maxdeg::ChiSquareResult chi = maxdeg::chi_square_test(observed, expected);
  const double tv = maxdeg::total_variation(observed, expected);
  const bool pass = chi.p_value > a.alpha && tv < a.tv;
  Output o(a.out);
  o.stream() << std::setprecision(10)
             << "n,R,graphs,samples,chi2,df,p_value,tv,pass\n"
             << a.n << ',' << a.R << ',' << table.graphs.size() << ',' << a.samples << ','
             << chi.statistic << ',' << chi.degrees_of_freedom << ',' << chi.p_value << ','
             << tv << ',' << (pass ? 1 : 0) << '\n';
  write_metadata(o.stream(), a.seed);
  if (!pass) throw OracleMismatch("sampler deviates from the uniform ensemble");
}

void cmd_oracle_counts(const OracleArgs& a) {
  const std::int64_t labelled =
      static_cast<std::int64_t>(maxdeg::oracle::enumerate_graphs(a.n, a.R).graphs.size());
  const std::int64_t recount = maxdeg::oracle::count_graphs_bruteforce(a.n, a.R);
  const std::int64_t unlabelled = maxdeg::oracle::count_unlabelled(a.n, a.R);
  Output o(a.out);
  o.stream() << "n,R,labelled,unlabelled\n"
             << a.n << ',' << a.R << ',' << labelled << ',' << unlabelled << '\n';
  write_metadata(o.stream(), std::nullopt);
  if (labelled != recount)
    throw OracleMismatch("enumeration gives " + std::to_string(labelled) +
                         " graphs, subset scan gives " + std::to_string(recount));
}

void cmd_oracle_configs(const OracleArgs& a) {
  const std::vector<int> cells = parse_int_list(a.cells);
  std::int64_t points = 0;
  for (int c : cells) {
    if (c < 0) throw UsageError("cell sizes must be non-negative");
    points += c;
  }
  if (points % 2) throw UsageError("cell sizes must sum to an even number");
  const maxdeg::oracle::ConfigurationTable t = maxdeg::oracle::enumerate_configurations(cells);
  Output o(a.out);
  o.stream() << "quantity,value\n"
             << "total," << t.configurations.size() << '\n'
             << "simple," << t.simple << '\n'
             << "images," << t.by_image.size() << '\n';
  write_metadata(o.stream(), std::nullopt);
  if (mpz_class(static_cast<long>(t.configurations.size())) != maxdeg::matchings(points))
    throw OracleMismatch("configuration count differs from M(2m)");
}

void cmd_oracle_classes(const OracleArgs& a) {
  // Class weights against configuration enumeration, and graphs per class.
  const maxdeg::oracle::EnsembleTable table = maxdeg::oracle::enumerate_graphs(a.n, a.R);
  const auto per_class = maxdeg::oracle::graphs_per_class(table);
  maxdeg::SamplerSpec spec;
  spec.n = a.n;
  spec.R = a.R;
  Output o(a.out);
  o.stream() << "class,weight,enumerated_weight,graphs\n";
  bool ok = true;
  for (const maxdeg::WeightedClass& c : maxdeg::enumerate_degree_classes(spec)) {
    const mpq_class w = maxdeg::degree_class_weight(c.degrees).value;
    const mpq_class e = maxdeg::oracle::class_configuration_mass(c.degrees);
    const auto it = per_class.find(c.degrees);
    o.stream() << c.degrees.to_string() << ',' << w.get_str() << ',' << e.get_str() << ','
               << (it == per_class.end() ? 0 : it->second) << '\n';
    ok = ok && w == e;
  }
  write_metadata(o.stream(), std::nullopt);
  if (!ok) throw OracleMismatch("class weight differs from configuration enumeration");
}

maxdeg::oracle::Statistic statistic_by_name(const std::string& name, int R) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  int arg = 0;
  if (colon != std::string::npos) {
    const std::vector<int> v = parse_int_list(name.substr(colon + 1));
    if (v.size() != 1) throw UsageError("bad statistic " + name);
    arg = v.front();
  }
  if (head == "edges")
    return [](const maxdeg::Graph& g) { return static_cast<std::int64_t>(g.edge_count()); };
  if (head == "isolated")
    return [](const maxdeg::Graph& g) { return std::int64_t{g.degree_histogram()[0]}; };
  if (head == "low-degree") {
    if (R < 2) throw UsageError("low-degree needs R >= 2");
    return [R](const maxdeg::Graph& g) { return std::int64_t{g.degree_histogram()[R - 2]}; };
  }
  if (head == "degree") {
    if (arg < 0 || arg > R) throw UsageError("degree:d needs 0 <= d <= R");
    return [arg](const maxdeg::Graph& g) { return std::int64_t{g.degree_histogram()[arg]}; };
  }
  if (head == "cycles") {
    if (arg < 3) throw UsageError("cycles:p needs p >= 3");
    return [arg](const maxdeg::Graph& g) {
      return static_cast<std::int64_t>(maxdeg::count_cycles(g, arg));
    };
  }
  throw UsageError("unknown statistic " + name);
}

void cmd_oracle_pmf(const OracleArgs& a) {
  const maxdeg::oracle::Pmf pmf = maxdeg::oracle::exact_statistic_distribution(
      a.n, a.R, statistic_by_name(a.statistic, a.R));
  Output o(a.out);
  maxdeg::oracle::write_pmf_csv(o.stream(), pmf);
  write_metadata(o.stream(), std::nullopt);
}

void cmd_oracle_dump(const OracleArgs& a) {
  Output o(a.out);
  maxdeg::oracle::write_dump(o.stream(), maxdeg::oracle::enumerate_graphs(a.n, a.R));
}

void add_sampling_flags(CLI::App* app, SamplingFlags& f) {
  app->add_option("--mode", f.mode, "auto, exact or truncated")
      ->check(CLI::IsMember({"auto", "exact", "truncated"}));
  app->add_option("--cap-low", f.cap_low, "largest admitted count of degree R-2");
  app->add_option("--floor-high", f.floor_high, "smallest admitted count of degree R-1");
  app->add_option("--cap-high", f.cap_high, "largest admitted count of degree R-1");
  app->add_option("--max-restarts", f.max_restarts, "rejection restarts per draw");
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded-degree random graphs: counting, sampling, census, logic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MAXDEG_VERSION);

  CountArgs count;
  CLI::App* c = app.add_subcommand("count", "exact and asymptotic counting quantities");
  c->add_option("--matchings", count.matchings, "M(2m) for the given 2m");
  c->add_flag("--stirling", count.stirling, "also print the Stirling approximant");
  c->add_option("--class", count.degree_class, "class weight of d0,d1,...,dR");
  c->add_flag("--lambda", count.lambda, "cycle mean lambda_p");
  c->add_flag("--mu", count.mu, "path mean mu_p");
  c->add_flag("--simplicity", count.simplicity, "simplicity constant");
  c->add_flag("--pk", count.pk, "truncated Poisson mass P_k(x, mean)");
  c->add_option("--R", count.R);
  c->add_option("--p", count.p);
  c->add_option("--k", count.k);
  c->add_option("--x", count.x);
  c->add_option("--mean", count.mean);
  c->callback([&] { cmd_count(count); });

  SampleArgs sample;
  sample.workers = 1;
  CLI::App* s = app.add_subcommand("sample", "draw uniform graphs");
  s->add_option("--n", sample.n)->required();
  s->add_option("--R", sample.R)->required();
  s->add_option("--count", sample.count);
  s->add_option("--seed", sample.seed)->required();
  s->add_option("--workers", sample.workers);
  s->add_option("--out", sample.out, "graph stream path (stdout by default)");
  s->add_option("--trace", sample.trace, "trace CSV path");
  add_sampling_flags(s, sample.sampling);
  s->callback([&] { cmd_sample(sample); });

  CensusArgs census;
  CLI::App* ce = app.add_subcommand("census", "census of rare structures in a graph");
  ce->add_option("--graph", census.graph)->required();
  ce->add_option("--k", census.k);
  ce->add_flag("--connectivity", census.connectivity);
  ce->add_flag("--rigidity", census.rigidity);
  ce->add_option("--max-length", census.max_length, "shorter cycle/path horizon");
  ce->add_option("--out", census.out);
  ce->callback([&] { cmd_census(census); });

  ExperimentConfig exp;
  std::string exp_n;
  std::optional<std::uint64_t> exp_seed;
  exp.workers = default_workers();
  CLI::App* e = app.add_subcommand("experiment", "Monte Carlo experiment suites");
  e->add_option("name", exp.name)->required()->check(CLI::IsMember(
      {"degree-dist", "poisson-census", "simplicity", "fo-limit", "connectivity-rigidity",
       "small-components"}));
  e->add_option("--R", exp.R);
  e->add_option("--n", exp_n, "comma-separated n schedule")->required();
  e->add_option("--samples", exp.samples);
  e->add_option("--seed", exp_seed)->required();
  e->add_option("--workers", exp.workers);
  e->add_option("--out", exp.output);
  e->add_option("--sentence", exp.sentence);
  e->add_option("--threshold", exp.threshold, "component size threshold");
  e->add_option("--max-cycle", exp.max_cycle);
  e->add_option("--max-path", exp.max_path);
  add_sampling_flags(e, exp.sampling);
  e->callback([&] {
    exp.n_schedule = parse_int_list(exp_n);
    exp.seed = *exp_seed;
    Output o(exp.output);
    run_experiment(exp, o.stream());
  });

  FoArgs fo;
  fo.workers = default_workers();
  CLI::App* f = app.add_subcommand("fo", "first-order sentences");
  f->require_subcommand(1);
  CLI::App* fe = f->add_subcommand("eval", "truth of a sentence in a graph");
  fe->add_option("--graph", fo.graph)->required();
  fe->add_option("--sentence", fo.sentence)->required();
  fe->callback([&] { cmd_fo_eval(fo); });
  CLI::App* fl = f->add_subcommand("limit", "Monte Carlo limit probability");
  fl->add_option("--sentence", fo.sentence)->required();
  fl->add_option("--R", fo.R);
  fl->add_option("--n", fo.n_list, "comma-separated n schedule")->required();
  fl->add_option("--samples", fo.samples);
  fl->add_option("--seed", fo.seed)->required();
  fl->add_option("--workers", fo.workers);
  fl->add_option("--out", fo.out);
  add_sampling_flags(fl, fo.sampling);
  fl->callback([&] { cmd_fo_limit(fo); });
  CLI::App* fg = f->add_subcommand("ef", "Ehrenfeucht-Fraisse game winner");
  fg->set_help_flag("--help", "print this help message and exit");
  fg->add_option("--g", fo.g)->required();
  fg->add_option("--h", fo.h)->required();
  fg->add_option("--k", fo.k)->required();
  fg->callback([&] { cmd_fo_ef(fo); });

  OracleArgs oracle;
  oracle.workers = default_workers();
  CLI::App* o = app.add_subcommand("oracle", "exhaustive ground truth at tiny sizes");
  o->require_subcommand(1);
  CLI::App* oc = o->add_subcommand("compare-sampler", "sampler against the enumeration");
  oc->add_option("--n", oracle.n)->required();
  oc->add_option("--R", oracle.R)->required();
  oc->add_option("--samples", oracle.samples);
  oc->add_option("--seed", oracle.seed);
  oc->add_option("--workers", oracle.workers);
  oc->add_option("--alpha", oracle.alpha, "smallest passing chi-square p");
  oc->add_option("--tv", oracle.tv, "largest passing total variation");
  oc->add_option("--out", oracle.out);
  oc->callback([&] { cmd_oracle_compare(oracle); });
  CLI::App* on = o->add_subcommand("counts", "labelled and unlabelled ensemble sizes");
  on->add_option("--n", oracle.n)->required();
  on->add_option("--R", oracle.R)->required();
  on->add_option("--out", oracle.out);
  on->callback([&] { cmd_oracle_counts(oracle); });
  CLI::App* og = o->add_subcommand("configs", "configurations on the given cells");
  og->add_option("--cells", oracle.cells)->required();
  og->add_option("--out", oracle.out);
  og->callback([&] { cmd_oracle_configs(oracle); });
  CLI::App* ow = o->add_subcommand("classes", "class weights against enumeration");
  ow->add_option("--n", oracle.n)->required();
  ow->add_option("--R", oracle.R)->required();
  ow->add_option("--out", oracle.out);
  ow->callback([&] { cmd_oracle_classes(oracle); });
  CLI::App* op = o->add_subcommand("pmf", "exact law of a statistic");
  op->add_option("--n", oracle.n)->required();
  op->add_option("--R", oracle.R)->required();
  op->add_option("--statistic", oracle.statistic,
                 "edges, isolated, low-degree, degree:d or cycles:p");
  op->add_option("--out", oracle.out);
  op->callback([&] { cmd_oracle_pmf(oracle); });
  CLI::App* od = o->add_subcommand("dump", "every graph of the ensemble");
  od->add_option("--n", oracle.n)->required();
  od->add_option("--R", oracle.R)->required();
  od->add_option("--out", oracle.out);
  od->callback([&] { cmd_oracle_dump(oracle); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  } catch (const maxdeg::ParseError& err) {
    std::cerr << "parse error: " << err.what() << '\n';
    return kParse;
  } catch (const maxdeg::RestartBudgetExhausted& err) {
    std::cerr << "sampler: " << err.what() << '\n';
    return kSampler;
  } catch (const maxdeg::BudgetExceeded& err) {
    std::cerr << "budget: " << err.what() << '\n';
    return kSchedule;
  } catch (const ScheduleError& err) {
    std::cerr << "schedule: " << err.what() << '\n';
    return kSchedule;
  } catch (const OracleMismatch& err) {
    std::cerr << "oracle mismatch: " << err.what() << '\n';
    return kOracleMismatch;
  } catch (const UsageError& err) {
    std::cerr << "usage: " << err.what() << '\n';
    return kUsage;
  } catch (const maxdeg::ContractViolation& err) {
    std::cerr << "usage: " << err.what() << '\n';
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return kOk;
}
