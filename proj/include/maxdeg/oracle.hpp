#pragma once

// Exhaustive ground truth at tiny sizes: every labelled graph with maximum
// degree at most R, every configuration on a small point set, exact
// distributions of graph statistics, and isomorphism-class counts.
// Nothing here is fast; everything here is easy to check by hand.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "maxdeg/counting.hpp"
#include "maxdeg/graph.hpp"

namespace maxdeg::oracle {

struct EnsembleTable {
  int n = 0;
  int R = 0;
  std::vector<Graph> graphs;  // lexicographic by edge list

  // Position of g in `graphs`; throws ContractViolation when absent.
  std::size_t index_of(const Graph& g) const;

 private:
  friend EnsembleTable enumerate_graphs(int, int, int);
  std::map<std::vector<Edge>, std::size_t> index_;
};

// All graphs on n labelled vertices with every degree <= R.
// Throws BudgetExceeded when n > cap or cap > 8.
EnsembleTable enumerate_graphs(int n, int R, int cap = 7);

// Independent recount by scanning all 2^(n choose 2) edge subsets.
std::int64_t count_graphs_bruteforce(int n, int R);

struct ImageGroup {
  Multigraph image;
  std::int64_t configurations = 0;
};

struct ConfigurationTable {
  std::vector<Configuration> configurations;
  std::vector<ImageGroup> by_image;  // in order of first appearance
  std::int64_t simple = 0;           // configurations with a simple image
};

// Every perfect matching on the points of the cells; at most 12 points.
ConfigurationTable enumerate_configurations(const std::vector<int>& cell_sizes,
                                            int point_cap = 12);

// Class weight by brute force: configurations over every degree sequence
// with this histogram, divided by prod_i (i!)^{d_i}.
mpq_class class_configuration_mass(const DegreeClass& d, int point_cap = 12);

// Simple graphs per degree class.
std::map<DegreeClass, std::int64_t> graphs_per_class(const EnsembleTable& table);

using Statistic = std::function<std::int64_t(const Graph&)>;
using Pmf = std::map<std::int64_t, mpq_class>;

// Exact law of `statistic` under the uniform distribution on the ensemble.
Pmf exact_statistic_distribution(int n, int R, const Statistic& statistic, int cap = 7);

// "value,probability_num,probability_den"
void write_pmf_csv(std::ostream& out, const Pmf& pmf);

// Smallest adjacency encoding over all vertex permutations (n <= 7).
std::vector<std::uint8_t> canonical_form(const Graph& g);

// Number of isomorphism classes in the ensemble; n <= 7.
std::int64_t count_unlabelled(int n, int R);

// One graph per line: its text-format lines joined by ';'.
void write_dump(std::ostream& out, const EnsembleTable& table);

}  // namespace maxdeg::oracle
