#pragma once

// Census of the rare structures of a bounded-degree graph and the capped
// profile that indexes the rank-k structure classes.
//
// For a rank k the census looks at lengths up to m = 5^(k+1) and at
// separations up to 5^(k+2). The "Poisson objects" are the vertices of
// degree R-2, the cycles of length <= m, and the paths of length <= m whose
// two endpoints have degree R-1.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "maxdeg/graph.hpp"

namespace maxdeg {

std::int64_t census_length(int k);      // m = 5^(k+1)
std::int64_t census_separation(int k);  // 5^(k+2)

struct StructureProfile {
  int k = 1;
  int q = 0;               // degree-(R-2) vertices, capped at k
  std::vector<int> cycles; // cycles[p] for 3 <= p <= m; entries below 3 stay 0
  std::vector<int> paths;  // paths[p] for 1 <= p <= m; entry 0 stays 0

  // All-zero profile with correctly sized vectors.
  static StructureProfile zero(int k);
  std::int64_t length() const { return census_length(k); }
  // Entries within {0..k} and vectors sized m + 1.
  bool well_formed() const;

  friend bool operator==(const StructureProfile&, const StructureProfile&) = default;
};

struct CensusOptions {
  // Longest cycle/path length to enumerate; 0 means the full m. A smaller
  // value leaves the report incomplete (objects_complete == false).
  int max_length = 0;
  std::uint64_t work_budget = 500'000'000;
  // More Poisson objects than this aborts the pairwise separation pass.
  std::size_t object_budget = 20'000;
  bool connectivity = false;
  bool rigidity = false;
};

struct CensusReport {
  int n = 0;
  int max_degree = 0;
  int k = 1;
  std::int64_t m = 0;
  int counted_length = 0;
  bool objects_complete = false;

  std::vector<int> degree_histogram;      // index 0..R
  std::vector<std::uint64_t> cycles;      // cycles[p], 3 <= p <= counted_length
  std::vector<std::uint64_t> paths;       // paths[p], 1 <= p <= counted_length

  std::int64_t separation_threshold = 0;  // 5^(k+2)
  int min_poisson_distance = 0;           // kUnreachable when < 2 objects meet
  bool low_degree_pair_separated = true;  // degree R-2 vs other degree <= R-1
  bool low_degree_cycle_separated = true; // degree <= R-1 vs short cycle
  bool cycle_pair_separated = true;
  bool path_pair_separated = true;

  int min_component_size = 0;
  std::optional<int> connectivity;
  std::optional<bool> rigid;
};

// Throws BudgetExceeded when the enumeration outgrows the options' budgets.
std::pair<StructureProfile, CensusReport> census(const Graph& g, int k,
                                                 const CensusOptions& options = {});

// Membership of the censused graph in the class indexed by `target`.
// Throws ContractViolation when the report is incomplete or k differs.
bool in_class(const StructureProfile& target, const CensusReport& report);

// "stat,value" CSV rows (header included).
void write_census_csv(std::ostream& out, const StructureProfile& profile,
                      const CensusReport& report);

}  // namespace maxdeg
