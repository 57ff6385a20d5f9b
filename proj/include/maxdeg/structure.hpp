#pragma once

// Structural statistics of simple graphs and multigraphs.

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "maxdeg/graph.hpp"

namespace maxdeg {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Vertices at distance <= radius from v, sorted.
std::vector<int> ball(const Graph& g, int v, int radius);

// Breadth-first distances from a set of sources; kUnreachable where no path
// exists. Stops expanding past max_depth.
std::vector<int> distances_from(const Graph& g, std::span<const int> sources,
                                int max_depth = kUnreachable);

// Enumeration callbacks return false to stop early. Every cycle is reported
// once (starting point and orientation are quotiented out) as its vertex
// sequence starting at its smallest vertex; every path once, as a vertex
// sequence whose first endpoint is the smaller one.
using WalkVisitor = std::function<bool(std::span<const int>)>;

// Cycles with exactly `length` edges (length >= 3). Returns the number of
// cycles visited. Throws BudgetExceeded when more than `work_budget` search
// steps are needed.
std::uint64_t enumerate_cycles(const Graph& g, int length, const WalkVisitor& visit,
                               std::uint64_t work_budget = std::numeric_limits<std::uint64_t>::max());

// Vertex-simple paths with exactly `length` edges whose two endpoints both
// have degree `endpoint_degree`.
std::uint64_t enumerate_paths(const Graph& g, int length, int endpoint_degree,
                              const WalkVisitor& visit,
                              std::uint64_t work_budget = std::numeric_limits<std::uint64_t>::max());

std::uint64_t count_cycles(const Graph& g, int length);
std::uint64_t count_paths_endpoints_degree(const Graph& g, int length, int endpoint_degree);

// Cycles of a multigraph in the configuration sense: length 1 counts loops,
// length 2 counts pairs of parallel edges, longer cycles are weighted by the
// product of edge multiplicities along them.
std::uint64_t count_cycles(const Multigraph& m, int length);

// Sizes of the connected components, sorted ascending.
std::vector<int> component_sizes(const Graph& g);
// Component id per vertex, numbered in order of smallest member.
std::vector<int> component_labels(const Graph& g);

// Exact vertex connectivity. Complete graphs give n - 1. Requires n >= 2.
int vertex_connectivity(const Graph& g);

// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
// s != t, stopping once `limit` paths are found.
int local_vertex_connectivity(const Graph& g, int s, int t,
                              int limit = std::numeric_limits<int>::max());

// True iff the only automorphism is the identity. Search by colour
// refinement plus individualization; throws BudgetExceeded above `cap`
// vertices.
bool is_rigid(const Graph& g, int cap = 1000);

// Exact isomorphism test by degree-respecting backtracking; throws
// BudgetExceeded when either graph has more than `cap` vertices.
bool isomorphic(const Graph& g, const Graph& h, int cap = 10);

}  // namespace maxdeg
