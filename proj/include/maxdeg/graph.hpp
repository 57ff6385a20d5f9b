#pragma once

// Core value types: simple graphs with a maximum-degree bound, multigraphs
// (loops and parallel edges allowed), and configurations (points grouped in
// cells plus a perfect matching on the points).
//
// Vertices are 0-based in the API (0..n-1). The text format on disk is
// 1-based.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace maxdeg {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple labelled graph whose degrees are all at most `max_degree`.
// Adjacency is stored CSR-style with each neighbor range sorted.
class Graph {
 public:
  Graph() = default;
  // Throws ContractViolation on loops, duplicate edges, out-of-range
  // endpoints, or a vertex whose degree exceeds max_degree.
  Graph(int n, int max_degree, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int max_degree() const noexcept { return max_degree_; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const int> neighbors(int v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(int u, int v) const;

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degree_histogram() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.neighbors_ == b.neighbors_;
  }

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<int> offsets_{0};
  std::vector<int> neighbors_;
};

struct MultiEdge {
  int u = 0;  // u <= v; u == v is a loop
  int v = 0;
  int count = 0;
  friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

// Multigraph on vertices 0..n-1: a multiplicity for every unordered pair and
// every singleton (loops). A loop contributes 2 to the degree of its vertex.
class Multigraph {
 public:
  Multigraph() = default;
  // Entries with the same endpoints are merged; zero counts are dropped.
  Multigraph(int n, std::vector<MultiEdge> entries);

  int order() const noexcept { return n_; }
  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int multiplicity(int u, int v) const;
  std::span<const MultiEdge> entries() const noexcept { return entries_; }

  std::int64_t loop_count() const;
  // Number of unordered pairs of parallel non-loop edges, i.e. the 2-cycles.
  std::int64_t parallel_pair_count() const;
  bool is_simple() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<MultiEdge> entries_;  // sorted by (u, v)
  std::vector<int> degrees_;
};

std::optional<Graph> as_simple(const Multigraph& m, int max_degree);
// Throws ContractViolation when m has a loop or a parallel edge.
Graph to_graph(const Multigraph& m, int max_degree);

// Points 0..2m-1 are laid out cell by cell: cell i owns a contiguous block of
// cell_sizes[i] points. partner[p] is the point matched with p.
class Configuration {
 public:
  Configuration(std::vector<int> cell_sizes, std::vector<int> partner);

  int cell_count() const noexcept { return static_cast<int>(cell_sizes_.size()); }
  int point_count() const noexcept { return static_cast<int>(partner_.size()); }
  const std::vector<int>& cell_sizes() const noexcept { return cell_sizes_; }
  const std::vector<int>& partner() const noexcept { return partner_; }
  int cell_of(int point) const { return point_cell_[point]; }

 private:
  std::vector<int> cell_sizes_;
  std::vector<int> partner_;
  std::vector<int> point_cell_;
};

// Projects every matched pair onto the cells that contain its two points.
Multigraph graph_image(const Configuration& c);

// Graph text format: "n R" on the first line, then "u v" per edge with
// 1-based endpoints and u < v, LF line endings. In a stream of several graphs
// each graph is followed by one blank line.
void write_graph(std::ostream& out, const Graph& g);
std::string to_text(const Graph& g);
Graph read_graph(std::istream& in);
Graph graph_from_text(const std::string& text);
// Reads graphs until EOF. Blank lines separate graphs.
std::vector<Graph> read_graphs(std::istream& in);

}  // namespace maxdeg
