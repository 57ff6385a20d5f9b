#include "maxdeg/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "maxdeg/errors.hpp"

namespace maxdeg {

Graph::Graph(int n, int max_degree, std::span<const Edge> edges)
    : n_(n), max_degree_(max_degree) {
  if (n < 0) throw ContractViolation("graph: negative vertex count");
  if (max_degree < 0) throw ContractViolation("graph: negative degree bound");
  std::vector<int> deg(n, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ContractViolation("graph: edge endpoint out of range");
    if (e.u == e.v) throw ContractViolation("graph: self-loop");
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    if (deg[v] > max_degree)
      throw ContractViolation("graph: vertex " + std::to_string(v + 1) +
                              " has degree " + std::to_string(deg[v]) +
                              " > " + std::to_string(max_degree));
    offsets_[v + 1] = offsets_[v] + deg[v];
  }
  neighbors_.assign(offsets_[n], 0);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    neighbors_[fill[e.u]++] = e.v;
    neighbors_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) {
    auto first = neighbors_.begin() + offsets_[v];
    auto last = neighbors_.begin() + offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last)
      throw ContractViolation("graph: duplicate edge at vertex " + std::to_string(v + 1));
  }
}

bool Graph::adjacent(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

std::vector<int> Graph::degree_histogram() const {
  std::vector<int> hist(max_degree_ + 1, 0);
  for (int v = 0; v < n_; ++v) ++hist[degree(v)];
  return hist;
}

Multigraph::Multigraph(int n, std::vector<MultiEdge> entries) : n_(n), degrees_(n, 0) {
  for (MultiEdge& e : entries) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) throw ContractViolation("multigraph: endpoint out of range");
    if (e.count < 0) throw ContractViolation("multigraph: negative multiplicity");
  }
  std::sort(entries.begin(), entries.end(), [](const MultiEdge& a, const MultiEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (const MultiEdge& e : entries) {
    if (e.count == 0) continue;
    if (!entries_.empty() && entries_.back().u == e.u && entries_.back().v == e.v)
      entries_.back().count += e.count;
    else
      entries_.push_back(e);
  }
  for (const MultiEdge& e : entries_) {
    if (e.u == e.v) {
      degrees_[e.u] += 2 * e.count;
    } else {
      degrees_[e.u] += e.count;
      degrees_[e.v] += e.count;
    }
  }
}

int Multigraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), MultiEdge{u, v, 0},
                             [](const MultiEdge& a, const MultiEdge& b) {
                               return a.u != b.u ? a.u < b.u : a.v < b.v;
                             });
  return (it != entries_.end() && it->u == u && it->v == v) ? it->count : 0;
}

std::int64_t Multigraph::loop_count() const {
  std::int64_t total = 0;
  for (const MultiEdge& e : entries_)
    if (e.u == e.v) total += e.count;
  return total;
}

std::int64_t Multigraph::parallel_pair_count() const {
  std::int64_t total = 0;
  for (const MultiEdge& e : entries_)
    if (e.u != e.v) total += std::int64_t{e.count} * (e.count - 1) / 2;
  return total;
}

bool Multigraph::is_simple() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const MultiEdge& e) { return e.u != e.v && e.count == 1; });
}

std::optional<Graph> as_simple(const Multigraph& m, int max_degree) {
  if (!m.is_simple()) return std::nullopt;
  std::vector<Edge> edges;
  edges.reserve(m.entries().size());
  for (const MultiEdge& e : m.entries()) edges.push_back({e.u, e.v});
  return Graph(m.order(), max_degree, edges);
}

Graph to_graph(const Multigraph& m, int max_degree) {
  auto g = as_simple(m, max_degree);
  if (!g) throw ContractViolation("to_graph: multigraph has a loop or a parallel edge");
  return *std::move(g);
}

Configuration::Configuration(std::vector<int> cell_sizes, std::vector<int> partner)
    : cell_sizes_(std::move(cell_sizes)), partner_(std::move(partner)) {
  std::size_t total = 0;
  for (int s : cell_sizes_) {
    if (s < 0) throw ContractViolation("configuration: negative cell size");
    total += static_cast<std::size_t>(s);
  }
  if (total % 2 != 0) throw ContractViolation("configuration: odd number of points");
  if (partner_.size() != total)
    throw ContractViolation("configuration: matching does not cover every point");
  point_cell_.reserve(total);
  for (int c = 0; c < cell_count(); ++c) point_cell_.insert(point_cell_.end(), cell_sizes_[c], c);
  const int points = static_cast<int>(total);
  for (int p = 0; p < points; ++p) {
    const int q = partner_[p];
    if (q < 0 || q >= points || q == p || partner_[q] != p)
      throw ContractViolation("configuration: partner array is not a perfect matching");
  }
}

Multigraph graph_image(const Configuration& c) {
  std::vector<MultiEdge> entries;
  entries.reserve(c.point_count() / 2);
  for (int p = 0; p < c.point_count(); ++p) {
    const int q = c.partner()[p];
    if (p < q) entries.push_back({c.cell_of(p), c.cell_of(q), 1});
  }
  return Multigraph(c.cell_count(), std::move(entries));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.max_degree() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string to_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Reads one graph whose header is `header`; consumes edge lines up to the
// next blank line or EOF. `line_no` tracks the 1-based line position.
Graph parse_graph_block(std::istream& in, const std::string& header, std::size_t& line_no) {
  std::istringstream hs(header);
  long long n = -1, r = -1;
  std::string extra;
  if (!(hs >> n >> r) || (hs >> extra) || n < 0 || r < 0)
    throw ParseError("graph text: header must be \"n R\"", line_no);
  std::vector<Edge> edges;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) break;
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u >> v) || (ls >> extra))
      throw ParseError("graph text: edge line must be \"u v\"", line_no);
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError("graph text: endpoint out of range", line_no);
    if (u >= v) throw ParseError("graph text: edge must satisfy u < v", line_no);
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
  }
  try {
    return Graph(static_cast<int>(n), static_cast<int>(r), edges);
  } catch (const ContractViolation& e) {
    throw ParseError(std::string("graph text: ") + e.what(), line_no);
  }
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) return parse_graph_block(in, line, line_no);
  }
  throw ParseError("graph text: missing header", line_no);
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    out.push_back(parse_graph_block(in, line, line_no));
  }
  return out;
}

}  // namespace maxdeg
