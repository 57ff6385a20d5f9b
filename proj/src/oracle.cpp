#include "maxdeg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "maxdeg/errors.hpp"

namespace maxdeg::oracle {

std::size_t EnsembleTable::index_of(const Graph& g) const {
  const auto it = index_.find(g.edges());
  if (g.order() != n || it == index_.end())
    throw ContractViolation("graph is not in the enumerated ensemble");
  return it->second;
}

EnsembleTable enumerate_graphs(int n, int R, int cap) {
  if (cap > 8) throw BudgetExceeded("graph enumeration cap cannot exceed 8");
  if (n > cap) throw BudgetExceeded("graph enumeration beyond the vertex cap");
  if (n < 0 || R < 0) throw ContractViolation("enumerate_graphs: needs n, R >= 0");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});

  EnsembleTable table;
  table.n = n;
  table.R = R;
  std::vector<int> degree(n, 0);
  std::vector<Edge> chosen;
  std::vector<std::vector<Edge>> found;
  // Include/exclude each pair in order, pruning on the degree bound.
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == pairs.size()) {
      found.push_back(chosen);
      return;
    }
    const Edge e = pairs[i];
    rec(i + 1);
    if (degree[e.u] < R && degree[e.v] < R) {
      ++degree[e.u];
      ++degree[e.v];
      chosen.push_back(e);
      rec(i + 1);
      chosen.pop_back();
      --degree[e.u];
      --degree[e.v];
    }
  };
  rec(0);
  std::sort(found.begin(), found.end());
  for (std::size_t i = 0; i < found.size(); ++i) {
    table.index_.emplace(found[i], i);
    table.graphs.emplace_back(n, R, found[i]);
  }
  return table;
}

std::int64_t count_graphs_bruteforce(int n, int R) {
  if (n > 8) throw BudgetExceeded("brute-force recount beyond 8 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::int64_t count = 0;
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<int> degree(n, 0);
    bool ok = true;
    for (std::size_t i = 0; i < pairs.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ok = ++degree[pairs[i].first] <= R && ++degree[pairs[i].second] <= R;
    }
    if (ok) ++count;
  }
  return count;
}

namespace {

std::vector<int> image_key(const Multigraph& m) {
  std::vector<int> key;
  for (const MultiEdge& e : m.entries()) key.insert(key.end(), {e.u, e.v, e.count});
  return key;
}

// Calls visit(partner) for every perfect matching of points 0..size-1.
void for_each_matching(int size, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> partner(size, -1);
  std::function<void()> rec = [&] {
    int first = 0;
    while (first < size && partner[first] >= 0) ++first;
    if (first == size) {
      visit(partner);
      return;
    }
    for (int other = first + 1; other < size; ++other) {
      if (partner[other] >= 0) continue;
      partner[first] = other;
      partner[other] = first;
      rec();
      partner[first] = partner[other] = -1;
    }
  };
  rec();
}

}  // namespace

ConfigurationTable enumerate_configurations(const std::vector<int>& cell_sizes, int point_cap) {
  int total = 0;
  for (int s : cell_sizes) {
    if (s < 0) throw ContractViolation("enumerate_configurations: negative cell size");
    total += s;
  }
  if (total % 2 != 0) throw ContractViolation("enumerate_configurations: odd number of points");
  if (total > point_cap || point_cap > 12)
    throw BudgetExceeded("configuration enumeration beyond 12 points");
  ConfigurationTable table;
  std::map<std::vector<int>, std::size_t> group_of;
  for_each_matching(total, [&](const std::vector<int>& partner) {
    Configuration c(cell_sizes, partner);
    Multigraph image = graph_image(c);
    if (image.is_simple()) ++table.simple;
    auto [it, fresh] = group_of.emplace(image_key(image), table.by_image.size());
    if (fresh) table.by_image.push_back({std::move(image), 0});
    ++table.by_image[it->second].configurations;
    table.configurations.push_back(std::move(c));
  });
  return table;
}

mpq_class class_configuration_mass(const DegreeClass& d, int point_cap) {
  if (!d.even()) return 0;
  if (d.twice_edges() > point_cap) throw BudgetExceeded("class mass beyond the point cap");
  std::vector<int> sequence;
  for (int i = 0; i <= d.max_degree(); ++i) sequence.insert(sequence.end(), d[i], i);
  std::sort(sequence.begin(), sequence.end());
  mpz_class configurations = 0;
  do {
    // Count matchings on this arrangement one by one.
    std::int64_t here = 0;
    for_each_matching(static_cast<int>(d.twice_edges()), [&](const std::vector<int>&) { ++here; });
    configurations += static_cast<long>(here);
  } while (std::next_permutation(sequence.begin(), sequence.end()));
  mpz_class automorphisms = 1;
  for (int i = 2; i <= d.max_degree(); ++i) {
    mpz_class f = 1;
    for (int j = 2; j <= i; ++j) f *= j;
    for (std::int64_t c = 0; c < d[i]; ++c) automorphisms *= f;
  }
  mpq_class out(configurations, automorphisms);
  out.canonicalize();
  return out;
}

std::map<DegreeClass, std::int64_t> graphs_per_class(const EnsembleTable& table) {
  std::map<DegreeClass, std::int64_t> out;
  for (const Graph& g : table.graphs) {
    const std::vector<int> h = g.degree_histogram();
    ++out[DegreeClass(std::vector<std::int64_t>(h.begin(), h.end()))];
  }
  return out;
}

Pmf exact_statistic_distribution(int n, int R, const Statistic& statistic, int cap) {
  const EnsembleTable table = enumerate_graphs(n, R, cap);
  std::map<std::int64_t, std::int64_t> counts;
  for (const Graph& g : table.graphs) ++counts[statistic(g)];
  Pmf pmf;
  const auto total = static_cast<long>(table.graphs.size());
  for (auto [value, count] : counts) {
    mpq_class p(static_cast<long>(count), total);
    p.canonicalize();
    pmf.emplace(value, p);
  }
  return pmf;
}

void write_pmf_csv(std::ostream& out, const Pmf& pmf) {
  out << "value,probability_num,probability_den\n";
  for (const auto& [value, p] : pmf)
    out << value << ',' << p.get_num().get_str() << ',' << p.get_den().get_str() << '\n';
}

std::vector<std::uint8_t> canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 7) throw BudgetExceeded("canonical form beyond 7 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> code(static_cast<std::size_t>(n * (n - 1) / 2 + 1));
  do {
    // code[...] = adjacency of (perm[u], perm[v]) for u < v in row order
    std::size_t at = 0;
    code[at++] = static_cast<std::uint8_t>(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) code[at++] = g.adjacent(perm[u], perm[v]) ? 1 : 0;
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best = {0};
  return best;
}

std::int64_t count_unlabelled(int n, int R) {
  if (n > 7) throw BudgetExceeded("unlabelled count beyond 7 vertices");
  const EnsembleTable table = enumerate_graphs(n, R, 7);
  std::set<std::vector<std::uint8_t>> classes;
  for (const Graph& g : table.graphs) classes.insert(canonical_form(g));
  return static_cast<std::int64_t>(classes.size());
}

void write_dump(std::ostream& out, const EnsembleTable& table) {
  for (const Graph& g : table.graphs) {
    std::string text = to_text(g);
    while (!text.empty() && text.back() == '\n') text.pop_back();
    std::replace(text.begin(), text.end(), '\n', ';');
    out << text << '\n';
  }
}

}  // namespace maxdeg::oracle
