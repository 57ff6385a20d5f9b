#include "maxdeg/census.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "maxdeg/errors.hpp"
#include "maxdeg/structure.hpp"

namespace maxdeg {

namespace {

std::int64_t pow5(int e) {
  if (e < 0 || e > 10) throw ContractViolation("census rank must lie in 1..8");
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= 5;
  return out;
}

enum class ObjectKind { low_vertex, cycle, path };

struct PoissonObject {
  ObjectKind kind;
  std::vector<int> vertices;
};

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++used_ > limit_) throw BudgetExceeded("census: enumeration exceeded its work budget");
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// One depth-first pass per root finds every cycle of length 3..max_len
// (rooted at its smallest vertex, orientation fixed by path[1] < last).
void collect_cycles(const Graph& g, int max_len, Budget& budget,
                    std::vector<std::uint64_t>& counts, std::vector<PoissonObject>& objects,
                    std::size_t object_budget) {
  const int n = g.order();
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  auto extend = [&](auto&& self, int root) -> void {
    budget.tick();
    const int tip = path.back();
    const int len = static_cast<int>(path.size());
    if (len >= 3 && path[1] < tip && g.adjacent(tip, root)) {
      ++counts[len];
      if (objects.size() >= object_budget)
        throw BudgetExceeded("census: too many Poisson objects for the separation pass");
      objects.push_back({ObjectKind::cycle, path});
    }
    if (len == max_len) return;
    for (int w : g.neighbors(tip)) {
      if (w <= root || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, root);
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    extend(extend, root);
    on_path[root] = 0;
  }
}

void collect_paths(const Graph& g, int max_len, int endpoint_degree, Budget& budget,
                   std::vector<std::uint64_t>& counts, std::vector<PoissonObject>& objects,
                   std::size_t object_budget) {
  const int n = g.order();
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  auto extend = [&](auto&& self, int start) -> void {
    budget.tick();
    const int tip = path.back();
    const int len = static_cast<int>(path.size()) - 1;
    if (len >= 1 && start < tip && g.degree(tip) == endpoint_degree) {
      ++counts[len];
      if (objects.size() >= object_budget)
        throw BudgetExceeded("census: too many Poisson objects for the separation pass");
      objects.push_back({ObjectKind::path, path});
    }
    if (len == max_len) return;
    for (int w : g.neighbors(tip)) {
      if (on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, start);
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (int start = 0; start < n; ++start) {
    if (g.degree(start) != endpoint_degree) continue;
    path.assign(1, start);
    on_path[start] = 1;
    extend(extend, start);
    on_path[start] = 0;
  }
}

int set_distance(const std::vector<int>& dist, const std::vector<int>& vertices) {
  int best = kUnreachable;
  for (int v : vertices) best = std::min(best, dist[v]);
  return best;
}

}  // namespace

std::int64_t census_length(int k) {
  if (k < 1 || k > 8) throw ContractViolation("census rank must lie in 1..8");
  return pow5(k + 1);
}

std::int64_t census_separation(int k) {
  if (k < 1 || k > 8) throw ContractViolation("census rank must lie in 1..8");
  return pow5(k + 2);
}

StructureProfile StructureProfile::zero(int k) {
  if (k < 1) throw ContractViolation("profile rank must be >= 1");
  StructureProfile p;
  p.k = k;
  const auto m = static_cast<std::size_t>(census_length(k));
  p.cycles.assign(m + 1, 0);
  p.paths.assign(m + 1, 0);
  return p;
}

bool StructureProfile::well_formed() const {
  if (k < 1) return false;
  const auto m = static_cast<std::size_t>(census_length(k));
  if (cycles.size() != m + 1 || paths.size() != m + 1) return false;
  auto in_range = [&](int x) { return x >= 0 && x <= k; };
  if (!in_range(q)) return false;
  if (cycles[0] != 0 || cycles[1] != 0 || cycles[2] != 0 || paths[0] != 0) return false;
  return std::all_of(cycles.begin(), cycles.end(), in_range) &&
         std::all_of(paths.begin(), paths.end(), in_range);
}

std::pair<StructureProfile, CensusReport> census(const Graph& g, int k,
                                                 const CensusOptions& options) {
  if (k < 1) throw ContractViolation("census: k must be >= 1");
  const int n = g.order();
  const int R = g.max_degree();

  CensusReport rep;
  rep.n = n;
  rep.max_degree = R;
  rep.k = k;
  rep.m = census_length(k);
  rep.separation_threshold = census_separation(k);
  const std::int64_t requested =
      options.max_length > 0 ? std::min<std::int64_t>(options.max_length, rep.m) : rep.m;
  rep.counted_length = static_cast<int>(std::min<std::int64_t>(requested, 1 << 30));
  rep.objects_complete = requested == rep.m;
  rep.degree_histogram = g.degree_histogram();

  // Nothing longer than n edges can be a cycle, nor n - 1 edges a path.
  const int enum_len = static_cast<int>(std::min<std::int64_t>(requested, n));
  const std::size_t slots = static_cast<std::size_t>(std::min<std::int64_t>(requested, n)) + 1;
  rep.cycles.assign(slots, 0);
  rep.paths.assign(slots, 0);

  std::vector<PoissonObject> objects;
  Budget budget(options.work_budget);
  if (R >= 2)
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == R - 2) objects.push_back({ObjectKind::low_vertex, {v}});
  if (enum_len >= 3) collect_cycles(g, enum_len, budget, rep.cycles, objects, options.object_budget);
  if (R >= 1 && enum_len >= 1)
    collect_paths(g, enum_len, R - 1, budget, rep.paths, objects, options.object_budget);

  const auto D = rep.separation_threshold;
  std::vector<int> low;  // degree <= R-1
  for (int v = 0; v < n; ++v)
    if (g.degree(v) <= R - 1) low.push_back(v);

  // (a) degree R-2 vertices versus other low-degree vertices.
  for (const auto& obj : objects) {
    if (obj.kind != ObjectKind::low_vertex) continue;
    const auto dist = distances_from(g, obj.vertices, static_cast<int>(std::min<std::int64_t>(D, n)));
    for (int w : low)
      if (w != obj.vertices[0] && dist[w] < D) rep.low_degree_pair_separated = false;
  }
  // (b) low-degree vertices versus short cycles.
  if (!low.empty()) {
    const auto dist = distances_from(g, low);
    for (const auto& obj : objects)
      if (obj.kind == ObjectKind::cycle && set_distance(dist, obj.vertices) < D)
        rep.low_degree_cycle_separated = false;
  }
  // Pairwise distances between objects: (c), (d) and the overall minimum.
  rep.min_poisson_distance = kUnreachable;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto dist = distances_from(g, objects[i].vertices);
    for (std::size_t j = i + 1; j < objects.size(); ++j) {
      const int d = set_distance(dist, objects[j].vertices);
      rep.min_poisson_distance = std::min(rep.min_poisson_distance, d);
      if (d >= D) continue;
      if (objects[i].kind == ObjectKind::cycle && objects[j].kind == ObjectKind::cycle)
        rep.cycle_pair_separated = false;
      if (objects[i].kind == ObjectKind::path && objects[j].kind == ObjectKind::path)
        rep.path_pair_separated = false;
    }
  }

  const auto sizes = component_sizes(g);
  rep.min_component_size = sizes.empty() ? 0 : sizes.front();
  if (options.connectivity && n >= 2) rep.connectivity = vertex_connectivity(g);
  if (options.rigidity) rep.rigid = is_rigid(g);

  StructureProfile prof = StructureProfile::zero(k);
  auto cap = [k](std::uint64_t x) { return static_cast<int>(std::min<std::uint64_t>(x, k)); };
  if (R >= 2) prof.q = cap(static_cast<std::uint64_t>(rep.degree_histogram[R - 2]));
  for (std::size_t p = 3; p < rep.cycles.size(); ++p) prof.cycles[p] = cap(rep.cycles[p]);
  for (std::size_t p = 1; p < rep.paths.size(); ++p) prof.paths[p] = cap(rep.paths[p]);
  return {std::move(prof), std::move(rep)};
}

bool in_class(const StructureProfile& target, const CensusReport& r) {
  if (!target.well_formed()) throw ContractViolation("in_class: malformed profile");
  if (target.k != r.k) throw ContractViolation("in_class: profile and report ranks differ");
  if (!r.objects_complete)
    throw ContractViolation("in_class: census did not enumerate lengths up to m");
  const int R = r.max_degree;
  const int k = target.k;
  auto matches = [k](int want, std::uint64_t have) {
    return want < k ? have == static_cast<std::uint64_t>(want) : have >= static_cast<std::uint64_t>(k);
  };
  auto hist = [&](int d) -> std::uint64_t {
    return (d >= 0 && d <= R) ? static_cast<std::uint64_t>(r.degree_histogram[d]) : 0;
  };
  auto count_at = [](const std::vector<std::uint64_t>& v, std::int64_t p) -> std::uint64_t {
    return p < static_cast<std::int64_t>(v.size()) ? v[p] : 0;
  };

  for (int d = 0; d < R - 2; ++d)
    if (hist(d) != 0) return false;                                   // 1
  if (!matches(target.q, R >= 2 ? hist(R - 2) : 0)) return false;     // 2
  if (hist(R - 1) < static_cast<std::uint64_t>(r.m) ||
      hist(R) < static_cast<std::uint64_t>(r.m))
    return false;                                                     // 3
  for (std::int64_t p = 3; p <= r.m; ++p)
    if (!matches(target.cycles[p], count_at(r.cycles, p))) return false;  // 4
  for (std::int64_t p = 1; p <= r.m; ++p)
    if (!matches(target.paths[p], count_at(r.paths, p))) return false;    // 5
  if (!(r.low_degree_pair_separated && r.low_degree_cycle_separated &&
        r.cycle_pair_separated && r.path_pair_separated))
    return false;                                                     // 6
  if (R >= 3 && r.min_component_size < r.m) return false;             // 7
  return true;
}

void write_census_csv(std::ostream& out, const StructureProfile& prof, const CensusReport& r) {
  out << "stat,value\n";
  out << "n," << r.n << "\nR," << r.max_degree << "\nk," << r.k << "\nm," << r.m
      << "\ncounted_length," << r.counted_length
      << "\nobjects_complete," << (r.objects_complete ? 1 : 0) << '\n';
  for (std::size_t d = 0; d < r.degree_histogram.size(); ++d)
    out << "degree_" << d << ',' << r.degree_histogram[d] << '\n';
  for (std::size_t p = 3; p < r.cycles.size(); ++p) out << "cycles_" << p << ',' << r.cycles[p] << '\n';
  for (std::size_t p = 1; p < r.paths.size(); ++p) out << "paths_" << p << ',' << r.paths[p] << '\n';
  out << "profile_q," << prof.q << '\n';
  out << "min_poisson_distance,";
  if (r.min_poisson_distance == kUnreachable)
    out << "inf\n";
  else
    out << r.min_poisson_distance << '\n';
  out << "separation_threshold," << r.separation_threshold << '\n';
  out << "low_degree_pair_separated," << r.low_degree_pair_separated << '\n';
  out << "low_degree_cycle_separated," << r.low_degree_cycle_separated << '\n';
  out << "cycle_pair_separated," << r.cycle_pair_separated << '\n';
  out << "path_pair_separated," << r.path_pair_separated << '\n';
  out << "min_component_size," << r.min_component_size << '\n';
  if (r.connectivity) out << "connectivity," << *r.connectivity << '\n';
  if (r.rigid) out << "rigid," << (*r.rigid ? 1 : 0) << '\n';
  if (r.objects_complete) out << "in_own_class," << (in_class(prof, r) ? 1 : 0) << '\n';
}

}  // namespace maxdeg
