#include "maxdeg/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <string>

#include "maxdeg/errors.hpp"

namespace maxdeg {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw ContractViolation("vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(g.order()) + ")");
}

class WorkMeter {
 public:
  explicit WorkMeter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (++used_ > budget_) throw BudgetExceeded("walk enumeration exceeded its work budget");
  }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

}  // namespace

std::vector<int> distances_from(const Graph& g, std::span<const int> sources, int max_depth) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::queue<int> frontier;
  for (int s : sources) {
    check_vertex(g, s);
    if (dist[s] != 0) {
      dist[s] = 0;
      frontier.push(s);
    }
  }
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    if (dist[u] >= max_depth) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::vector<int> ball(const Graph& g, int v, int radius) {
  check_vertex(g, v);
  if (radius < 0) throw ContractViolation("ball: negative radius");
  const int src[] = {v};
  const auto dist = distances_from(g, src, radius);
  std::vector<int> out;
  for (int w = 0; w < g.order(); ++w)
    if (dist[w] <= radius) out.push_back(w);
  return out;
}

std::uint64_t enumerate_cycles(const Graph& g, int length, const WalkVisitor& visit,
                               std::uint64_t work_budget) {
  if (length < 3) throw ContractViolation("graph cycles need length >= 3");
  const int n = g.order();
  WorkMeter meter(work_budget);
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::uint64_t found = 0;
  bool stop = false;

  // Cycles are rooted at their smallest vertex; the orientation is fixed by
  // requiring path[1] < path.back().
  auto extend = [&](auto&& self, int root) -> void {
    meter.tick();
    const int tip = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (path[1] < tip && g.adjacent(tip, root)) {
        ++found;
        if (!visit(path)) stop = true;
      }
      return;
    }
    for (int w : g.neighbors(tip)) {
      if (w <= root || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, root);
      on_path[w] = 0;
      path.pop_back();
      if (stop) return;
    }
  };
  for (int root = 0; root < n && !stop; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    extend(extend, root);
    on_path[root] = 0;
  }
  return found;
}

std::uint64_t enumerate_paths(const Graph& g, int length, int endpoint_degree,
                              const WalkVisitor& visit, std::uint64_t work_budget) {
  if (length < 1) throw ContractViolation("paths need length >= 1");
  const int n = g.order();
  WorkMeter meter(work_budget);
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::uint64_t found = 0;
  bool stop = false;

  auto extend = [&](auto&& self, int start) -> void {
    meter.tick();
    const int tip = path.back();
    if (static_cast<int>(path.size()) == length + 1) {
      if (start < tip && g.degree(tip) == endpoint_degree) {
        ++found;
        if (!visit(path)) stop = true;
      }
      return;
    }
    for (int w : g.neighbors(tip)) {
      if (on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, start);
      on_path[w] = 0;
      path.pop_back();
      if (stop) return;
    }
  };
  for (int start = 0; start < n && !stop; ++start) {
    if (g.degree(start) != endpoint_degree) continue;
    path.assign(1, start);
    on_path[start] = 1;
    extend(extend, start);
    on_path[start] = 0;
  }
  return found;
}

std::uint64_t count_cycles(const Graph& g, int length) {
  return enumerate_cycles(g, length, [](std::span<const int>) { return true; });
}

std::uint64_t count_paths_endpoints_degree(const Graph& g, int length, int endpoint_degree) {
  return enumerate_paths(g, length, endpoint_degree, [](std::span<const int>) { return true; });
}

std::uint64_t count_cycles(const Multigraph& m, int length) {
  if (length < 1) throw ContractViolation("cycles need length >= 1");
  if (length == 1) return static_cast<std::uint64_t>(m.loop_count());
  if (length == 2) return static_cast<std::uint64_t>(m.parallel_pair_count());

  // Underlying simple adjacency with multiplicities, loops dropped.
  const int n = m.order();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const MultiEdge& e : m.entries()) {
    if (e.u == e.v) continue;
    adj[e.u].push_back({e.v, e.count});
    adj[e.v].push_back({e.u, e.count});
  }
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  std::uint64_t total = 0;
  auto extend = [&](auto&& self, int root, std::uint64_t weight) -> void {
    const int tip = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (path[1] < tip) {
        const int back = m.multiplicity(tip, root);
        total += weight * static_cast<std::uint64_t>(back);
      }
      return;
    }
    for (auto [w, mult] : adj[tip]) {
      if (w <= root || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, root, weight * static_cast<std::uint64_t>(mult));
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    extend(extend, root, 1);
    on_path[root] = 0;
  }
  return total;
}

std::vector<int> component_labels(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<int> component_sizes(const Graph& g) {
  const auto label = component_labels(g);
  const int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<int> sizes(count, 0);
  for (int l : label) ++sizes[l];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// ---------------------------------------------------------------------------
// Vertex connectivity: unit-capacity max-flow on the vertex-split network.

namespace {

class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, int s, int t) : head_(2 * g.order(), -1) {
    const int n = g.order();
    constexpr int kInf = 1 << 29;
    for (int v = 0; v < n; ++v) add_arc(in(v), out(v), (v == s || v == t) ? kInf : 1);
    for (int u = 0; u < n; ++u)
      for (int w : g.neighbors(u)) add_arc(out(u), in(w), kInf);
  }

  // Pushes unit augmenting paths until none remain or `limit` is reached.
  int max_flow(int s, int t, int limit) {
    const int source = out(s);
    const int sink = in(t);
    std::vector<int> via(head_.size());
    int flow = 0;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> frontier{source};
      via[source] = -2;
      while (!frontier.empty() && via[sink] == -1) {
        const int x = frontier.front();
        frontier.pop_front();
        for (int a = head_[x]; a >= 0; a = next_[a]) {
          const int y = to_[a];
          if (cap_[a] > 0 && via[y] == -1) {
            via[y] = a;
            frontier.push_back(y);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int y = sink; y != source; y = to_[via[y] ^ 1]) {
        --cap_[via[y]];
        ++cap_[via[y] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  void add_arc(int from, int to, int cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t || g.adjacent(s, t))
    throw ContractViolation("local connectivity needs distinct non-adjacent vertices");
  SplitNetwork net(g, s, t);
  return net.max_flow(s, t, limit);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw ContractViolation("vertex connectivity is undefined for n < 2");
  if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2) return n - 1;

  // Esfahanian-Hakimi: a minimum-degree vertex x is either outside some
  // minimum separator (then it is separated from a non-neighbor) or in one
  // (then two of its neighbors are separated).
  int x = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(x)) x = v;
  int best = g.degree(x);
  for (int v = 0; v < n && best > 0; ++v) {
    if (v == x || g.adjacent(x, v)) continue;
    best = std::min(best, local_vertex_connectivity(g, x, v, best));
  }
  const auto nb = g.neighbors(x);
  for (std::size_t i = 0; i < nb.size() && best > 0; ++i)
    for (std::size_t j = i + 1; j < nb.size() && best > 0; ++j)
      if (!g.adjacent(nb[i], nb[j]))
        best = std::min(best, local_vertex_connectivity(g, nb[i], nb[j], best));
  return best;
}

// ---------------------------------------------------------------------------
// Automorphisms: colour refinement with individualization.

namespace {

// One or two copies of g side by side; vertex c * n + v is v in copy c.
class Refiner {
 public:
  Refiner(const Graph& g, int copies) : g_(g), copies_(copies) {}

  int size() const { return copies_ * g_.order(); }

  // Refines to the coarsest equitable colouring finer than `colors`. Colour
  // ids are ranks of signatures, so they are consistent across copies.
  void refine(std::vector<int>& colors) const {
    const int total = size();
    const int n = g_.order();
    int classes = distinct(colors);
    std::vector<std::vector<int>> sig(total);
    std::vector<int> order(total);
    while (true) {
      for (int x = 0; x < total; ++x) {
        const int base = (x / n) * n;
        auto& s = sig[x];
        s.clear();
        s.push_back(colors[x]);
        for (int w : g_.neighbors(x % n)) s.push_back(colors[base + w]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int next = 0;
      for (int i = 0; i < total; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
        colors[order[i]] = next;
      }
      const int now = next + 1;
      if (now == classes) return;
      classes = now;
    }
  }

  static int distinct(const std::vector<int>& colors) {
    std::vector<int> c(colors);
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

 private:
  const Graph& g_;
  int copies_;
};

int fresh_color(const std::vector<int>& colors) {
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

// Is there an automorphism of g carrying colouring `a` onto colouring `b`?
// `joint` holds a followed by b, already refined together.
bool extends_to_isomorphism(const Graph& g, const Refiner& two, std::vector<int> joint) {
  const int n = g.order();
  std::vector<int> count(2 * n + 2, 0);
  for (int x = 0; x < n; ++x) ++count[joint[x]];
  for (int x = n; x < 2 * n; ++x) --count[joint[x]];
  if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;

  // Smallest non-singleton cell on side a.
  std::vector<int> cell_size(2 * n + 2, 0);
  for (int x = 0; x < n; ++x) ++cell_size[joint[x]];
  int pick = -1;
  for (int x = 0; x < n; ++x)
    if (cell_size[joint[x]] > 1 && (pick < 0 || cell_size[joint[x]] < cell_size[joint[pick]]))
      pick = x;
  if (pick < 0) {
    std::vector<int> image(2 * n + 2, -1);
    for (int y = n; y < 2 * n; ++y) image[joint[y]] = y - n;
    for (int u = 0; u < n; ++u)
      for (int w : g.neighbors(u))
        if (!g.adjacent(image[joint[u]], image[joint[w]])) return false;
    return true;
  }
  for (int y = n; y < 2 * n; ++y) {
    if (joint[y] != joint[pick]) continue;
    std::vector<int> next = joint;
    const int c = fresh_color(next);
    next[pick] = c;
    next[y] = c;
    two.refine(next);
    if (extends_to_isomorphism(g, two, std::move(next))) return true;
  }
  return false;
}

bool has_nontrivial_automorphism(const Graph& g, const Refiner& one, const Refiner& two,
                                 std::vector<int> colors) {
  const int n = g.order();
  std::vector<int> cell_size(n + 1, 0);
  for (int c : colors) ++cell_size[c];
  int pick = -1;
  for (int x = 0; x < n; ++x)
    if (cell_size[colors[x]] > 1 && (pick < 0 || cell_size[colors[x]] < cell_size[colors[pick]]))
      pick = x;
  if (pick < 0) return false;

  const int c = fresh_color(colors);
  for (int w = 0; w < n; ++w) {
    if (w == pick || colors[w] != colors[pick]) continue;
    std::vector<int> joint(2 * n);
    for (int x = 0; x < n; ++x) joint[x] = joint[n + x] = colors[x];
    joint[pick] = c;
    joint[n + w] = c;
    two.refine(joint);
    if (extends_to_isomorphism(g, two, std::move(joint))) return true;
  }
  colors[pick] = c;
  one.refine(colors);
  return has_nontrivial_automorphism(g, one, two, std::move(colors));
}

}  // namespace

bool is_rigid(const Graph& g, int cap) {
  if (g.order() > cap)
    throw BudgetExceeded("is_rigid: " + std::to_string(g.order()) + " vertices exceeds cap " +
                         std::to_string(cap));
  if (g.order() <= 1) return true;
  Refiner one(g, 1);
  Refiner two(g, 2);
  std::vector<int> colors(g.order());
  for (int v = 0; v < g.order(); ++v) colors[v] = g.degree(v);
  one.refine(colors);
  return !has_nontrivial_automorphism(g, one, two, std::move(colors));
}

bool isomorphic(const Graph& g, const Graph& h, int cap) {
  if (g.order() > cap || h.order() > cap)
    throw BudgetExceeded("isomorphic: graph exceeds the small-n cap of " + std::to_string(cap));
  const int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  auto sorted_degrees = [](const Graph& x) {
    std::vector<int> d(x.order());
    for (int v = 0; v < x.order(); ++v) d[v] = x.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (sorted_degrees(g) != sorted_degrees(h)) return false;

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  auto assign = [&](auto&& self, int u) -> bool {
    if (u == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || h.degree(w) != g.degree(u)) continue;
      bool ok = true;
      for (int p = 0; p < u && ok; ++p) ok = g.adjacent(u, p) == h.adjacent(w, image[p]);
      if (!ok) continue;
      image[u] = w;
      used[w] = 1;
      if (self(self, u + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return assign(assign, 0);
}

}  // namespace maxdeg
