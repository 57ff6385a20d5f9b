#pragma once

// Brute-force counterparts of the structural routines, for cross-checks on
// small graphs. Everything enumerates vertex sequences or subsets directly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "maxdeg/graph.hpp"

namespace brute {

// Ordered sequences of `len` distinct vertices accepted by `ok`.
inline std::uint64_t count_sequences(const maxdeg::Graph& g, int len,
                                     const std::function<bool(const std::vector<int>&)>& ok) {
  std::uint64_t count = 0;
  std::vector<int> seq;
  std::vector<char> used(g.order(), 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(seq.size()) == len) {
      if (ok(seq)) ++count;
      return;
    }
    for (int v = 0; v < g.order(); ++v) {
      if (used[v]) continue;
      used[v] = 1;
      seq.push_back(v);
      rec();
      seq.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return count;
}

inline std::uint64_t cycles(const maxdeg::Graph& g, int p) {
  const std::uint64_t closed = count_sequences(g, p, [&](const std::vector<int>& s) {
    for (int i = 0; i < p; ++i)
      if (!g.adjacent(s[i], s[(i + 1) % p])) return false;
    return true;
  });
  return closed / (2 * static_cast<std::uint64_t>(p));
}

inline std::uint64_t paths(const maxdeg::Graph& g, int p, int endpoint_degree) {
  const std::uint64_t walks = count_sequences(g, p + 1, [&](const std::vector<int>& s) {
    if (g.degree(s.front()) != endpoint_degree || g.degree(s.back()) != endpoint_degree)
      return false;
    for (int i = 0; i < p; ++i)
      if (!g.adjacent(s[i], s[i + 1])) return false;
    return true;
  });
  return walks / 2;
}

inline bool connected_without(const maxdeg::Graph& g, const std::vector<char>& removed) {
  int start = -1, alive = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == alive;
}

// Smallest vertex set whose removal disconnects g; n - 1 for complete graphs.
inline int connectivity(const maxdeg::Graph& g) {
  const int n = g.order();
  for (int size = 0; size <= n - 2; ++size) {
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + size, 1);
    std::sort(pick.begin(), pick.end());
    do {
      if (!connected_without(g, pick)) return size;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n - 1;
}

inline bool rigid(const maxdeg::Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    bool automorphism = true;
    for (maxdeg::Edge e : g.edges())
      if (!g.adjacent(perm[e.u], perm[e.v])) {
        automorphism = false;
        break;
      }
    if (automorphism) return false;
  }
  return true;
}

// Uniformly chosen edge subset, trimmed greedily to the degree bound.
inline maxdeg::Graph random_graph(int n, int R, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<int> degree(n, 0);
  std::vector<maxdeg::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) && degree[u] < R && degree[v] < R) {
        ++degree[u];
        ++degree[v];
        edges.push_back({u, v});
      }
  return maxdeg::Graph(n, R, edges);
}

}  // namespace brute
