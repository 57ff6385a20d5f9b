#pragma once

// Small graph builders shared by the test files.

#include <vector>

#include "maxdeg/graph.hpp"

namespace testing {

inline maxdeg::Graph make(int n, int R, std::vector<maxdeg::Edge> edges) {
  return maxdeg::Graph(n, R, edges);
}

inline maxdeg::Graph cycle(int n, int R = 2) {
  std::vector<maxdeg::Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return maxdeg::Graph(n, R, e);
}

inline maxdeg::Graph path(int n, int R = 2) {
  std::vector<maxdeg::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return maxdeg::Graph(n, R, e);
}

inline maxdeg::Graph complete(int n) {
  std::vector<maxdeg::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return maxdeg::Graph(n, n > 0 ? n - 1 : 0, e);
}

inline maxdeg::Graph empty(int n, int R = 0) { return maxdeg::Graph(n, R, {}); }

// Disjoint union; vertices of b follow those of a.
inline maxdeg::Graph disjoint(const maxdeg::Graph& a, const maxdeg::Graph& b, int R) {
  std::vector<maxdeg::Edge> e = a.edges();
  for (maxdeg::Edge x : b.edges()) e.push_back({x.u + a.order(), x.v + a.order()});
  return maxdeg::Graph(a.order() + b.order(), R, e);
}

}  // namespace testing
