#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "helpers.hpp"
#include "maxdeg/errors.hpp"
#include "maxdeg/structure.hpp"

using namespace maxdeg;

TEST_CASE("balls and distances") {
  const Graph p = testing::path(6);
  CHECK(ball(p, 2, 1) == std::vector<int>{1, 2, 3});
  CHECK(ball(p, 0, 0) == std::vector<int>{0});
  const std::vector<int> src{0};
  const std::vector<int> d = distances_from(p, src, 3);
  CHECK(d[3] == 3);
  CHECK(d[4] == kUnreachable);
}

TEST_CASE("cycle and path counts on fixed graphs") {
  CHECK(count_cycles(testing::cycle(5), 5) == 1);
  CHECK(count_cycles(testing::cycle(5), 3) == 0);
  CHECK(count_cycles(testing::complete(4), 3) == 4);
  CHECK(count_cycles(testing::complete(4), 4) == 3);
  CHECK(count_cycles(testing::complete(5), 5) == 12);
  // path 0-1-2-3: endpoints of degree 1, one path of length 3
  CHECK(count_paths_endpoints_degree(testing::path(4), 3, 1) == 1);
  CHECK(count_paths_endpoints_degree(testing::path(4), 1, 2) == 1);
  CHECK(count_paths_endpoints_degree(testing::path(4), 2, 1) == 0);
}

TEST_CASE("cycle and path counts agree with sequence enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 4;
    const int R = 2 + trial % 3;
    const Graph g = brute::random_graph(n, R, 0.6, rng);
    for (int p = 3; p <= n; ++p) CHECK(count_cycles(g, p) == brute::cycles(g, p));
    for (int p = 1; p < n; ++p)
      for (int d = 1; d <= R; ++d)
        CHECK(count_paths_endpoints_degree(g, p, d) == brute::paths(g, p, d));
  }
}

TEST_CASE("multigraph short cycles are loops and parallel pairs") {
  const Multigraph m(3, {{0, 0, 2}, {0, 1, 3}, {1, 2, 1}, {0, 2, 1}});
  CHECK(count_cycles(m, 1) == 2);
  CHECK(count_cycles(m, 2) == 3);
  // triangle 0-1-2 with three choices of the 0-1 edge
  CHECK(count_cycles(m, 3) == 3);
}

TEST_CASE("components") {
  const Graph g = testing::disjoint(testing::path(3), testing::cycle(4), 2);
  CHECK(component_sizes(g) == std::vector<int>{3, 4});
  const std::vector<int> labels = component_labels(g);
  CHECK(labels[0] == labels[2]);
  CHECK(labels[0] != labels[5]);
}

TEST_CASE("vertex connectivity matches subset removal") {
  CHECK(vertex_connectivity(testing::complete(5)) == 4);
  CHECK(vertex_connectivity(testing::cycle(6)) == 2);
  CHECK(vertex_connectivity(testing::path(5)) == 1);
  CHECK(vertex_connectivity(testing::empty(3)) == 0);
  CHECK_THROWS_AS(vertex_connectivity(testing::empty(1)), ContractViolation);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + trial % 6;
    const Graph g = brute::random_graph(n, 2 + trial % 4, 0.7, rng);
    CHECK(vertex_connectivity(g) == brute::connectivity(g));
  }
}

TEST_CASE("rigidity matches permutation search") {
  CHECK_FALSE(is_rigid(testing::cycle(5)));
  CHECK_FALSE(is_rigid(testing::empty(2)));
  CHECK(is_rigid(testing::empty(1)));
  // smallest asymmetric graphs have 6 vertices
  const Graph asym = testing::make(6, 3, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}, {1, 5}});
  CHECK(is_rigid(asym) == brute::rigid(asym));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 5 + trial % 3;
    const Graph g = brute::random_graph(n, 3 + trial % 2, 0.5, rng);
    CHECK(is_rigid(g) == brute::rigid(g));
  }
}

TEST_CASE("isomorphism test follows relabelling") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6;
    const Graph g = brute::random_graph(n, 3, 0.5, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> moved;
    for (Edge e : g.edges())
      moved.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
    CHECK(isomorphic(g, Graph(n, 3, moved)));
  }
  CHECK_FALSE(isomorphic(testing::cycle(6), testing::disjoint(testing::cycle(3), testing::cycle(3), 2)));
}
