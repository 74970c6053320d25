#include "gonality/divisor.hpp"
#include "gonality/integral.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gonality;

TEST_CASE("unit subdivision of a theta graph") {
  MetricGraph theta = make_graph(2, {{0, 1, 2}, {0, 1, 3}, {0, 1, 1}});
  IntegralSet s = integral_set(theta);
  UnitSubdivision u = unit_subdivide(theta, s);
  CHECK(u.graph.n == 5);
  CHECK(u.graph.edges.size() == 6);
  CHECK(u.of_metric_vertex[0] >= 0);
  CHECK(u.of_metric_vertex[1] >= 0);
}

TEST_CASE("firing preserves degree") {
  OrdinaryGraph g{3, {{0, 1}, {1, 2}, {2, 0}}};
  Divisor d{{2, 0, 0}};
  Divisor f = fire(g, d, {1, 0, 0});
  CHECK(f.degree() == 2);
  CHECK(f.chips == std::vector<long long>{0, 1, 1});
}

TEST_CASE("Dhar reduction matches an independent reducer") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    OrdinaryGraph g;
    g.n = n;
    for (int v = 1; v < n; ++v) g.edges.push_back({static_cast<int>(rng() % v), v});
    int extra = static_cast<int>(rng() % 4);
    for (int i = 0; i < extra; ++i) g.edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    Divisor d;
    d.chips.resize(n);
    for (auto& c : d.chips) c = static_cast<long long>(rng() % 4) - 1;
    int q = static_cast<int>(rng() % n);
    ReducedDivisor r = dhar_reduce(g, d, q);
    CHECK(is_q_reduced(g, r.divisor, q));
    CHECK(r.divisor.degree() == d.degree());
    CHECK(fire(g, d, r.script) == r.divisor);
    CHECK(r.divisor.chips[q] == oracle::reduced_chips_at(n, g.edges, d.chips, q));
  }
}

TEST_CASE("rank of small divisors") {
  // Cycle of length 3: any degree-1 effective divisor has rank 0, degree 2 rank 1.
  OrdinaryGraph c3{3, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK_FALSE(rank_at_least_one(c3, Divisor{{1, 0, 0}}));
  CHECK(rank_at_least_one(c3, Divisor{{1, 1, 0}}));
  // Tree: every degree-1 divisor has rank one.
  OrdinaryGraph path{3, {{0, 1}, {1, 2}}};
  CHECK(rank_at_least_one(path, Divisor{{0, 0, 1}}));
  // Banana with three edges: the canonical divisor is one chip on each vertex.
  OrdinaryGraph banana{2, {{0, 1}, {0, 1}, {0, 1}}};
  CHECK(rank_at_least_one(banana, Divisor{{1, 1}}));
  CHECK_FALSE(rank_at_least_one(banana, Divisor{{2, 0}}));
  CHECK_FALSE(rank_at_least_one(banana, Divisor{{1, 0}}));
}
