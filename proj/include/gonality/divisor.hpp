#pragma once

#include "gonality/integral.hpp"
#include "gonality/tropical_morphism.hpp"

#include <utility>
#include <vector>

namespace gonality {

// Unweighted multigraph; loops are kept but never move chips.
struct OrdinaryGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;  // neighbors with multiplicity, loops skipped
  int degree(int v) const;
};

struct UnitSubdivision {
  OrdinaryGraph graph;
  // Ordinary vertex of every metric vertex lying in S, -1 otherwise.
  std::vector<int> of_metric_vertex;
  // Ordinary vertex i is S.points[i].
};

// One vertex per point of S, one edge per unit interval. Throws
// Error("not-integral-set") when S fails the complement scan.
UnitSubdivision unit_subdivide(const MetricGraph& g, const IntegralSet& s);

struct ReducedDivisor {
  Divisor divisor;
  int q = 0;
  std::vector<long long> script;  // times each vertex fired: result = D - L * script
};

// Laplacian action: D - L x.
Divisor fire(const OrdinaryGraph& g, const Divisor& d, const std::vector<long long>& script);

ReducedDivisor dhar_reduce(const OrdinaryGraph& g, const Divisor& d, int q);

// Dhar's criterion for a divisor already effective away from q.
bool is_q_reduced(const OrdinaryGraph& g, const Divisor& d, int q);

// D effective; every q-reduced form keeps a chip on q.
bool rank_at_least_one(const OrdinaryGraph& g, const Divisor& d);

}  // namespace gonality
