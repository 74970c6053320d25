#pragma once

#include "gonality/graph.hpp"

#include <tuple>
#include <vector>

inline gonality::MetricGraph make_graph(int n, const std::vector<std::tuple<int, int, int>>& edges) {
  gonality::MetricGraph g(n);
  for (auto [u, v, l] : edges) g.add_edge(u, v, gonality::Rational(l));
  return g;
}

inline gonality::Rational q(long long p, long long d = 1) { return gonality::Rational(p, d); }
using Qs = std::vector<gonality::Rational>;
