#pragma once

#include "gonality/graph.hpp"

#include <vector>

namespace gonality {

// Map from a metric graph to a metric tree, linear of integer slope on edges.
template <class L>
struct BasicTropicalMorphism {
  BasicMetricGraph<L> source;
  BasicMetricGraph<L> target;
  std::vector<VertexId> vmap;
  std::vector<EdgeId> emap;
  std::vector<int> slope;

  int num_source_vertices() const { return source.num_vertices(); }
};

using TropicalMorphism = BasicTropicalMorphism<Rational>;

// Integer chips on the vertices of some graph.
struct Divisor {
  std::vector<long long> chips;

  long long degree() const {
    long long s = 0;
    for (long long c : chips) s += c;
    return s;
  }
  bool is_effective() const {
    for (long long c : chips)
      if (c < 0) return false;
    return true;
  }
  friend bool operator==(const Divisor&, const Divisor&) = default;
};

}  // namespace gonality
