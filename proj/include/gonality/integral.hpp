#pragma once

#include "gonality/graph.hpp"

#include <string>
#include <vector>

namespace gonality {

// Points whose complement splits into open unit intervals and half-open
// dangling intervals shorter than 1 ending in a valency-one vertex.
struct IntegralSet {
  std::vector<GraphPoint> points;
};

// The unique integral set through all vertices of valency >= 3. Throws
// Error("non-integral") when a branch-to-branch segment has fractional length,
// Error("no-branch-vertex") for cycles and segments (use the based form).
IntegralSet integral_set(const MetricGraph& g);

// Integral set containing base. For graphs with a branch vertex the set is
// unique and base must belong to it.
IntegralSet integral_set(const MetricGraph& g, const GraphPoint& base);

// Direct scan of the complement. On failure, *why (if given) explains.
bool is_integral_set(const MetricGraph& g, const std::vector<GraphPoint>& s, std::string* why = nullptr);

bool contains_point(const IntegralSet& s, const GraphPoint& p);

}  // namespace gonality
