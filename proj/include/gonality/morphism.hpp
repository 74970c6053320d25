#pragma once

#include "gonality/gluing.hpp"
#include "gonality/tropical_morphism.hpp"

#include <utility>
#include <vector>

namespace gonality {

// Throws Error("not-metric") unless lengths, slopes and endpoints agree.
void check_metric(const TropicalMorphism& phi);

struct HarmonicCertificate {
  std::vector<int> m;  // per source vertex
  // per source vertex: (target half-edge at its image, slope sum)
  std::vector<std::vector<std::pair<HalfEdge, int>>> sums;
};

class HarmonicityError : public Error {
 public:
  HarmonicityError(VertexId v, HalfEdge a, int sa, HalfEdge b, int sb);
  VertexId vertex;
  HalfEdge first, second;
  int first_sum, second_sum;
};

HarmonicCertificate check_harmonic(const TropicalMorphism& phi);
int degree(const TropicalMorphism& phi);

// r(v) = (k - 2) - m(v)(l - 2) for every source vertex.
std::vector<int> rh_defects(const TropicalMorphism& phi);
// As rh_defects, but throws Error("rh-violation") naming the first bad vertex.
std::vector<int> check_rh(const TropicalMorphism& phi);

// Chips m(v) on the fiber over target vertex w.
Divisor fiber_divisor(const TropicalMorphism& phi, VertexId w);

// Splits the target at a point and every source edge above it.
std::pair<TropicalMorphism, VertexId> subdivide_target(const TropicalMorphism& phi, const GraphPoint& q);
// Splits the source at p (and its whole fiber); returns p's vertex.
std::pair<TropicalMorphism, VertexId> subdivide_source(const TropicalMorphism& phi, const GraphPoint& p);

struct Graft {
  GraphPoint point;  // on the source
  MetricTree tree;
  VertexId root = 0;
};

// Grafts each tree at its point, adding the copies needed over the fiber and
// one copy on the target.
TropicalMorphism extend_modification(const TropicalMorphism& phi, const std::vector<Graft>& grafts);

// Gluing datum on the same target tree whose quotient is phi up to relabeling.
GluingDatum to_gluing_datum(const TropicalMorphism& phi);

// Isomorphic as maps: isometries of source and target commuting with phi.
bool isomorphic(const TropicalMorphism& a, const TropicalMorphism& b);

}  // namespace gonality
