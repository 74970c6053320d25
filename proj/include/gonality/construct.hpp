#pragma once

#include "gonality/affine.hpp"
#include "gonality/divisor.hpp"
#include "gonality/gluing.hpp"
#include "gonality/integral.hpp"
#include "gonality/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gonality {

// Sign conditions on the parameters observed while a construction ran on
// affine lengths. Each row reads a . x + c > 0 (or == 0).
struct Recorder {
  int dims = 0;
  std::vector<Inequality> strict;  // a . x > b
  std::vector<Vector> zero_forms;  // a . x == 0, constant parts are zero
  void note(const Affine& diff, int sign);
};

// Open polyhedral cone in edge-length space.
struct Cone {
  int dims = 0;
  std::vector<Inequality> inequalities;  // strict
  std::vector<Vector> equalities;
  Vector reference;  // a point inside

  bool contains(const Vector& x) const;
  int dimension() const;
  // Integral points inside the cone, deterministic for a seed.
  std::vector<Vector> integral_samples(int count, std::uint64_t seed) const;
};

// A datum together with where every input vertex and edge ended up in the
// quotient.
struct Realization {
  GluingDatum datum;
  TropicalMorphism phi;
  std::vector<VertexId> vertex_image;
  // Source edges traversed from edge.u to edge.v, with direction flags.
  std::vector<std::vector<std::pair<EdgeId, bool>>> edge_image;

  GraphPoint image_of(const MetricGraph& input, const GraphPoint& p) const;
};

// Two copies of a path glued at g+1 components separated by gaps; interior
// components are intervals of the given lengths. gaps.size() = g,
// bridges.size() = g - 1.
GluingDatum hyperelliptic_datum(const std::vector<Rational>& gaps, const std::vector<Rational>& bridges);
BasicGluingDatum<Affine> hyperelliptic_datum(const std::vector<Affine>& gaps, const std::vector<Affine>& bridges);

struct TripodSpec {
  std::array<GraphPoint, 3> points;  // on the quotient of the datum
  std::array<Rational, 3> extensions;
};

struct TripodInfo {
  std::array<VertexId, 3> feet{};  // tree vertices under the marked points
  std::array<int, 3> copies{};
  VertexId median = -1;
  std::array<Rational, 3> distances{};
};

GluingDatum tripod_glue(const GluingDatum& gd, const TripodSpec& spec, TripodInfo* info = nullptr);

// The trivalent construction on a graph with the given lengths. Throws
// Error("outside-cone") when some tripod edge is not longer than its distance
// term, Error("not-trivalent") for bad input.
Realization trivalent_construct(const MetricGraph& g);

// Chamber of the construction around a random reference point.
Cone trivalent_cone(const MetricGraph& combinatorial, std::uint64_t seed);

MetricGraph with_lengths(const MetricGraph& combinatorial, const Vector& lengths);

// Certificate for the divisor part of the trivalent theorem.
struct IntegralCertificate {
  MetricGraph core;          // the input graph inside the modification
  IntegralSet set;           // integral set of core
  GraphPoint v0;             // on core
  Divisor divisor;           // chips on core vertices
  UnitSubdivision unit;
  Divisor unit_divisor;
  bool rank_at_least_one = false;
  int rejected = 0;          // candidates rejected before v0
};

struct V0Check {
  bool ok = false;
  std::string reason;
};

// Whether the fiber through a point of the source meets the core only in the
// core's integral set.
V0Check check_v0(const TropicalMorphism& phi, const GraphPoint& p);

// Scans integral points of the core in order and certifies the first valid
// v0. Throws Error("no-v0") when none qualifies.
IntegralCertificate integral_certificate(const TropicalMorphism& phi);

struct CactusResult {
  Realization realization;
  MetricGraph input;  // the graph subdivided at the marked point
  VertexId v1 = -1;  // source vertex of the marked point, if any
};

// Degree ceil((g+2)/2) morphism for a cactus. Throws Error("not-cactus"),
// Error("missing-point") for odd genus without a point, or
// Error("cactus-parity") when no decomposition places the point suitably.
CactusResult cactus_construct(const MetricGraph& g, std::optional<GraphPoint> v1);

struct LocalShape {
  int m = 0;
  int k = 0;
  int l = 0;
};
LocalShape local_shape(const TropicalMorphism& phi, VertexId v);

// Integrality conditions of the cactus statement for integral input lengths.
bool check_cactus_integrality(const CactusResult& r, std::string* why = nullptr);

struct LowerBoundFamily {
  int g = 0;
  int d = 0;
  BasicGluingDatum<Affine> datum;
  MetricGraph graph;  // pruned quotient at the reference parameters
  int parameters = 0;
  int dimension = 0;  // rank of edge lengths in the parameters
};

LowerBoundFamily lower_bound_family(int g, int d);

}  // namespace gonality
