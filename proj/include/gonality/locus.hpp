#pragma once

#include "gonality/gluing.hpp"
#include "gonality/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gonality {

// One (tree, gluing) type; the tree carries unit lengths as placeholders.
struct LocusCell {
  GluingDatum datum;
  int dimension = 0;
  std::string code;  // canonical form
};

struct EnumerationLimits {
  int max_edges = -1;              // default 2g + 2d - 5
  int first_tree = 0;              // resume point in the tree list
  int max_trees = -1;              // trees to process, -1 for all
  std::int64_t max_nodes = -1;     // search nodes per tree, -1 unbounded
  int threads = 0;                 // 0: GONALITY_THREADS or 1
};

struct Enumeration {
  std::vector<LocusCell> cells;  // sorted by code
  int total_trees = 0;
  int next_tree = 0;             // equals total_trees when complete
  bool complete() const { return next_tree >= total_trees; }
};

// Combinatorial trees with at most max_edges edges, one per isomorphism class,
// ordered by edge count then code. Vertices are numbered in BFS order from a
// center so parents precede children.
std::vector<MetricTree> small_trees(int max_edges);

// Stops at the first tree that exhausts max_nodes or the max_trees window;
// next_tree is where to resume.
Enumeration enumerate_cells(int g, int d, const EnumerationLimits& limits = {});

// Invariant under tree automorphisms and copy permutations.
std::string canonical_code(const GluingDatum& gd);

// Pruned, smoothed quotient with edge lengths as linear forms in the tree
// edge lengths.
struct CellImage {
  MetricGraph graph;  // at unit tree lengths
  Matrix psi;         // row per graph edge, column per tree edge
};
CellImage cell_image(const GluingDatum& gd);

int cell_dimension(const GluingDatum& gd);

int max_cell_dimension(const std::vector<LocusCell>& cells);

// Some cell maps nonnegative tree lengths onto g up to isometry.
bool membership(const std::vector<LocusCell>& cells, const MetricGraph& g, int* witness = nullptr);

int thread_count(int requested);

}  // namespace gonality
