#pragma once

#include "gonality/error.hpp"
#include "gonality/graph.hpp"
#include "gonality/set_partition.hpp"
#include "gonality/tropical_morphism.hpp"

#include <optional>
#include <vector>

namespace gonality {

// A tree with d copies and, per vertex and per edge, a partition of the copies
// into glued classes. Copies are 0-based internally.
template <class L>
struct BasicGluingDatum {
  BasicMetricGraph<L> tree;
  int d = 1;
  std::vector<SetPartition> vertex_partitions;
  std::vector<SetPartition> edge_partitions;
};

using GluingDatum = BasicGluingDatum<Rational>;

template <class L>
BasicGluingDatum<L> trivial_datum(BasicMetricGraph<L> tree) {
  BasicGluingDatum<L> gd;
  gd.d = 1;
  gd.vertex_partitions.assign(tree.num_vertices(), SetPartition::whole(1));
  gd.edge_partitions.assign(tree.num_edges(), SetPartition::whole(1));
  gd.tree = std::move(tree);
  return gd;
}

struct RHEntry {
  VertexId vertex = 0;         // tree vertex
  std::vector<int> block;      // copies, 0-based
  int m = 0;
  int l = 0;
  int k = 0;
  int r = 0;
};

struct RHReport {
  std::vector<RHEntry> entries;
  bool all_zero() const {
    for (const auto& e : entries)
      if (e.r != 0) return false;
    return true;
  }
};

class RHViolation : public Error {
 public:
  explicit RHViolation(RHEntry e);
  const RHEntry& entry() const { return entry_; }

 private:
  RHEntry entry_;
};

// Quotient with bookkeeping: source vertex of (tree vertex, block index) and
// source edge of (tree edge, block index).
template <class L>
struct BasicQuotient {
  BasicTropicalMorphism<L> phi;
  std::vector<std::vector<VertexId>> vertex_of;
  std::vector<std::vector<EdgeId>> edge_of;
  std::vector<std::pair<VertexId, int>> vertex_origin;  // per source vertex
  std::vector<std::pair<EdgeId, int>> edge_origin;      // per source edge
};

// Builds the quotient without validating the datum; refinement is assumed.
template <class L>
BasicQuotient<L> quotient_unchecked(const BasicGluingDatum<L>& gd) {
  BasicQuotient<L> q;
  auto& phi = q.phi;
  phi.target = gd.tree;
  int nv = gd.tree.num_vertices();
  q.vertex_of.resize(nv);
  for (VertexId w = 0; w < nv; ++w) {
    const SetPartition& p = gd.vertex_partitions[w];
    for (int b = 0; b < p.num_blocks(); ++b) {
      VertexId x = phi.source.add_vertex();
      q.vertex_of[w].push_back(x);
      q.vertex_origin.emplace_back(w, b);
      phi.vmap.push_back(w);
    }
  }
  q.edge_of.resize(gd.tree.num_edges());
  for (EdgeId e = 0; e < gd.tree.num_edges(); ++e) {
    const auto& ed = gd.tree.edge(e);
    const SetPartition& p = gd.edge_partitions[e];
    auto blocks = p.blocks();
    for (int b = 0; b < p.num_blocks(); ++b) {
      int rep = blocks[b].front();
      int size = static_cast<int>(blocks[b].size());
      VertexId x = q.vertex_of[ed.u][gd.vertex_partitions[ed.u].block_of(rep)];
      VertexId y = q.vertex_of[ed.v][gd.vertex_partitions[ed.v].block_of(rep)];
      EdgeId f = phi.source.add_edge(x, y, ed.length / size);
      q.edge_of[e].push_back(f);
      q.edge_origin.emplace_back(e, b);
      phi.emap.push_back(e);
      phi.slope.push_back(size);
    }
  }
  return q;
}

// Checks conditions on a datum; throws Error("malformed" | "refinement" |
// "disconnected") or RHViolation for the first failure.
RHReport validate(const GluingDatum& gd);
// Same checks, returning false instead of throwing.
bool is_valid(const GluingDatum& gd);
// Report without throwing on negative defects (structure must be sound).
RHReport rh_report(const GluingDatum& gd);

BasicQuotient<Rational> quotient(const GluingDatum& gd);

int genus_euler(const GluingDatum& gd);
int genus_inclusion_exclusion(const GluingDatum& gd);

struct EndpointCertificate {
  VertexId vertex = 0;
  int i = 0;
  int j = 0;
  std::vector<VertexId> component;
};

struct EndpointSet {
  std::vector<EndpointCertificate> members;  // one per vertex, sorted by vertex
  std::vector<VertexId> vertices() const;
};

EndpointSet endpoints(const GluingDatum& gd);

struct BoundCheck {
  int endpoints = 0;
  int defect_sum = 0;  // over source points above tree vertices of valency > 2
  int lhs = 0;
  int rhs = 0;
  bool holds = false;            // lhs <= rhs
  bool endpoint_bound = false;   // endpoints <= rhs
};

BoundCheck bound_check(const GluingDatum& gd);

struct IntervalCheck {
  bool ok = true;
  int i = -1;
  int j = -1;
  VertexId branch_vertex = -1;
};

IntervalCheck interval_gluing_check(const GluingDatum& gd);

}  // namespace gonality
