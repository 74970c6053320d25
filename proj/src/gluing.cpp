#include "gonality/gluing.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace gonality {

namespace {

std::string block_str(const std::vector<int>& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i] + 1);
  return s + "}";
}

void check_structure(const GluingDatum& gd) {
  if (gd.d < 1) throw Error("malformed", "degree must be positive");
  if (!is_tree(gd.tree)) throw Error("malformed", "underlying graph is not a tree");
  if (static_cast<int>(gd.vertex_partitions.size()) != gd.tree.num_vertices())
    throw Error("malformed", "one vertex partition per tree vertex required");
  if (static_cast<int>(gd.edge_partitions.size()) != gd.tree.num_edges())
    throw Error("malformed", "one edge partition per tree edge required");
  for (std::size_t w = 0; w < gd.vertex_partitions.size(); ++w)
    if (gd.vertex_partitions[w].size() != gd.d)
      throw Error("malformed", "partition at vertex " + std::to_string(w) + " is not on d copies");
  for (std::size_t e = 0; e < gd.edge_partitions.size(); ++e)
    if (gd.edge_partitions[e].size() != gd.d)
      throw Error("malformed", "partition at edge " + std::to_string(e) + " is not on d copies");
}

void check_refinement(const GluingDatum& gd) {
  for (EdgeId e = 0; e < gd.tree.num_edges(); ++e) {
    const auto& ed = gd.tree.edge(e);
    for (VertexId w : {ed.u, ed.v})
      if (!gd.edge_partitions[e].refines(gd.vertex_partitions[w]))
        throw Error("refinement", "partition on edge " + std::to_string(e) + " does not refine the one at vertex " +
                                      std::to_string(w));
  }
}

// Points of the quotient are classes of (tree vertex, copy); edges of copy c
// join (u, c) and (v, c).
void check_connected(const GluingDatum& gd) {
  const int d = gd.d, nv = gd.tree.num_vertices();
  UnionFind uf(nv * d);
  int comps = nv * d;
  auto join = [&](int a, int b) {
    auto x = uf.find_set(a), y = uf.find_set(b);
    if (x != y) {
      uf.link(x, y);
      --comps;
    }
  };
  for (VertexId w = 0; w < nv; ++w)
    for (int c = 1; c < d; ++c) {
      const SetPartition& p = gd.vertex_partitions[w];
      for (int a = 0; a < c; ++a)
        if (p.same_block(a, c)) {
          join(w * d + a, w * d + c);
          break;
        }
    }
  for (const auto& e : gd.tree.edges())
    for (int c = 0; c < d; ++c) join(e.u * d + c, e.v * d + c);
  if (comps != 1) throw Error("disconnected", "quotient graph is disconnected");
}

RHReport compute_report(const GluingDatum& gd) {
  RHReport rep;
  for (VertexId w = 0; w < gd.tree.num_vertices(); ++w) {
    const SetPartition& pw = gd.vertex_partitions[w];
    int l = gd.tree.valency(w);
    std::vector<int> k(pw.num_blocks(), 0);
    for (HalfEdge h : gd.tree.half_edges(w))
      for (const auto& b : gd.edge_partitions[h.edge].blocks()) ++k[pw.block_of(b.front())];
    auto blocks = pw.blocks();
    for (int b = 0; b < pw.num_blocks(); ++b) {
      RHEntry e;
      e.vertex = w;
      e.block = blocks[b];
      e.m = static_cast<int>(blocks[b].size());
      e.l = l;
      e.k = k[b];
      e.r = (e.k - 2) - e.m * (e.l - 2);
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

// Components of T_{i,j}: vertex flags, edge flags.
struct PairForest {
  std::vector<char> vin;
  std::vector<char> ein;
};

PairForest pair_forest(const GluingDatum& gd, int i, int j) {
  PairForest f;
  f.vin.resize(gd.tree.num_vertices());
  f.ein.resize(gd.tree.num_edges());
  for (VertexId w = 0; w < gd.tree.num_vertices(); ++w) f.vin[w] = gd.vertex_partitions[w].same_block(i, j);
  for (EdgeId e = 0; e < gd.tree.num_edges(); ++e) f.ein[e] = gd.edge_partitions[e].same_block(i, j);
  return f;
}

}  // namespace

RHViolation::RHViolation(RHEntry e)
    : Error("rh-violation", "Riemann-Hurwitz fails at tree vertex " + std::to_string(e.vertex) + ", block " +
                                block_str(e.block) + ": k=" + std::to_string(e.k) + ", l=" + std::to_string(e.l) +
                                ", m=" + std::to_string(e.m) + ", defect " + std::to_string(e.r)),
      entry_(std::move(e)) {}

RHReport rh_report(const GluingDatum& gd) {
  check_structure(gd);
  check_refinement(gd);
  return compute_report(gd);
}

RHReport validate(const GluingDatum& gd) {
  check_structure(gd);
  check_refinement(gd);
  check_connected(gd);
  RHReport rep = compute_report(gd);
  for (const auto& e : rep.entries)
    if (e.r < 0) throw RHViolation(e);
  return rep;
}

bool is_valid(const GluingDatum& gd) {
  try {
    validate(gd);
    return true;
  } catch (const Error&) {
    return false;
  }
}

BasicQuotient<Rational> quotient(const GluingDatum& gd) {
  validate(gd);
  return quotient_unchecked(gd);
}

int genus_euler(const GluingDatum& gd) {
  validate(gd);
  // Connected quotient: one source edge per edge block, one vertex per vertex block.
  int s = 1;
  for (const auto& p : gd.edge_partitions) s += p.num_blocks();
  for (const auto& p : gd.vertex_partitions) s -= p.num_blocks();
  return s;
}

int genus_inclusion_exclusion(const GluingDatum& gd) {
  validate(gd);
  const int d = gd.d;
  int nv = gd.tree.num_vertices(), ne = gd.tree.num_edges();
  if (d > 16) {
    // A partition with b blocks contributes sum over I inside a block of
    // (-1)^|I|, which is 1 - b; vertices count positively, edges negatively.
    int s = 0;
    for (const auto& p : gd.vertex_partitions) s += 1 - p.num_blocks();
    for (const auto& p : gd.edge_partitions) s -= 1 - p.num_blocks();
    return s;
  }
  auto inside_one_block = [](const SetPartition& p, unsigned mask) {
    int blk = -1;
    for (int i = 0; mask; ++i, mask >>= 1) {
      if (!(mask & 1u)) continue;
      if (blk < 0)
        blk = p.block_of(i);
      else if (p.block_of(i) != blk)
        return false;
    }
    return true;
  };
  long long total = 0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<char> vin(nv);
    for (VertexId w = 0; w < nv; ++w) vin[w] = inside_one_block(gd.vertex_partitions[w], mask);
    UnionFind uf(nv);
    int comps = 0;
    for (VertexId w = 0; w < nv; ++w) comps += vin[w];
    for (EdgeId e = 0; e < ne; ++e) {
      if (!inside_one_block(gd.edge_partitions[e], mask)) continue;
      const auto& ed = gd.tree.edge(e);
      auto a = uf.find_set(ed.u), b = uf.find_set(ed.v);
      if (a != b) {
        uf.link(a, b);
        --comps;
      }
    }
    total += (std::popcount(mask) % 2 ? -1 : 1) * comps;
  }
  return static_cast<int>(total);
}

std::vector<VertexId> EndpointSet::vertices() const {
  std::vector<VertexId> v;
  for (const auto& m : members) v.push_back(m.vertex);
  return v;
}

EndpointSet endpoints(const GluingDatum& gd) {
  validate(gd);
  const auto& t = gd.tree;
  std::map<VertexId, EndpointCertificate> found;
  for (int i = 0; i < gd.d; ++i)
    for (int j = i + 1; j < gd.d; ++j) {
      PairForest f = pair_forest(gd, i, j);
      UnionFind uf(t.num_vertices());
      for (EdgeId e = 0; e < t.num_edges(); ++e)
        if (f.ein[e]) uf.union_set(t.edge(e).u, t.edge(e).v);
      for (VertexId w = 0; w < t.num_vertices(); ++w) {
        if (!f.vin[w] || t.valency(w) > 2 || found.count(w)) continue;
        bool endpoint = t.valency(w) <= 1;
        for (HalfEdge h : t.half_edges(w)) endpoint = endpoint || !f.ein[h.edge];
        if (!endpoint) continue;
        EndpointCertificate c{w, i, j, {}};
        for (VertexId x = 0; x < t.num_vertices(); ++x)
          if (f.vin[x] && uf.find_set(x) == uf.find_set(w)) c.component.push_back(x);
        found.emplace(w, std::move(c));
      }
    }
  EndpointSet s;
  for (auto& [w, c] : found) s.members.push_back(std::move(c));
  return s;
}

BoundCheck bound_check(const GluingDatum& gd) {
  RHReport rep = validate(gd);
  BoundCheck b;
  b.endpoints = static_cast<int>(endpoints(gd).members.size());
  for (const auto& e : rep.entries)
    if (e.l > 2) b.defect_sum += e.r;
  int g = genus_euler(gd);
  b.lhs = b.endpoints + b.defect_sum;
  b.rhs = 2 * g + 2 * gd.d - 2;
  b.holds = b.lhs <= b.rhs;
  b.endpoint_bound = b.endpoints <= b.rhs;
  return b;
}

IntervalCheck interval_gluing_check(const GluingDatum& gd) {
  validate(gd);
  const auto& t = gd.tree;
  for (int i = 0; i < gd.d; ++i)
    for (int j = i + 1; j < gd.d; ++j) {
      PairForest f = pair_forest(gd, i, j);
      for (VertexId w = 0; w < t.num_vertices(); ++w) {
        int deg = 0;
        for (HalfEdge h : t.half_edges(w)) deg += f.ein[h.edge];
        if (deg > 2) return {false, i, j, w};
      }
    }
  return {};
}

}  // namespace gonality
