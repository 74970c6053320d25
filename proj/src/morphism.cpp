#include "gonality/morphism.hpp"

#include "gonality/partitions.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace gonality {

namespace {

// The target half-edge at vmap[v] carried by source half-edge h at v.
HalfEdge image_half_edge(const TropicalMorphism& phi, VertexId v, EdgeId e) {
  EdgeId f = phi.emap[e];
  const Edge& fe = phi.target.edge(f);
  return {f, fe.u == phi.vmap[v] ? 0 : 1};
}

std::vector<std::vector<VertexId>> fibers(const TropicalMorphism& phi) {
  std::vector<std::vector<VertexId>> out(phi.target.num_vertices());
  for (VertexId v = 0; v < phi.source.num_vertices(); ++v) out[phi.vmap[v]].push_back(v);
  return out;
}

}  // namespace

HarmonicityError::HarmonicityError(VertexId v, HalfEdge a, int sa, HalfEdge b, int sb)
    : Error("not-harmonic", "slope sums differ at source vertex " + std::to_string(v) + ": " + std::to_string(sa) +
                                " along target edge " + std::to_string(a.edge) + ", " + std::to_string(sb) +
                                " along target edge " + std::to_string(b.edge)),
      vertex(v), first(a), second(b), first_sum(sa), second_sum(sb) {}

void check_metric(const TropicalMorphism& phi) {
  const auto& s = phi.source;
  const auto& t = phi.target;
  if (static_cast<int>(phi.vmap.size()) != s.num_vertices() || static_cast<int>(phi.emap.size()) != s.num_edges() ||
      static_cast<int>(phi.slope.size()) != s.num_edges())
    throw Error("not-metric", "map sizes do not match the source graph");
  if (!is_tree(t)) throw Error("not-metric", "target is not a tree");
  for (VertexId v = 0; v < s.num_vertices(); ++v)
    if (phi.vmap[v] < 0 || phi.vmap[v] >= t.num_vertices())
      throw Error("not-metric", "vertex " + std::to_string(v) + " maps outside the target");
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    EdgeId f = phi.emap[e];
    if (f < 0 || f >= t.num_edges()) throw Error("not-metric", "edge " + std::to_string(e) + " maps outside the target");
    if (phi.slope[e] <= 0) throw Error("not-metric", "edge " + std::to_string(e) + " has non-positive slope");
    const Edge& se = s.edge(e);
    const Edge& te = t.edge(f);
    auto [a, b] = std::minmax(phi.vmap[se.u], phi.vmap[se.v]);
    auto [c, d] = std::minmax(te.u, te.v);
    if (a != c || b != d)
      throw Error("not-metric", "edge " + std::to_string(e) + " endpoints do not map to its image edge");
    if (se.length * phi.slope[e] != te.length)
      throw Error("not-metric", "edge " + std::to_string(e) + " length times slope differs from its image");
  }
}

HarmonicCertificate check_harmonic(const TropicalMorphism& phi) {
  check_metric(phi);
  if (phi.target.num_edges() == 0) throw Error("edgeless-target", "morphism onto a point");
  HarmonicCertificate cert;
  const auto& s = phi.source;
  for (VertexId v = 0; v < s.num_vertices(); ++v) {
    std::map<HalfEdge, int> sums;
    for (HalfEdge h : phi.target.half_edges(phi.vmap[v])) sums[h] = 0;
    for (HalfEdge h : s.half_edges(v)) sums[image_half_edge(phi, v, h.edge)] += phi.slope[h.edge];
    std::vector<std::pair<HalfEdge, int>> row(sums.begin(), sums.end());
    for (std::size_t i = 1; i < row.size(); ++i)
      if (row[i].second != row[0].second)
        throw HarmonicityError(v, row[0].first, row[0].second, row[i].first, row[i].second);
    if (row.front().second <= 0)
      throw Error("not-harmonic", "source vertex " + std::to_string(v) + " has no edges over its image");
    cert.m.push_back(row.front().second);
    cert.sums.push_back(std::move(row));
  }
  return cert;
}

int degree(const TropicalMorphism& phi) {
  auto cert = check_harmonic(phi);
  auto fib = fibers(phi);
  int d = -1;
  for (VertexId w = 0; w < phi.target.num_vertices(); ++w) {
    int s = 0;
    for (VertexId v : fib[w]) s += cert.m[v];
    if (d < 0)
      d = s;
    else if (s != d)
      throw Error("not-harmonic", "fiber sums differ over target vertices 0 and " + std::to_string(w));
  }
  return d;
}

std::vector<int> rh_defects(const TropicalMorphism& phi) {
  auto cert = check_harmonic(phi);
  std::vector<int> r;
  for (VertexId v = 0; v < phi.source.num_vertices(); ++v) {
    int k = phi.source.valency(v);
    int l = phi.target.valency(phi.vmap[v]);
    r.push_back((k - 2) - cert.m[v] * (l - 2));
  }
  return r;
}

std::vector<int> check_rh(const TropicalMorphism& phi) {
  auto r = rh_defects(phi);
  for (VertexId v = 0; v < static_cast<VertexId>(r.size()); ++v)
    if (r[v] < 0)
      throw Error("rh-violation",
                  "Riemann-Hurwitz fails at source vertex " + std::to_string(v) + " (defect " + std::to_string(r[v]) + ")");
  return r;
}

Divisor fiber_divisor(const TropicalMorphism& phi, VertexId w) {
  auto cert = check_harmonic(phi);
  Divisor d;
  d.chips.assign(phi.source.num_vertices(), 0);
  for (VertexId v = 0; v < phi.source.num_vertices(); ++v)
    if (phi.vmap[v] == w) d.chips[v] = cert.m[v];
  return d;
}

std::pair<TropicalMorphism, VertexId> subdivide_target(const TropicalMorphism& phi, const GraphPoint& q) {
  if (q.is_vertex()) return {phi, q.vertex};
  TropicalMorphism out = phi;
  EdgeId f = q.edge;
  const Edge fe = phi.target.edge(f);
  if (q.offset <= 0 || q.offset >= fe.length) throw Error("bad-point", "offset outside target edge");
  VertexId x = out.target.split_edge(f, q.offset);
  EdgeId f2 = out.target.num_edges() - 1;
  for (EdgeId e = 0; e < phi.source.num_edges(); ++e) {
    if (phi.emap[e] != f) continue;
    const Edge& se = phi.source.edge(e);
    int s = phi.slope[e];
    bool near_u = phi.vmap[se.u] == fe.u;
    Rational t = near_u ? q.offset / s : (fe.length - q.offset) / s;
    VertexId y = out.source.split_edge(e, t);
    out.vmap.push_back(x);
    out.emap[e] = near_u ? f : f2;
    out.emap.push_back(near_u ? f2 : f);
    out.slope.push_back(s);
  }
  return {std::move(out), x};
}

std::pair<TropicalMorphism, VertexId> subdivide_source(const TropicalMorphism& phi, const GraphPoint& p) {
  if (p.is_vertex()) return {phi, p.vertex};
  const Edge& se = phi.source.edge(p.edge);
  if (p.offset <= 0 || p.offset >= se.length) throw Error("bad-point", "offset outside source edge");
  EdgeId f = phi.emap[p.edge];
  const Edge& fe = phi.target.edge(f);
  Rational along = p.offset * phi.slope[p.edge];
  Rational t = phi.vmap[se.u] == fe.u ? along : Rational(fe.length - along);
  auto [out, x] = subdivide_target(phi, GraphPoint::on_edge(f, t));
  (void)x;
  return {out, out.source.edge(p.edge).v};
}

TropicalMorphism extend_modification(const TropicalMorphism& phi, const std::vector<Graft>& grafts) {
  TropicalMorphism cur = phi;
  std::vector<GraphPoint> pts;
  for (const auto& g : grafts) pts.push_back(g.point);
  // Subdivide one point at a time, tracking later points through the splits.
  std::vector<VertexId> at(grafts.size(), -1);
  for (std::size_t i = 0; i < grafts.size(); ++i) {
    const GraphPoint& p = pts[i];
    if (p.is_vertex() ? (p.vertex < 0 || p.vertex >= cur.source.num_vertices())
                      : (p.edge < 0 || p.edge >= cur.source.num_edges()))
      throw Error("bad-point", "graft point not on the source graph");
    auto [next, v] = subdivide_source(cur, p);
    at[i] = v;
    // Later edge points beyond a split move onto the far part.
    for (std::size_t j = i + 1; j < grafts.size(); ++j) {
      GraphPoint& pj = pts[j];
      if (pj.is_vertex()) continue;
      const Edge& e = next.source.edge(pj.edge);
      if (pj.offset < e.length) continue;
      if (pj.offset == e.length) {
        pj = GraphPoint::at_vertex(e.v);
        continue;
      }
      EdgeId far = -1;
      for (HalfEdge h : next.source.half_edges(e.v))
        if (h.edge != pj.edge) far = h.edge;
      pj = GraphPoint::on_edge(far, pj.offset - e.length);
    }
    cur = std::move(next);
  }
  for (std::size_t i = 0; i < grafts.size(); ++i) {
    const MetricTree& s = grafts[i].tree;
    if (!is_tree(s)) throw Error("not-tree", "grafted object is not a tree");
    auto cert = check_harmonic(cur);
    VertexId v = at[i];
    VertexId w = cur.vmap[v];
    VertexId root = grafts[i].root;
    // Target copy.
    std::vector<VertexId> tv(s.num_vertices(), -1);
    std::vector<EdgeId> te(s.num_edges(), -1);
    tv[root] = w;
    for (VertexId x = 0; x < s.num_vertices(); ++x)
      if (x != root) tv[x] = cur.target.add_vertex();
    for (EdgeId e = 0; e < s.num_edges(); ++e)
      te[e] = cur.target.add_edge(tv[s.edge(e).u], tv[s.edge(e).v], s.edge(e).length);
    int nsrc = cur.source.num_vertices();
    for (VertexId u = 0; u < nsrc; ++u) {
      if (cur.vmap[u] != w) continue;
      for (int c = 0; c < cert.m[u]; ++c) {
        std::vector<VertexId> sv(s.num_vertices(), -1);
        sv[root] = u;
        for (VertexId x = 0; x < s.num_vertices(); ++x)
          if (x != root) {
            sv[x] = cur.source.add_vertex();
            cur.vmap.push_back(tv[x]);
          }
        for (EdgeId e = 0; e < s.num_edges(); ++e) {
          cur.source.add_edge(sv[s.edge(e).u], sv[s.edge(e).v], s.edge(e).length);
          cur.emap.push_back(te[e]);
          cur.slope.push_back(1);
        }
      }
    }
  }
  return cur;
}

GluingDatum to_gluing_datum(const TropicalMorphism& phi) {
  auto cert = check_harmonic(phi);
  check_rh(phi);
  const int d = degree(phi);
  const auto& t = phi.target;
  const auto& s = phi.source;
  VertexId root = -1;
  for (VertexId w = 0; w < t.num_vertices() && root < 0; ++w)
    if (t.valency(w) == 1) root = w;

  std::vector<std::vector<int>> vblock(s.num_vertices()), eblock(s.num_edges());
  auto fib = fibers(phi);
  // Source edges over target edge f incident to source vertex v, by id.
  auto edges_over = [&](VertexId v, EdgeId f) {
    std::vector<EdgeId> out;
    for (HalfEdge h : s.half_edges(v))
      if (phi.emap[h.edge] == f) out.push_back(h.edge);
    std::sort(out.begin(), out.end());
    return out;
  };

  int next = 0;
  for (VertexId v : fib[root]) {
    for (int c = 0; c < cert.m[v]; ++c) vblock[v].push_back(next++);
    EdgeId f = t.half_edges(root).front().edge;
    std::size_t pos = 0;
    for (EdgeId e : edges_over(v, f)) {
      for (int c = 0; c < phi.slope[e]; ++c) eblock[e].push_back(vblock[v][pos++]);
    }
  }

  std::vector<EdgeId> parent_edge(t.num_vertices(), -1);
  std::vector<char> seen(t.num_vertices(), 0);
  std::queue<VertexId> q;
  seen[root] = 1;
  for (HalfEdge h : t.half_edges(root)) {
    VertexId w = t.far_end(h);
    parent_edge[w] = h.edge;
    seen[w] = 1;
    q.push(w);
  }
  while (!q.empty()) {
    VertexId w = q.front();
    q.pop();
    EdgeId pe = parent_edge[w];
    std::vector<EdgeId> children;
    for (HalfEdge h : t.half_edges(w))
      if (h.edge != pe) children.push_back(h.edge);
    std::sort(children.begin(), children.end());
    for (VertexId v : fib[w]) {
      auto parents = edges_over(v, pe);
      for (EdgeId e : parents) vblock[v].insert(vblock[v].end(), eblock[e].begin(), eblock[e].end());
      std::sort(vblock[v].begin(), vblock[v].end());
      if (children.empty()) continue;
      std::vector<NumberPartition> pis;
      std::vector<int> p1;
      for (EdgeId e : parents) p1.push_back(phi.slope[e]);
      pis.emplace_back(p1);
      std::vector<std::vector<EdgeId>> over;
      for (EdgeId f : children) {
        over.push_back(edges_over(v, f));
        std::vector<int> ph;
        for (EdgeId e : over.back()) ph.push_back(phi.slope[e]);
        pis.emplace_back(ph);
      }
      auto sol = solve_partition_lemma(pis);
      // Relabel so the solver's first partition is the prescribed one.
      const int m = cert.m[v];
      std::vector<int> sigma(m, -1);
      std::vector<char> used(parents.size(), 0);
      for (const auto& blk : sol[0].blocks()) {
        std::size_t j = 0;
        while (used[j] || static_cast<int>(eblock[parents[j]].size()) != static_cast<int>(blk.size())) ++j;
        used[j] = 1;
        std::vector<int> target = eblock[parents[j]];
        std::sort(target.begin(), target.end());
        for (std::size_t k = 0; k < blk.size(); ++k) sigma[blk[k]] = target[k];
      }
      for (std::size_t h = 0; h < children.size(); ++h) {
        auto blocks = sol[h + 1].blocks();
        std::vector<char> taken(blocks.size(), 0);
        for (EdgeId e : over[h]) {
          std::size_t j = 0;
          while (taken[j] || static_cast<int>(blocks[j].size()) != phi.slope[e]) ++j;
          taken[j] = 1;
          for (int x : blocks[j]) eblock[e].push_back(sigma[x]);
          std::sort(eblock[e].begin(), eblock[e].end());
        }
      }
    }
    for (EdgeId f : children) {
      const Edge& fe = t.edge(f);
      VertexId c = fe.other(w);
      if (!seen[c]) {
        seen[c] = 1;
        parent_edge[c] = f;
        q.push(c);
      }
    }
  }

  GluingDatum gd;
  gd.tree = t;
  gd.d = d;
  for (VertexId w = 0; w < t.num_vertices(); ++w) {
    std::vector<std::vector<int>> blocks;
    for (VertexId v : fib[w]) blocks.push_back(vblock[v]);
    gd.vertex_partitions.push_back(SetPartition::from_blocks(d, blocks));
  }
  std::vector<std::vector<std::vector<int>>> eb(t.num_edges());
  for (EdgeId e = 0; e < s.num_edges(); ++e) eb[phi.emap[e]].push_back(eblock[e]);
  for (EdgeId f = 0; f < t.num_edges(); ++f) gd.edge_partitions.push_back(SetPartition::from_blocks(d, eb[f]));
  return gd;
}

bool isomorphic(const TropicalMorphism& a, const TropicalMorphism& b) {
  if (a.source.num_vertices() != b.source.num_vertices() || a.source.num_edges() != b.source.num_edges())
    return false;
  auto same_len = [](const MetricGraph& x, const MetricGraph& y) {
    return [&x, &y](EdgeId p, EdgeId q) { return x.edge(p).length == y.edge(q).length; };
  };
  return for_each_isomorphism(
      a.target, b.target, same_len(a.target, b.target),
      [&](const std::vector<VertexId>& tv, const std::vector<EdgeId>& te) {
        return for_each_isomorphism(
            a.source, b.source, [&](VertexId x, VertexId y) { return tv[a.vmap[x]] == b.vmap[y]; },
            [&](EdgeId x, EdgeId y) {
              return te[a.emap[x]] == b.emap[y] && a.slope[x] == b.slope[y] &&
                     a.source.edge(x).length == b.source.edge(y).length;
            },
            [](const auto&, const auto&) { return true; });
      });
}

}  // namespace gonality
