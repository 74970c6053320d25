#pragma once

#include "gonality/error.hpp"
#include "gonality/rational.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gonality {

using VertexId = int;
using EdgeId = int;
using UnionFind = boost::disjoint_sets_with_storage<>;

template <class L>
struct BasicEdge {
  VertexId u = 0;
  VertexId v = 0;
  L length{};

  bool is_loop() const { return u == v; }
  VertexId other(VertexId w) const { return w == u ? v : u; }
};

// One end of an edge; end 0 sits at edge.u, end 1 at edge.v.
struct HalfEdge {
  EdgeId edge = 0;
  int end = 0;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

// Finite multigraph with lengths of type L. Loops are single edges with u == v
// and contribute two half-edges at their vertex.
template <class L>
class BasicMetricGraph {
 public:
  using Length = L;

  BasicMetricGraph() = default;
  explicit BasicMetricGraph(int num_vertices) : half_edges_(num_vertices) {}

  VertexId add_vertex() {
    half_edges_.emplace_back();
    return static_cast<VertexId>(half_edges_.size()) - 1;
  }

  EdgeId add_edge(VertexId u, VertexId v, L length) {
    check_vertex(u);
    check_vertex(v);
    if (!is_positive(length)) throw std::invalid_argument("edge length must be positive");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, std::move(length)});
    half_edges_[u].push_back({id, 0});
    half_edges_[v].push_back({id, 1});
    return id;
  }

  // Splits edge e at distance t from its u end; returns the new vertex.
  // Edge e keeps its id and becomes (u, x); the far part (x, v) is appended.
  VertexId split_edge(EdgeId e, const L& t) {
    check_edge(e);
    BasicEdge<L> old = edges_[e];
    L rest = old.length - t;
    if (!is_positive(t) || !is_positive(rest)) throw std::invalid_argument("split offset out of range");
    VertexId x = add_vertex();
    auto& hv = half_edges_[old.v];
    auto it = std::find(hv.begin(), hv.end(), HalfEdge{e, 1});
    hv.erase(it);
    edges_[e] = {old.u, x, t};
    half_edges_[x].push_back({e, 1});
    EdgeId f = static_cast<EdgeId>(edges_.size());
    edges_.push_back({x, old.v, std::move(rest)});
    half_edges_[x].push_back({f, 0});
    half_edges_[old.v].push_back({f, 1});
    return x;
  }

  int num_vertices() const { return static_cast<int>(half_edges_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const BasicEdge<L>& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<BasicEdge<L>>& edges() const { return edges_; }
  const std::vector<HalfEdge>& half_edges(VertexId v) const { return half_edges_.at(v); }
  int valency(VertexId v) const { return static_cast<int>(half_edges_.at(v).size()); }

  VertexId endpoint(HalfEdge h) const { return h.end == 0 ? edges_[h.edge].u : edges_[h.edge].v; }
  VertexId far_end(HalfEdge h) const { return h.end == 0 ? edges_[h.edge].v : edges_[h.edge].u; }

  friend bool operator==(const BasicMetricGraph& a, const BasicMetricGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    for (int i = 0; i < a.num_edges(); ++i) {
      const auto& x = a.edges_[i];
      const auto& y = b.edges_[i];
      if (x.u != y.u || x.v != y.v || !(x.length == y.length)) return false;
    }
    return true;
  }

 private:
  void check_vertex(VertexId v) const {
    if (v < 0 || v >= num_vertices()) throw std::out_of_range("vertex id " + std::to_string(v));
  }
  void check_edge(EdgeId e) const {
    if (e < 0 || e >= num_edges()) throw std::out_of_range("edge id " + std::to_string(e));
  }

  std::vector<BasicEdge<L>> edges_;
  std::vector<std::vector<HalfEdge>> half_edges_;
};

using Edge = BasicEdge<Rational>;
using MetricGraph = BasicMetricGraph<Rational>;
// Trees share the representation; tree-ness is checked where required.
using MetricTree = MetricGraph;

// A vertex, or a point strictly inside an edge measured from edge.u.
struct GraphPoint {
  VertexId vertex = -1;
  EdgeId edge = -1;
  Rational offset;

  static GraphPoint at_vertex(VertexId v) { return {v, -1, 0}; }
  static GraphPoint on_edge(EdgeId e, Rational t) { return {-1, e, std::move(t)}; }
  bool is_vertex() const { return edge < 0; }
  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;
};

// ---------------------------------------------------------------------------
// Generic algorithms.

template <class L>
bool is_connected(const BasicMetricGraph<L>& g) {
  int n = g.num_vertices();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (HalfEdge h : g.half_edges(v)) {
      VertexId w = g.far_end(h);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

template <class L>
int genus(const BasicMetricGraph<L>& g) {
  if (!is_connected(g)) throw Error("disconnected", "genus of a disconnected graph");
  return g.num_edges() - g.num_vertices() + 1;
}

template <class L>
bool is_tree(const BasicMetricGraph<L>& g) {
  return is_connected(g) && g.num_edges() == g.num_vertices() - 1;
}

template <class L>
L total_length(const BasicMetricGraph<L>& g) {
  L s{};
  for (const auto& e : g.edges()) s = s + e.length;
  return s;
}

// Steps of the unique path a -> b in a tree: (edge, vertex we leave from).
template <class L>
std::vector<std::pair<EdgeId, VertexId>> tree_path(const BasicMetricGraph<L>& t, VertexId a, VertexId b) {
  int n = t.num_vertices();
  std::vector<EdgeId> via(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<VertexId> q;
  q.push(b);
  seen[b] = 1;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    if (v == a) break;
    for (HalfEdge h : t.half_edges(v)) {
      VertexId w = t.far_end(h);
      if (!seen[w]) {
        seen[w] = 1;
        via[w] = h.edge;
        q.push(w);
      }
    }
  }
  if (!seen[a]) throw Error("disconnected", "no path in tree");
  std::vector<std::pair<EdgeId, VertexId>> path;
  for (VertexId v = a; v != b;) {
    EdgeId e = via[v];
    path.emplace_back(e, v);
    v = t.edge(e).other(v);
  }
  return path;
}

template <class L>
L tree_distance(const BasicMetricGraph<L>& t, VertexId a, VertexId b) {
  L s{};
  for (auto [e, from] : tree_path(t, a, b)) s = s + t.edge(e).length;
  return s;
}

// Induced subgraph on the kept vertices (renumbered in id order), keeping
// edges whose endpoints both survive.
template <class L>
struct Restriction {
  BasicMetricGraph<L> graph;
  std::vector<VertexId> new_of_old;  // -1 when dropped
  std::vector<VertexId> old_of_new;
  std::vector<EdgeId> new_edge_of_old;
  std::vector<EdgeId> old_edge_of_new;
};

template <class L>
Restriction<L> restrict_to(const BasicMetricGraph<L>& g, const std::vector<char>& keep_vertex,
                           const std::vector<char>& keep_edge) {
  Restriction<L> r;
  r.new_of_old.assign(g.num_vertices(), -1);
  r.new_edge_of_old.assign(g.num_edges(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (keep_vertex[v]) {
      r.new_of_old[v] = r.graph.add_vertex();
      r.old_of_new.push_back(v);
    }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    if (keep_edge[e] && keep_vertex[ed.u] && keep_vertex[ed.v]) {
      r.new_edge_of_old[e] = r.graph.add_edge(r.new_of_old[ed.u], r.new_of_old[ed.v], ed.length);
      r.old_edge_of_new.push_back(e);
    }
  }
  return r;
}

// The minimal subgraph carrying all cycles (dangling trees stripped). attach[v]
// is the core vertex (original id) through which v hangs; core vertices map to
// themselves.
template <class L>
struct CoreRetraction {
  Restriction<L> core;
  std::vector<VertexId> attach;
};

template <class L>
CoreRetraction<L> core_retraction(const BasicMetricGraph<L>& g) {
  if (genus(g) < 1) throw Error("genus-zero", "core of a tree is a point");
  int n = g.num_vertices();
  std::vector<int> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.valency(v);
  std::vector<char> alive_v(n, 1), alive_e(g.num_edges(), 1);
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push_back(v);
  while (!leaves.empty()) {
    VertexId v = leaves.back();
    leaves.pop_back();
    if (!alive_v[v] || deg[v] != 1) continue;
    alive_v[v] = 0;
    for (HalfEdge h : g.half_edges(v)) {
      if (!alive_e[h.edge]) continue;
      alive_e[h.edge] = 0;
      VertexId w = g.far_end(h);
      if (--deg[w] == 1) leaves.push_back(w);
    }
  }
  CoreRetraction<L> out;
  out.core = restrict_to(g, alive_v, alive_e);
  out.attach.assign(n, -1);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v)
    if (alive_v[v]) {
      out.attach[v] = v;
      stack.push_back(v);
    }
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (HalfEdge h : g.half_edges(v)) {
      VertexId w = g.far_end(h);
      if (out.attach[w] < 0) {
        out.attach[w] = out.attach[v];
        stack.push_back(w);
      }
    }
  }
  return out;
}

// Removes valency-2 vertices by merging their two edges. A bare cycle keeps its
// smallest vertex with a loop. Returns kept vertices in id order.
template <class L>
BasicMetricGraph<L> smooth(const BasicMetricGraph<L>& g, std::vector<VertexId>* kept_out = nullptr) {
  int n = g.num_vertices();
  std::vector<char> keep(n, 0);
  bool any = false;
  for (VertexId v = 0; v < n; ++v) {
    const auto& hs = g.half_edges(v);
    keep[v] = hs.size() != 2 || hs[0].edge == hs[1].edge;
    any = any || keep[v];
  }
  if (!any && n > 0) keep[0] = 1;
  BasicMetricGraph<L> out;
  std::vector<VertexId> id(n, -1), kept;
  for (VertexId v = 0; v < n; ++v)
    if (keep[v]) {
      id[v] = out.add_vertex();
      kept.push_back(v);
    }
  std::vector<char> used(g.num_edges(), 0);
  for (VertexId v : kept) {
    for (HalfEdge h : g.half_edges(v)) {
      if (used[h.edge]) continue;
      L len{};
      HalfEdge cur = h;
      VertexId w;
      while (true) {
        used[cur.edge] = 1;
        len = len + g.edge(cur.edge).length;
        w = g.far_end(cur);
        if (keep[w]) break;
        const auto& hs = g.half_edges(w);
        HalfEdge back{cur.edge, 1 - cur.end};
        cur = hs[0] == back ? hs[1] : hs[0];
      }
      out.add_edge(id[v], id[w], len);
    }
  }
  if (kept_out) *kept_out = kept;
  return out;
}

template <class L>
BasicMetricGraph<L> prune_dangling(const BasicMetricGraph<L>& g) {
  return smooth(core_retraction(g).core.graph);
}

// Enumerates isomorphisms a -> b (vertex bijection plus edge bijection) whose
// vertex pairs satisfy vok(va, vb) and edge pairs ok(ea, eb). f(vmap, emap)
// returns true to stop early. Returns true if stopped by f.
template <class LA, class LB, class VOk, class Ok, class F>
bool for_each_isomorphism(const BasicMetricGraph<LA>& a, const BasicMetricGraph<LB>& b, VOk vok, Ok ok, F f) {
  int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto mult = [](const auto& g) {
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> m;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [u, v] = std::minmax(g.edge(e).u, g.edge(e).v);
      m[{u, v}].push_back(e);
    }
    return m;
  };
  auto ma = mult(a), mb = mult(b);
  auto count = [](const auto& m, VertexId u, VertexId v) -> int {
    auto it = m.find(std::minmax(u, v));
    return it == m.end() ? 0 : static_cast<int>(it->second.size());
  };
  // BFS order of a keeps the search connected.
  std::vector<VertexId> order;
  {
    std::vector<char> seen(n, 0);
    for (VertexId s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::queue<VertexId> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        order.push_back(v);
        for (HalfEdge h : a.half_edges(v)) {
          VertexId w = a.far_end(h);
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
    }
  }
  std::vector<VertexId> vmap(n, -1);
  std::vector<char> used(n, 0);
  std::vector<EdgeId> emap(a.num_edges(), -1);
  std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> groups;

  std::function<bool(std::size_t, std::size_t)> assign_edges = [&](std::size_t gi, std::size_t k) -> bool {
    if (gi == groups.size()) return f(vmap, emap);
    auto& [ea, eb] = groups[gi];
    if (k == ea.size()) return assign_edges(gi + 1, 0);
    for (std::size_t j = 0; j < eb.size(); ++j) {
      EdgeId target = eb[j];
      if (target < 0 || !ok(ea[k], target)) continue;
      emap[ea[k]] = target;
      eb[j] = -1;
      bool stop = assign_edges(gi, k + 1);
      eb[j] = target;
      if (stop) return true;
    }
    return false;
  };

  std::function<bool(int)> assign_vertex = [&](int idx) -> bool {
    if (idx == n) {
      groups.clear();
      for (const auto& [key, ea] : ma) {
        auto it = mb.find(std::minmax(vmap[key.first], vmap[key.second]));
        groups.emplace_back(ea, it->second);
      }
      return assign_edges(0, 0);
    }
    VertexId v = order[idx];
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || a.valency(v) != b.valency(w) || count(ma, v, v) != count(mb, w, w) || !vok(v, w)) continue;
      bool fine = true;
      for (int j = 0; j < idx && fine; ++j) {
        VertexId u = order[j];
        fine = count(ma, u, v) == count(mb, vmap[u], w);
      }
      if (!fine) continue;
      vmap[v] = w;
      used[w] = 1;
      bool stop = assign_vertex(idx + 1);
      used[w] = 0;
      vmap[v] = -1;
      if (stop) return true;
    }
    return false;
  };
  return assign_vertex(0);
}

template <class LA, class LB, class Ok, class F>
bool for_each_isomorphism(const BasicMetricGraph<LA>& a, const BasicMetricGraph<LB>& b, Ok ok, F f) {
  return for_each_isomorphism(a, b, [](VertexId, VertexId) { return true; }, ok, f);
}

// ---------------------------------------------------------------------------
// Rational-only operations.

std::pair<MetricGraph, VertexId> subdivide_at(const MetricGraph& g, const GraphPoint& p);

// Subdivides at several points at once; returns the vertex for each point.
std::pair<MetricGraph, std::vector<VertexId>> subdivide_at_all(const MetricGraph& g,
                                                               const std::vector<GraphPoint>& points);

// Isometry of the smoothed graphs (valency-2 vertices ignored).
bool are_isometric(const MetricGraph& a, const MetricGraph& b);

// Point at distance t from edge.u along e, as a vertex point at the ends.
GraphPoint point_on_edge(const MetricGraph& g, EdgeId e, const Rational& t);

}  // namespace gonality
