#include "gonality/integral.hpp"

#include <algorithm>
#include <set>

namespace gonality {

namespace {

struct Step {
  EdgeId edge;
  bool forward;  // traversed from edge.u to edge.v
};

struct Segment {
  std::vector<Step> steps;
  VertexId end = -1;
  Rational length;
};

// Walks from v along h through valency-2 vertices not flagged in stop.
Segment walk(const MetricGraph& g, VertexId v, HalfEdge h, const std::vector<char>& stop) {
  Segment s;
  HalfEdge cur = h;
  while (true) {
    const Edge& e = g.edge(cur.edge);
    s.steps.push_back({cur.edge, cur.end == 0});
    s.length += e.length;
    VertexId w = g.far_end(cur);
    if (stop[w] || g.valency(w) != 2 || w == v) {
      s.end = w;
      return s;
    }
    const auto& hs = g.half_edges(w);
    HalfEdge back{cur.edge, 1 - cur.end};
    cur = hs[0] == back ? hs[1] : hs[0];
  }
}

GraphPoint at_distance(const MetricGraph& g, const Segment& s, const Rational& t) {
  Rational cum = 0;
  for (const Step& st : s.steps) {
    const Edge& e = g.edge(st.edge);
    if (t <= cum + e.length) {
      Rational along = t - cum;
      return point_on_edge(g, st.edge, st.forward ? along : Rational(e.length - along));
    }
    cum += e.length;
  }
  throw Error("bad-point", "distance beyond segment");
}

void push_unique(std::vector<GraphPoint>& out, const GraphPoint& p) {
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}

IntegralSet based_low_valency(const MetricGraph& g, VertexId base) {
  IntegralSet s;
  s.points.push_back(GraphPoint::at_vertex(base));
  std::vector<char> stop(g.num_vertices(), 0);
  stop[base] = 1;
  std::vector<char> used(g.num_edges(), 0);
  for (HalfEdge h : g.half_edges(base)) {
    if (used[h.edge]) continue;
    Segment seg = walk(g, base, h, stop);
    for (const Step& st : seg.steps) used[st.edge] = 1;
    bool closed = seg.end == base;
    if (closed && !is_integer(seg.length))
      throw Error("non-integral", "cycle length " + to_string(seg.length) + " is not integral");
    for (BigInt k = 1; Rational(k) < seg.length || (!closed && Rational(k) == seg.length); ++k)
      push_unique(s.points, at_distance(g, seg, Rational(k)));
  }
  return s;
}

// Maps points of g split at base back onto the unsplit graph.
GraphPoint unsplit(const GraphPoint& p, const GraphPoint& base, VertexId x, EdgeId far_part) {
  if (p.is_vertex()) return p.vertex == x ? base : p;
  if (p.edge == base.edge) return GraphPoint::on_edge(base.edge, p.offset);
  if (p.edge == far_part) return GraphPoint::on_edge(base.edge, base.offset + p.offset);
  return p;
}

}  // namespace

IntegralSet integral_set(const MetricGraph& g) {
  std::vector<char> branch(g.num_vertices(), 0);
  bool any = false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    branch[v] = g.valency(v) >= 3;
    any = any || branch[v];
  }
  if (!any) throw Error("no-branch-vertex", "integral set of a cycle or segment needs a base point");
  IntegralSet s;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (branch[v]) s.points.push_back(GraphPoint::at_vertex(v));
  std::vector<char> used(g.num_edges(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!branch[v]) continue;
    for (HalfEdge h : g.half_edges(v)) {
      if (used[h.edge]) continue;
      Segment seg = walk(g, v, h, branch);
      for (const Step& st : seg.steps) used[st.edge] = 1;
      bool to_branch = branch[seg.end];
      if (to_branch && !is_integer(seg.length))
        throw Error("non-integral", "segment between branch vertices " + std::to_string(v) + " and " +
                                        std::to_string(seg.end) + " has length " + to_string(seg.length));
      for (BigInt k = 1; Rational(k) < seg.length || (!to_branch && Rational(k) == seg.length); ++k)
        push_unique(s.points, at_distance(g, seg, Rational(k)));
    }
  }
  return s;
}

IntegralSet integral_set(const MetricGraph& g, const GraphPoint& base) {
  bool any_branch = false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) any_branch = any_branch || g.valency(v) >= 3;
  if (any_branch) {
    IntegralSet s = integral_set(g);
    if (!contains_point(s, base)) throw Error("base-not-integral", "base point is not in the integral set");
    return s;
  }
  if (base.is_vertex()) return based_low_valency(g, base.vertex);
  auto [split, x] = subdivide_at(g, base);
  EdgeId far_part = split.num_edges() - 1;
  IntegralSet raw = based_low_valency(split, x);
  IntegralSet s;
  for (const auto& p : raw.points) s.points.push_back(unsplit(p, base, x, far_part));
  return s;
}

bool contains_point(const IntegralSet& s, const GraphPoint& p) {
  return std::find(s.points.begin(), s.points.end(), p) != s.points.end();
}

bool is_integral_set(const MetricGraph& g, const std::vector<GraphPoint>& s, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  MetricGraph h;
  std::vector<VertexId> ids;
  try {
    std::tie(h, ids) = subdivide_at_all(g, s);
  } catch (const Error& e) {
    return fail(e.what());
  }
  std::vector<char> in_s(h.num_vertices(), 0);
  for (VertexId v : ids) in_s[v] = 1;
  UnionFind uf(h.num_edges());
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (in_s[v]) continue;
    const auto& hs = h.half_edges(v);
    for (std::size_t i = 1; i < hs.size(); ++i) uf.union_set(hs[0].edge, hs[i].edge);
  }
  struct Comp {
    Rational length;
    int edges = 0;
    int s_ends = 0;
    std::set<VertexId> free_vertices;
  };
  std::map<std::size_t, Comp> comps;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    Comp& c = comps[uf.find_set(e)];
    const Edge& ed = h.edge(e);
    c.length += ed.length;
    ++c.edges;
    for (VertexId w : {ed.u, ed.v}) {
      if (in_s[w])
        ++c.s_ends;
      else
        c.free_vertices.insert(w);
    }
  }
  for (const auto& [key, c] : comps) {
    int leaves = 0;
    for (VertexId w : c.free_vertices) {
      int val = h.valency(w);
      if (val >= 3) return fail("complement contains a branch point");
      if (val == 1) ++leaves;
    }
    int internal = static_cast<int>(c.free_vertices.size()) - leaves;
    if (c.s_ends + leaves != 2 || c.edges != internal + 1)
      return fail("complement component is not an interval");
    if (c.s_ends == 2 && c.length != 1)
      return fail("open complement interval of length " + to_string(c.length));
    if (c.s_ends == 1 && c.length >= 1)
      return fail("dangling complement interval of length " + to_string(c.length));
    if (c.s_ends == 0) return fail("complement component misses the set");
  }
  return true;
}

}  // namespace gonality
