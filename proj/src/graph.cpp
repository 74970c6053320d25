#include "gonality/graph.hpp"

#include <map>

namespace gonality {

std::pair<MetricGraph, VertexId> subdivide_at(const MetricGraph& g, const GraphPoint& p) {
  auto [out, ids] = subdivide_at_all(g, {p});
  return {std::move(out), ids[0]};
}

std::pair<MetricGraph, std::vector<VertexId>> subdivide_at_all(const MetricGraph& g,
                                                               const std::vector<GraphPoint>& points) {
  MetricGraph out = g;
  std::vector<VertexId> ids(points.size(), -1);
  std::map<EdgeId, std::map<Rational, std::vector<std::size_t>>> by_edge;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const GraphPoint& p = points[i];
    if (p.is_vertex()) {
      if (p.vertex < 0 || p.vertex >= g.num_vertices())
        throw Error("bad-point", "vertex " + std::to_string(p.vertex) + " not in graph");
      ids[i] = p.vertex;
      continue;
    }
    if (p.edge >= g.num_edges()) throw Error("bad-point", "edge " + std::to_string(p.edge) + " not in graph");
    if (p.offset <= 0 || p.offset >= g.edge(p.edge).length)
      throw Error("bad-point", "offset " + to_string(p.offset) + " outside edge " + std::to_string(p.edge));
    by_edge[p.edge][p.offset].push_back(i);
  }
  for (auto& [e, offsets] : by_edge) {
    for (auto it = offsets.rbegin(); it != offsets.rend(); ++it) {
      VertexId x = out.split_edge(e, it->first);
      for (std::size_t i : it->second) ids[i] = x;
    }
  }
  return {std::move(out), std::move(ids)};
}

bool are_isometric(const MetricGraph& a, const MetricGraph& b) {
  MetricGraph sa = smooth(a), sb = smooth(b);
  return for_each_isomorphism(
      sa, sb, [&](EdgeId x, EdgeId y) { return sa.edge(x).length == sb.edge(y).length; },
      [](const auto&, const auto&) { return true; });
}

GraphPoint point_on_edge(const MetricGraph& g, EdgeId e, const Rational& t) {
  const Edge& ed = g.edge(e);
  if (t == 0) return GraphPoint::at_vertex(ed.u);
  if (t == ed.length) return GraphPoint::at_vertex(ed.v);
  if (t < 0 || t > ed.length) throw Error("bad-point", "offset outside edge");
  return GraphPoint::on_edge(e, t);
}

}  // namespace gonality
