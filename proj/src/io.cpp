#include "gonality/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace gonality {

namespace {

std::string len_str(const Rational& r) { return to_string(r); }

Rational len_from(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::invalid_argument&) {
  }
  throw MalformedInput(where + ": expected a fraction string");
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int int_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(j.get<std::string>(), &pos);
      if (pos == j.get<std::string>().size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw MalformedInput(where + ": expected an integer");
}

Json partition_json(const SetPartition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks()) {
    Json blk = Json::array();
    for (int i : b) blk.push_back(i + 1);
    out.push_back(blk);
  }
  return out;
}

SetPartition partition_from(const Json& j, int d, const std::string& where) {
  if (!j.is_array()) throw MalformedInput(where + ": expected a list of blocks");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) throw MalformedInput(where + ": expected a list of blocks");
    std::vector<int> blk;
    for (const auto& x : b) blk.push_back(int_from(x, where) - 1);
    blocks.push_back(std::move(blk));
  }
  try {
    return SetPartition::from_blocks(d, blocks);
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(where + ": " + e.what());
  }
}

template <class F>
Json keyed(int n, F f) {
  Json out = Json::object();
  for (int i = 0; i < n; ++i) out[std::to_string(i)] = f(i);
  return out;
}

template <class F>
void read_keyed(const Json& j, int n, const std::string& where, F f) {
  if (!j.is_object() && !j.is_array()) throw MalformedInput(where + ": expected an object keyed by id");
  if (static_cast<int>(j.size()) != n) throw MalformedInput(where + ": expected " + std::to_string(n) + " entries");
  if (j.is_array()) {
    for (int i = 0; i < n; ++i) f(i, j[i]);
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    int k = int_from(Json(it.key()), where);
    if (k < 0 || k >= n) throw MalformedInput(where + ": id " + it.key() + " out of range");
    f(k, it.value());
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json to_json(const MetricGraph& g) {
  Json vs = Json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) vs.push_back(v);
  Json es = Json::array();
  for (const auto& e : g.edges()) es.push_back({{"u", e.u}, {"v", e.v}, {"len", len_str(e.length)}});
  return {{"vertices", vs}, {"edges", es}};
}

MetricGraph graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices", "graph");
  const Json& es = field(j, "edges", "graph");
  if (!vs.is_array() || !es.is_array()) throw MalformedInput("graph: vertices and edges must be lists");
  std::map<int, VertexId> id;
  for (const auto& v : vs) id.emplace(int_from(v, "graph vertex"), 0);
  if (id.size() != vs.size()) throw MalformedInput("graph: duplicate vertex id");
  VertexId next = 0;
  for (auto& [k, v] : id) v = next++;
  MetricGraph g(static_cast<int>(id.size()));
  for (const auto& e : es) {
    int u = int_from(field(e, "u", "graph edge"), "graph edge");
    int v = int_from(field(e, "v", "graph edge"), "graph edge");
    if (!id.count(u) || !id.count(v)) throw MalformedInput("graph: edge endpoint not listed");
    Rational len = len_from(field(e, "len", "graph edge"), "graph edge length");
    if (len <= 0) throw MalformedInput("graph: edge lengths must be positive");
    g.add_edge(id[u], id[v], len);
  }
  return g;
}

Json to_json(const GluingDatum& gd) {
  return {{"tree", to_json(gd.tree)},
          {"d", gd.d},
          {"vertex_partitions", keyed(gd.tree.num_vertices(), [&](int v) { return partition_json(gd.vertex_partitions[v]); })},
          {"edge_partitions", keyed(gd.tree.num_edges(), [&](int e) { return partition_json(gd.edge_partitions[e]); })}};
}

GluingDatum datum_from_json(const Json& j) {
  GluingDatum gd;
  gd.tree = graph_from_json(field(j, "tree", "datum"));
  gd.d = int_from(field(j, "d", "datum"), "datum d");
  if (gd.d < 1) throw MalformedInput("datum: d must be positive");
  gd.vertex_partitions.resize(gd.tree.num_vertices());
  gd.edge_partitions.resize(gd.tree.num_edges());
  read_keyed(field(j, "vertex_partitions", "datum"), gd.tree.num_vertices(), "vertex_partitions",
             [&](int v, const Json& x) { gd.vertex_partitions[v] = partition_from(x, gd.d, "vertex partition"); });
  read_keyed(field(j, "edge_partitions", "datum"), gd.tree.num_edges(), "edge_partitions",
             [&](int e, const Json& x) { gd.edge_partitions[e] = partition_from(x, gd.d, "edge partition"); });
  return gd;
}

Json to_json(const TropicalMorphism& phi) {
  return {{"source", to_json(phi.source)},
          {"target", to_json(phi.target)},
          {"vmap", keyed(phi.source.num_vertices(), [&](int v) { return phi.vmap[v]; })},
          {"emap", keyed(phi.source.num_edges(), [&](int e) { return phi.emap[e]; })},
          {"slope", keyed(phi.source.num_edges(), [&](int e) { return phi.slope[e]; })}};
}

TropicalMorphism morphism_from_json(const Json& j) {
  TropicalMorphism phi;
  phi.source = graph_from_json(field(j, "source", "morphism"));
  phi.target = graph_from_json(field(j, "target", "morphism"));
  int nv = phi.source.num_vertices(), ne = phi.source.num_edges();
  phi.vmap.assign(nv, -1);
  phi.emap.assign(ne, -1);
  phi.slope.assign(ne, 0);
  read_keyed(field(j, "vmap", "morphism"), nv, "vmap", [&](int v, const Json& x) {
    phi.vmap[v] = int_from(x, "vmap");
    if (phi.vmap[v] < 0 || phi.vmap[v] >= phi.target.num_vertices()) throw MalformedInput("vmap: target vertex out of range");
  });
  read_keyed(field(j, "emap", "morphism"), ne, "emap", [&](int e, const Json& x) {
    phi.emap[e] = int_from(x, "emap");
    if (phi.emap[e] < 0 || phi.emap[e] >= phi.target.num_edges()) throw MalformedInput("emap: target edge out of range");
  });
  read_keyed(field(j, "slope", "morphism"), ne, "slope",
             [&](int e, const Json& x) { phi.slope[e] = int_from(x, "slope"); });
  return phi;
}

Json to_json(const Divisor& d) {
  Json chips = Json::object();
  for (std::size_t v = 0; v < d.chips.size(); ++v)
    if (d.chips[v] != 0) chips[std::to_string(v)] = d.chips[v];
  return {{"chips", chips}, {"degree", d.degree()}};
}

Divisor divisor_from_json(const Json& j, int num_vertices) {
  Divisor d;
  d.chips.assign(num_vertices, 0);
  const Json& c = field(j, "chips", "divisor");
  if (c.is_array()) {
    if (static_cast<int>(c.size()) != num_vertices) throw MalformedInput("divisor: chip list length mismatch");
    for (int v = 0; v < num_vertices; ++v) d.chips[v] = int_from(c[v], "divisor chips");
    return d;
  }
  if (!c.is_object()) throw MalformedInput("divisor: chips must be an object or list");
  for (auto it = c.begin(); it != c.end(); ++it) {
    int v = int_from(Json(it.key()), "divisor vertex");
    if (v < 0 || v >= num_vertices) throw MalformedInput("divisor: vertex out of range");
    d.chips[v] = int_from(it.value(), "divisor chips");
  }
  return d;
}

Json to_json(const LocusCell& c) {
  Json j = to_json(c.datum);
  j["dimension"] = c.dimension;
  j["code"] = c.code;
  return j;
}

LocusCell cell_from_json(const Json& j) {
  LocusCell c;
  c.datum = datum_from_json(j);
  c.dimension = j.contains("dimension") ? int_from(j.at("dimension"), "cell dimension") : cell_dimension(c.datum);
  c.code = j.contains("code") && j.at("code").is_string() ? j.at("code").get<std::string>() : canonical_code(c.datum);
  return c;
}

Json to_json(const RHReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json blk = Json::array();
    for (int i : e.block) blk.push_back(i + 1);
    entries.push_back({{"vertex", e.vertex}, {"block", blk}, {"m", e.m}, {"l", e.l}, {"k", e.k}, {"r", e.r}});
  }
  return {{"all_zero", r.all_zero()}, {"entries", entries}};
}

Json to_json(const GraphPoint& p) {
  if (p.is_vertex()) return {{"vertex", p.vertex}};
  return {{"edge", p.edge}, {"offset", len_str(p.offset)}};
}

GraphPoint point_from_json(const Json& j) {
  if (j.is_object() && j.contains("vertex")) return GraphPoint::at_vertex(int_from(j.at("vertex"), "point vertex"));
  return GraphPoint::on_edge(int_from(field(j, "edge", "point"), "point edge"),
                             len_from(field(j, "offset", "point"), "point offset"));
}

Json to_json(const IntegralSet& s) {
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(to_json(p));
  return pts;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json_text(read_text_file(path)); }

std::string to_dot(const MetricGraph& g, const std::string& name) {
  std::ostringstream o;
  o << "graph \"" << dot_escape(name) << "\" {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) o << "  v" << v << " [label=\"" << v << "\"];\n";
  for (const auto& e : g.edges()) o << "  v" << e.u << " -- v" << e.v << " [label=\"" << len_str(e.length) << "\"];\n";
  o << "}\n";
  return o.str();
}

std::string to_dot(const GluingDatum& gd) {
  std::ostringstream o;
  o << "graph datum {\n  label=\"d=" << gd.d << "\";\n";
  auto lbl = [](const SetPartition& p) {
    std::string s;
    for (const auto& b : p.blocks()) {
      s += '{';
      for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i] + 1);
      s += '}';
    }
    return s;
  };
  for (VertexId v = 0; v < gd.tree.num_vertices(); ++v)
    o << "  t" << v << " [label=\"" << v << " " << lbl(gd.vertex_partitions[v]) << "\"];\n";
  for (EdgeId e = 0; e < gd.tree.num_edges(); ++e) {
    const auto& ed = gd.tree.edge(e);
    o << "  t" << ed.u << " -- t" << ed.v << " [label=\"" << len_str(ed.length) << " " << lbl(gd.edge_partitions[e])
      << "\"];\n";
  }
  o << "}\n";
  return o.str();
}

std::string to_dot(const TropicalMorphism& phi) {
  std::ostringstream o;
  o << "graph morphism {\n  compound=true;\n  subgraph cluster_source {\n    label=\"source\";\n";
  for (VertexId v = 0; v < phi.source.num_vertices(); ++v) o << "    s" << v << " [label=\"" << v << "\"];\n";
  for (EdgeId e = 0; e < phi.source.num_edges(); ++e) {
    const auto& ed = phi.source.edge(e);
    // Midpoint nodes carry the edge-to-edge correspondence.
    o << "    se" << e << " [shape=point];\n";
    o << "    s" << ed.u << " -- se" << e << " [label=\"" << len_str(ed.length) << "\"];\n";
    o << "    se" << e << " -- s" << ed.v << ";\n";
  }
  o << "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
  for (VertexId v = 0; v < phi.target.num_vertices(); ++v) o << "    t" << v << " [label=\"" << v << "\"];\n";
  for (EdgeId f = 0; f < phi.target.num_edges(); ++f) {
    const auto& ed = phi.target.edge(f);
    o << "    te" << f << " [shape=point];\n";
    o << "    t" << ed.u << " -- te" << f << " [label=\"" << len_str(ed.length) << "\"];\n";
    o << "    te" << f << " -- t" << ed.v << ";\n";
  }
  o << "  }\n";
  for (VertexId v = 0; v < phi.source.num_vertices(); ++v)
    o << "  s" << v << " -- t" << phi.vmap[v] << " [style=dotted];\n";
  for (EdgeId e = 0; e < phi.source.num_edges(); ++e)
    o << "  se" << e << " -- te" << phi.emap[e] << " [style=dashed, label=\"slope " << phi.slope[e] << "\"];\n";
  o << "}\n";
  return o.str();
}

}  // namespace gonality
