#include "gonality/construct.hpp"
#include "gonality/divisor.hpp"
#include "gonality/io.hpp"
#include "gonality/locus.hpp"
#include "gonality/morphism.hpp"
#include "gonality/partitions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gonality;

namespace {

constexpr int kDomainError = 2;
constexpr int kUsage = 64;
constexpr int kMalformed = 65;

// Flag values that parse but do not fit together.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error("io", "cannot write " + o.out);
  f << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

std::vector<Rational> rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument&) {
      throw UsageError("bad number \"" + item + "\"");
    }
  }
  return out;
}

std::vector<NumberPartition> parts_list(const std::string& text) {
  std::vector<NumberPartition> out;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    std::vector<int> parts;
    std::stringstream gs(group);
    std::string item;
    while (std::getline(gs, item, ',')) {
      try {
        parts.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw UsageError("bad part \"" + item + "\"");
      }
    }
    try {
      out.emplace_back(parts);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

Json partition_tuple(const std::vector<SetPartition>& t) {
  Json out = Json::array();
  for (const auto& p : t) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks()) {
      Json blk = Json::array();
      for (int i : b) blk.push_back(i + 1);
      blocks.push_back(blk);
    }
    out.push_back(blocks);
  }
  return out;
}

void emit_morphism(const Options& o, const TropicalMorphism& phi) {
  if (o.format == "dot")
    emit(o, to_dot(phi));
  else
    emit_json(o, to_json(phi));
}

Json certificate_json(const IntegralCertificate& c) {
  return {{"core", to_json(c.core)},
          {"integral_set", to_json(c.set)},
          {"v0", to_json(c.v0)},
          {"divisor", to_json(c.divisor)},
          {"rank_at_least_one", c.rank_at_least_one},
          {"rejected_candidates", c.rejected}};
}

Json realization_json(const Realization& r) {
  return {{"datum", to_json(r.datum)}, {"morphism", to_json(r.phi)}, {"degree", degree(r.phi)}};
}

IntegralSet set_for_divisor(const MetricGraph& g, const Divisor& d) {
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.valency(v) >= 3) return integral_set(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (d.chips[v] != 0) return integral_set(g, GraphPoint::at_vertex(v));
  return integral_set(g, GraphPoint::at_vertex(0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gluing data and tropical morphisms to metric trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("--out", opt.out, "output file (stdout by default)");
  app.add_option("--seed", opt.seed, "seed for randomized sampling");

  std::string graph_path, datum_path, morphism_path, divisor_path, cells_path;
  std::string lengths, gaps, bridges, parts, points, exts, point_json;
  int l = 0, m = 0, g = 0, d = 0, vertex = -1, max_trees = -1, first_tree = 0;
  long long max_nodes = -1;

  auto* validate_cmd = app.add_subcommand("validate", "check a gluing datum");
  validate_cmd->add_option("--datum", datum_path)->required();

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient morphism of a datum");
  quotient_cmd->add_option("--datum", datum_path)->required();

  auto* genus_cmd = app.add_subcommand("genus", "genus of a graph or of a datum's quotient");
  auto* genus_graph = genus_cmd->add_option("--graph", graph_path);
  auto* genus_datum = genus_cmd->add_option("--datum", datum_path);
  genus_graph->excludes(genus_datum);

  auto* to_datum_cmd = app.add_subcommand("to-datum", "gluing datum of a morphism");
  to_datum_cmd->add_option("--morphism", morphism_path)->required();

  auto* psolve_cmd = app.add_subcommand("partition-solve", "set partitions with prescribed sizes");
  psolve_cmd->add_option("--l", l)->required();
  psolve_cmd->add_option("--m", m)->required();
  psolve_cmd->add_option("--parts", parts, "e.g. \"2,1;2,1;1,1,1\"")->required();

  auto* construct_cmd = app.add_subcommand("construct", "build morphisms");
  construct_cmd->require_subcommand(1);
  auto* hyper_cmd = construct_cmd->add_subcommand("hyperelliptic", "chain-of-loops datum");
  hyper_cmd->add_option("--gaps", gaps)->required();
  hyper_cmd->add_option("--bridges", bridges);
  auto* tri_cmd = construct_cmd->add_subcommand("trivalent", "trivalent construction with divisor");
  tri_cmd->add_option("--graph", graph_path)->required();
  tri_cmd->add_option("--lengths", lengths, "comma-separated edge lengths; sampled in the cone if omitted");
  auto* cactus_cmd = construct_cmd->add_subcommand("cactus", "cactus construction");
  cactus_cmd->add_option("--graph", graph_path)->required();
  auto* cv = cactus_cmd->add_option("--vertex", vertex, "marked vertex for odd genus");
  auto* cp = cactus_cmd->add_option("--point", point_json, "marked point as JSON");
  cv->excludes(cp);
  auto* tripod_cmd = construct_cmd->add_subcommand("tripod", "glue a tripod into a datum");
  tripod_cmd->add_option("--datum", datum_path)->required();
  tripod_cmd->add_option("--points", points, "JSON list of three quotient points")->required();
  tripod_cmd->add_option("--ext", exts, "three extension lengths")->required();

  auto* rank_cmd = app.add_subcommand("rank", "rank at least one check on the unit subdivision");
  rank_cmd->add_option("--graph", graph_path)->required();
  rank_cmd->add_option("--divisor", divisor_path)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "cells of the gonality locus");
  enum_cmd->add_option("--g", g)->required();
  enum_cmd->add_option("--d", d)->required();
  enum_cmd->add_option("--max-trees", max_trees);
  enum_cmd->add_option("--first-tree", first_tree);
  enum_cmd->add_option("--max-nodes", max_nodes);

  auto* member_cmd = app.add_subcommand("membership", "is a metric graph in some cell");
  member_cmd->add_option("--cells", cells_path)->required();
  member_cmd->add_option("--graph", graph_path)->required();

  auto* export_cmd = app.add_subcommand("export", "re-serialize an object");
  auto* eg = export_cmd->add_option("--graph", graph_path);
  auto* ed = export_cmd->add_option("--datum", datum_path);
  auto* em = export_cmd->add_option("--morphism", morphism_path);
  eg->excludes(ed)->excludes(em);
  ed->excludes(em);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate_cmd) {
      GluingDatum gd = datum_from_json(read_json_file(datum_path));
      RHReport r = validate(gd);
      emit_json(opt, to_json(r));
    } else if (*quotient_cmd) {
      GluingDatum gd = datum_from_json(read_json_file(datum_path));
      emit_morphism(opt, quotient(gd).phi);
    } else if (*genus_cmd) {
      if (!graph_path.empty()) {
        emit_json(opt, {{"genus", genus(graph_from_json(read_json_file(graph_path)))}});
      } else if (!datum_path.empty()) {
        GluingDatum gd = datum_from_json(read_json_file(datum_path));
        validate(gd);
        emit_json(opt, {{"genus", genus_euler(gd)}, {"inclusion_exclusion", genus_inclusion_exclusion(gd)}});
      } else {
        std::cerr << "genus needs --graph or --datum\n";
        return kUsage;
      }
    } else if (*to_datum_cmd) {
      GluingDatum gd = to_gluing_datum(morphism_from_json(read_json_file(morphism_path)));
      if (opt.format == "dot")
        emit(opt, to_dot(gd));
      else
        emit_json(opt, to_json(gd));
    } else if (*psolve_cmd) {
      auto pis = parts_list(parts);
      if (static_cast<int>(pis.size()) != l) throw UsageError("--parts has " + std::to_string(pis.size()) + " groups, --l is " + std::to_string(l));
      for (const auto& p : pis)
        if (p.total() != m) throw UsageError("every partition must sum to --m");
      emit_json(opt, partition_tuple(solve_partition_lemma(pis)));
    } else if (*hyper_cmd) {
      GluingDatum gd = hyperelliptic_datum(rational_list(gaps), bridges.empty() ? std::vector<Rational>{} : rational_list(bridges));
      if (opt.format == "dot")
        emit(opt, to_dot(gd));
      else
        emit_json(opt, to_json(gd));
    } else if (*tri_cmd) {
      MetricGraph base = graph_from_json(read_json_file(graph_path));
      MetricGraph gr = base;
      if (!lengths.empty()) {
        gr = with_lengths(base, rational_list(lengths));
      } else if (tri_cmd->count("--lengths") == 0 && app.count("--seed")) {
        Cone c = trivalent_cone(base, opt.seed);
        gr = with_lengths(base, c.integral_samples(1, opt.seed).front());
      }
      Realization r = trivalent_construct(gr);
      if (opt.format == "dot") {
        emit(opt, to_dot(r.phi));
      } else {
        Json j = realization_json(r);
        j["graph"] = to_json(gr);
        bool integral = true;
        for (const auto& e : gr.edges()) integral = integral && is_integer(e.length);
        if (integral) j["certificate"] = certificate_json(integral_certificate(r.phi));
        emit_json(opt, j);
      }
    } else if (*cactus_cmd) {
      MetricGraph gr = graph_from_json(read_json_file(graph_path));
      std::optional<GraphPoint> p;
      if (vertex >= 0) p = GraphPoint::at_vertex(vertex);
      if (!point_json.empty()) p = point_from_json(parse_json_text(point_json));
      CactusResult r = cactus_construct(gr, p);
      if (opt.format == "dot") {
        emit(opt, to_dot(r.realization.phi));
      } else {
        Json j = realization_json(r.realization);
        if (r.v1 >= 0) {
          LocalShape s = local_shape(r.realization.phi, r.v1);
          j["v1"] = {{"vertex", r.v1}, {"m", s.m}, {"k", s.k}, {"l", s.l}};
        }
        bool integral = true;
        for (const auto& e : r.input.edges()) integral = integral && is_integer(e.length);
        if (integral) {
          std::string why;
          bool ok = check_cactus_integrality(r, &why);
          j["integrality"] = {{"holds", ok}, {"reason", why}};
        }
        emit_json(opt, j);
      }
    } else if (*tripod_cmd) {
      GluingDatum gd = datum_from_json(read_json_file(datum_path));
      Json pj = parse_json_text(points);
      auto ext = rational_list(exts);
      if (!pj.is_array() || pj.size() != 3 || ext.size() != 3) throw UsageError("tripod needs three points and three extensions");
      TripodSpec spec;
      for (int i = 0; i < 3; ++i) {
        spec.points[i] = point_from_json(pj[i]);
        spec.extensions[i] = ext[i];
      }
      GluingDatum out = tripod_glue(gd, spec);
      if (opt.format == "dot")
        emit(opt, to_dot(out));
      else
        emit_json(opt, to_json(out));
    } else if (*rank_cmd) {
      MetricGraph gr = graph_from_json(read_json_file(graph_path));
      Divisor dv = divisor_from_json(read_json_file(divisor_path), gr.num_vertices());
      if (!dv.is_effective()) throw Error("not-effective", "the divisor has negative entries");
      IntegralSet s = set_for_divisor(gr, dv);
      UnitSubdivision u = unit_subdivide(gr, s);
      Divisor ud;
      ud.chips.assign(u.graph.n, 0);
      for (VertexId v = 0; v < gr.num_vertices(); ++v) {
        if (dv.chips[v] == 0) continue;
        if (u.of_metric_vertex[v] < 0) throw Error("off-integral-set", "chips at vertex " + std::to_string(v) + " outside the integral set");
        ud.chips[u.of_metric_vertex[v]] += dv.chips[v];
      }
      Json reduced = Json::array();
      for (int q = 0; q < u.graph.n; ++q) {
        ReducedDivisor rd = dhar_reduce(u.graph, ud, q);
        reduced.push_back({{"q", q}, {"point", to_json(s.points[q])}, {"chips_at_q", rd.divisor.chips[q]}, {"divisor", to_json(rd.divisor)}});
      }
      emit_json(opt, {{"degree", dv.degree()}, {"rank_at_least_one", rank_at_least_one(u.graph, ud)}, {"reduced", reduced}});
    } else if (*enum_cmd) {
      EnumerationLimits lim;
      lim.max_trees = max_trees;
      lim.first_tree = first_tree;
      lim.max_nodes = max_nodes;
      Enumeration e = enumerate_cells(g, d, lim);
      std::string lines;
      for (const auto& c : e.cells) lines += to_json(c).dump() + "\n";
      emit(opt, lines);
      Json summary = {{"cells", e.cells.size()},
                      {"max_dimension", max_cell_dimension(e.cells)},
                      {"total_trees", e.total_trees},
                      {"next_tree", e.next_tree},
                      {"complete", e.complete()}};
      if (!e.complete()) {
        Json err = {{"error", "limit-exceeded"}, {"message", "enumeration stopped early; resume with --first-tree"}, {"summary", summary}};
        std::cerr << err.dump() << "\n";
        return kDomainError;
      }
      if (!opt.out.empty()) std::cout << summary.dump() << "\n";
    } else if (*member_cmd) {
      std::vector<LocusCell> cells;
      std::stringstream ss(read_text_file(cells_path));
      std::string line;
      while (std::getline(ss, line))
        if (!line.empty()) cells.push_back(cell_from_json(parse_json_text(line)));
      MetricGraph gr = graph_from_json(read_json_file(graph_path));
      int witness = -1;
      bool member = membership(cells, gr, &witness);
      Json j = {{"member", member}};
      if (member) j["cell"] = cells[witness].code;
      emit_json(opt, j);
    } else if (*export_cmd) {
      if (!graph_path.empty()) {
        MetricGraph gr = graph_from_json(read_json_file(graph_path));
        emit(opt, opt.format == "dot" ? to_dot(gr) : to_json(gr).dump(2) + "\n");
      } else if (!datum_path.empty()) {
        GluingDatum gd = datum_from_json(read_json_file(datum_path));
        emit(opt, opt.format == "dot" ? to_dot(gd) : to_json(gd).dump(2) + "\n");
      } else if (!morphism_path.empty()) {
        emit_morphism(opt, morphism_from_json(read_json_file(morphism_path)));
      } else {
        std::cerr << "export needs --graph, --datum or --morphism\n";
        return kUsage;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const MalformedInput& e) {
    std::cerr << Json({{"error", e.kind()}, {"message", e.what()}}).dump() << "\n";
    return kMalformed;
  } catch (const RHViolation& e) {
    const RHEntry& x = e.entry();
    Json blk = Json::array();
    for (int i : x.block) blk.push_back(i + 1);
    std::cerr << Json({{"error", e.kind()},
                       {"message", e.what()},
                       {"vertex", x.vertex},
                       {"block", blk},
                       {"m", x.m},
                       {"l", x.l},
                       {"k", x.k},
                       {"r", x.r}})
                     .dump()
              << "\n";
    return kDomainError;
  } catch (const Error& e) {
    std::cerr << Json({{"error", e.kind()}, {"message", e.what()}}).dump() << "\n";
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << Json({{"error", "invalid-argument"}, {"message", e.what()}}).dump() << "\n";
    return kDomainError;
  } catch (const std::out_of_range& e) {
    std::cerr << Json({{"error", "out-of-range"}, {"message", e.what()}}).dump() << "\n";
    return kDomainError;
  }
  return 0;
}
