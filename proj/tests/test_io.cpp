#include "gonality/construct.hpp"
#include "gonality/io.hpp"
#include "gonality/morphism.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace gonality;

TEST_CASE("graph JSON round trip") {
  MetricGraph g(2);
  g.add_edge(0, 1, q(3, 2));
  g.add_edge(0, 0, q(4));
  Json j = to_json(g);
  CHECK(j["edges"][0]["len"] == "3/2");
  CHECK(graph_from_json(j) == g);
  CHECK(graph_from_json(parse_json_text(j.dump())) == g);
}

TEST_CASE("graph JSON accepts integer lengths and rejects bad input") {
  Json j = parse_json_text(R"({"vertices":[5,9],"edges":[{"u":5,"v":9,"len":2}]})");
  MetricGraph g = graph_from_json(j);
  CHECK(g.num_vertices() == 2);
  CHECK(g.edge(0).length == 2);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"vertices":[0]})")), MalformedInput);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"vertices":[0,1],"edges":[{"u":0,"v":2,"len":"1"}]})")),
                  MalformedInput);
  CHECK_THROWS_AS(graph_from_json(parse_json_text(R"({"vertices":[0,1],"edges":[{"u":0,"v":1,"len":"-1"}]})")),
                  MalformedInput);
  CHECK_THROWS_AS(parse_json_text("{"), MalformedInput);
}

TEST_CASE("datum JSON is one-based and canonical") {
  GluingDatum gd = hyperelliptic_datum(Qs{q(1), q(2)}, Qs{q(1, 3)});
  Json j = to_json(gd);
  CHECK(j["vertex_partitions"]["0"] == Json::parse("[[1,2]]"));
  CHECK(j["edge_partitions"]["0"] == Json::parse("[[1],[2]]"));
  GluingDatum back = datum_from_json(j);
  CHECK(back.tree == gd.tree);
  CHECK(back.vertex_partitions == gd.vertex_partitions);
  CHECK(back.edge_partitions == gd.edge_partitions);
  Json bad = j;
  bad["vertex_partitions"]["0"] = Json::parse("[[1],[1,2]]");
  CHECK_THROWS_AS(datum_from_json(bad), MalformedInput);
}

TEST_CASE("morphism JSON round trip and DOT") {
  auto phi = quotient(hyperelliptic_datum(Qs{q(1), q(2)}, Qs{q(1)})).phi;
  TropicalMorphism back = morphism_from_json(parse_json_text(to_json(phi).dump()));
  CHECK(back.source == phi.source);
  CHECK(back.target == phi.target);
  CHECK(back.vmap == phi.vmap);
  CHECK(back.emap == phi.emap);
  CHECK(back.slope == phi.slope);
  std::string dot = to_dot(phi);
  CHECK(dot.find("subgraph cluster_source") != std::string::npos);
  CHECK(dot.find("subgraph cluster_target") != std::string::npos);
  CHECK(dot.find("slope 2") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
}

TEST_CASE("divisor and cell JSON") {
  Divisor d{{0, 2, 1}};
  CHECK(divisor_from_json(to_json(d), 3) == d);
  LocusCell c;
  c.datum = hyperelliptic_datum(Qs{q(1), q(1)}, Qs{q(1)});
  c.dimension = 3;
  c.code = "x";
  LocusCell back = cell_from_json(parse_json_text(to_json(c).dump()));
  CHECK(back.dimension == 3);
  CHECK(back.code == "x");
  CHECK(back.datum.vertex_partitions == c.datum.vertex_partitions);
}

TEST_CASE("points") {
  GraphPoint p = GraphPoint::on_edge(2, q(1, 3));
  CHECK(point_from_json(to_json(p)) == p);
  CHECK(point_from_json(to_json(GraphPoint::at_vertex(4))) == GraphPoint::at_vertex(4));
}
