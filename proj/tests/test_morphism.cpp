#include "gonality/gluing.hpp"
#include "gonality/morphism.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gonality;

namespace {

GluingDatum fold_datum(int a, int b) {
  GluingDatum gd;
  gd.tree = make_graph(3, {{0, 1, a}, {1, 2, b}});
  gd.d = 2;
  gd.vertex_partitions = {SetPartition::whole(2), SetPartition::singletons(2), SetPartition::whole(2)};
  gd.edge_partitions = {SetPartition::singletons(2), SetPartition::singletons(2)};
  return gd;
}

GluingDatum with_random_lengths(const GluingDatum& gd, std::mt19937& rng) {
  GluingDatum out = gd;
  out.tree = MetricGraph(gd.tree.num_vertices());
  std::uniform_int_distribution<int> len(1, 9);
  for (const auto& e : gd.tree.edges()) out.tree.add_edge(e.u, e.v, Rational(len(rng), 1 + len(rng) % 3));
  return out;
}

}  // namespace

TEST_CASE("fold of a circle") {
  auto phi = quotient(fold_datum(2, 3)).phi;
  CHECK(degree(phi) == 2);
  auto r = check_rh(phi);
  auto cert = check_harmonic(phi);
  for (VertexId v = 0; v < phi.source.num_vertices(); ++v) {
    if (cert.m[v] == 2) CHECK(r[v] == 2);  // k = 2, l = 1
    if (cert.m[v] == 1) CHECK(r[v] == 0);
  }
  Divisor f = fiber_divisor(phi, 0);
  CHECK(f.degree() == 2);
}

TEST_CASE("non-harmonic map is rejected") {
  TropicalMorphism phi;
  phi.source = make_graph(3, {{0, 1, 1}, {0, 2, 1}});
  phi.target = make_graph(3, {{0, 1, 1}, {0, 2, 1}});
  phi.vmap = {0, 1, 1};
  phi.emap = {0, 0};
  phi.slope = {1, 1};
  CHECK_THROWS_AS(check_harmonic(phi), HarmonicityError);
  // Length mismatch is a metric failure.
  TropicalMorphism bad;
  bad.source = make_graph(2, {{0, 1, 2}});
  bad.target = make_graph(2, {{0, 1, 1}});
  bad.vmap = {0, 1};
  bad.emap = {0};
  bad.slope = {1};
  CHECK_THROWS_AS(check_metric(bad), Error);
}

TEST_CASE("subdivision keeps degree and harmonicity") {
  auto phi = quotient(fold_datum(2, 3)).phi;
  auto [psi, w] = subdivide_target(phi, GraphPoint::on_edge(1, q(1)));
  CHECK(degree(psi) == 2);
  CHECK(fiber_divisor(psi, w).degree() == 2);
  auto [chi, v] = subdivide_source(phi, GraphPoint::on_edge(0, q(1)));
  CHECK(degree(chi) == 2);
  CHECK(chi.source.valency(v) == 2);
  CHECK_NOTHROW(check_rh(chi));
}

TEST_CASE("modification by grafting") {
  auto phi = quotient(fold_datum(2, 3)).phi;
  Graft g;
  g.point = GraphPoint::at_vertex(1);
  g.tree = make_graph(2, {{0, 1, 5}});
  g.root = 0;
  auto ext = extend_modification(phi, {g});
  CHECK(degree(ext) == 2);
  CHECK_NOTHROW(check_rh(ext));
  CHECK(genus(ext.source) == 1);
  CHECK(are_isometric(prune_dangling(ext.source), prune_dangling(phi.source)));
}

TEST_CASE("morphism to datum round trip on enumerated data") {
  std::mt19937 rng(7);
  int count = 0;
  for (int n = 2; n <= 4; ++n)
    for (const auto& es : oracle::unlabeled_trees(n))
      for (int d = 2; d <= 3; ++d)
        oracle::for_each_valid_datum(oracle::tree_graph(n, es), d, [&](const GluingDatum& gd0) {
          if (rng() % 7 != 0) return;
          GluingDatum gd = with_random_lengths(gd0, rng);
          auto phi = quotient(gd).phi;
          GluingDatum back = to_gluing_datum(phi);
          CHECK(is_valid(back));
          CHECK(interval_gluing_check(back).ok);
          CHECK(isomorphic(quotient(back).phi, phi));
          ++count;
        });
  CHECK(count > 50);
}

TEST_CASE("isomorphism test distinguishes lengths") {
  auto a = quotient(fold_datum(2, 3)).phi;
  auto b = quotient(fold_datum(3, 2)).phi;
  auto c = quotient(fold_datum(2, 4)).phi;
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, c));
}
