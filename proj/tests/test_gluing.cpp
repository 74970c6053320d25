#include "gonality/gluing.hpp"
#include "gonality/morphism.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gonality;

namespace {

SetPartition P(int d, std::vector<std::vector<int>> blocks) { return SetPartition::from_blocks(d, blocks); }

// Path of two edges, d = 2, glued at the ends only: a circle.
GluingDatum circle_datum() {
  GluingDatum gd;
  gd.tree = make_graph(3, {{0, 1, 2}, {1, 2, 3}});
  gd.d = 2;
  gd.vertex_partitions = {SetPartition::whole(2), SetPartition::singletons(2), SetPartition::whole(2)};
  gd.edge_partitions = {SetPartition::singletons(2), SetPartition::singletons(2)};
  return gd;
}

}  // namespace

TEST_CASE("set partitions") {
  auto all = all_set_partitions(4);
  CHECK(all.size() == 15);
  SetPartition p = P(4, {{0, 2}, {1}, {3}});
  CHECK(p.str() == "{0,2}{1}{3}");
  CHECK(p.refines(P(4, {{0, 2, 3}, {1}})));
  CHECK_FALSE(p.refines(P(4, {{0, 1}, {2, 3}})));
  CHECK(p.join(P(4, {{0, 1}, {2}, {3}})) == P(4, {{0, 1, 2}, {3}}));
  CHECK(p.meet(P(4, {{0, 1, 2, 3}})) == p);
  CHECK(refinements(SetPartition::whole(3)).size() == 5);
  CHECK(SetPartition::from_labels({7, 7, 2}) == P(3, {{0, 1}, {2}}));
  CHECK_THROWS(SetPartition::from_blocks(3, {{0, 1}}));
}

TEST_CASE("trivial datum") {
  GluingDatum gd = trivial_datum(make_graph(3, {{0, 1, 1}, {1, 2, 1}}));
  RHReport r = validate(gd);
  CHECK(r.all_zero());
  auto q = quotient(gd);
  CHECK(q.phi.source.num_edges() == 2);
  CHECK(genus_euler(gd) == 0);
  CHECK(genus_inclusion_exclusion(gd) == 0);
  BoundCheck b = bound_check(gd);
  CHECK(b.endpoints == 0);
  CHECK(b.holds);
  CHECK(b.lhs == b.rhs);  // 0 + 0 = 2*0 + 2*1 - 2
}

TEST_CASE("circle datum") {
  GluingDatum gd = circle_datum();
  CHECK(is_valid(gd));
  CHECK(genus_euler(gd) == 1);
  CHECK(genus_inclusion_exclusion(gd) == 1);
  auto q = quotient(gd);
  CHECK(q.phi.source.num_vertices() == 4);
  CHECK(q.phi.source.num_edges() == 4);
  CHECK(degree(q.phi) == 2);
  CHECK(endpoints(gd).members.size() == 2);
  CHECK(interval_gluing_check(gd).ok);
}

TEST_CASE("validation failures") {
  GluingDatum gd = circle_datum();
  gd.edge_partitions[0] = SetPartition::whole(2);
  gd.vertex_partitions[1] = SetPartition::singletons(2);
  CHECK_THROWS_AS(validate(gd), Error);  // edge coarser than vertex
  GluingDatum apart = circle_datum();
  apart.vertex_partitions = {SetPartition::singletons(2), SetPartition::singletons(2), SetPartition::singletons(2)};
  CHECK_THROWS_AS(validate(apart), Error);  // two separate trees
  CHECK_FALSE(is_valid(apart));
}

TEST_CASE("central vertex violating the ramification condition") {
  // Valency four, copies all glued, edges 12|3, 13|2, 23|1, 123.
  GluingDatum gd;
  gd.tree = make_graph(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  gd.d = 3;
  std::vector<SetPartition> eps = {P(3, {{0, 1}, {2}}), P(3, {{0, 2}, {1}}), P(3, {{1, 2}, {0}}), SetPartition::whole(3)};
  gd.vertex_partitions = {SetPartition::whole(3)};
  for (auto& e : eps) gd.vertex_partitions.push_back(e);
  gd.edge_partitions = eps;
  CHECK(oracle::intervals_ok(gd));
  RHReport r = rh_report(gd);
  bool found = false;
  for (const auto& e : r.entries)
    if (e.vertex == 0) {
      CHECK(e.k == 7);
      CHECK(e.l == 4);
      CHECK(e.m == 3);
      CHECK(e.r == -1);
      found = true;
    }
  CHECK(found);
  CHECK_THROWS_AS(validate(gd), RHViolation);
}

TEST_CASE("genus formulas agree with the union-find oracle") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& es : oracle::unlabeled_trees(n)) {
      MetricGraph t = oracle::tree_graph(n, es);
      for (int d = 1; d <= 3; ++d)
        oracle::for_each_valid_datum(t, d, [&](const GluingDatum& gd) {
          CHECK(is_valid(gd));
          int g = oracle::genus(gd);
          CHECK(genus_euler(gd) == g);
          CHECK(genus_inclusion_exclusion(gd) == g);
        });
    }
}

TEST_CASE("quotient is harmonic of degree d") {
  GluingDatum gd;
  gd.tree = make_graph(4, {{0, 1, 2}, {1, 2, 4}, {1, 3, 6}});
  gd.d = 3;
  gd.vertex_partitions = {P(3, {{0, 1}, {2}}), SetPartition::whole(3), P(3, {{0, 2}, {1}}), P(3, {{1, 2}, {0}})};
  gd.edge_partitions = {SetPartition::singletons(3), SetPartition::singletons(3), SetPartition::singletons(3)};
  REQUIRE(is_valid(gd));
  auto q = quotient(gd);
  CHECK(degree(q.phi) == 3);
  CHECK_NOTHROW(check_harmonic(q.phi));
  CHECK_NOTHROW(check_rh(q.phi));
  CHECK(genus(q.phi.source) == oracle::genus(gd));
  // Edge lengths divide by block size.
  GluingDatum doubled = circle_datum();
  doubled.edge_partitions[1] = SetPartition::whole(2);
  doubled.vertex_partitions[1] = SetPartition::whole(2);
  auto q2 = quotient(doubled);
  bool saw_half = false;
  for (EdgeId e = 0; e < q2.phi.source.num_edges(); ++e)
    if (q2.phi.slope[e] == 2) {
      CHECK(q2.phi.source.edge(e).length == Rational(3, 2));
      saw_half = true;
    }
  CHECK(saw_half);
}

TEST_CASE("interval gluing check reports a branch vertex") {
  GluingDatum gd;
  gd.tree = make_graph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  gd.d = 3;
  // Copies 1 and 2 glued along all three edges at the center.
  gd.vertex_partitions = {SetPartition::whole(3), P(3, {{0, 1}, {2}}), P(3, {{0, 1}, {2}}), P(3, {{0, 1}, {2}})};
  gd.edge_partitions.assign(3, P(3, {{0, 1}, {2}}));
  IntervalCheck c = interval_gluing_check(gd);
  CHECK_FALSE(c.ok);
  CHECK(c.branch_vertex == 0);
}
