#include <doctest.h>

#include <random>
#include <stdexcept>

#include "isocrit/criticality.hpp"
#include "isocrit/enumeration.hpp"
#include "isocrit/families.hpp"
#include "isocrit/graph.hpp"
#include "isocrit/isolation.hpp"

using namespace isocrit;

TEST_CASE("basic generators") {
  CHECK(make_path(1).vertex_count() == 1);
  CHECK(make_star(0) == Graph(1, {}));
  CHECK(make_star(3).degree(0) == 3);
  CHECK_THROWS_AS(make_path(0), std::invalid_argument);
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(make_spider(1), std::invalid_argument);
  CHECK_THROWS_AS(make_wounded_spider(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_wounded_spider(3, 3), std::invalid_argument);
}

TEST_CASE("spiders and wounded spiders") {
  const Graph s3 = make_spider(3);
  CHECK(s3.vertex_count() == 7);
  CHECK(s3.edge_count() == 6);
  CHECK(iota(s3) == 1);

  // t=4, d=1: centre, one plain leaf, three subdivided legs
  const Graph w41 = make_wounded_spider(4, 1);
  CHECK(w41.vertex_count() == 8);  // 2t-d+1
  CHECK(w41.edge_count() == 7);
  CHECK(classify(w41).tree);
  CHECK(iota(w41) == 1);

  for (int t = 2; t <= 5; ++t) {
    for (int d = 1; d <= t - 1; ++d) {
      const Graph w = make_wounded_spider(t, d);
      CHECK(w.vertex_count() == 2 * t - d + 1);
      CHECK(iota_tree(w) == 1);
      CHECK(crit_index(w) == d + 1);
    }
  }
}

TEST_CASE("qk family structure") {
  const auto q1 = make_qk(1);
  CHECK(q1.graph == make_path(6));
  CHECK(q1.a_k.size() == 3);  // five edges minus vx and xy
  CHECK(iota(q1.graph) == 2);

  const auto q3 = make_qk(3);
  CHECK(q3.graph.vertex_count() == 12);
  CHECK(q3.graph.edge_count() == 11);
  CHECK(q3.a_k.size() == 9);
  CHECK(classify(q3.graph).tree);
  CHECK(q3.u.size() == 3);
  // x sits between v and the leaf y
  CHECK(q3.graph.has_edge(q3.v, q3.x));
  CHECK(q3.graph.has_edge(q3.x, q3.y));
  CHECK(q3.graph.degree(q3.y) == 1);
  for (std::size_t i = 1; i < q3.u.size(); ++i) {
    CHECK(q3.graph.has_edge(q3.v, q3.u[i]));
  }

  for (int k = 1; k <= 3; ++k) {
    const auto qk = make_qk(k);
    CHECK(static_cast<int>(qk.a_k.size()) == qk.graph.edge_count() - 2);
    // the u-vertices plus v form a minimum isolating set
    VertexSet d = qk.u;
    d.push_back(qk.v);
    std::sort(d.begin(), d.end());
    CHECK(is_isolating(qk.graph, d));
    CHECK(iota(qk.graph) == k + 1);
    // subdividing the safe set leaves iota unchanged
    CHECK(iota(subdivide(qk.graph, qk.a_k).graph) == k + 1);
  }
}

TEST_CASE("status tree base and operations") {
  const StatusTree base = fiota_base();
  CHECK(base.tree == make_path(5));
  CHECK(base.status == std::vector<Status>{Status::C, Status::B, Status::A,
                                           Status::B, Status::C});
  CHECK_NOTHROW(validate_status_tree(base));

  // a second leaf at a support vertex of the base path
  const StatusTree t1 = fiota_apply(base, FiotaOp::O1, 1);
  CHECK(t1.tree.vertex_count() == 6);
  CHECK(t1.tree.degree(1) == 3);
  CHECK(t1.status[5] == Status::C);
  CHECK(t1.trace.size() == 1);

  // a two-vertex path at the centre gives the three-leg spider
  const StatusTree t2 = fiota_apply(base, FiotaOp::O2, 2);
  CHECK(tree_canonical_form(t2.tree) == tree_canonical_form(make_spider(3)));
  CHECK(t2.status[5] == Status::B);
  CHECK(t2.status[6] == Status::C);

  // a four-vertex path at a leaf gives the nine-vertex path
  const StatusTree t3 = fiota_apply(base, FiotaOp::O3, 0);
  CHECK(tree_canonical_form(t3.tree) == tree_canonical_form(make_path(9)));
  CHECK(t3.status[5] == Status::B);
  CHECK(t3.status[6] == Status::A);
  CHECK(t3.status[7] == Status::B);
  CHECK(t3.status[8] == Status::C);

  CHECK_THROWS_AS(fiota_apply(base, FiotaOp::O1, 2), std::invalid_argument);
  CHECK_THROWS_AS(fiota_apply(base, FiotaOp::O2, 0), std::invalid_argument);
  CHECK_THROWS_AS(fiota_apply(base, FiotaOp::O3, 1), std::invalid_argument);
  CHECK_THROWS_AS(fiota_apply(base, FiotaOp::O1, 17), std::invalid_argument);
}

TEST_CASE("random construction sequences keep all invariants") {
  std::mt19937 rng(424242);
  for (int round = 0; round < 60; ++round) {
    StatusTree t = fiota_base();
    const int steps = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < steps; ++s) {
      const int pick = static_cast<int>(rng() % 3);
      const FiotaOp op = pick == 0 ? FiotaOp::O1 : pick == 1 ? FiotaOp::O2 : FiotaOp::O3;
      const Status wanted = pick == 0 ? Status::B : pick == 1 ? Status::A : Status::C;
      const VertexSet anchors = t.with_status(wanted);
      const int anchor = anchors[rng() % anchors.size()];
      t = fiota_apply(t, op, anchor);  // validates internally
    }
    // the A-set is the unique minimum isolating set and the tripartition holds
    const auto family = enumerate_min_isolating_sets(t.tree);
    CHECK(family.sets.size() == 1);
    CHECK(family.sets[0] == t.with_status(Status::A));
    const auto report =
        check_tripartition(t.tree, t.with_status(Status::A), t.with_status(Status::B),
                           t.with_status(Status::C));
    CHECK(report.pass);
  }
}

TEST_CASE("membership on fixed instances") {
  CHECK(fiota_membership(make_path(5)).member);
  CHECK(!fiota_membership(make_path(6)).member);
  CHECK(!fiota_membership(make_path(4)).member);
  CHECK(!fiota_membership(make_star(4)).member);
  CHECK(!fiota_membership(make_wounded_spider(3, 2)).member);

  const auto p9 = fiota_membership(make_path(9));
  REQUIRE(p9.member);
  REQUIRE(p9.witness.has_value());
  CHECK(p9.witness->trace.size() == 1);
  CHECK(p9.witness->trace[0].op == FiotaOp::O3);

  CHECK_THROWS_AS(fiota_membership(make_cycle(5)), std::invalid_argument);
}

TEST_CASE("membership witnesses replay through the public operations") {
  std::mt19937 rng(777);
  for (int round = 0; round < 25; ++round) {
    StatusTree t = fiota_base();
    for (int s = 0; s < 4; ++s) {
      const int pick = static_cast<int>(rng() % 3);
      const FiotaOp op = pick == 0 ? FiotaOp::O1 : pick == 1 ? FiotaOp::O2 : FiotaOp::O3;
      const Status wanted = pick == 0 ? Status::B : pick == 1 ? Status::A : Status::C;
      const VertexSet anchors = t.with_status(wanted);
      t = fiota_apply(t, op, anchors[rng() % anchors.size()]);
    }
    const auto decision = fiota_membership(t.tree);
    REQUIRE(decision.member);
    // statuses are intrinsic: any construction ends at the same partition
    CHECK(decision.witness->status == t.status);
  }
}

TEST_CASE("membership matches the subset-search criticality route") {
  for (int n = 5; n <= 10; ++n) {
    for (const Graph& t : free_trees(n)) {
      if (classify(t).star) continue;
      const bool member = fiota_membership(t).member;
      const bool critical = crit_index(t) == 1;
      CHECK(member == critical);
    }
  }
}
