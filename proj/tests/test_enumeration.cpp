#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "isocrit/criticality.hpp"
#include "isocrit/enumeration.hpp"
#include "isocrit/families.hpp"
#include "isocrit/graph.hpp"
#include "isocrit/graph_io.hpp"
#include "isocrit/isolation.hpp"

using namespace isocrit;

namespace {

// Independent isomorphism test: plain backtracking over vertex maps with a
// degree filter. Deliberately avoids the canonical-form machinery so it can
// serve as an oracle for it.
bool isomorphic_backtracking(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int prev = 0; prev < v && ok; ++prev) {
        if (a.has_edge(prev, v) != b.has_edge(map[prev], w)) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

// Leaf-extension enumeration of free trees with pairwise isomorphism
// rejection: every tree on n vertices arises from a tree on n-1 vertices by
// attaching one leaf.
std::vector<Graph> oracle_free_trees(int n) {
  std::vector<Graph> current{Graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    for (const Graph& t : current) {
      for (int v = 0; v < t.vertex_count(); ++v) {
        EdgeSet edges = t.edges();
        edges.emplace_back(v, k - 1);
        Graph candidate(k, std::move(edges));
        bool fresh = true;
        for (const Graph& kept : next) {
          if (isomorphic_backtracking(candidate, kept)) {
            fresh = false;
            break;
          }
        }
        if (fresh) next.push_back(std::move(candidate));
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

TEST_CASE("tree canonical forms identify isomorphic trees") {
  std::mt19937 rng(2468);
  for (int round = 0; round < 80; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    EdgeSet edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
    const Graph t(n, std::move(edges));
    // relabel by a random permutation
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeSet relabelled;
    for (const auto& [u, v] : t.edges()) relabelled.push_back(make_edge(perm[u], perm[v]));
    const Graph s(n, std::move(relabelled));
    CHECK(tree_canonical_form(t) == tree_canonical_form(s));
    CHECK(canonical_tree_code(t) == canonical_tree_code(s));
  }
  // different trees get different codes
  CHECK(canonical_tree_code(make_path(7)) != canonical_tree_code(make_spider(3)));
}

TEST_CASE("free tree counts match the leaf-extension oracle") {
  for (int n = 1; n <= 9; ++n) {
    const auto generated = free_trees(n);
    const auto oracle = oracle_free_trees(n);
    CHECK(generated.size() == oracle.size());
    // emitted representatives are trees of the right order with distinct codes
    std::set<std::string> codes;
    for (const Graph& t : generated) {
      const auto shape = classify(t);
      CHECK(shape.tree);
      CHECK(t.vertex_count() == n);
      CHECK(codes.insert(encode_graph6(t)).second);
      CHECK(tree_canonical_form(t) == t);  // already canonical
    }
  }
}

TEST_CASE("free tree counts for orders ten to twelve") {
  CHECK(free_trees(10).size() == 106);
  CHECK(free_trees(11).size() == 235);
  CHECK(free_trees(12).size() == 551);
}

TEST_CASE("graph6 round trip over generated trees") {
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& t : free_trees(n)) {
      CHECK(decode_graph6(encode_graph6(t)) == t);
    }
  }
}

TEST_CASE("connected graph enumeration counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = connected_graphs(n);
    CHECK(graphs.size() == expected[n - 1]);
    std::set<std::string> codes;
    for (const Graph& g : graphs) {
      CHECK(is_connected(g));
      CHECK(codes.insert(encode_graph6(g)).second);
    }
  }
  CHECK_THROWS_AS(connected_graphs(9), std::invalid_argument);
}

TEST_CASE("connected graph enumeration at the upper supported order") {
  CHECK(connected_graphs(8).size() == 11117);
}

TEST_CASE("general canonical form identifies isomorphic graphs") {
  std::mt19937 rng(13579);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    EdgeSet edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, std::move(edges));
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeSet relabelled;
    for (const auto& [u, v] : g.edges()) relabelled.push_back(make_edge(perm[u], perm[v]));
    const Graph h(n, std::move(relabelled));
    CHECK(graph_canonical_form(g) == graph_canonical_form(h));
    CHECK(isomorphic_backtracking(g, graph_canonical_form(g)));
  }
}

TEST_CASE("survey rows for small orders") {
  const auto records = survey(6);
  // non-star trees: 2 of order 5, 5 of order 6
  CHECK(records.size() == 7);

  const std::string p5_code = canonical_tree_code(make_path(5));
  const std::string chair_code = canonical_tree_code(make_wounded_spider(3, 2));
  const std::string p6_code = canonical_tree_code(make_path(6));

  bool saw_p5 = false;
  bool saw_chair = false;
  bool saw_p6 = false;
  for (const auto& r : records) {
    CHECK(r.m == r.n - 1);
    CHECK(1 <= r.crit_q);
    CHECK(r.crit_q <= r.m - 1);
    CHECK(r.parity_gap == r.m - r.crit_q);
    CHECK(r.is_iota1 == (r.crit_q == 1));
    if (r.graph6 == p5_code) {
      saw_p5 = true;
      CHECK(r.crit_q == 1);
      CHECK(r.iota == 1);
    }
    if (r.graph6 == chair_code) {
      saw_chair = true;
      CHECK(r.crit_q == 3);
    }
    if (r.graph6 == p6_code) {
      saw_p6 = true;
      CHECK(r.crit_q == 4);
    }
  }
  CHECK(saw_p5);
  CHECK(saw_chair);
  CHECK(saw_p6);
}

TEST_CASE("survey output is identical for any worker count") {
  SurveyOptions one;
  one.workers = 1;
  SurveyOptions three;
  three.workers = 3;
  const auto a = survey(8, one);
  const auto b = survey(8, three);
  std::ostringstream csv_a;
  std::ostringstream csv_b;
  write_survey_csv(csv_a, a);
  write_survey_csv(csv_b, b);
  CHECK(csv_a.str() == csv_b.str());
}

TEST_CASE("survey csv round trip") {
  const auto records = survey(7);
  std::ostringstream out;
  write_survey_csv(out, records);
  std::istringstream in(out.str());
  const auto parsed = read_survey_csv(in);
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(parsed[i].n == records[i].n);
    CHECK(parsed[i].graph6 == records[i].graph6);
    CHECK(parsed[i].crit_q == records[i].crit_q);
    CHECK(parsed[i].is_iota1 == records[i].is_iota1);
  }
  std::istringstream bad("wrong header\n");
  CHECK_THROWS_AS(read_survey_csv(bad), std::invalid_argument);
}

TEST_CASE("per-tree budget flags rows instead of dropping them") {
  SurveyOptions tiny;
  tiny.per_tree_budget = 2;  // far too small for most trees
  const auto records = survey(6, tiny);
  CHECK(records.size() == 7);  // nothing dropped
  bool any_flagged = false;
  for (const auto& r : records) {
    if (r.budget_exceeded) {
      any_flagged = true;
      CHECK(r.crit_q == -1);
    }
  }
  CHECK(any_flagged);
}

TEST_CASE("gap report per order") {
  const auto records = survey(7);
  const auto report = verify_open_problem(records);
  CHECK(report.max_n == 7);
  REQUIRE(report.per_order.size() == 3);  // orders 5, 6, 7

  const auto& n5 = report.per_order[0];
  CHECK(n5.n == 5);
  CHECK(n5.non_star_trees == 2);
  CHECK(n5.realised.at(1) == 1);
  CHECK(n5.realised.at(3) == 1);
  CHECK(n5.unrealised == std::vector<int>{2});
  CHECK(n5.even_gaps == 0);  // realised gaps m-q are 3 and 1, both odd

  long long total = 0;
  for (const auto& summary : report.per_order) {
    long long sum = summary.flagged_rows;
    for (const auto& [q, count] : summary.realised) sum += count;
    CHECK(sum == summary.non_star_trees);
    total += summary.non_star_trees;
  }
  CHECK(total == static_cast<long long>(records.size()));

  const std::string json_text = gap_report_to_json(report);
  CHECK(json_text.find("\"per_n\"") != std::string::npos);
  CHECK(json_text.find("\"5\"") != std::string::npos);
}
