#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "isocrit/graph.hpp"

namespace isocrit {

/// Canonically labelled copy of a tree: rooted at its centroid (or at the
/// centroid edge), children ordered by subtree code, identifiers assigned in
/// preorder. Isomorphic trees map to identical graphs.
Graph tree_canonical_form(const Graph& tree);

/// graph6 string of the canonical form; serves as the canonical code.
std::string canonical_tree_code(const Graph& tree);

/// Canonically labelled copy of an arbitrary small graph (degree-refinement
/// colouring followed by a pruned search over colour-preserving orders).
Graph graph_canonical_form(const Graph& g);

/// Exactly one representative per isomorphism class of trees on n vertices,
/// canonically labelled, in a deterministic order. Rooted level sequences
/// are generated in lexicographically decreasing order and filtered to one
/// representative per free tree.
std::vector<Graph> free_trees(int n);

/// One representative per isomorphism class of connected graphs on
/// n <= 8 vertices, built by vertex augmentation with canonical-form
/// rejection.
std::vector<Graph> connected_graphs(int n);

/// One row per enumerated non-star tree.
struct SurveyRecord {
  int n = 0;
  int m = 0;
  std::string graph6;  // canonical code
  int iota = 0;
  int crit_q = 0;      // -1 when the per-tree budget was exhausted
  int parity_gap = 0;  // m - crit_q
  bool is_iota1 = false;
  bool budget_exceeded = false;
};

struct SurveyOptions {
  int workers = 1;
  /// Maximum subset evaluations per tree; 0 means unlimited. Trees that blow
  /// the budget are kept in the output with crit_q = -1, never dropped.
  std::uint64_t per_tree_budget = 0;
};

/// Criticality survey over all non-star trees of orders 5..n_max. Rows are
/// sorted by (n, graph6), so the output is identical for any worker count.
std::vector<SurveyRecord> survey(int n_max, const SurveyOptions& options = {});

/// CSV schema: header `n,m,graph6,iota,crit_q,parity_gap,is_iota1`,
/// one row per record, LF line endings.
void write_survey_csv(std::ostream& out, const std::vector<SurveyRecord>& records);
std::vector<SurveyRecord> read_survey_csv(std::istream& in);

struct GapOrderSummary {
  int n = 0;
  long long non_star_trees = 0;
  long long flagged_rows = 0;
  std::map<int, long long> realised;  // crit_q -> count
  std::vector<int> unrealised;        // q in [1, n-2] with no tree
  long long odd_gaps = 0;             // rows with (m - q) odd
  long long even_gaps = 0;
};

struct GapReport {
  int max_n = 0;
  std::vector<GapOrderSummary> per_order;
};

/// Which criticality indices occur among non-star trees of each order, and
/// which never do. Makes no claim beyond the enumerated range.
GapReport verify_open_problem(const std::vector<SurveyRecord>& records);

std::string gap_report_to_json(const GapReport& report);

}  // namespace isocrit
