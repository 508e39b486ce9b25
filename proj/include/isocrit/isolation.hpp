#pragma once

#include <vector>

#include "isocrit/graph.hpp"

namespace isocrit {

/// All minimum isolating sets of a graph, in lexicographic order.
struct MinSetFamily {
  int iota = 0;
  std::vector<VertexSet> sets;
};

/// True iff no edge of g survives after deleting the closed neighbourhood
/// of D, i.e. every edge has an endpoint inside N[D].
bool is_isolating(const Graph& g, const VertexSet& d);

/// True iff some isolating set of size at most `max_size` exists. Runs a
/// branch-and-bound over uncovered edges: each uncovered edge uv forces a
/// choice from N[u] union N[v].
bool has_isolating_set_within(const Graph& g, int max_size);

/// Exact isolation number by ascending-size search. Handles disconnected
/// inputs (the optimum splits over components).
int iota_bruteforce(const Graph& g);

/// Exact isolation number of a forest via a rooted dynamic program,
/// linear per component. Throws if g has a cycle.
int iota_tree(const Graph& g);

/// Isolation number of the forest obtained by subdividing the edges of
/// `forest` whose indices (into forest.edges()) are listed in `edge_indices`.
/// Avoids materialising the subdivided graph; indices must be strictly
/// increasing.
int iota_tree_subdivided(const Graph& forest, const std::vector<int>& edge_indices);

/// Dispatches to the forest dynamic program when possible.
int iota(const Graph& g);

/// Complete, duplicate-free family of all isolating sets of minimum size.
MinSetFamily enumerate_min_isolating_sets(const Graph& g);

bool is_dominating(const Graph& g, const VertexSet& d);
bool has_dominating_set_within(const Graph& g, int max_size);
int gamma(const Graph& g);
std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g);

}  // namespace isocrit
