#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "isocrit/graph.hpp"

namespace isocrit {

/// Thrown when a per-graph subset budget is exhausted before the criticality
/// index could be settled.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Smallest number of edges whose subdivision increases iota, or nullopt for
/// stars (their isolation number never increases under subdivision).
/// Requires a connected graph.
std::optional<int> subdivision_number(const Graph& g);

struct MaxSafeResult {
  int size = 0;        // largest |F| with iota(G_F) == iota(G)
  EdgeSet witness;     // lexicographically least such F of maximum size
};

/// Requires a connected non-star graph. Safe sets are downward closed, so the
/// ascending scan may stop at the first size with no safe subset.
MaxSafeResult max_safe_set(const Graph& g);

/// The unique q for which g is (iota,q)-critical: every q-edge subdivision
/// increases iota while some (q-1)-edge subdivision does not. nullopt for
/// stars. `subset_budget` of 0 means unlimited; otherwise BudgetExceeded is
/// thrown after that many subset evaluations.
std::optional<int> crit_index(const Graph& g, std::uint64_t subset_budget = 0);

bool is_q_critical(const Graph& g, int q);

struct CritReport {
  int iota = 0;
  bool is_star = false;
  std::optional<int> sd_iota;
  std::optional<int> crit_q;
  EdgeSet max_safe_set;         // empty when undefined
  EdgeSet min_unsafe_witness;   // lexicographically least unsafe set of size sd_iota
};

CritReport crit_report(const Graph& g);

/// Verification report for a candidate critical tripartition (A, B, C):
/// A, B, C partition V with all three parts non-empty, A union C and B are
/// independent, N(A) = B = N(C), A is a 3-packing, and no vertex of A is a
/// leaf. Violations are reported, never thrown.
struct TripartitionReport {
  bool pass = false;
  bool valid_partition = false;
  bool cond_independent = false;    // (i)
  bool cond_neighborhoods = false;  // (ii)
  bool cond_packing = false;        // (iii)
  bool cond_no_leaf_in_a = false;   // (iv)
  std::string first_violation;      // empty when pass

  // informational consequences, not part of pass/fail
  bool info_no_support_in_ac = false;
  bool info_bipartite = false;
  bool info_leaves_in_c = false;
};

TripartitionReport check_tripartition(const Graph& g, const VertexSet& a,
                                      const VertexSet& b, const VertexSet& c);

/// Structural route: every minimum isolating set D must induce a critical
/// tripartition (D, N(D), V minus N[D]). Requires a connected graph.
bool is_iota1_critical_structural(const Graph& g);

/// Subset-search route: crit_index == 1.
bool is_iota1_critical_bruteforce(const Graph& g);

/// Runs both routes and throws std::logic_error if they ever diverge.
bool is_iota1_critical(const Graph& g);

bool has_unique_min_isolating_set(const Graph& g);

/// 2-packing characterisation of single-edge-subdivision criticality for the
/// domination number: every minimum dominating set must be a 2-packing. K_2
/// is the one degenerate connected graph where the characterisation and the
/// direct definition part ways (its subdivision vertex dominates the whole
/// path), so it is excluded explicitly.
bool is_gamma1_critical(const Graph& g);

}  // namespace isocrit
