#include "isocrit/criticality.hpp"

#include <algorithm>

#include "isocrit/isolation.hpp"

namespace isocrit {

namespace {

// Ascending-lexicographic enumeration of k-subsets of {0,...,m-1}.
struct Combinations {
  int m;
  int k;
  std::vector<int> idx;
  bool done = false;

  Combinations(int m_, int k_) : m(m_), k(k_) {
    if (k > m) {
      done = true;
      return;
    }
    idx.resize(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
  }

  bool advance() {
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) {
      done = true;
      return false;
    }
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  }
};

struct ConnectedNonStar {
  int iota0;
  bool tree_mode;
  int m;
};

ConnectedNonStar require_connected(const Graph& g, bool reject_star) {
  if (!is_connected(g)) {
    throw std::invalid_argument("criticality is defined for connected graphs only");
  }
  const auto report = classify(g);
  if (reject_star && report.star) {
    throw std::invalid_argument("criticality is undefined for stars");
  }
  return {iota(g), report.forest, g.edge_count()};
}

// iota(G_F) == iota(G)? Subdivision cannot lower iota, so for non-forests it
// is enough to look for an isolating set of size at most iota(G).
bool subset_is_safe(const Graph& g, const std::vector<int>& edge_idx,
                    const ConnectedNonStar& ctx) {
  if (ctx.tree_mode) return iota_tree_subdivided(g, edge_idx) == ctx.iota0;
  EdgeSet f;
  f.reserve(edge_idx.size());
  for (int e : edge_idx) f.push_back(g.edges()[e]);
  const Graph gf = subdivide(g, f).graph;
  return has_isolating_set_within(gf, ctx.iota0);
}

EdgeSet edges_at(const Graph& g, const std::vector<int>& idx) {
  EdgeSet out;
  out.reserve(idx.size());
  for (int e : idx) out.push_back(g.edges()[e]);
  return out;
}

void charge(std::uint64_t& used, std::uint64_t budget) {
  if (budget != 0 && ++used > budget) {
    throw BudgetExceeded("criticality subset budget exhausted");
  }
}

// Maximum safe size plus the lexicographically least witness at that size.
MaxSafeResult max_safe_scan(const Graph& g, const ConnectedNonStar& ctx,
                            std::uint64_t budget) {
  MaxSafeResult best;  // empty set is always safe
  std::uint64_t used = 0;
  for (int s = 1; s <= ctx.m; ++s) {
    bool found = false;
    for (Combinations comb(ctx.m, s); !comb.done;) {
      charge(used, budget);
      if (subset_is_safe(g, comb.idx, ctx)) {
        best.size = s;
        best.witness = edges_at(g, comb.idx);
        found = true;
        break;
      }
      if (!comb.advance()) break;
    }
    if (!found) return best;
  }
  throw std::logic_error("every subdivision left iota unchanged on a non-star graph");
}

}  // namespace

std::optional<int> subdivision_number(const Graph& g) {
  const bool star = classify(g).star;
  if (!is_connected(g)) {
    throw std::invalid_argument("criticality is defined for connected graphs only");
  }
  if (star) return std::nullopt;
  const auto ctx = require_connected(g, true);
  for (int s = 1; s <= ctx.m; ++s) {
    for (Combinations comb(ctx.m, s); !comb.done;) {
      if (!subset_is_safe(g, comb.idx, ctx)) return s;
      if (!comb.advance()) break;
    }
  }
  throw std::logic_error("every subdivision left iota unchanged on a non-star graph");
}

MaxSafeResult max_safe_set(const Graph& g) {
  const auto ctx = require_connected(g, true);
  return max_safe_scan(g, ctx, 0);
}

std::optional<int> crit_index(const Graph& g, std::uint64_t subset_budget) {
  if (!is_connected(g)) {
    throw std::invalid_argument("criticality is defined for connected graphs only");
  }
  if (classify(g).star) return std::nullopt;
  const auto ctx = require_connected(g, true);
  return max_safe_scan(g, ctx, subset_budget).size + 1;
}

bool is_q_critical(const Graph& g, int q) {
  if (q < 1) throw std::invalid_argument("criticality index must be positive");
  const auto ctx = require_connected(g, true);
  return max_safe_scan(g, ctx, 0).size + 1 == q;
}

CritReport crit_report(const Graph& g) {
  CritReport report;
  if (!is_connected(g)) {
    throw std::invalid_argument("criticality is defined for connected graphs only");
  }
  report.iota = iota(g);
  report.is_star = classify(g).star;
  if (report.is_star) return report;

  const auto ctx = require_connected(g, true);
  const auto safe = max_safe_scan(g, ctx, 0);
  report.crit_q = safe.size + 1;
  report.max_safe_set = safe.witness;

  for (int s = 1; s <= ctx.m; ++s) {
    for (Combinations comb(ctx.m, s); !comb.done;) {
      if (!subset_is_safe(g, comb.idx, ctx)) {
        report.sd_iota = s;
        report.min_unsafe_witness = edges_at(g, comb.idx);
        return report;
      }
      if (!comb.advance()) break;
    }
  }
  throw std::logic_error("no unsafe subdivision found for a non-star graph");
}

TripartitionReport check_tripartition(const Graph& g, const VertexSet& a,
                                      const VertexSet& b, const VertexSet& c) {
  TripartitionReport report;
  const int n = g.vertex_count();

  std::vector<int> part(n, -1);
  bool overlap = false;
  bool out_of_range = false;
  auto place = [&](const VertexSet& s, int label) {
    for (int v : s) {
      if (v < 0 || v >= n) {
        out_of_range = true;
        continue;
      }
      if (part[v] != -1) overlap = true;
      part[v] = label;
    }
  };
  place(a, 0);
  place(b, 1);
  place(c, 2);
  const bool covers = std::find(part.begin(), part.end(), -1) == part.end();
  report.valid_partition = !out_of_range && !overlap && covers && !a.empty() &&
                           !b.empty() && !c.empty();
  if (!report.valid_partition) {
    report.first_violation = "partition";
    return report;
  }

  VertexSet ac = a;
  ac.insert(ac.end(), c.begin(), c.end());
  report.cond_independent = is_independent(g, ac) && is_independent(g, b);

  VertexSet nb_a = open_neighborhood(g, a);
  VertexSet nb_c = open_neighborhood(g, c);
  VertexSet b_sorted = b;
  std::sort(b_sorted.begin(), b_sorted.end());
  report.cond_neighborhoods = nb_a == b_sorted && nb_c == b_sorted;

  report.cond_packing = is_k_packing(g, a, 3);

  report.cond_no_leaf_in_a = true;
  for (int v : a) {
    if (g.degree(v) == 1) report.cond_no_leaf_in_a = false;
  }

  if (!report.cond_independent) {
    report.first_violation = "(i)";
  } else if (!report.cond_neighborhoods) {
    report.first_violation = "(ii)";
  } else if (!report.cond_packing) {
    report.first_violation = "(iii)";
  } else if (!report.cond_no_leaf_in_a) {
    report.first_violation = "(iv)";
  }
  report.pass = report.first_violation.empty();

  // informational flags
  const auto structure = classify(g);
  std::vector<char> support(n, 0);
  for (int v : structure.supports) support[v] = 1;
  report.info_no_support_in_ac = true;
  for (int v : ac) {
    if (support[v]) report.info_no_support_in_ac = false;
  }
  // bipartite check by 2-colouring
  std::vector<int> colour(n, -1);
  bool bipartite = true;
  for (int s = 0; s < n && bipartite; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty() && bipartite) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = colour[v] ^ 1;
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          bipartite = false;
        }
      }
    }
  }
  report.info_bipartite = bipartite;
  std::vector<char> in_c(n, 0);
  for (int v : c) in_c[v] = 1;
  report.info_leaves_in_c = true;
  for (int v : structure.leaves) {
    if (!in_c[v]) report.info_leaves_in_c = false;
  }
  return report;
}

bool is_iota1_critical_structural(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("criticality is defined for connected graphs only");
  }
  const auto family = enumerate_min_isolating_sets(g);
  for (const auto& d : family.sets) {
    const VertexSet b = open_neighborhood(g, d);
    const VertexSet closed = closed_neighborhood(g, d);
    std::vector<char> in_closed(g.vertex_count(), 0);
    for (int v : closed) in_closed[v] = 1;
    VertexSet c;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!in_closed[v]) c.push_back(v);
    }
    if (!check_tripartition(g, d, b, c).pass) return false;
  }
  return true;
}

bool is_iota1_critical_bruteforce(const Graph& g) {
  const auto q = crit_index(g);
  return q.has_value() && *q == 1;
}

bool is_iota1_critical(const Graph& g) {
  const bool structural = is_iota1_critical_structural(g);
  const bool brute = is_iota1_critical_bruteforce(g);
  if (structural != brute) {
    throw std::logic_error("criticality routes diverge: structural=" +
                           std::to_string(structural) +
                           " subset-search=" + std::to_string(brute));
  }
  return structural;
}

bool has_unique_min_isolating_set(const Graph& g) {
  return enumerate_min_isolating_sets(g).sets.size() == 1;
}

bool is_gamma1_critical(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("criticality is defined for connected graphs only");
  }
  if (g.vertex_count() == 2 && g.edge_count() == 1) return false;  // K_2
  for (const auto& d : enumerate_min_dominating_sets(g)) {
    if (!is_k_packing(g, d, 2)) return false;
  }
  return true;
}

}  // namespace isocrit
