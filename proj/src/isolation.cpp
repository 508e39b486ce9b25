#include "isocrit/isolation.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace isocrit {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

void check_vertex_set(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("vertex identifier out of range");
    }
  }
}

// Branch-and-bound searcher shared by the isolation and domination checks.
// `dominated[v]` counts how many chosen vertices have v in their closed
// neighbourhood.
struct IsolationSearch {
  const Graph& g;
  std::vector<int> dominated;

  explicit IsolationSearch(const Graph& graph)
      : g(graph), dominated(graph.vertex_count(), 0) {}

  void choose(int w, int delta) {
    dominated[w] += delta;
    for (int x : g.neighbors(w)) dominated[x] += delta;
  }

  int uncovered_edges(std::vector<Edge>& out) const {
    out.clear();
    for (const auto& [u, v] : g.edges()) {
      if (dominated[u] == 0 && dominated[v] == 0) out.emplace_back(u, v);
    }
    return static_cast<int>(out.size());
  }

  // Number of currently uncovered edges that picking w would cover.
  int coverage(int w, const std::vector<Edge>& uncovered,
               std::vector<char>& reach_scratch) const {
    std::fill(reach_scratch.begin(), reach_scratch.end(), 0);
    reach_scratch[w] = 1;
    for (int x : g.neighbors(w)) reach_scratch[x] = 1;
    int covered = 0;
    for (const auto& [u, v] : uncovered) {
      if (reach_scratch[u] || reach_scratch[v]) ++covered;
    }
    return covered;
  }

  bool search(int remaining) {
    std::vector<Edge> uncovered;
    if (uncovered_edges(uncovered) == 0) return true;
    if (remaining == 0) return false;

    std::vector<char> reach(g.vertex_count(), 0);
    int max_cover = 0;
    for (int w = 0; w < g.vertex_count(); ++w) {
      max_cover = std::max(max_cover, coverage(w, uncovered, reach));
    }
    const int need = (static_cast<int>(uncovered.size()) + max_cover - 1) / max_cover;
    if (need > remaining) return false;

    // Branch on the uncovered edge with the fewest covering candidates.
    auto candidates_of = [&](const Edge& e) {
      VertexSet cand;
      std::fill(reach.begin(), reach.end(), 0);
      for (int x : {e.first, e.second}) {
        reach[x] = 1;
        for (int y : g.neighbors(x)) reach[y] = 1;
      }
      for (int w = 0; w < g.vertex_count(); ++w) {
        if (reach[w]) cand.push_back(w);
      }
      return cand;
    };
    VertexSet best_cand;
    for (const auto& e : uncovered) {
      auto cand = candidates_of(e);
      if (best_cand.empty() || cand.size() < best_cand.size()) best_cand = std::move(cand);
      if (best_cand.size() <= 2) break;
    }
    std::vector<std::pair<int, int>> ordered;  // (-coverage, vertex)
    for (int w : best_cand) ordered.emplace_back(-coverage(w, uncovered, reach), w);
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [neg_cov, w] : ordered) {
      choose(w, +1);
      if (search(remaining - 1)) {
        choose(w, -1);
        return true;
      }
      choose(w, -1);
    }
    return false;
  }
};

struct DominationSearch {
  const Graph& g;
  std::vector<int> dominated;

  explicit DominationSearch(const Graph& graph)
      : g(graph), dominated(graph.vertex_count(), 0) {}

  void choose(int w, int delta) {
    dominated[w] += delta;
    for (int x : g.neighbors(w)) dominated[x] += delta;
  }

  bool search(int remaining) {
    int first_free = -1;
    int free_count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (dominated[v] == 0) {
        ++free_count;
        if (first_free < 0) first_free = v;
      }
    }
    if (free_count == 0) return true;
    if (remaining == 0) return false;
    int max_cover = 0;
    for (int w = 0; w < g.vertex_count(); ++w) {
      int cov = dominated[w] == 0 ? 1 : 0;
      for (int x : g.neighbors(w)) {
        if (dominated[x] == 0) ++cov;
      }
      max_cover = std::max(max_cover, cov);
    }
    if ((free_count + max_cover - 1) / max_cover > remaining) return false;
    VertexSet cand{first_free};
    for (int x : g.neighbors(first_free)) cand.push_back(x);
    std::sort(cand.begin(), cand.end());
    for (int w : cand) {
      choose(w, +1);
      if (search(remaining - 1)) {
        choose(w, -1);
        return true;
      }
      choose(w, -1);
    }
    return false;
  }
};

// Rooted dynamic program over an adjacency structure. States per vertex v
// for the subtree below v:
//   kIn:   v in D, everything below covered.
//   kDomC: v not in D, dominated by a child in D, everything below covered.
//   kFree: v not in D, not dominated, but all subtree edges covered without
//          help from the parent.
//   kNeed: v not in D, not dominated, some child edge still needs v to be
//          dominated, so the parent must join D.
enum DpState { kIn = 0, kDomC = 1, kFree = 2, kNeed = 3 };

int clamp_add(int a, int b) { return std::min(a + b, kInf); }

int tree_dp(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> parent(n, -2);
  std::vector<int> order;
  order.reserve(n);
  std::vector<std::array<int, 4>> f(n);
  int total = 0;
  for (int root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    order.clear();
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int v = order[head];
      for (int w : adj[v]) {
        if (parent[w] == -2) {
          parent[w] = v;
          order.push_back(w);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      int in_cost = 1;
      int dom_base = 0;
      int dom_penalty = kInf;
      int free_cost = 0;
      int need_cost = 0;
      for (int c : adj[v]) {
        if (c == parent[v]) continue;
        const auto& fc = f[c];
        const int best3 = std::min({fc[kIn], fc[kDomC], fc[kFree]});
        in_cost = clamp_add(in_cost, std::min(best3, fc[kNeed]));
        dom_base = clamp_add(dom_base, best3);
        dom_penalty = std::min(dom_penalty, fc[kIn] - best3);
        free_cost = clamp_add(free_cost, fc[kDomC]);
        need_cost = clamp_add(need_cost, std::min(fc[kDomC], fc[kFree]));
      }
      f[v][kIn] = in_cost;
      f[v][kDomC] = dom_penalty >= kInf ? kInf : clamp_add(dom_base, dom_penalty);
      f[v][kFree] = free_cost;
      f[v][kNeed] = need_cost;
    }
    total += std::min({f[root][kIn], f[root][kDomC], f[root][kFree]});
  }
  return total;
}

}  // namespace

bool is_isolating(const Graph& g, const VertexSet& d) {
  check_vertex_set(g, d);
  std::vector<char> dominated(g.vertex_count(), 0);
  for (int v : d) {
    dominated[v] = 1;
    for (int w : g.neighbors(v)) dominated[w] = 1;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!dominated[u] && !dominated[v]) return false;
  }
  return true;
}

bool has_isolating_set_within(const Graph& g, int max_size) {
  if (max_size < 0) return false;
  IsolationSearch search(g);
  return search.search(max_size);
}

int iota_bruteforce(const Graph& g) {
  for (int k = 0; k <= g.vertex_count(); ++k) {
    if (has_isolating_set_within(g, k)) return k;
  }
  return g.vertex_count();
}

int iota_tree(const Graph& g) {
  if (!is_forest(g)) throw std::invalid_argument("iota_tree requires a forest");
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return tree_dp(n, adj);
}

int iota_tree_subdivided(const Graph& forest, const std::vector<int>& edge_indices) {
  const int n = forest.vertex_count();
  const int m = forest.edge_count();
  const int extra = static_cast<int>(edge_indices.size());
  thread_local std::vector<std::vector<int>> adj;
  if (static_cast<int>(adj.size()) < n + extra) adj.resize(n + extra);
  for (int v = 0; v < n + extra; ++v) adj[v].clear();

  std::size_t next = 0;
  for (int e = 0; e < m; ++e) {
    const auto& [u, v] = forest.edges()[e];
    if (next < edge_indices.size() && edge_indices[next] == e) {
      const int w = n + static_cast<int>(next);
      adj[u].push_back(w);
      adj[w].push_back(u);
      adj[v].push_back(w);
      adj[w].push_back(v);
      ++next;
    } else {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  if (next != edge_indices.size()) {
    throw std::invalid_argument("edge indices must be increasing and in range");
  }
  return tree_dp(n + extra, adj);
}

int iota(const Graph& g) {
  return is_forest(g) ? iota_tree(g) : iota_bruteforce(g);
}

MinSetFamily enumerate_min_isolating_sets(const Graph& g) {
  MinSetFamily family;
  family.iota = iota(g);
  const int n = g.vertex_count();
  const int k = family.iota;
  if (k == 0) {
    family.sets.push_back({});
    return family;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (is_isolating(g, idx)) family.sets.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return family;
}

bool is_dominating(const Graph& g, const VertexSet& d) {
  check_vertex_set(g, d);
  std::vector<char> dominated(g.vertex_count(), 0);
  for (int v : d) {
    dominated[v] = 1;
    for (int w : g.neighbors(v)) dominated[w] = 1;
  }
  return std::find(dominated.begin(), dominated.end(), 0) == dominated.end();
}

bool has_dominating_set_within(const Graph& g, int max_size) {
  if (max_size < 0) return false;
  DominationSearch search(g);
  return search.search(max_size);
}

int gamma(const Graph& g) {
  for (int k = 0; k <= g.vertex_count(); ++k) {
    if (has_dominating_set_within(g, k)) return k;
  }
  return g.vertex_count();
}

std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g) {
  const int k = gamma(g);
  const int n = g.vertex_count();
  std::vector<VertexSet> sets;
  if (k == 0) {
    sets.push_back({});
    return sets;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (is_dominating(g, idx)) sets.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return sets;
}

}  // namespace isocrit
