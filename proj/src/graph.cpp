#include "isocrit/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace isocrit {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw std::invalid_argument("vertex identifier out of range: " + std::to_string(v));
  }
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
  for (int v : s) check_vertex(g, v);
}

}  // namespace

Graph::Graph(int n, EdgeSet edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(*this, v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(*this, v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

Graph build_graph(int n, const EdgeSet& edges) { return Graph(n, edges); }

Edge SubdivisionResult::source_edge(int v) const {
  if (!is_subdivision_vertex(v)) {
    throw std::invalid_argument("not a subdivision vertex");
  }
  return new_vertex_of.at(v - original_n).first;
}

int SubdivisionResult::origin_vertex(int v) const {
  if (is_subdivision_vertex(v)) {
    throw std::invalid_argument("subdivision vertex has no original identifier");
  }
  return v;
}

SubdivisionResult subdivide(const Graph& g, const EdgeSet& subdivided) {
  EdgeSet f;
  f.reserve(subdivided.size());
  for (const auto& [u, v] : subdivided) f.push_back(make_edge(u, v));
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
    throw std::invalid_argument("edge listed twice in subdivision set");
  }
  for (const auto& [u, v] : f) {
    if (!g.has_edge(u, v)) {
      throw std::invalid_argument("subdivision set contains a non-edge");
    }
  }

  const int n = g.vertex_count();
  EdgeSet edges;
  edges.reserve(g.edge_count() + f.size());
  for (const auto& e : g.edges()) {
    if (!std::binary_search(f.begin(), f.end(), e)) edges.push_back(e);
  }
  SubdivisionResult result;
  result.original_n = n;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int w = n + static_cast<int>(i);
    result.new_vertex_of.emplace_back(f[i], w);
    edges.push_back(make_edge(f[i].first, w));
    edges.push_back(make_edge(f[i].second, w));
  }
  result.graph = Graph(n + static_cast<int>(f.size()), std::move(edges));
  return result;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  std::vector<char> mark(g.vertex_count(), 0);
  for (int v : s) {
    mark[v] = 1;
    for (int w : g.neighbors(v)) mark[w] = 1;
  }
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  std::vector<char> mark(g.vertex_count(), 0);
  for (int v : s) {
    for (int w : g.neighbors(v)) mark[w] = 1;
  }
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : s) in[v] = 1;
  for (const auto& [u, v] : g.edges()) {
    if (in[u] && in[v]) return false;
  }
  return true;
}

bool is_k_packing(const Graph& g, const VertexSet& s, int k) {
  check_vertex_set(g, s);
  if (k < 1) throw std::invalid_argument("packing parameter must be positive");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto dist = bfs_distances(g, s[i]);
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) continue;
      const int d = dist[s[j]];
      if (d >= 0 && d <= k) return false;
    }
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  check_vertex(g, source);
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

int graph_distance(const Graph& g, int u, int v) {
  check_vertex(g, v);
  return bfs_distances(g, u)[v];
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> queue;
    seen[s] = 1;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || components(g).size() == 1;
}

bool is_forest(const Graph& g) {
  const auto comps = components(g);
  return g.edge_count() == g.vertex_count() - static_cast<int>(comps.size());
}

StructureReport classify(const Graph& g) {
  StructureReport report;
  const int n = g.vertex_count();
  if (n == 0) {
    report.connected = true;
    report.forest = true;
    return report;
  }
  const auto comps = components(g);
  report.connected = comps.size() == 1;
  report.forest = g.edge_count() == n - static_cast<int>(comps.size());
  report.tree = report.connected && report.forest;

  std::vector<char> is_support(n, 0);
  int max_degree = 0;
  for (int v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, g.degree(v));
    if (g.degree(v) == 1) {
      report.leaves.push_back(v);
      is_support[g.neighbors(v)[0]] = 1;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (is_support[v]) report.supports.push_back(v);
  }
  report.star = report.tree && max_degree == n - 1;

  if (report.connected) {
    int diameter = 0;
    for (int v = 0; v < n; ++v) {
      const auto dist = bfs_distances(g, v);
      diameter = std::max(diameter, *std::max_element(dist.begin(), dist.end()));
    }
    report.diameter = diameter;
  }
  return report;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  VertexSet sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  check_vertex_set(g, sorted);
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
  EdgeSet edges;
  for (const auto& [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.push_back(make_edge(index[u], index[v]));
  }
  return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

Graph delete_vertices(const Graph& g, const VertexSet& remove) {
  check_vertex_set(g, remove);
  std::vector<char> gone(g.vertex_count(), 0);
  for (int v : remove) gone[v] = 1;
  VertexSet keep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeSet edges = a.edges();
  const int offset = a.vertex_count();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(offset + b.vertex_count(), std::move(edges));
}

}  // namespace isocrit
