#pragma once

#include <utility>
#include <vector>

namespace isocrit {

/// Undirected edge, always stored as (min, max).
using Edge = std::pair<int, int>;
using EdgeSet = std::vector<Edge>;
using VertexSet = std::vector<int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Immutable simple graph on dense vertex identifiers 0..n-1.
///
/// No self-loops, no parallel edges. The edge list is kept sorted and the
/// adjacency lists are derived from it, so two graphs compare equal iff they
/// have identical vertex counts and edge sets. All operations on Graph are
/// pure; values can be shared freely across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, EdgeSet edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const EdgeSet& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  EdgeSet edges_;                      // sorted lexicographically
  std::vector<std::vector<int>> adj_;  // sorted neighbour lists
};

/// Validating constructor wrapper; rejects out-of-range endpoints,
/// self-loops and duplicate edges.
Graph build_graph(int n, const EdgeSet& edges);

/// Result of subdividing a set of edges. Original vertex identifiers are
/// preserved; one new vertex per subdivided edge is appended after them, in
/// ascending order of the source edge.
struct SubdivisionResult {
  Graph graph;
  int original_n = 0;
  std::vector<std::pair<Edge, int>> new_vertex_of;  // sorted by source edge

  bool is_subdivision_vertex(int v) const { return v >= original_n; }
  Edge source_edge(int v) const;
  int origin_vertex(int v) const;  // identity for original vertices
};

/// Replaces each edge uv of `subdivided` by a path u-w-v through a new
/// vertex w. Every listed edge must belong to g and appear once.
SubdivisionResult subdivide(const Graph& g, const EdgeSet& subdivided);

/// S together with every neighbour of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// Neighbours of S that may or may not lie in S itself.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);

/// True iff the pairwise distance of vertices in s exceeds k
/// (unreachable pairs count as infinitely far apart).
bool is_k_packing(const Graph& g, const VertexSet& s, int k);

std::vector<int> bfs_distances(const Graph& g, int source);  // -1 unreachable
int graph_distance(const Graph& g, int u, int v);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

struct StructureReport {
  bool connected = false;
  bool forest = false;
  bool tree = false;
  bool star = false;  // K_{1,k} with k >= 0, so K_1 and K_2 count as stars
  std::vector<int> leaves;
  std::vector<int> supports;
  int diameter = -1;  // -1 when disconnected or empty
};

StructureReport classify(const Graph& g);

/// Subgraph induced by `keep`, relabelled densely in ascending order of the
/// kept identifiers.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph delete_vertices(const Graph& g, const VertexSet& remove);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace isocrit
