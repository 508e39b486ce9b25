#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isocrit/graph.hpp"

namespace isocrit {

Graph make_path(int n);    // n >= 1
Graph make_cycle(int n);   // n >= 3
Graph make_star(int k);    // K_{1,k}, k >= 0

/// Spider S_t: star K_{1,t} with every edge subdivided. Centre is vertex 0,
/// then each leg contributes (mid, leaf) in order.
Graph make_spider(int t);  // t >= 2

/// d-wounded spider: star K_{1,t} with exactly t-d edges subdivided
/// (1 <= d <= t-1). Centre 0, the d plain leaves 1..d, then each subdivided
/// leg contributes (mid, leaf) in order.
Graph make_wounded_spider(int t, int d);

/// The family attaining the upper bound q = |E|-1: a path on six vertices
/// 0..5 plus, for each i in 1..k-1, a pendant three-vertex path whose far
/// endpoint u_i is joined to v. The safe edge set a_k leaves out only vx and
/// xy.
struct QkResult {
  Graph graph;
  EdgeSet a_k;
  int v = 3;
  int x = 4;
  int y = 5;
  std::vector<int> u;  // u_0 .. u_{k-1}
};

QkResult make_qk(int k);  // k >= 1

enum class Status { A, B, C };
enum class FiotaOp { O1, O2, O3 };

char status_letter(Status s);
std::string fiota_op_name(FiotaOp op);

struct FiotaTraceEntry {
  FiotaOp op;
  int anchor;
  std::vector<int> added;
};

/// A tree under construction together with the vertex statuses and the trace
/// of applied operations. Invariants (checked after every application):
/// leaves carry C, support vertices carry B, the A-vertices form an isolating
/// 3-packing, A union C and B are independent, and leaf-to-leaf distances are
/// even.
struct StatusTree {
  Graph tree;
  std::vector<Status> status;
  std::vector<FiotaTraceEntry> trace;

  VertexSet with_status(Status s) const;
};

void validate_status_tree(const StatusTree& t);

/// The base tree: a five-vertex path with statuses C,B,A,B,C.
StatusTree fiota_base();

/// O1 attaches a leaf to a status-B anchor; O2 attaches a two-vertex path
/// (statuses B,C) to a status-A anchor; O3 attaches a four-vertex path
/// (statuses B,A,B,C) to a status-C anchor. Throws when the anchor status
/// does not match the operation.
StatusTree fiota_apply(const StatusTree& t, FiotaOp op, int anchor);

struct FiotaDecision {
  bool member = false;
  /// Statuses and construction trace on g's own vertex identifiers,
  /// present iff member.
  std::optional<StatusTree> witness;
};

/// Decides membership in the family generated from the five-vertex path by
/// O1/O2/O3, by peeling a diametral path backwards and replaying the
/// construction forward. Requires a tree.
FiotaDecision fiota_membership(const Graph& g);

}  // namespace isocrit
