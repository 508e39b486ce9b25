#include "isocrit/enumeration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "isocrit/criticality.hpp"
#include "isocrit/graph_io.hpp"
#include "isocrit/isolation.hpp"

namespace isocrit {

namespace {

// ---------------------------------------------------------------------------
// rooted tree level sequences, lexicographically decreasing
// (successor rule: find the last entry above 2, then repeat the block that
// starts at its most recent possible parent)
template <typename Visit>
void for_each_rooted_level_sequence(int n, Visit&& visit) {
  std::vector<int> levels(n);
  for (int i = 0; i < n; ++i) levels[i] = i + 1;
  while (true) {
    visit(levels);
    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (levels[i] > 2) {
        p = i;
        break;
      }
    }
    if (p < 0) return;
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
      if (levels[i] == levels[p] - 1) {
        q = i;
        break;
      }
    }
    for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
  }
}

std::vector<int> parents_from_levels(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<int> parent(n, -1);
  std::vector<int> last_at_level(n + 2, -1);
  for (int i = 0; i < n; ++i) {
    last_at_level[levels[i]] = i;
    if (levels[i] > 1) parent[i] = last_at_level[levels[i] - 1];
  }
  return parent;
}

// ---------------------------------------------------------------------------
// canonical form of a free tree via centroid-rooted subtree codes

struct TreeCanon {
  const std::vector<std::vector<int>>& adj;
  std::vector<std::string> code;
  std::vector<std::vector<int>> ordered_children;

  explicit TreeCanon(const std::vector<std::vector<int>>& adjacency)
      : adj(adjacency), code(adjacency.size()), ordered_children(adjacency.size()) {}

  // iterative post-order rooted at `root`, with `blocked` excluded
  void compute(int root, int blocked) {
    std::vector<std::pair<int, int>> stack{{root, blocked}};
    std::vector<std::pair<int, int>> order;
    while (!stack.empty()) {
      const auto [v, parent] = stack.back();
      stack.pop_back();
      order.emplace_back(v, parent);
      for (int w : adj[v]) {
        if (w != parent && w != blocked) stack.emplace_back(w, v);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto [v, parent] = *it;
      std::vector<std::pair<std::string, int>> kids;
      for (int w : adj[v]) {
        if (w != parent && w != blocked) kids.emplace_back(code[w], w);
      }
      std::sort(kids.begin(), kids.end());
      std::string s = "(";
      ordered_children[v].clear();
      for (auto& [child_code, w] : kids) {
        s += child_code;
        ordered_children[v].push_back(w);
      }
      s += ")";
      code[v] = std::move(s);
    }
  }
};

std::vector<int> tree_centroids(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return {0};
  std::vector<int> parent(n, -2);
  std::vector<int> order;
  parent[0] = -1;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int w : adj[order[head]]) {
      if (parent[w] == -2) {
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }
  std::vector<int> size(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  }
  std::vector<int> centroids;
  int best = n + 1;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (int w : adj[v]) {
      if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
    }
    if (heaviest < best) {
      best = heaviest;
      centroids = {v};
    } else if (heaviest == best) {
      centroids.push_back(v);
    }
  }
  std::sort(centroids.begin(), centroids.end());
  return centroids;
}

Graph canonical_from_adj(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return Graph(0, {});
  const auto centroids = tree_centroids(adj);

  EdgeSet edges;
  std::vector<int> label(n, -1);
  int next_label = 0;
  auto assign = [&](auto&& self, const TreeCanon& canon, int v) -> void {
    for (int w : canon.ordered_children[v]) {
      label[w] = next_label++;
      edges.push_back(make_edge(label[v], label[w]));
      self(self, canon, w);
    }
  };

  if (centroids.size() == 1) {
    TreeCanon canon(adj);
    canon.compute(centroids[0], -1);
    label[centroids[0]] = next_label++;
    assign(assign, canon, centroids[0]);
  } else {
    int c1 = centroids[0];
    int c2 = centroids[1];
    TreeCanon canon(adj);
    canon.compute(c1, c2);
    canon.compute(c2, c1);
    if (canon.code[c2] < canon.code[c1]) std::swap(c1, c2);
    label[c1] = next_label++;
    assign(assign, canon, c1);
    label[c2] = next_label++;
    edges.push_back(make_edge(label[c1], label[c2]));
    assign(assign, canon, c2);
  }
  return Graph(n, std::move(edges));
}

std::vector<std::vector<int>> adjacency_of(const Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// ---------------------------------------------------------------------------
// canonical form of a general small graph

std::vector<int> refine_colours(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, 0);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      for (int w : g.neighbors(v)) s.push_back(colour[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> fresh(n, 0);
    int classes = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++classes;
      fresh[sorted[i].second] = classes;
    }
    bool stable = true;
    for (int v = 0; v < n && stable; ++v) {
      for (int w = 0; w < n; ++w) {
        if ((colour[v] == colour[w]) != (fresh[v] == fresh[w])) {
          stable = false;
          break;
        }
      }
    }
    colour = std::move(fresh);
    if (stable) return colour;
  }
}

struct GraphCanonSearch {
  const Graph& g;
  int n;
  std::vector<std::vector<int>> cells;  // vertices grouped by colour
  std::vector<int> position;            // vertex -> assigned slot, -1 if free
  std::vector<int> slot_vertex;         // slot -> vertex
  std::vector<uint8_t> best;            // best adjacency code found so far
  std::vector<uint8_t> current;
  bool have_best = false;

  explicit GraphCanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
    const auto colour = refine_colours(g);
    const int classes = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    cells.assign(classes, {});
    for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
    position.assign(n, -1);
    slot_vertex.assign(n, -1);
    current.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
  }

  // code bits contributed by placing vertex v in slot `slot`
  void place(int slot, int v) {
    slot_vertex[slot] = v;
    position[v] = slot;
    std::size_t base = static_cast<std::size_t>(slot) * (slot - 1) / 2;
    for (int s = 0; s < slot; ++s) {
      current[base + s] = g.has_edge(v, slot_vertex[s]) ? 1 : 0;
    }
  }

  void unplace(int slot, int v) {
    slot_vertex[slot] = -1;
    position[v] = -1;
  }

  // -1 current prefix < best, 0 equal, +1 greater
  int compare_prefix(int slots_filled) const {
    if (!have_best) return -1;
    const std::size_t upto = static_cast<std::size_t>(slots_filled) * (slots_filled - 1) / 2;
    for (std::size_t i = 0; i < upto; ++i) {
      if (current[i] != best[i]) return current[i] < best[i] ? -1 : 1;
    }
    return 0;
  }

  void search(int slot) {
    if (slot == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    // the cell this slot draws from: slots are consumed cell by cell
    int offset = slot;
    for (const auto& cell : cells) {
      if (offset < static_cast<int>(cell.size())) {
        for (int v : cell) {
          if (position[v] >= 0) continue;
          place(slot, v);
          if (compare_prefix(slot + 1) <= 0) search(slot + 1);
          unplace(slot, v);
        }
        return;
      }
      offset -= static_cast<int>(cell.size());
    }
  }
};

}  // namespace

Graph tree_canonical_form(const Graph& tree) {
  if (!is_connected(tree) || !is_forest(tree)) {
    throw std::invalid_argument("canonical tree form requires a tree");
  }
  return canonical_from_adj(adjacency_of(tree));
}

std::string canonical_tree_code(const Graph& tree) {
  return encode_graph6(tree_canonical_form(tree));
}

Graph graph_canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return g;
  GraphCanonSearch search(g);
  search.search(0);
  EdgeSet edges;
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (search.best[bit++]) edges.emplace_back(row, col);
    }
  }
  return Graph(n, std::move(edges));
}

std::vector<Graph> free_trees(int n) {
  if (n < 1) throw std::invalid_argument("tree order must be positive");
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for_each_rooted_level_sequence(n, [&](const std::vector<int>& levels) {
    const auto parent = parents_from_levels(levels);
    std::vector<std::vector<int>> adj(n);
    for (int v = 1; v < n; ++v) {
      adj[v].push_back(parent[v]);
      adj[parent[v]].push_back(v);
    }
    Graph canon = canonical_from_adj(adj);
    std::string code = encode_graph6(canon);
    if (seen.insert(std::move(code)).second) out.push_back(std::move(canon));
  });
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) {
    throw std::invalid_argument("connected graph enumeration supports 1 <= n <= 8");
  }
  std::vector<Graph> all{Graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& base : all) {
      for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        EdgeSet edges = base.edges();
        for (int v = 0; v < k - 1; ++v) {
          if (mask & (1u << v)) edges.emplace_back(v, k - 1);
        }
        Graph canon = graph_canonical_form(Graph(k, std::move(edges)));
        std::string code = encode_graph6(canon);
        if (seen.insert(std::move(code)).second) next.push_back(std::move(canon));
      }
    }
    all = std::move(next);
  }
  std::vector<Graph> connected;
  for (Graph& g : all) {
    if (is_connected(g)) connected.push_back(std::move(g));
  }
  return connected;
}

namespace {

SurveyRecord survey_tree(const Graph& tree, std::uint64_t budget) {
  SurveyRecord record;
  record.n = tree.vertex_count();
  record.m = tree.edge_count();
  record.graph6 = encode_graph6(tree);
  record.iota = iota_tree(tree);
  try {
    const auto q = crit_index(tree, budget);
    record.crit_q = q.value();
    record.parity_gap = record.m - record.crit_q;
    record.is_iota1 = record.crit_q == 1;
  } catch (const BudgetExceeded&) {
    record.crit_q = -1;
    record.parity_gap = 0;
    record.is_iota1 = false;
    record.budget_exceeded = true;
  }
  return record;
}

}  // namespace

std::vector<SurveyRecord> survey(int n_max, const SurveyOptions& options) {
  if (n_max < 5) throw std::invalid_argument("survey needs n_max >= 5");
  std::vector<Graph> work;
  for (int n = 5; n <= n_max; ++n) {
    for (Graph& t : free_trees(n)) {
      if (!classify(t).star) work.push_back(std::move(t));
    }
  }
  const int workers = std::max(1, options.workers);
  std::vector<SurveyRecord> records(work.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < work.size(); ++i) {
      records[i] = survey_tree(work[i], options.per_tree_budget);
    }
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t i = w; i < work.size(); i += workers) {
          records[i] = survey_tree(work[i], options.per_tree_budget);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  std::sort(records.begin(), records.end(), [](const SurveyRecord& a, const SurveyRecord& b) {
    return std::tie(a.n, a.graph6) < std::tie(b.n, b.graph6);
  });
  return records;
}

void write_survey_csv(std::ostream& out, const std::vector<SurveyRecord>& records) {
  out << "n,m,graph6,iota,crit_q,parity_gap,is_iota1\n";
  for (const auto& r : records) {
    out << r.n << ',' << r.m << ',' << r.graph6 << ',' << r.iota << ',' << r.crit_q
        << ',' << r.parity_gap << ',' << (r.is_iota1 ? "true" : "false") << '\n';
  }
}

std::vector<SurveyRecord> read_survey_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "n,m,graph6,iota,crit_q,parity_gap,is_iota1") {
    throw std::invalid_argument("unexpected survey CSV header");
  }
  std::vector<SurveyRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 7) throw std::invalid_argument("malformed survey CSV row");
    SurveyRecord r;
    r.n = std::stoi(fields[0]);
    r.m = std::stoi(fields[1]);
    r.graph6 = fields[2];
    r.iota = std::stoi(fields[3]);
    r.crit_q = std::stoi(fields[4]);
    r.parity_gap = std::stoi(fields[5]);
    r.is_iota1 = fields[6] == "true";
    r.budget_exceeded = r.crit_q < 0;
    records.push_back(std::move(r));
  }
  return records;
}

GapReport verify_open_problem(const std::vector<SurveyRecord>& records) {
  GapReport report;
  std::map<int, GapOrderSummary> per_n;
  for (const auto& r : records) {
    auto& summary = per_n[r.n];
    summary.n = r.n;
    ++summary.non_star_trees;
    if (r.budget_exceeded) {
      ++summary.flagged_rows;
      continue;
    }
    ++summary.realised[r.crit_q];
    if ((r.m - r.crit_q) % 2 != 0) {
      ++summary.odd_gaps;
    } else {
      ++summary.even_gaps;
    }
    report.max_n = std::max(report.max_n, r.n);
  }
  for (auto& [n, summary] : per_n) {
    for (int q = 1; q <= n - 2; ++q) {
      if (summary.realised.find(q) == summary.realised.end()) {
        summary.unrealised.push_back(q);
      }
    }
    report.per_order.push_back(std::move(summary));
  }
  return report;
}

std::string gap_report_to_json(const GapReport& report) {
  nlohmann::json doc;
  doc["max_n"] = report.max_n;
  nlohmann::json per_n = nlohmann::json::object();
  for (const auto& summary : report.per_order) {
    nlohmann::json entry;
    entry["non_star_trees"] = summary.non_star_trees;
    entry["flagged_rows"] = summary.flagged_rows;
    nlohmann::json realised = nlohmann::json::object();
    for (const auto& [q, count] : summary.realised) {
      realised[std::to_string(q)] = count;
    }
    entry["realised"] = realised;
    entry["unrealised"] = summary.unrealised;
    entry["gap_parity"] = {{"odd", summary.odd_gaps}, {"even", summary.even_gaps}};
    per_n[std::to_string(summary.n)] = entry;
  }
  doc["per_n"] = per_n;
  return doc.dump(2) + "\n";
}

}  // namespace isocrit
