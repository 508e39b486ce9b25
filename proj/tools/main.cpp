#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isocrit/criticality.hpp"
#include "isocrit/enumeration.hpp"
#include "isocrit/families.hpp"
#include "isocrit/graph.hpp"
#include "isocrit/graph_io.hpp"
#include "isocrit/isolation.hpp"

namespace {

using json = nlohmann::json;
using namespace isocrit;

constexpr int kExitUsage = 1;
constexpr int kExitStar = 2;
constexpr int kExitDivergence = 3;

// Graph arguments accept inline graph6, `@file` for an edge-list or graph6
// file, or `-` for standard input. Content starting with a digit is treated
// as an edge list, anything else as graph6.
Graph parse_graph_text(const std::string& raw) {
  std::string text = raw;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty graph input");
  text = text.substr(first);
  if (std::isdigit(static_cast<unsigned char>(text[0]))) return parse_edge_list(text);
  const auto end = text.find_first_of(" \t\r\n");
  return decode_graph6(end == std::string::npos ? text : text.substr(0, end));
}

Graph read_graph_argument(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return parse_graph_text(buffer.str());
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream file(arg.substr(1));
    if (!file) throw std::invalid_argument("cannot open " + arg.substr(1));
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_graph_text(buffer.str());
  }
  return parse_graph_text(arg);
}

json edge_set_json(const EdgeSet& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("ISOCRIT_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

json analysis_document(const Graph& g, bool with_gamma, int max_sets) {
  json doc;
  doc["input"] = {{"graph6", encode_graph6(g)},
                  {"n", g.vertex_count()},
                  {"m", g.edge_count()}};

  const auto structure = classify(g);
  doc["classify"] = {{"connected", structure.connected},
                     {"forest", structure.forest},
                     {"tree", structure.tree},
                     {"star", structure.star},
                     {"leaves", structure.leaves},
                     {"supports", structure.supports},
                     {"diameter", structure.connected ? json(structure.diameter) : json()}};

  doc["iota"] = iota(g);

  const auto family = enumerate_min_isolating_sets(g);
  json sets = json::array();
  const int limit = max_sets < 0 ? static_cast<int>(family.sets.size())
                                 : std::min<int>(max_sets, family.sets.size());
  for (int i = 0; i < limit; ++i) sets.push_back(family.sets[i]);
  doc["min_isolating_sets"] = {{"count", family.sets.size()},
                               {"sets", sets},
                               {"truncated", limit < static_cast<int>(family.sets.size())}};

  json tripartitions = json::array();
  for (const auto& d : family.sets) {
    const auto b = open_neighborhood(g, d);
    std::vector<char> in_closed(g.vertex_count(), 0);
    for (int v : closed_neighborhood(g, d)) in_closed[v] = 1;
    VertexSet c;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!in_closed[v]) c.push_back(v);
    }
    const auto report = check_tripartition(g, d, b, c);
    tripartitions.push_back({{"set", d},
                             {"pass", report.pass},
                             {"first_violation", report.first_violation}});
  }
  doc["tripartition"] = tripartitions;

  if (structure.connected) {
    const auto report = crit_report(g);
    json crit;
    crit["is_star"] = report.is_star;
    crit["sd_iota"] = report.sd_iota ? json(*report.sd_iota) : json();
    crit["crit_q"] = report.crit_q ? json(*report.crit_q) : json();
    crit["max_safe_size"] =
        report.crit_q ? json(*report.crit_q - 1) : json();
    crit["max_safe_set"] = report.crit_q ? edge_set_json(report.max_safe_set) : json();
    crit["min_unsafe_witness"] =
        report.sd_iota ? edge_set_json(report.min_unsafe_witness) : json();
    doc["crit"] = crit;
    doc["is_iota1_critical"] = {{"structural", is_iota1_critical_structural(g)},
                                {"bruteforce", is_iota1_critical_bruteforce(g)}};
  } else {
    doc["crit"] = json();
    doc["is_iota1_critical"] = json();
  }

  doc["has_unique_min_isolating_set"] = family.sets.size() == 1;

  if (structure.tree) {
    const auto decision = fiota_membership(g);
    json fiota;
    fiota["member"] = decision.member;
    if (decision.member) {
      json trace = json::array();
      for (const auto& entry : decision.witness->trace) {
        trace.push_back({{"op", fiota_op_name(entry.op)},
                         {"anchor", entry.anchor},
                         {"added", entry.added}});
      }
      fiota["trace"] = trace;
    }
    doc["fiota"] = fiota;
  } else {
    doc["fiota"] = json();
  }

  if (with_gamma) {
    json gamma_doc;
    gamma_doc["value"] = gamma(g);
    gamma_doc["gamma1_critical"] =
        structure.connected ? json(is_gamma1_critical(g)) : json();
    doc["gamma"] = gamma_doc;
  }
  return doc;
}

void print_graph(const Graph& g, bool edgelist) {
  if (edgelist) {
    std::cout << format_edge_list(g);
  } else {
    std::cout << encode_graph6(g) << '\n';
  }
}

int resolve_fiota_anchor(const StatusTree& t, const std::string& token) {
  const auto structure = classify(t.tree);
  if (token == "leaf") {
    if (structure.leaves.empty()) throw std::invalid_argument("tree has no leaf");
    return structure.leaves.front();
  }
  if (token == "support") {
    if (structure.supports.empty()) throw std::invalid_argument("tree has no support vertex");
    return structure.supports.front();
  }
  return std::stoi(token);
}

Graph generate_family(const std::string& family, const std::vector<std::string>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw std::invalid_argument("family '" + family + "' expects " +
                                  std::to_string(k) + " parameter(s)");
    }
  };
  if (family == "path") {
    need(1);
    return make_path(std::stoi(params[0]));
  }
  if (family == "cycle") {
    need(1);
    return make_cycle(std::stoi(params[0]));
  }
  if (family == "star") {
    need(1);
    return make_star(std::stoi(params[0]));
  }
  if (family == "spider") {
    need(1);
    return make_spider(std::stoi(params[0]));
  }
  if (family == "wounded-spider") {
    need(2);
    return make_wounded_spider(std::stoi(params[0]), std::stoi(params[1]));
  }
  if (family == "qk") {
    need(1);
    return make_qk(std::stoi(params[0])).graph;
  }
  if (family == "fiota") {
    StatusTree t = fiota_base();
    for (const auto& step : params) {
      const auto at = step.find('@');
      if (at == std::string::npos) {
        throw std::invalid_argument("fiota step must look like O3@<anchor>");
      }
      const std::string op_name = step.substr(0, at);
      FiotaOp op;
      if (op_name == "O1") {
        op = FiotaOp::O1;
      } else if (op_name == "O2") {
        op = FiotaOp::O2;
      } else if (op_name == "O3") {
        op = FiotaOp::O3;
      } else {
        throw std::invalid_argument("unknown fiota operation " + op_name);
      }
      t = fiota_apply(t, op, resolve_fiota_anchor(t, step.substr(at + 1)));
    }
    return t.tree;
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isolation numbers, subdivision criticality and tree surveys"};
  app.require_subcommand(1);

  std::string graph_arg;
  bool with_gamma = false;
  int max_sets = -1;
  auto* analyze = app.add_subcommand("analyze", "full analysis document as JSON");
  analyze->add_option("graph", graph_arg, "graph6, @file or - for stdin")->required();
  analyze->add_flag("--gamma", with_gamma, "include domination results");
  analyze->add_option("--max-sets", max_sets, "truncate the minimum-set list");

  auto* iota_cmd = app.add_subcommand("iota", "isolation number");
  iota_cmd->add_option("graph", graph_arg)->required();

  auto* sd_cmd = app.add_subcommand("sd", "subdivision number");
  sd_cmd->add_option("graph", graph_arg)->required();

  auto* crit_cmd = app.add_subcommand("crit-index", "criticality index");
  crit_cmd->add_option("graph", graph_arg)->required();

  std::string method = "both";
  auto* check_cmd = app.add_subcommand("check-crit1", "single-edge criticality decision");
  check_cmd->add_option("graph", graph_arg)->required();
  check_cmd->add_option("--method", method, "structural|brute|both")
      ->check(CLI::IsMember({"structural", "brute", "both"}));

  std::string family;
  std::vector<std::string> family_params;
  bool out_edgelist = false;
  auto* gen_cmd = app.add_subcommand("gen", "generate a named family member");
  gen_cmd->add_option("family", family,
                      "path|cycle|star|spider|wounded-spider|qk|fiota")->required();
  gen_cmd->add_option("params", family_params, "family parameters or fiota steps");
  gen_cmd->add_flag("--edgelist", out_edgelist, "emit edge list instead of graph6");
  bool out_graph6 = false;
  gen_cmd->add_flag("--graph6", out_graph6, "emit graph6 (default)");

  int enum_n = 0;
  bool non_star_only = false;
  auto* enum_cmd = app.add_subcommand("enum-trees", "stream all trees of one order");
  enum_cmd->add_option("--n", enum_n, "tree order")->required();
  enum_cmd->add_flag("--non-star", non_star_only, "skip the star");

  int survey_max_n = 14;
  std::string survey_out;
  int workers = default_workers();
  bool allow_large = false;
  std::uint64_t budget = 0;
  auto* survey_cmd = app.add_subcommand("survey", "criticality survey over all non-star trees");
  survey_cmd->add_option("--max-n", survey_max_n, "largest order (default 14)");
  survey_cmd->add_option("--out", survey_out, "CSV output path")->required();
  survey_cmd->add_option("--workers", workers, "worker threads (default $ISOCRIT_WORKERS or 1)");
  survey_cmd->add_flag("--allow-large", allow_large, "permit orders above 14");
  survey_cmd->add_option("--budget", budget,
                         "per-tree subset budget; exceeded rows get crit_q=-1");

  int gap_max_n = 14;
  std::string gap_from;
  auto* gap_cmd = app.add_subcommand("gap-report", "realised/unrealised criticality indices per order");
  gap_cmd->add_option("--max-n", gap_max_n, "largest order");
  gap_cmd->add_option("--from", gap_from, "survey CSV to read instead of recomputing");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const Graph g = read_graph_argument(graph_arg);
      std::cout << analysis_document(g, with_gamma, max_sets).dump(2) << '\n';
      return 0;
    }
    if (iota_cmd->parsed()) {
      std::cout << iota(read_graph_argument(graph_arg)) << '\n';
      return 0;
    }
    if (sd_cmd->parsed()) {
      const auto sd = subdivision_number(read_graph_argument(graph_arg));
      if (!sd) {
        std::cout << "undefined (star)" << '\n';
        return kExitStar;
      }
      std::cout << *sd << '\n';
      return 0;
    }
    if (crit_cmd->parsed()) {
      const auto q = crit_index(read_graph_argument(graph_arg));
      if (!q) {
        std::cout << "undefined (star)" << '\n';
        return kExitStar;
      }
      std::cout << *q << '\n';
      return 0;
    }
    if (check_cmd->parsed()) {
      const Graph g = read_graph_argument(graph_arg);
      bool value = false;
      if (method == "structural") {
        value = is_iota1_critical_structural(g);
      } else if (method == "brute") {
        value = is_iota1_critical_bruteforce(g);
      } else {
        const bool structural = is_iota1_critical_structural(g);
        const bool brute = is_iota1_critical_bruteforce(g);
        if (structural != brute) {
          std::cerr << "method divergence: structural=" << std::boolalpha << structural
                    << " brute=" << brute << '\n';
          return kExitDivergence;
        }
        value = structural;
      }
      std::cout << (value ? "true" : "false") << '\n';
      return 0;
    }
    if (gen_cmd->parsed()) {
      print_graph(generate_family(family, family_params), out_edgelist);
      return 0;
    }
    if (enum_cmd->parsed()) {
      for (const Graph& t : free_trees(enum_n)) {
        if (non_star_only && classify(t).star) continue;
        std::cout << encode_graph6(t) << '\n';
      }
      return 0;
    }
    if (survey_cmd->parsed()) {
      if (survey_max_n > 14 && !allow_large) {
        std::cerr << "orders above 14 need --allow-large\n";
        return kExitUsage;
      }
      SurveyOptions options;
      options.workers = workers;
      options.per_tree_budget = budget;
      const auto records = survey(survey_max_n, options);
      std::ofstream out(survey_out, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write " << survey_out << '\n';
        return kExitUsage;
      }
      write_survey_csv(out, records);
      long long flagged = 0;
      for (const auto& r : records) flagged += r.budget_exceeded ? 1 : 0;
      if (flagged > 0) {
        std::cerr << flagged << " row(s) exceeded the per-tree budget (crit_q=-1)\n";
      }
      std::cerr << records.size() << " rows written to " << survey_out << '\n';
      return 0;
    }
    if (gap_cmd->parsed()) {
      std::vector<SurveyRecord> records;
      if (!gap_from.empty()) {
        std::ifstream in(gap_from);
        if (!in) {
          std::cerr << "cannot read " << gap_from << '\n';
          return kExitUsage;
        }
        for (auto& r : read_survey_csv(in)) {
          if (r.n <= gap_max_n) records.push_back(std::move(r));
        }
      } else {
        SurveyOptions options;
        options.workers = workers;
        records = survey(gap_max_n, options);
      }
      std::cout << gap_report_to_json(verify_open_problem(records));
      return 0;
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
