#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sepcodes/codes.hpp"
#include "sepcodes/families.hpp"
#include "sepcodes/graph_io.hpp"
#include "sepcodes/reduction.hpp"
#include "sepcodes/relations.hpp"

namespace sepcodes::cli {

using nlohmann::json;

inline constexpr const char* kFormatVersion = "sepcodes-report/1";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBudget = 2,
  kExitNotAdmissible = 3,
  kExitViolation = 4,
};

struct Options {
  std::optional<std::string> graph_file;
  std::optional<std::string> family;
  std::optional<std::string> kind;
  std::vector<Vertex> code;
  std::optional<std::string> cnf_file;
  std::optional<std::string> out_prefix;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  bool deterministic = false;
  bool json = false;
  bool check = false;
};

struct Outcome {
  json report;
  std::string text;
  int exit_code = kExitOk;
};

// --budget, else $SEPCODES_BUDGET, else the library default.
inline std::uint64_t resolve_budget(const Options& opts) {
  if (opts.budget) return *opts.budget;
  if (const char* env = std::getenv("SEPCODES_BUDGET")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("SEPCODES_BUDGET is not a number: ") + env);
  }
  return kDefaultNodeBudget;
}

inline CoverOptions cover_options(const Options& opts) {
  CoverOptions c;
  c.node_budget = resolve_budget(opts);
  c.threads = opts.deterministic ? 1 : std::max(1U, opts.threads);
  return c;
}

struct GraphSource {
  Graph graph;
  std::string description;
  std::optional<FamilySpec> family;
};

inline GraphSource load_graph(const Options& opts) {
  if (opts.family && opts.graph_file) throw InvalidInput("give either a graph file or --family, not both");
  if (opts.family) {
    const FamilySpec spec = parse_family_spec(*opts.family);
    return {generate(spec), "family:" + to_string(spec), spec};
  }
  if (!opts.graph_file) throw InvalidInput("no graph given (pass an edge-list file or --family)");
  std::ifstream in(*opts.graph_file, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + *opts.graph_file);
  return {read_edge_list(in), *opts.graph_file, std::nullopt};
}

inline CodeKind require_kind(const Options& opts) {
  if (!opts.kind) throw InvalidInput("--kind is required");
  return parse_code_kind(*opts.kind);
}

inline json header(const std::string& name, const Options& opts, const std::string& graph) {
  json cmd{{"name", name}, {"deterministic", opts.deterministic}, {"budget", resolve_budget(opts)}};
  if (!graph.empty()) cmd["graph"] = graph;
  if (opts.kind) cmd["kind"] = std::string(to_string(parse_code_kind(*opts.kind)));
  return json{{"format_version", kFormatVersion}, {"command", cmd}};
}

inline std::string join(const std::vector<Vertex>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " " : "") + std::to_string(ids[i]);
  return s;
}

class Stopwatch {
 public:
  explicit Stopwatch(bool frozen) : frozen_(frozen), start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    if (frozen_) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  bool frozen_;
  std::chrono::steady_clock::time_point start_;
};

inline json result_json(CodeKind x, const CoverResult& r, std::int64_t wall_ms) {
  return json{{"kind", std::string(to_string(x))},
              {"admissible", true},
              {"size", r.size},
              {"witness", r.witness.to_vector()},
              {"optimal", r.optimal},
              {"nodes", r.nodes_explored},
              {"wall_time_ms", wall_ms}};
}

inline json not_admissible_json(CodeKind x) {
  return json{{"kind", std::string(to_string(x))}, {"admissible", false}};
}

inline std::string describe(CodeKind x, const CoverResult& r, std::int64_t wall_ms) {
  std::ostringstream out;
  out << "gamma^" << to_string(x) << " = " << r.size << (r.optimal ? " (optimal" : " (NOT optimal: budget exhausted")
      << ", " << r.nodes_explored << " nodes, " << wall_ms << " ms)\n"
      << "witness: " << join(r.witness.to_vector()) << "\n";
  return out.str();
}

inline Outcome cmd_solve(const Options& opts) {
  const GraphSource src = load_graph(opts);
  const CodeKind x = require_kind(opts);
  Outcome out{header("solve", opts, src.description), "", kExitOk};
  json entry;
  try {
    const Stopwatch clock(opts.deterministic);
    const CoverResult r = x_number(src.graph, x, cover_options(opts));
    const auto ms = clock.elapsed_ms();
    entry = result_json(x, r, ms);
    out.text = describe(x, r, ms);
    out.exit_code = r.optimal ? kExitOk : kExitBudget;
  } catch (const NotAdmissible& e) {
    entry = not_admissible_json(x);
    out.text = std::string("NotAdmissible: ") + e.what() + "\n";
    out.exit_code = kExitNotAdmissible;
  }
  if (src.family) {
    const auto f = formula_x_number(*src.family, x);
    entry["formula"] = f ? json(*f) : json(nullptr);
    if (f) out.text += "closed form: " + std::to_string(*f) + "\n";
  }
  out.report["results"] = json::array({entry});
  return out;
}

inline Outcome cmd_verify(const Options& opts) {
  const GraphSource src = load_graph(opts);
  const CodeKind x = require_kind(opts);
  VertexSet c(src.graph.order());
  for (Vertex v : opts.code) {
    if (v >= src.graph.order())
      throw InvalidInput("code vertex " + std::to_string(v) + " outside graph of order " +
                         std::to_string(src.graph.order()));
    c.insert(v);
  }
  Outcome out{header("verify", opts, src.description), "", kExitOk};
  const bool accepted = verify_code(src.graph, x, c);
  json entry{{"kind", std::string(to_string(x))}, {"code", c.to_vector()}, {"accepted", accepted}};
  out.text = std::string(to_string(x)) + " code {" + join(c.to_vector()) + "}: " + (accepted ? "accept" : "reject") +
             "\n";
  if (x == CodeKind::FD || x == CodeKind::FTD) {
    const bool fast = verify_code_fast(src.graph, x, c);
    entry["fast_accepted"] = fast;
    out.text += std::string("distance-2 check: ") + (fast ? "accept" : "reject") + "\n";
  }
  out.report["results"] = json::array({entry});
  return out;
}

inline Outcome cmd_relations(const Options& opts) {
  const GraphSource src = load_graph(opts);
  Outcome out{header("relations", opts, src.description), "", kExitOk};
  const CoverOptions copts = cover_options(opts);
  XNumbers xs;
  json results = json::array();
  std::ostringstream text;
  bool exhausted = false;
  for (CodeKind x : kAllCodeKinds) {
    if (!is_admissible(src.graph, x)) {
      results.push_back(not_admissible_json(x));
      text << "gamma^" << to_string(x) << ": not admissible\n";
      continue;
    }
    const Stopwatch clock(opts.deterministic);
    xs[x] = x_number(src.graph, x, copts);
    const auto ms = clock.elapsed_ms();
    results.push_back(result_json(x, *xs[x], ms));
    exhausted = exhausted || !xs[x]->optimal;
    text << "gamma^" << to_string(x) << " = " << xs[x]->size << (xs[x]->optimal ? "" : " (budget exhausted)")
         << "\n";
  }
  const auto checks = check_relations(src.graph, xs, copts);
  json relations = json::array();
  bool violated = false;
  for (const auto& c : checks) {
    relations.push_back(json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
    violated = violated || c.status == RelationStatus::Violated;
    exhausted = exhausted || c.status == RelationStatus::Unknown;
    text << "[" << to_string(c.status) << "] " << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  }
  out.report["results"] = results;
  out.report["relations"] = relations;
  out.text = text.str();
  out.exit_code = violated ? kExitViolation : exhausted ? kExitBudget : kExitOk;
  return out;
}

inline constexpr std::size_t kCheckMaxVars = 3;
inline constexpr std::size_t kCheckMaxClauses = 4;

inline json labels_json(const GadgetGraph& gg) {
  json labels = json::object();
  for (const auto& [name, id] : gg.labels) labels[name] = id;
  return labels;
}

inline Outcome cmd_reduce(const Options& opts) {
  if (!opts.cnf_file) throw InvalidInput("reduce needs a DIMACS CNF file");
  std::ifstream in(*opts.cnf_file, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + *opts.cnf_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const CnfFormula f = parse_dimacs(buffer.str());
  const std::size_t n = f.num_vars, m = f.clauses.size();
  if (opts.check && (n > kCheckMaxVars || m > kCheckMaxClauses))
    throw InvalidInput("--check is limited to " + std::to_string(kCheckMaxVars) + " variables and " +
                       std::to_string(kCheckMaxClauses) + " clauses");

  const GadgetGraph gg = build_gadget(f);
  std::string prefix = opts.out_prefix.value_or("");
  if (prefix.empty()) {
    std::filesystem::path p(*opts.cnf_file);
    prefix = (p.parent_path() / p.stem()).string() + ".gadget";
  }
  const std::string edge_file = prefix + ".edges";
  const std::string label_file = prefix + ".labels.json";
  {
    std::ofstream eo(edge_file, std::ios::binary);
    if (!eo) throw InvalidInput("cannot write " + edge_file);
    eo << "# gadget graph for " << std::filesystem::path(*opts.cnf_file).filename().string() << "\n";
    write_edge_list(eo, gg.graph);
    std::ofstream lo(label_file, std::ios::binary);
    if (!lo) throw InvalidInput("cannot write " + label_file);
    lo << labels_json(gg).dump(2) << "\n";
  }

  Outcome out{header("reduce", opts, *opts.cnf_file), "", kExitOk};
  out.report["gadget"] = json{{"variables", n},
                              {"clauses", m},
                              {"vertices", gg.graph.order()},
                              {"edges", gg.graph.size()},
                              {"edge_file", edge_file},
                              {"label_file", label_file}};
  std::ostringstream text;
  text << "gadget: " << gg.graph.order() << " vertices, " << gg.graph.size() << " edges (" << n << " variables, " << m
       << " clauses)\nwrote " << edge_file << "\nwrote " << label_file << "\n";

  if (opts.check) {
    const bool sat = brute_force_sat(f).has_value();
    const std::size_t ftd_target = 7 * n + 2 * m;
    const std::size_t fd_target = ftd_target - 1;
    json check{{"satisfiable", sat}, {"ftd_threshold", ftd_target}, {"fd_threshold", fd_target}};
    if (!is_admissible(gg.graph, CodeKind::FTD)) {
      check["admissible"] = false;
      text << "gadget is not FTD-admissible (a variable occurs in no clause)\n";
      out.exit_code = kExitNotAdmissible;
    } else {
      const CoverOptions copts = cover_options(opts);
      const CoverResult ftd = x_number(gg.graph, CodeKind::FTD, copts);
      const CoverResult fd = x_number(gg.graph, CodeKind::FD, copts);
      const bool ok = (sat == (ftd.size == ftd_target)) && (sat == (fd.size == fd_target)) &&
                      ftd.size >= ftd_target && fd.size >= fd_target;
      check["admissible"] = true;
      check["ftd_number"] = ftd.size;
      check["fd_number"] = fd.size;
      check["optimal"] = ftd.optimal && fd.optimal;
      check["correspondence_holds"] = ok;
      text << "formula is " << (sat ? "satisfiable" : "unsatisfiable") << "\n"
           << "gamma^FTD = " << ftd.size << " (threshold " << ftd_target << ")\n"
           << "gamma^FD = " << fd.size << " (threshold " << fd_target << ")\n"
           << "correspondence " << (ok ? "confirmed" : "VIOLATED") << "\n";
      out.exit_code = !(ftd.optimal && fd.optimal) ? kExitBudget : ok ? kExitOk : kExitViolation;
    }
    out.report["check"] = check;
  }
  out.text = text.str();
  return out;
}

inline json rows_json(const Hypergraph& h) {
  std::vector<std::vector<Vertex>> rows;
  for (const auto& e : h.edges()) rows.push_back(e.to_vector());
  std::sort(rows.begin(), rows.end());
  return rows;
}

inline Outcome cmd_hypergraph(const Options& opts) {
  const GraphSource src = load_graph(opts);
  const CodeKind x = require_kind(opts);
  const Hypergraph h = build_hypergraph(src.graph, x);
  const Hypergraph reduced = remove_redundant(h);
  Outcome out{header("hypergraph", opts, src.description), "", kExitOk};
  const bool empty_edge = h.has_empty_edge();
  out.report["hypergraph"] = json{{"kind", std::string(to_string(x))},
                                  {"empty_hyperedge", empty_edge},
                                  {"hyperedges", rows_json(h)},
                                  {"reduced", rows_json(reduced)}};
  std::ostringstream text;
  if (empty_edge)
    text << "warning: empty hyperedge present; graph is not " << to_string(x) << "-admissible\n";
  text << "# " << to_string(x) << "-hypergraph: " << h.num_edges() << " hyperedges\n"
       << dump(h) << "# after removing redundant hyperedges: " << reduced.num_edges() << "\n"
       << dump(reduced);
  out.text = text.str();
  return out;
}

inline Outcome cmd_family(const Options& opts) {
  if (!opts.family) throw InvalidInput("family needs --family SPEC");
  const FamilySpec spec = parse_family_spec(*opts.family);
  const Graph g = generate(spec);
  Outcome out{header("family", opts, "family:" + to_string(spec)), "", kExitOk};
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json formulas = json::object();
  std::ostringstream text;
  text << to_edge_list(g) << "# closed forms:";
  for (CodeKind x : kAllCodeKinds) {
    const auto f = formula_x_number(spec, x);
    formulas[std::string(to_string(x))] = f ? json(*f) : json(nullptr);
    text << " " << to_string(x) << "=" << (f ? std::to_string(*f) : "-");
  }
  text << "\n";
  out.report["graph"] = json{{"order", g.order()}, {"size", g.size()}, {"edges", edges}};
  out.report["formulas"] = formulas;
  out.text = text.str();
  return out;
}

inline std::string render(const Outcome& o, bool as_json) { return as_json ? o.report.dump(2) + "\n" : o.text; }

}  // namespace sepcodes::cli
