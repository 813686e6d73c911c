// sepcodes: minimum separating-dominating codes from the command line.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sepcodes/cli.hpp"

namespace {

using sepcodes::cli::Options;
using sepcodes::cli::Outcome;

void add_common(CLI::App* sub, Options& opts, bool graph_input, bool with_kind) {
  if (graph_input) {
    sub->add_option("graph", opts.graph_file, "edge-list file ('n m' header, then 'u v' lines)");
    sub->add_option("--family", opts.family, "generated graph: path:N, cycle:N, half:K, thin:K, thick:K, optional +k1");
  }
  if (with_kind) sub->add_option("--kind", opts.kind, "code kind: id, itd, ld, ltd, fd, ftd, od, otd");
  sub->add_option("--budget", opts.budget, "branch-and-bound node limit (default 1e7 or $SEPCODES_BUDGET)");
  sub->add_option("--threads", opts.threads, "solver threads (default 1)")->check(CLI::PositiveNumber);
  sub->add_flag("--deterministic", opts.deterministic, "single-threaded search, zeroed timings");
  sub->add_flag("--json", opts.json, "emit a JSON report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum ID/ITD/LD/LTD/FD/FTD/OD/OTD codes via hypergraph covers"};
  app.require_subcommand(1);
  Options opts;

  auto* solve = app.add_subcommand("solve", "compute gamma^X and a minimum code");
  add_common(solve, opts, true, true);

  auto* verify = app.add_subcommand("verify", "check whether a vertex set is an X-code");
  add_common(verify, opts, true, true);
  verify->add_option("--code", opts.code, "code vertices (omit for the empty set)")->expected(0, 1 << 20);

  auto* relations = app.add_subcommand("relations", "compute every X-number and check the known relations");
  add_common(relations, opts, true, false);

  auto* reduce = app.add_subcommand("reduce", "build the 3-SAT gadget graph of a DIMACS formula");
  add_common(reduce, opts, false, false);
  reduce->add_option("cnf", opts.cnf_file, "DIMACS CNF file")->required();
  reduce->add_option("--out", opts.out_prefix, "output prefix for .edges and .labels.json");
  reduce->add_flag("--check", opts.check, "verify satisfiability <-> code size (<= 3 vars, <= 4 clauses)");

  auto* hypergraph = app.add_subcommand("hypergraph", "dump the X-hypergraph before and after reduction");
  add_common(hypergraph, opts, true, true);

  auto* family = app.add_subcommand("family", "print a generated graph and its closed-form X-numbers");
  add_common(family, opts, true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : sepcodes::cli::kExitUsage;
  }

  try {
    Outcome out;
    if (*solve) out = sepcodes::cli::cmd_solve(opts);
    else if (*verify) out = sepcodes::cli::cmd_verify(opts);
    else if (*relations) out = sepcodes::cli::cmd_relations(opts);
    else if (*reduce) out = sepcodes::cli::cmd_reduce(opts);
    else if (*hypergraph) out = sepcodes::cli::cmd_hypergraph(opts);
    else out = sepcodes::cli::cmd_family(opts);
    std::cout << sepcodes::cli::render(out, opts.json);
    return out.exit_code;
  } catch (const sepcodes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return sepcodes::cli::kExitUsage;
  }
}
