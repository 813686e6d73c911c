#pragma once

#include <array>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sepcodes/codes.hpp"
#include "sepcodes/errors.hpp"
#include "sepcodes/graph.hpp"

namespace sepcodes {

using Literal = int;  // +i is x_i, -i is ¬x_i (1-based)
using Clause = std::vector<Literal>;
using Assignment = std::vector<bool>;  // index i holds x_{i+1}

struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Clauses of 1..3 literals over distinct variables in [1, num_vars].
inline void validate(const CnfFormula& f) {
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    const std::string where = "clause " + std::to_string(c + 1);
    if (clause.empty() || clause.size() > 3) throw InvalidInput(where + " must have 1 to 3 literals");
    for (std::size_t i = 0; i < clause.size(); ++i) {
      const auto var = static_cast<std::size_t>(std::abs(clause[i]));
      if (clause[i] == 0 || var > f.num_vars) throw InvalidInput(where + " has an out-of-range literal");
      for (std::size_t j = 0; j < i; ++j)
        if (std::abs(clause[j]) == std::abs(clause[i]))
          throw InvalidInput(where + " mentions variable " + std::to_string(var) + " twice");
    }
  }
}

inline bool every_variable_occurs(const CnfFormula& f) {
  std::vector<bool> seen(f.num_vars, false);
  for (const auto& clause : f.clauses)
    for (Literal l : clause) seen[static_cast<std::size_t>(std::abs(l)) - 1] = true;
  for (bool s : seen)
    if (!s) return false;
  return true;
}

inline bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (a.size() != f.num_vars) return false;
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (Literal l : clause) sat = sat || (a[static_cast<std::size_t>(std::abs(l)) - 1] == (l > 0));
    if (!sat) return false;
  }
  return true;
}

// DIMACS CNF: "c" comments, "p cnf <vars> <clauses>", 0-terminated clauses.
inline CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::size_t declared = 0;
  bool have_header = false;
  CnfFormula f;
  Clause pending;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (have_header) throw ParseError(lineno, "duplicate problem line");
      if (!(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0)
        throw ParseError(lineno, "expected 'p cnf <vars> <clauses>'");
      f.num_vars = static_cast<std::size_t>(vars);
      declared = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "clause before problem line");
    for (bool first = true; first || (ls >> tok); first = false) {
      long long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad literal '" + tok + "'");
      }
      if (lit == 0) {
        if (pending.empty()) throw ParseError(lineno, "empty clause");
        if (pending.size() > 3)
          throw ParseError(lineno, "clause has " + std::to_string(pending.size()) + " literals; at most 3 allowed");
        f.clauses.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > f.num_vars)
        throw ParseError(lineno, "literal " + tok + " exceeds declared variable count");
      pending.push_back(static_cast<Literal>(lit));
    }
  }
  if (!have_header) throw ParseError(lineno, "missing problem line");
  if (!pending.empty()) throw ParseError(lineno, "last clause not terminated by 0");
  if (f.clauses.size() != declared)
    throw ParseError(lineno, "expected " + std::to_string(declared) + " clauses, found " +
                                 std::to_string(f.clauses.size()));
  try {
    validate(f);
  } catch (const InvalidInput& e) {
    throw ParseError(lineno, e.what());
  }
  return f;
}

// Slots of a variable gadget, in id order within its block of ten.
enum class VarSlot { V1, V2, V3, W1, W2, S1, S2, S3, Z1, Z2 };

inline constexpr std::array<const char*, 10> kVarSlotNames{"v1", "v2", "v3", "w1", "w2",
                                                           "s1", "s2", "s3", "z1", "z2"};

struct GadgetGraph {
  CnfFormula formula;
  Graph graph;
  std::map<std::string, Vertex> labels;  // "x3.w1", "y2.u1", ...

  // Variables and clauses are 1-based; u_index in 1..3.
  Vertex variable_vertex(std::size_t var, VarSlot slot) const {
    return 10 * (var - 1) + static_cast<std::size_t>(slot);
  }
  Vertex clause_vertex(std::size_t clause, std::size_t u_index) const {
    return 10 * formula.num_vars + 3 * (clause - 1) + (u_index - 1);
  }
};

// Variable gadget: K_6 on {v1, w1, w2, s1, s2, s3} minus w1w2, v1s1, v1s2,
// v1s3; path v1 v2 v3; pendants z1, z2 on s1, s2. Clause gadget: path
// u1 u2 u3. Literal x in clause y joins y.u1 to x.w1, ¬x joins it to x.w2.
inline GadgetGraph build_gadget(const CnfFormula& f) {
  validate(f);
  GadgetGraph gg;
  gg.formula = f;
  const std::size_t n = f.num_vars, m = f.clauses.size();
  std::vector<Edge> edges;
  using S = VarSlot;
  static constexpr std::array<std::pair<S, S>, 15> kWidget{{
      {S::V1, S::W1}, {S::V1, S::W2}, {S::W1, S::S1}, {S::W1, S::S2}, {S::W1, S::S3},
      {S::W2, S::S1}, {S::W2, S::S2}, {S::W2, S::S3}, {S::S1, S::S2}, {S::S1, S::S3},
      {S::S2, S::S3}, {S::V1, S::V2}, {S::V2, S::V3}, {S::S1, S::Z1}, {S::S2, S::Z2},
  }};
  for (std::size_t x = 1; x <= n; ++x) {
    for (std::size_t s = 0; s < kVarSlotNames.size(); ++s)
      gg.labels["x" + std::to_string(x) + "." + kVarSlotNames[s]] = gg.variable_vertex(x, static_cast<S>(s));
    for (auto [a, b] : kWidget) edges.emplace_back(gg.variable_vertex(x, a), gg.variable_vertex(x, b));
  }
  for (std::size_t y = 1; y <= m; ++y) {
    for (std::size_t i = 1; i <= 3; ++i)
      gg.labels["y" + std::to_string(y) + ".u" + std::to_string(i)] = gg.clause_vertex(y, i);
    edges.emplace_back(gg.clause_vertex(y, 1), gg.clause_vertex(y, 2));
    edges.emplace_back(gg.clause_vertex(y, 2), gg.clause_vertex(y, 3));
    for (Literal l : f.clauses[y - 1]) {
      const auto x = static_cast<std::size_t>(std::abs(l));
      edges.emplace_back(gg.clause_vertex(y, 1), gg.variable_vertex(x, l > 0 ? S::W1 : S::W2));
    }
  }
  gg.graph = Graph(10 * n + 3 * m, edges);
  return gg;
}

// FTD: u1, u2 of every clause; v1, v2, z1, z2, s1, s2 of every variable; and
// w1 (x true) or w2 (x false). Size 7n + 2m. FD additionally drops s1 of
// the first variable, size 7n + 2m - 1. Only a code when `a` satisfies the
// formula.
inline VertexSet code_from_assignment(const GadgetGraph& gg, const Assignment& a, CodeKind kind) {
  if (kind != CodeKind::FD && kind != CodeKind::FTD)
    throw InvalidInput("gadget codes exist for FD and FTD only");
  if (a.size() != gg.formula.num_vars) throw InvalidInput("assignment size does not match variable count");
  VertexSet c(gg.graph.order());
  for (std::size_t y = 1; y <= gg.formula.clauses.size(); ++y) {
    c.insert(gg.clause_vertex(y, 1));
    c.insert(gg.clause_vertex(y, 2));
  }
  using S = VarSlot;
  for (std::size_t x = 1; x <= gg.formula.num_vars; ++x) {
    for (S s : {S::V1, S::V2, S::Z1, S::Z2, S::S1, S::S2}) c.insert(gg.variable_vertex(x, s));
    c.insert(gg.variable_vertex(x, a[x - 1] ? S::W1 : S::W2));
  }
  if (kind == CodeKind::FD && gg.formula.num_vars > 0) c.erase(gg.variable_vertex(1, S::S1));
  return c;
}

// Reads x = true from w1 ∈ code, x = false from w2 ∈ code. Requires a
// full-separating code holding exactly one of w1, w2 per variable.
inline std::optional<Assignment> assignment_from_code(const GadgetGraph& gg, const VertexSet& code) {
  if (code.universe() != gg.graph.order() || !is_full_separating(gg.graph, code)) return std::nullopt;
  Assignment a(gg.formula.num_vars);
  for (std::size_t x = 1; x <= gg.formula.num_vars; ++x) {
    const bool w1 = code.contains(gg.variable_vertex(x, VarSlot::W1));
    const bool w2 = code.contains(gg.variable_vertex(x, VarSlot::W2));
    if (w1 == w2) return std::nullopt;
    a[x - 1] = w1;
  }
  return a;
}

inline constexpr std::size_t kBruteForceSatMaxVars = 24;

// First satisfying assignment in lexicographic order (x_1 most significant,
// false before true).
inline std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
  if (f.num_vars > kBruteForceSatMaxVars)
    throw InvalidInput("brute-force SAT is capped at " + std::to_string(kBruteForceSatMaxVars) + " variables");
  const std::size_t n = f.num_vars;
  Assignment a(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> (n - 1 - i)) & 1U;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace sepcodes
