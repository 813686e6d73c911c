#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sepcodes/codes.hpp"
#include "sepcodes/reduction.hpp"

using namespace sepcodes;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = SEPCODES_TEST_DATA;

CnfFormula single(Literal l) { return CnfFormula{1, {{l}}}; }

}  // namespace

TEST(Dimacs, Examples) {
  EXPECT_EQ(parse_dimacs("p cnf 1 1\n1 0\n"), (CnfFormula{1, {{1}}}));
  EXPECT_EQ(parse_dimacs("c hi\np cnf 2 1\n1 -2 0\n"), (CnfFormula{2, {{1, -2}}}));
  // clauses may span lines, CRLF tolerated, '%' ends input
  EXPECT_EQ(parse_dimacs("p cnf 3 2\r\n1 2\r\n3 0 -1 0\r\n%\r\n0\r\n"), (CnfFormula{3, {{1, 2, 3}, {-1}}}));
}

TEST(Dimacs, Errors) {
  try {
    parse_dimacs("p cnf 4 1\n1 2 3 4 0\n");
    FAIL() << "arity 4 accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_dimacs("1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n1\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 -1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);
}

TEST(Gadget, Sizes) {
  EXPECT_EQ(build_gadget(single(1)).graph.order(), 13u);
  const GadgetGraph gg = build_gadget(CnfFormula{2, {{1, 2}, {-1, -2}}});
  EXPECT_EQ(gg.graph.order(), 26u);
  EXPECT_EQ(gg.labels.size(), 26u);
  EXPECT_THROW(build_gadget(CnfFormula{1, {{1, 1}}}), InvalidInput);
}

TEST(Gadget, Pendants) {
  const GadgetGraph gg = build_gadget(CnfFormula{2, {{1, -2}, {2}}});
  for (std::size_t x = 1; x <= 2; ++x) {
    const Vertex z1 = gg.variable_vertex(x, VarSlot::Z1), z2 = gg.variable_vertex(x, VarSlot::Z2);
    EXPECT_EQ(gg.graph.neighbors(z1), VertexSet(26, {gg.variable_vertex(x, VarSlot::S1)}));
    EXPECT_EQ(gg.graph.neighbors(z2), VertexSet(26, {gg.variable_vertex(x, VarSlot::S2)}));
    EXPECT_EQ(gg.graph.degree(gg.variable_vertex(x, VarSlot::V3)), 1u);
  }
  for (std::size_t y = 1; y <= 2; ++y) EXPECT_EQ(gg.graph.degree(gg.clause_vertex(y, 3)), 1u);
}

TEST(Gadget, LiteralWiring) {
  const GadgetGraph gg = build_gadget(CnfFormula{2, {{1, -2}}});
  const Vertex u1 = gg.clause_vertex(1, 1);
  EXPECT_TRUE(gg.graph.adjacent(u1, gg.variable_vertex(1, VarSlot::W1)));
  EXPECT_FALSE(gg.graph.adjacent(u1, gg.variable_vertex(1, VarSlot::W2)));
  EXPECT_TRUE(gg.graph.adjacent(u1, gg.variable_vertex(2, VarSlot::W2)));
  EXPECT_FALSE(gg.graph.adjacent(u1, gg.variable_vertex(2, VarSlot::W1)));
  EXPECT_EQ(gg.labels.at("y1.u1"), u1);
  EXPECT_EQ(gg.labels.at("x2.s3"), gg.variable_vertex(2, VarSlot::S3));
}

TEST(Gadget, GoldenDegreeSequence) {
  const GadgetGraph gg = build_gadget(parse_dimacs(slurp(kData + "/gadget_two_clauses.cnf")));
  std::istringstream golden(slurp(kData + "/gadget_two_clauses.degrees"));
  std::string line;
  std::size_t rows = 0;
  while (std::getline(golden, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string label;
    std::size_t degree = 0;
    ls >> label >> degree;
    ASSERT_TRUE(gg.labels.count(label)) << label;
    EXPECT_EQ(gg.graph.degree(gg.labels.at(label)), degree) << label;
    ++rows;
  }
  EXPECT_EQ(rows, gg.graph.order());
}

TEST(Gadget, TwinFreeWhenEveryVariableOccurs) {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const CnfFormula f = oracle::random_cnf(rng, 1 + i % 4, 1 + i % 5);
    const Graph g = build_gadget(f).graph;
    EXPECT_TRUE(isolated_vertices(g).empty());
    if (!every_variable_occurs(f)) {
      EXPECT_FALSE(is_twin_free(g));
      continue;
    }
    EXPECT_TRUE(is_twin_free(g));
    EXPECT_TRUE(is_admissible(g, CodeKind::FTD));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Gadget, ForcedVertices) {
  const GadgetGraph gg = build_gadget(CnfFormula{3, {{1, -2, 3}, {-1, 2}, {-3}}});
  const VertexSet forced = forced_vertices(gg.graph);
  for (std::size_t y = 1; y <= 3; ++y) EXPECT_TRUE(forced.contains(gg.clause_vertex(y, 1)));
  for (std::size_t x = 1; x <= 3; ++x)
    for (VarSlot s : {VarSlot::V1, VarSlot::Z1, VarSlot::Z2}) EXPECT_TRUE(forced.contains(gg.variable_vertex(x, s)));
}

// per-clause path holds >= 2 code vertices, per-variable gadget minus w1, w2 holds >= 6
TEST(Gadget, MinimumFtdCodeShape) {
  for (const CnfFormula& f : {single(1), single(-1), CnfFormula{1, {{1}, {-1}}}}) {
    const GadgetGraph gg = build_gadget(f);
    const auto codes = oracle::minimum_codes(gg.graph, CodeKind::FTD);
    ASSERT_FALSE(codes.empty());
    EXPECT_EQ(codes.front().size(), x_number(gg.graph, CodeKind::FTD).size);
    for (const VertexSet& c : codes) {
      for (std::size_t y = 1; y <= f.clauses.size(); ++y) {
        std::size_t in_path = 0;
        for (std::size_t i = 1; i <= 3; ++i) in_path += c.contains(gg.clause_vertex(y, i));
        EXPECT_GE(in_path, 2u);
      }
      for (std::size_t x = 1; x <= f.num_vars; ++x) {
        std::size_t in_gadget = 0;
        for (std::size_t s = 0; s < 10; ++s) {
          const auto slot = static_cast<VarSlot>(s);
          if (slot != VarSlot::W1 && slot != VarSlot::W2) in_gadget += c.contains(gg.variable_vertex(x, slot));
        }
        EXPECT_GE(in_gadget, 6u);
      }
    }
  }
}

TEST(CodeFromAssignment, SingleClause) {
  const GadgetGraph gg = build_gadget(single(1));
  const VertexSet ftd = code_from_assignment(gg, {true}, CodeKind::FTD);
  EXPECT_EQ(ftd.size(), 9u);
  EXPECT_TRUE(verify_code(gg.graph, CodeKind::FTD, ftd));
  const VertexSet fd = code_from_assignment(gg, {true}, CodeKind::FD);
  EXPECT_EQ(fd.size(), 8u);
  EXPECT_TRUE(verify_code(gg.graph, CodeKind::FD, fd));
  EXPECT_THROW(code_from_assignment(gg, {true}, CodeKind::ID), InvalidInput);
  EXPECT_THROW(code_from_assignment(gg, {true, false}, CodeKind::FTD), InvalidInput);
}

TEST(CodeFromAssignment, SatisfyingAssignmentsGiveCodes) {
  std::mt19937_64 rng(15);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 60; ++i) {
    const CnfFormula f = oracle::random_cnf(rng, 1 + i % 4, 1 + i % 6);
    if (!every_variable_occurs(f)) continue;
    const auto a = brute_force_sat(f);
    if (!a) continue;
    ++checked;
    const GadgetGraph gg = build_gadget(f);
    const std::size_t n = f.num_vars, m = f.clauses.size();
    const VertexSet ftd = code_from_assignment(gg, *a, CodeKind::FTD);
    const VertexSet fd = code_from_assignment(gg, *a, CodeKind::FD);
    EXPECT_EQ(ftd.size(), 7 * n + 2 * m);
    EXPECT_EQ(fd.size(), 7 * n + 2 * m - 1);
    EXPECT_TRUE(verify_code(gg.graph, CodeKind::FTD, ftd));
    EXPECT_TRUE(verify_code(gg.graph, CodeKind::FD, fd));
    const auto back = assignment_from_code(gg, ftd);
    ASSERT_TRUE(back.has_value());
    EXPECT_TRUE(satisfies(f, *back));
    EXPECT_EQ(*back, *a);
  }
  EXPECT_GT(checked, 20);
}

TEST(AssignmentFromCode, RejectsBothLiterals) {
  const GadgetGraph gg = build_gadget(single(1));
  VertexSet c = code_from_assignment(gg, {true}, CodeKind::FTD);
  c.insert(gg.variable_vertex(1, VarSlot::W2));
  EXPECT_FALSE(assignment_from_code(gg, c).has_value());
  EXPECT_FALSE(assignment_from_code(gg, VertexSet(13)).has_value());
}

// minimum code of a satisfiable instance decodes to a satisfying assignment
TEST(AssignmentFromCode, SolverWitness) {
  for (const CnfFormula& f : {single(1), single(-1), CnfFormula{2, {{1, 2}, {-1, -2}}}}) {
    const GadgetGraph gg = build_gadget(f);
    const CoverResult r = x_number(gg.graph, CodeKind::FTD);
    ASSERT_EQ(r.size, 7 * f.num_vars + 2 * f.clauses.size());
    const auto a = assignment_from_code(gg, r.witness);
    ASSERT_TRUE(a.has_value());
    EXPECT_TRUE(satisfies(f, *a));
  }
}

TEST(BruteForceSat, Examples) {
  EXPECT_EQ(brute_force_sat(single(1)), (Assignment{true}));
  EXPECT_FALSE(brute_force_sat(CnfFormula{1, {{1}, {-1}}}).has_value());
  EXPECT_EQ(brute_force_sat(CnfFormula{2, {{1, 2}}}), (Assignment{false, true}));
  EXPECT_THROW(brute_force_sat(CnfFormula{25, {}}), InvalidInput);
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const CnfFormula f = oracle::random_cnf(rng, 4, 6);
    const auto a = brute_force_sat(f);
    EXPECT_EQ(a.has_value(), oracle::satisfiable(f));
    if (a) {
      EXPECT_TRUE(satisfies(f, *a));
    }
  }
}

TEST(Correspondence, SmallFormulas) {
  const std::vector<CnfFormula> cases{
      single(1), CnfFormula{1, {{1}, {-1}}}, CnfFormula{2, {{1, 2}, {-1, -2}}}, CnfFormula{2, {{1}, {-1, 2}}},
      CnfFormula{2, {{1, 2}, {-2}}}, CnfFormula{2, {{1}, {-2}}}};
  for (const auto& f : cases) {
    const Graph g = build_gadget(f).graph;
    const std::size_t t = 7 * f.num_vars + 2 * f.clauses.size();
    const bool sat = oracle::satisfiable(f);
    const std::size_t ftd = x_number(g, CodeKind::FTD).size, fd = x_number(g, CodeKind::FD).size;
    EXPECT_EQ(sat, ftd == t);
    EXPECT_EQ(sat, fd == t - 1);
    EXPECT_GE(ftd, t);
    EXPECT_GE(fd, t - 1);
  }
}
