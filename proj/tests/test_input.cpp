#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "polycol/instance.hpp"
#include "polycol/loop_dsl.hpp"
#include "polycol/oracle.hpp"
#include "random_instances.hpp"

using namespace polycol;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kBox = R"({"halfspaces": [{"normal": ["1","0","0"], "offset": "0"}]})";

std::string doc(const std::string& matrix, const std::string& p1 = kBox, const std::string& p2 = kBox) {
  return R"({"matrix": )" + matrix + R"(, "p1": )" + p1 + R"(, "p2": )" + p2 + "}";
}

const char* kIdentity = R"([["1","0","0"],["0","1","0"],["0","0","1"]])";

void expect_parse_error(const std::string& text, const std::string& fragment) {
  try {
    parse_instance(text);
    ADD_FAILURE() << "no error for " << text;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Instance, ParsesNamedFile) {
  Instance in = parse_instance(slurp(polycol::testing::data_file("diag_two.json")));
  EXPECT_EQ(in.matrix(0, 0), Elem(2));
  EXPECT_EQ(in.p1.hs.size(), 6u);
  EXPECT_EQ(in.options.baker_exponent, 3u);
}

TEST(Instance, RoundTripsRandomInstances) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    Instance in = polycol::testing::random_instance(rng);
    Instance back = parse_instance(instance_json(in));
    EXPECT_EQ(instance_json(back), instance_json(in));
  }
}

TEST(Instance, ValidationNamesTheField) {
  expect_parse_error("not json", "instance");
  expect_parse_error(doc(R"([["1","0"],["0","1"]])"), "matrix");
  expect_parse_error(doc(R"([["1","0","0"],["0","x","0"],["0","0","1"]])"), "matrix[1][1]");
  expect_parse_error(doc(kIdentity, R"({"halfspaces": []})"), "whole space");
  expect_parse_error(doc(kIdentity, R"({"halfspaces": [{"normal": ["0","0","0"], "offset": "1"}]})"),
                     "p1.halfspaces[0].normal");
  expect_parse_error(doc(kIdentity, kBox, R"({"halfspaces": [{"normal": ["1","0","0"], "offset": "1", "rel": "<"}]})"),
                     "p2.halfspaces[0].rel");
  // i is not a real entry.
  expect_parse_error(
      doc(R"([[{"poly": ["1","0","1"], "re": "0", "im": "1", "rad": "1/100"},"0","0"],["0","1","0"],["0","0","1"]])"),
      "real");
}

TEST(Instance, AlgebraicEntriesShareOneField) {
  std::string sqrt2 = R"({"poly": ["-2","0","1"], "re": "1414/1000", "im": "0", "rad": "1/1000"})";
  std::string sqrt3 = R"({"poly": ["-3","0","1"], "re": "1732/1000", "im": "0", "rad": "1/1000"})";
  Instance in = parse_instance(doc("[[" + sqrt2 + R"(,"0","0"],["0",)" + sqrt3 + R"(,"0"],["0","0","1"]])"));
  ASSERT_TRUE(in.matrix(0, 0).field());
  EXPECT_EQ(in.matrix(0, 0).field(), in.matrix(1, 1).field());
  EXPECT_EQ(in.matrix(0, 0) * in.matrix(0, 0), Elem(in.matrix(0, 0).field(), Rational(2)));
}

TEST(LoopDsl, DiagonalLoop) {
  LoopProgram prog = parse_loop(slurp(polycol::testing::data_file("diag_loop.dsl")));
  EXPECT_EQ(prog.matrix(2, 2), Elem(2));
  ASSERT_EQ(prog.exits.size(), 1u);
  Instance in = exit_instance(prog, 0);
  // The loop exits after two doublings for every entry state.
  OracleResult r = scan(in.matrix, in.p1, in.p2, 3, 1);
  ASSERT_EQ(r.hits.size(), 1u);
  EXPECT_EQ(r.hits[0].n, 2u);
}

TEST(LoopDsl, GuardComplements) {
  LoopProgram eq = parse_loop("assume x1 >= 0; while (x1 + x2 = 1) { x := [[1,0,0],[0,1,0],[0,0,1]]*x; }");
  EXPECT_EQ(eq.exits.size(), 2u);
  LoopProgram conj = parse_loop("assume x1 >= 0; while (x1 <= 4 && x2 < 3) { x := diag(2,1,1)*x; }");
  EXPECT_EQ(conj.exits.size(), 2u);
  LoopProgram never = parse_loop("assume x1 >= 0; while (true) { x := diag(2,1,1)*x; }");
  EXPECT_TRUE(never.exits.empty());
  LoopProgram always = parse_loop("assume x1 >= 0; while (false) { x := diag(2,1,1)*x; }");
  ASSERT_EQ(always.exits.size(), 1u);
  EXPECT_TRUE(is_whole_space(always.exits[0].target));
  // The shift closes a strict complement: x1 <= 4 exits on x1 >= 4 + delta.
  LoopProgram shifted = parse_loop("assume x1 >= 0; while (x1 <= 4) { x := diag(2,1,1)*x; }", Rational(1, 10));
  const Halfspace& h = shifted.exits[0].target.hs[0];
  EXPECT_EQ(h.offset, Elem(Rational(41, 10)));
}

TEST(LoopDsl, Errors) {
  EXPECT_THROW(parse_loop("assume x1 >= 0; while (x1*x2 <= 4) { x := diag(2,1,1)*x; }"), ParseError);
  EXPECT_THROW(parse_loop("assume x1 > 0; while (x1 <= 4) { x := diag(2,1,1)*x; }"), ParseError);
  EXPECT_THROW(parse_loop("assume x1 >= 0; while (x1 <= 4) { x := diag(2,1)*x; }"), ParseError);
  EXPECT_THROW(parse_loop("assume x1 >= 0; while (x1 <= 4) { x := diag(2,1,1)*x + 1; }"), ParseError);
  EXPECT_THROW(parse_loop("assume x1 >= 0; while (x1 <= 4) { x := [[1,0],[0,1]]*x; }"), ParseError);
}
