#include <doctest.h>

#include "cstarinv/problem.hpp"
#include "cstarinv/report.hpp"
#include "test_helpers.hpp"

using namespace cstarinv;
using namespace cstarinv::testing;

namespace {
const ToleranceConfig kTol;

const char* kMinimalProblem = R"({
  "algebra": [1],
  "rank": 1,
  "operators": {"T": [[[[[2]]]]]}
})";
}

TEST_CASE("minimal problem file parses to a 1x1 operator") {
    ProblemFile p = parse_problem_text(kMinimalProblem);
    CHECK(p.algebra == AlgebraShape{1});
    CHECK(p.rank == 1);
    const Operator& T = p.get_operator("T");
    CHECK(operator_norm(T) == doctest::Approx(2.0));
    CHECK_THROWS_AS((void)p.get_operator("missing"), UnknownName);
    CHECK_THROWS_AS((void)p.get_submodule("missing"), UnknownName);
}

TEST_CASE("complex entries accept bare numbers and [re, im] pairs") {
    ProblemFile p = parse_problem_text(R"({
      "algebra": [1], "rank": 1,
      "operators": {"T": [[[[[[0, 1]]]]]]}
    })");
    CHECK(std::abs(p.get_operator("T").block(0)(0, 0) - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("tolerance overrides are honored and validated") {
    ProblemFile p = parse_problem_text(R"({
      "algebra": [2], "rank": 1,
      "tolerances": {"atol": 1e-6, "rtol": 1e-5, "seed": 11, "search_budget": 50}
    })");
    CHECK(p.tolerances.atol == doctest::Approx(1e-6));
    CHECK(p.tolerances.rtol == doctest::Approx(1e-5));
    CHECK(p.tolerances.seed == 11);
    CHECK(p.tolerances.search_budget == 50);
    CHECK_THROWS_AS((void)parse_problem_text(R"({
      "algebra": [1], "rank": 1, "tolerances": {"atol": -1}
    })"), ValidationError);
}

TEST_CASE("malformed documents raise parse errors with a path") {
    CHECK_THROWS_AS((void)parse_problem_text("not json"), ParseError);
    CHECK_THROWS_AS((void)parse_problem_text(R"({"rank": 1})"), ParseError);
    CHECK_THROWS_AS((void)parse_problem_text(R"({"algebra": [1]})"), ParseError);
    CHECK_THROWS_AS((void)parse_problem_text(R"({"algebra": [0], "rank": 1})"), ValidationError);
    CHECK_THROWS_AS((void)parse_problem_text(R"({"algebra": [1], "rank": 0})"), ValidationError);
    try {
        (void)parse_problem_text(R"({
          "algebra": [2], "rank": 1,
          "operators": {"T": [[[[[1, 0]]]]]}
        })");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("operators.T") != std::string::npos);
    }
}

TEST_CASE("a submodule given as a non-projection is rejected") {
    CHECK_THROWS_AS((void)parse_problem_text(R"({
      "algebra": [1], "rank": 2,
      "submodules": {"W": {"projection": [[[[[1]]], [[[1]]]], [[[[0]]], [[[1]]]]]}}
    })"), ValidationError);
}

TEST_CASE("submodules parse from generators or from a projection") {
    ProblemFile p = parse_problem_text(R"({
      "algebra": [1], "rank": 2,
      "submodules": {
        "G": {"generators": [[[[[1]]], [[[0]]]]]},
        "P": {"projection": [[[[[1]]], [[[0]]]], [[[[0]]], [[[0]]]]]}
      }
    })");
    CHECK(operator_norm(p.get_submodule("G").projection() - p.get_submodule("P").projection()) <=
          kTol.scale(1.0));
}

TEST_CASE("problem documents round-trip through JSON") {
    RandomGen rng(71);
    ProblemFile p;
    p.algebra = AlgebraShape{1, 2};
    p.rank = 2;
    p.operators.emplace("T", rng.op(p.algebra, p.rank));
    p.submodules.emplace("W", rng.projection(p.algebra, p.rank));
    Json doc = problem_to_json(p);
    ProblemFile q = parse_problem_text(doc.dump());
    CHECK(operator_norm(p.get_operator("T") - q.get_operator("T")) <= 1e-12);
    CHECK(operator_norm(p.get_submodule("W").projection() -
                        q.get_submodule("W").projection()) <= 1e-12);
}

TEST_CASE("individual objects round-trip through their JSON schema") {
    RandomGen rng(72);
    AlgebraShape shape{2, 3};
    AlgebraElement a = rng.element(shape);
    CHECK(norm(element_from_json(to_json(a), shape) - a) <= 1e-12);
    ModuleVector x = rng.vector(shape, 3);
    CHECK(vector_norm(vector_from_json(to_json(x), shape, 3) - x) <= 1e-12);
    Operator T = rng.op(shape, 2);
    CHECK(operator_norm(operator_from_json(to_json(T), shape, 2) - T) <= 1e-12);
}

TEST_CASE("machine reports are valid JSON and byte-stable") {
    Report rep;
    rep.command = "analyze";
    rep.seed = 7;
    rep.checks.push_back({"example_check", 1e-12, 1e-9});
    rep.info["note"] = "value";
    std::string a = emit_report(rep, ReportFormat::Machine);
    std::string b = emit_report(rep, ReportFormat::Machine);
    CHECK(a == b);
    Json parsed = Json::parse(a);
    CHECK(parsed["command"] == "analyze");
    CHECK(parsed["checks"][0]["verdict"] == "pass");
    std::string human = emit_report(rep, ReportFormat::Human);
    CHECK(human.find("example_check") != std::string::npos);
}
