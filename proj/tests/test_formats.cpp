// Unit tests for the document layer: instance round-trips, schema strictness,
// canonical text and fingerprints, solution-set serialization, and DIMACS
// import.
#include <functional>
#include <string>

#include "doctest.h"
#include "sspforge/formats.hpp"
#include "sspforge/problems.hpp"

using namespace sspforge;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SspError& e) {
    return e.code();
  }
  FAIL("expected an SspError");
  return ErrorCode::internal_error;
}

std::string what_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SspError& e) {
    return e.what();
  }
  FAIL("expected an SspError");
  return {};
}

}  // namespace

TEST_CASE("instances round-trip through their documents") {
  for (ProblemId kind : all_problems()) {
    for (std::uint64_t seed : {1u, 6u}) {
      INFO("kind " << problem_name(kind) << " seed " << seed);
      Instance inst = generate_instance(kind, {}, seed);
      std::string text = document_text(serialize_instance(inst));
      Instance back = parse_instance_text(text);
      CHECK(back.kind == inst.kind);
      CHECK(document_text(serialize_instance(back)) == text);
      CHECK(canonical_universe(back) == canonical_universe(inst));
    }
  }
}

TEST_CASE("canonical text is two-space indented with a trailing newline") {
  Instance inst = generate_instance(ProblemId::ss, {}, 2);
  std::string text = document_text(serialize_instance(inst));
  CHECK(text.substr(0, 2) == "{\n");
  CHECK(text.find("\n  \"version\": 1") == 1);
  CHECK(text.back() == '\n');
}

TEST_CASE("fingerprints are 16 lowercase hex digits and content-stable") {
  Instance inst = generate_instance(ProblemId::esat, {}, 3);
  std::string fp = fingerprint_instance(inst);
  REQUIRE(fp.size() == 16);
  for (char c : fp) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
  CHECK(fp == fingerprint_instance(inst));
  CHECK(fp == fingerprint_text(document_text(serialize_instance(inst))));
  CHECK(fp != fingerprint_instance(generate_instance(ProblemId::esat, {}, 4)));
}

TEST_CASE("parsing is strict") {
  Instance inst = generate_instance(ProblemId::mvc, {}, 2);
  nlohmann::ordered_json doc = serialize_instance(inst);

  nlohmann::ordered_json extra = doc;
  extra["surprise"] = 1;
  CHECK(code_of([&] { parse_instance(extra); }) == ErrorCode::parse_error);

  nlohmann::ordered_json unversioned = doc;
  unversioned.erase("version");
  CHECK(code_of([&] { parse_instance(unversioned); }) ==
        ErrorCode::parse_error);

  nlohmann::ordered_json unknown_kind = doc;
  unknown_kind["problem"] = "gizmo";
  CHECK(code_of([&] { parse_instance(unknown_kind); }) ==
        ErrorCode::parse_error);

  // Exact-cardinality bounds must equal the true optimum of the structure.
  nlohmann::ordered_json wrong_k = doc;
  wrong_k["k"] = doc["k"].get<long long>() + 1;
  CHECK(code_of([&] { parse_instance(wrong_k); }) ==
        ErrorCode::invalid_instance);

  CHECK(code_of([] { parse_instance_text("not json"); }) ==
        ErrorCode::parse_error);
}

TEST_CASE("big integers travel as decimal strings") {
  SsData d;
  d.numbers = {BigInt(1) << 60, BigInt(7)};
  d.target = (BigInt(1) << 60) + 7;
  Instance inst{ProblemId::ss, d};
  std::string text = document_text(serialize_instance(inst));
  CHECK(text.find("\"1152921504606846976\"") != std::string::npos);
  Instance back = parse_instance_text(text);
  const auto& rd = std::get<SsData>(back.data);
  CHECK(rd.numbers == d.numbers);
  CHECK(rd.target == d.target);
}

TEST_CASE("solution sets serialize with names in canonical order") {
  CnfData d;
  d.vars = {"x", "y"};
  d.clauses = {{1, 2}};
  Instance inst{ProblemId::sat, d};
  Budget b(kDefaultBudget);
  SolutionSet sols = enumerate_solutions(inst, b);
  REQUIRE(sols.size() == 3);
  nlohmann::ordered_json doc = serialize_solutions(inst, sols);
  CHECK(doc["version"] == 1);
  CHECK(doc["problem"] == "sat");
  CHECK(doc["complete"] == true);
  CHECK(doc["count"] == 3);
  REQUIRE(doc["solutions"].size() == 3);
  for (const auto& entry : doc["solutions"]) CHECK(entry.size() == 2);
}

TEST_CASE("dimacs cnf import") {
  Instance inst = import_dimacs_cnf(
      "c a comment\n"
      "p cnf 3 2\n"
      "1 -2 0\n"
      "2 3 -1 0\n");
  CHECK(inst.kind == ProblemId::sat);
  const auto& d = std::get<CnfData>(inst.data);
  CHECK(d.vars == std::vector<std::string>{"x1", "x2", "x3"});
  REQUIRE(d.clauses.size() == 2);
  CHECK(d.clauses[0] == std::vector<int>{1, -2});
  CHECK(d.clauses[1] == std::vector<int>{2, 3, -1});

  CHECK(code_of([] { import_dimacs_cnf("p cnf nope 2\n1 0\n"); }) ==
        ErrorCode::parse_error);
  // Errors carry 1-based line numbers.
  std::string msg = what_of([] { import_dimacs_cnf("p cnf 2 1\n1 -9 0\n"); });
  CHECK(msg.find("line 2") != std::string::npos);
}
