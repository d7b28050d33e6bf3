// Unit tests for the compendium layer: chain composition, end-to-end chain
// application/lifting/verification, transitive path search over the registry
// graph, and the DOT and JSON graph exports.
#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "sspforge/compendium.hpp"
#include "sspforge/formats.hpp"

using namespace sspforge;

namespace {

Instance two_clause_tsat() {
  CnfData d;
  d.vars = {"l1", "l2", "l3"};
  d.clauses = {{1}, {2, 3}};
  return Instance{ProblemId::tsat, d};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++n;
  return n;
}

std::vector<std::vector<std::string>> ids_of(
    const std::vector<std::vector<const ReductionDef*>>& paths) {
  std::vector<std::vector<std::string>> out;
  for (const auto& path : paths) {
    std::vector<std::string> ids;
    for (const ReductionDef* r : path) ids.emplace_back(r->id);
    out.push_back(std::move(ids));
  }
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SspError& e) {
    return e.code();
  }
  FAIL("expected an SspError");
  return ErrorCode::internal_error;
}

}  // namespace

TEST_CASE("composition joins ids, chains endpoints, and ANDs the claims") {
  ComposedReduction c = compose_ids({"tsat_to_esat", "esat_to_osat"});
  CHECK(c.id == "tsat_to_esat+esat_to_osat");
  CHECK(c.steps.size() == 2);
  CHECK(c.source() == ProblemId::tsat);
  CHECK(c.target() == ProblemId::osat);
  CHECK(c.claims.ssp);
  CHECK(c.claims.spr);
  CHECK_FALSE(c.demo);

  ComposedReduction weak = compose_ids({"sat_to_tsat_naive", "tsat_to_esat"});
  CHECK(weak.claims.ssp);
  CHECK_FALSE(weak.claims.spr);  // weakest step wins

  CHECK(compose_ids({"vc_to_ds_demo"}).demo);
}

TEST_CASE("composition rejects broken chains") {
  CHECK(code_of([] { compose_ids({"tsat_to_esat", "sat_to_tsat"}); }) ==
        ErrorCode::kind_mismatch);
  CHECK(code_of([] { compose_ids({"no_such_id"}); }) ==
        ErrorCode::parse_error);
  CHECK(code_of([] { compose({}); }) == ErrorCode::internal_error);
}

TEST_CASE("chains apply, lift, and verify end to end") {
  ComposedReduction chain = compose_ids({"tsat_to_esat", "esat_to_osat"});
  Instance src = two_clause_tsat();
  ChainApplied ca = apply_chain(chain, src);
  CHECK(ca.stages.size() == 2);
  CHECK(ca.has_embedding);
  CHECK(ca.embed.size() == universe_size(src));
  CHECK(ca.target().kind == ProblemId::osat);

  Budget b(kDefaultBudget);
  SolutionSet sols = enumerate_solutions(src, b);
  REQUIRE(sols.size() == 3);
  SolutionSet lifted;
  for (const Solution& s : sols.items) {
    Solution t = lift_chain(chain, src, ca, s);
    CHECK(verify_solution(ca.target(), t));
    lifted.insert(t);
  }
  CHECK(lifted.size() == 3);

  VerificationReport r = verify_chain(chain, src, b);
  CHECK(r.reduction_id == "tsat_to_esat+esat_to_osat");
  CHECK(r.source_count == 3);
  CHECK(r.target_count == 3);
  CHECK(r.ssp_holds);
  CHECK(r.spr_holds);
  CHECK(r.claims_matched);
  CHECK(r.partition.valid);
}

TEST_CASE("a chain through an embedding-free step loses its embedding") {
  ComposedReduction chain = compose_ids({"esat_to_cq", "cq_to_mis"});
  CnfData d;
  d.vars = {"l1", "l2", "l3"};
  d.clauses = {{1, 2, 3}};
  Instance src{ProblemId::esat, d};
  ChainApplied ca = apply_chain(chain, src);
  CHECK_FALSE(ca.has_embedding);
  CHECK(ca.target().kind == ProblemId::mis);
}

TEST_CASE("transitive path search enumerates simple chains in stable order") {
  auto paths = ids_of(transitive_paths(ProblemId::esat, ProblemId::mis));
  CHECK(paths == std::vector<std::vector<std::string>>{
                     {"esat_to_mis"},
                     {"esat_to_cq", "cq_to_mis"},
                     {"esat_to_osat", "osat_to_mis"}});

  CHECK(ids_of(transitive_paths(ProblemId::esat, ProblemId::mis, 1)) ==
        std::vector<std::vector<std::string>>{{"esat_to_mis"}});

  CHECK(transitive_paths(ProblemId::vc, ProblemId::ds).empty());
  CHECK(ids_of(transitive_paths(ProblemId::vc, ProblemId::ds, 6, true)) ==
        std::vector<std::vector<std::string>>{{"vc_to_ds_demo"}});

  CHECK(transitive_paths(ProblemId::sat, ProblemId::sat).empty());
}

TEST_CASE("graph exports cover every kind, style the claims, stay stable") {
  std::string dot = export_graph_dot();
  CHECK(dot == export_graph_dot());
  CHECK(count_of(dot, "\";") == kProblemCount);  // one bare line per kind
  CHECK(count_of(dot, " -> ") == 40);
  CHECK(dot.find("\"sat\" -> \"tsat\" [label=\"sat_to_tsat\", style=solid];") !=
        std::string::npos);
  CHECK(dot.find("[label=\"sat_to_tsat_naive\", style=dotted]") !=
        std::string::npos);
  CHECK(dot.find("\"mis\" -> \"mvc\" [label=\"mis_to_mvc\", style=dashed];") !=
        std::string::npos);

  std::string lean = export_graph_dot(false);
  CHECK(count_of(lean, " -> ") == 39);
  CHECK(lean.find("vc_to_ds_demo") == std::string::npos);

  nlohmann::ordered_json g = export_graph_json();
  CHECK(g["nodes"].size() == kProblemCount);
  CHECK(g["edges"].size() == 40);
  CHECK(g.dump() == export_graph_json().dump());
  CHECK(export_graph_json(false)["edges"].size() == 39);
  CHECK(g["edges"][0]["id"] == "sat_to_tsat_naive");
  CHECK(g["edges"][0]["claims"]["spr"] == false);
}
