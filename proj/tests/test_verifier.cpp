// Unit tests for property certification: per-instance checks, partition
// certificates and their soundness replay, aggregate reports, counterexample
// search (registered refutations and seeded trials), and report serialization.
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "sspforge/formats.hpp"
#include "sspforge/verifier.hpp"

using namespace sspforge;

namespace {

Instance four_literal_sat() {
  CnfData d;
  d.vars = {"x1", "x2", "x3", "x4"};
  d.clauses = {{1, 2, 3, 4}};
  return Instance{ProblemId::sat, d};
}

Instance two_clause_tsat() {
  CnfData d;
  d.vars = {"l1", "l2", "l3"};
  d.clauses = {{1}, {2, 3}};
  return Instance{ProblemId::tsat, d};
}

std::vector<std::string> names_of(const Solution& s,
                                  const std::vector<std::string>& universe) {
  std::vector<std::string> out;
  for (std::uint32_t i : s.indices()) out.push_back(universe[i]);
  return out;
}

bool any_witness(const std::vector<Witness>& ws, const std::string& property,
                 const std::function<bool(const Witness&)>& pred) {
  for (const Witness& w : ws)
    if (w.property == property && pred(w)) return true;
  return false;
}

bool has_element(const Witness& w, const std::string& name) {
  for (const std::string& e : w.elements)
    if (e == name) return true;
  return false;
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

TEST_CASE("modified clause splitting passes both per-instance checks") {
  Instance src = four_literal_sat();
  const ReductionDef& red = *find_reduction("sat_to_tsat");
  Budget b(kDefaultBudget);
  std::vector<Witness> ws;
  CHECK(check_ssp(red, src, b, &ws));
  CHECK(check_parsimonious(red, src, b, &ws));
  CHECK(ws.empty());
}

TEST_CASE("naive clause splitting is refuted with concrete witnesses") {
  Instance src = four_literal_sat();
  const ReductionDef& red = *find_reduction("sat_to_tsat_naive");
  Budget b(kDefaultBudget);
  VerificationReport r = full_report(red, src, b);
  CHECK(r.source_count == 15);
  CHECK(r.target_count == 24);
  CHECK(r.ssp_holds);
  CHECK_FALSE(r.spr_holds);
  CHECK(r.claimed_ssp);
  CHECK_FALSE(r.claimed_spr);
  CHECK(r.claims_matched);  // the failing property was never claimed
  CHECK_FALSE(r.partition.valid);

  CHECK(any_witness(r.witnesses, "parsimony", [](const Witness& w) {
    return w.detail == "solution counts differ: 15 source vs 24 target";
  }));
  // The ambiguity is concrete: some assignment extends with either helper
  // polarity, so a partition witness carries both literals of the helper.
  CHECK(any_witness(r.witnesses, "partition", [](const Witness& w) {
    return has_element(w, "h1") && has_element(w, "!h1");
  }));
}

TEST_CASE("helper extension yields a sound always/never partition") {
  Instance src = two_clause_tsat();
  const ReductionDef& red = *find_reduction("tsat_to_esat");
  Budget b(kDefaultBudget);
  PartitionCertificate cert = classify_partition(red, src, b);
  CHECK(cert.valid);
  CHECK_FALSE(cert.vacuous);

  std::vector<std::string> u = canonical_universe(
      apply_reduction(red, src).target);
  CHECK(names_of(cert.always, u) ==
        std::vector<std::string>{"h1", "h2", "h3"});
  CHECK(names_of(cert.never, u) ==
        std::vector<std::string>{"!h1", "!h2", "!h3"});
  CHECK(cert.linked.count() == 0);
  CHECK(cert.link_map.size() == 3);
  CHECK(certificate_sound(red, src, cert, b));

  SUBCASE("dropping a link row breaks soundness") {
    PartitionCertificate tampered = cert;
    tampered.link_map.pop_back();
    CHECK_FALSE(certificate_sound(red, src, tampered, b));
  }
  SUBCASE("swapping the always and never blocks breaks soundness") {
    PartitionCertificate tampered = cert;
    std::swap(tampered.always, tampered.never);
    CHECK_FALSE(certificate_sound(red, src, tampered, b));
  }
}

TEST_CASE("missing embeddings are reported, not fatal") {
  Instance src = generate_instance(ProblemId::mis, {}, 2);
  const ReductionDef& red = *find_reduction("mis_to_mvc");
  Budget b(kDefaultBudget);
  VerificationReport r = full_report(red, src, b);
  CHECK_FALSE(r.ssp_holds);
  CHECK(r.spr_holds);  // complementation is a bijection on solutions
  CHECK(r.claims_matched);
  CHECK(any_witness(r.witnesses, "ssp", [](const Witness& w) {
    return w.detail.find("no universe embedding") != std::string::npos;
  }));
  CHECK(code_of([&] { classify_partition(red, src, b); }) ==
        ErrorCode::no_embedding);
}

TEST_CASE("counterexample search hits registered refutations immediately") {
  for (const char* id : {"sat_to_tsat_naive", "esat_to_mis", "esat_to_mvc",
                         "vc_to_ds_demo"}) {
    INFO(id);
    SearchOutcome out = search_counterexample(*find_reduction(id),
                                              Property::spr, {}, 5, 123);
    REQUIRE(out.counterexample.has_value());
    CHECK(out.trials_run == 1);
    CHECK(out.counterexample->note == "known failing shape");
    CHECK_FALSE(out.counterexample->spr_holds);
  }
}

TEST_CASE("counterexample search leaves sound reductions unrefuted") {
  SearchOutcome out = search_counterexample(*find_reduction("mis_to_cq"),
                                            Property::ssp, {}, 10, 7);
  CHECK_FALSE(out.counterexample.has_value());
  CHECK(out.trials_run == 10);
  CHECK(out.trials_skipped == 0);
}

TEST_CASE("counterexample search is deterministic across runs") {
  const ReductionDef& red = *find_reduction("esat_to_dhp");
  SearchOutcome a = search_counterexample(red, Property::spr, {}, 3, 0);
  SearchOutcome b = search_counterexample(red, Property::spr, {}, 3, 0);
  REQUIRE(a.counterexample.has_value());
  REQUIRE(b.counterexample.has_value());
  CHECK(a.counterexample->fingerprint == b.counterexample->fingerprint);
  CHECK(a.counterexample->note == b.counterexample->note);
  CHECK(a.trials_run == b.trials_run);
  CHECK_FALSE(a.counterexample->spr_holds);
}

TEST_CASE("reports serialize stably, timing only on request") {
  Instance src = four_literal_sat();
  Budget b(kDefaultBudget);
  VerificationReport r = full_report(*find_reduction("sat_to_tsat"), src, b);
  CHECK(r.claims_matched);

  nlohmann::ordered_json j1 = serialize_report(r);
  nlohmann::ordered_json j2 = serialize_report(r);
  CHECK(j1.dump(2) == j2.dump(2));
  CHECK_FALSE(j1.contains("elapsed_seconds"));
  CHECK(j1["reduction"] == "sat_to_tsat");
  CHECK(j1["observed"]["ssp"] == true);
  CHECK(j1["observed"]["spr"] == true);
  CHECK(j1["partition"]["valid"] == true);

  nlohmann::ordered_json timed = serialize_report(r, true);
  CHECK(timed.contains("elapsed_seconds"));
}

TEST_CASE("exhausted budgets abort the report cleanly") {
  Instance src = four_literal_sat();
  Budget tiny(10);
  CHECK(code_of([&] {
          full_report(*find_reduction("sat_to_tsat"), src, tiny);
        }) == ErrorCode::budget_exceeded);
}
