// Empirical certification of reduction properties on concrete instances:
// exhaustive solution enumeration on both sides of a reduction, the
// subset-search and parsimony checks, the induced partition of the target
// universe with its link map, counterexample search over seeded random
// instances, and a JSON report rendering.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sspforge/reductions.hpp"

namespace sspforge {

// A concrete piece of evidence for a failed property: which check produced
// it, a human-readable explanation, and the offending element set (by target
// or source element name, as stated in the detail text).
struct Witness {
  std::string property;  // "ssp", "parsimony", or "partition"
  std::string detail;
  std::vector<std::string> elements;
};

// Partition of the target universe induced by one application of a reduction:
//   embedded  - the image of the universe embedding,
//   always    - non-embedded elements present in every target solution,
//   never     - non-embedded elements present in no target solution,
//   linked    - the remaining elements (present in some solutions only).
// For each target solution, `link_map` records the pair (restriction to the
// embedded block, restriction to the linked block).  The certificate is valid
// when distinct target solutions have distinct embedded-block restrictions,
// i.e. the embedded part together with `always` and the link map reconstructs
// every target solution uniquely.  When the target has no solutions at all
// the certificate is vacuously valid (`vacuous` is set, `never` absorbs all
// non-embedded elements).
struct PartitionCertificate {
  Solution embedded;
  Solution always;
  Solution never;
  Solution linked;
  std::vector<std::pair<Solution, Solution>> link_map;  // sorted by key
  bool valid = false;
  bool vacuous = false;
};

// Everything learned about one reduction on one source instance.  Solution
// counts on both sides are always present; `target_universe` carries the
// canonical element names of the transformed instance so that the report can
// be rendered without re-running the transformation.
struct VerificationReport {
  std::string reduction_id;
  std::string fingerprint;  // of the source instance
  std::string note;         // provenance, e.g. "seed 7" for searched instances
  std::size_t source_count = 0;
  std::size_t target_count = 0;
  bool ssp_holds = false;
  bool spr_holds = false;
  bool claimed_ssp = false;
  bool claimed_spr = false;
  // False exactly when a claimed property failed on this instance.  A
  // disclaimed property holding here is consistent: negative claims promise a
  // failing instance somewhere, not failure everywhere (see
  // search_counterexample).
  bool claims_matched = true;
  PartitionCertificate partition;
  std::vector<std::string> target_universe;
  std::vector<Witness> witnesses;  // at most 3 per failed property
  std::uint64_t nodes_used = 0;
  double elapsed_seconds = 0.0;
};

// Subset-search check: the embedded source solutions must form exactly the
// set of target-solution restrictions to the embedded universe.  Reductions
// without a registered embedding fail with an explanatory witness.  Witnesses
// (up to 3) are appended when a non-null vector is supplied.
bool check_ssp(const ReductionDef& red, const Instance& source, Budget& budget,
               std::vector<Witness>* witnesses = nullptr);

// Strong parsimony check: solution counts must match and the solution lifting
// must map the source solutions bijectively onto the target solutions.
bool check_parsimonious(const ReductionDef& red, const Instance& source,
                        Budget& budget,
                        std::vector<Witness>* witnesses = nullptr);

// Builds the partition certificate for one application.  Throws
// SspError(no_embedding) when the reduction registers no universe embedding.
PartitionCertificate classify_partition(const ReductionDef& red,
                                        const Instance& source,
                                        Budget& budget);

// Certificate soundness: re-derives every target solution from its
// embedded-block restriction via `always` and the link map, and re-verifies
// each reconstruction against the target instance.  Returns false when any
// solution fails to reconstruct (including ambiguous link-map keys).
bool certificate_sound(const ReductionDef& red, const Instance& source,
                       const PartitionCertificate& cert, Budget& budget);

// Runs every check on one instance and aggregates the outcome, comparing the
// observed properties against the registry claims.
VerificationReport full_report(const ReductionDef& red, const Instance& source,
                               Budget& budget);

enum class Property { ssp, spr, partition };

// Outcome of a counterexample search: the first failing report if any trial
// refuted the property, plus how many trials ran and how many were skipped
// (budget exhaustion or generator failure; per-trial, never fatal).
struct SearchOutcome {
  std::optional<VerificationReport> counterexample;
  std::size_t trials_run = 0;
  std::size_t trials_skipped = 0;
  std::vector<std::string> skip_reasons;
};

// Seeded randomized falsification.  Trial i >= 1 checks the property on
// generate_instance(red.source, params, seed + i); reductions whose registry
// entry already disclaims the property get a canonical known-failing shape as
// trial 0, so registered refutations are found immediately.  Deterministic
// for fixed arguments.
SearchOutcome search_counterexample(
    const ReductionDef& red, Property property,
    const std::map<std::string, long long>& params, std::size_t trials,
    std::uint64_t seed, std::uint64_t per_trial_budget = kDefaultBudget);

// Stable-order JSON rendering.  Wall-clock timing is excluded unless
// requested so that default output is byte-stable across runs.
nlohmann::ordered_json serialize_report(const VerificationReport& report,
                                        bool include_timing = false);

}  // namespace sspforge
