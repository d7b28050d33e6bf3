// Reduction registry: every supported problem transformation as an executable
// record holding the instance transformer, the per-instance universe
// embedding, canonical solution lifting and its inverse, and the property
// flags (subset-search preservation / strong parsimony) that the verifier
// certifies or refutes empirically.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sspforge/problems.hpp"

namespace sspforge {

struct ClaimFlags {
  bool ssp = false;
  bool spr = false;
};

// Result of running a reduction's instance transformer.  When the reduction
// registers a universe embedding, embed[i] is the target-universe index of
// source-universe element i (injective).
struct Applied {
  Instance target;
  bool has_embedding = false;
  std::vector<std::uint32_t> embed;
};

struct ReductionDef {
  std::string id;
  ProblemId source;
  ProblemId target;
  ClaimFlags claims;
  // Pedagogical negative example; excluded from chain search by default.
  bool demo = false;
  // Size bound checked by tests: |target universe| is at most
  // growth_c * max(1, encoding_size(source))^3 at tested instance sizes.
  std::uint32_t growth_c = 8;

  Applied (*apply)(const Instance& source);
  // Canonical lift of a source solution to a target solution.
  Solution (*lift)(const Instance& source, const Applied& ap,
                   const Solution& s);
  // Inverse of lift on valid target solutions; nullptr means "project the
  // target solution through the embedding image".
  Solution (*unlift)(const Instance& source, const Applied& ap,
                     const Solution& t);
};

// All registered reductions in stable registry order.
const std::vector<ReductionDef>& reduction_registry();

// Lookup by stable id ("esat_to_osat", ...); nullptr when unknown.
const ReductionDef* find_reduction(std::string_view id);

struct ReductionFilter {
  std::optional<ProblemId> source;
  std::optional<ProblemId> target;
  std::optional<bool> ssp;
  std::optional<bool> spr;
  bool include_demos = true;
};

std::vector<const ReductionDef*> list_reductions(
    const ReductionFilter& filter = {});

// Validates the source instance and kind, then runs the transformer.  The
// returned target instance always passes validate_instance.
Applied apply_reduction(const ReductionDef& red, const Instance& source);

// Name-level embedding of one source universe element.  Throws
// invalid_instance when the element is not in the source universe and
// no_embedding when the reduction registers no universe embedding
// (mis_to_mvc, cq_to_mvc, esat_to_cq).
std::string embed_element(const ReductionDef& red, const Instance& source,
                          const std::string& element);

// Bitmask image of a source solution under the embedding (no lifting).
Solution embed_solution(const ReductionDef& red, const Applied& ap,
                        const Solution& s);

// Canonical lift / inverse.  The (red, source, s) overloads recompute the
// transform; the Applied overloads reuse one.
Solution lift_solution(const ReductionDef& red, const Instance& source,
                       const Applied& ap, const Solution& s);
Solution unlift_solution(const ReductionDef& red, const Instance& source,
                         const Applied& ap, const Solution& t);
Solution lift_solution(const ReductionDef& red, const Instance& source,
                       const Solution& s);
Solution unlift_solution(const ReductionDef& red, const Instance& source,
                         const Solution& t);

// Size of the instance encoding used for the polynomial-growth check:
// universe size plus payload bulk (clause literals, edges, set members, ...).
std::size_t encoding_size(const Instance& inst);

}  // namespace sspforge
