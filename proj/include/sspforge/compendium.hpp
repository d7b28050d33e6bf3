// The reduction catalogue as a graph over problem kinds: chain composition
// with sequential application and lifting, end-to-end verification of
// composed chains, transitive path search between kinds, and catalogue export
// as DOT or JSON.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sspforge/reductions.hpp"
#include "sspforge/verifier.hpp"

namespace sspforge {

// A chain of registered reductions whose kinds line up end to end.  The
// claims are the per-flag AND over the steps: a composition preserves a
// property only when every step has it.
struct ComposedReduction {
  std::string id;                          // step ids joined with "+"
  std::vector<const ReductionDef*> steps;  // non-empty
  ClaimFlags claims;
  bool demo = false;  // true when any step is demonstration-only

  ProblemId source() const { return steps.front()->source; }
  ProblemId target() const { return steps.back()->target; }
};

// Throws SspError(kind_mismatch) when consecutive steps disagree on the
// intermediate problem kind, SspError(internal_error) on an empty chain.
ComposedReduction compose(const std::vector<const ReductionDef*>& steps);

// Convenience: looks the ids up in the registry first; throws
// SspError(parse_error) for unknown ids.
ComposedReduction compose_ids(const std::vector<std::string>& ids);

// One application of a chain: every intermediate instance is kept so that
// solutions can be lifted stage by stage, and the per-stage embeddings are
// composed into a single source-to-final index map when all stages have one.
struct ChainApplied {
  std::vector<Applied> stages;
  bool has_embedding = false;
  std::vector<std::uint32_t> embed;

  const Instance& target() const { return stages.back().target; }
};

ChainApplied apply_chain(const ComposedReduction& chain,
                         const Instance& source);

// Lifts a source solution through every stage in order.
Solution lift_chain(const ComposedReduction& chain, const Instance& source,
                    const ChainApplied& applied, const Solution& s);

// End-to-end certification of a chain on one instance, with the same checks
// and report shape as single-step verification; the report's reduction id is
// the chain id and the claims compared against are the composed claims.
VerificationReport verify_chain(const ComposedReduction& chain,
                                const Instance& source, Budget& budget);

// All cycle-free reduction chains from one problem kind to another, up to the
// given number of steps (a chain never visits a kind twice, so there are no
// self-loop paths).  Demonstration-only edges are excluded unless requested.
// Results are ordered by length, then lexicographically by step ids.
std::vector<std::vector<const ReductionDef*>> transitive_paths(
    ProblemId source, ProblemId target, std::size_t max_length = 6,
    bool include_demos = false);

// Catalogue exports.  Both list every problem kind as a node and every
// registered reduction as a directed edge, in fixed order, so the output is
// byte-stable.  DOT edge styles encode the claims: solid for subset-search
// plus strong parsimony, dotted for subset-search only, dashed for strong
// parsimony only.
std::string export_graph_dot(bool include_demos = true);
nlohmann::ordered_json export_graph_json(bool include_demos = true);

}  // namespace sspforge
