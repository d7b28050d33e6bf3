// Family-level property checks shared by single-step and composed-chain
// verification: they operate on already-enumerated solution families plus an
// embedding index table and a lifting callable, so callers decide how those
// are produced.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sspforge/verifier.hpp"

namespace sspforge::internal {

using LiftFn = std::function<Solution(const Solution&)>;

void add_witness(std::vector<Witness>* ws, const std::string& property,
                 std::string detail, std::vector<std::string> elements);

std::vector<std::string> names_of(const Solution& s,
                                  const std::vector<std::string>& universe);

std::string join_names(const std::vector<std::string>& names);

// Subset-search check.  `label` names the reduction (or chain) in witness
// text; an empty `embed` table with has_embedding=false reports the missing
// embedding as the failure reason.
bool family_ssp(const std::string& label, bool has_embedding,
                const std::vector<std::uint32_t>& embed,
                const SolutionSet& src_sols, const SolutionSet& tgt_sols,
                const std::vector<std::string>& tgt_universe,
                std::vector<Witness>* witnesses);

// Strong-parsimony check via the supplied lifting.
bool family_parsimony(const LiftFn& lift, const SolutionSet& src_sols,
                      const SolutionSet& tgt_sols,
                      const std::vector<std::string>& src_universe,
                      const std::vector<std::string>& tgt_universe,
                      std::vector<Witness>* witnesses);

// Partition certificate from the embedding image and the target family.
PartitionCertificate family_partition(const std::vector<std::uint32_t>& embed,
                                      const SolutionSet& tgt_sols,
                                      std::size_t width);

// Appends ambiguity witnesses for an invalid certificate.
void partition_witnesses(const PartitionCertificate& cert,
                         const std::vector<std::string>& tgt_universe,
                         std::vector<Witness>* witnesses);

}  // namespace sspforge::internal
