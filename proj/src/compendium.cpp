// Chain composition, chain verification, transitive path search, and the
// DOT / JSON catalogue exports.
#include "sspforge/compendium.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "sspforge/formats.hpp"
#include "verifier_internal.hpp"

namespace sspforge {

ComposedReduction compose(const std::vector<const ReductionDef*>& steps) {
  if (steps.empty())
    throw SspError(ErrorCode::internal_error,
                   "a composition needs at least one step");
  ComposedReduction chain;
  chain.claims = {true, true};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ReductionDef* step = steps[i];
    if (i > 0 && steps[i - 1]->target != step->source)
      throw SspError(ErrorCode::kind_mismatch,
                     "cannot compose " + std::string(steps[i - 1]->id) +
                         " (target " +
                         std::string(problem_name(steps[i - 1]->target)) +
                         ") with " + std::string(step->id) + " (source " +
                         std::string(problem_name(step->source)) + ")");
    if (!chain.id.empty()) chain.id += "+";
    chain.id += std::string(step->id);
    chain.steps.push_back(step);
    chain.claims.ssp = chain.claims.ssp && step->claims.ssp;
    chain.claims.spr = chain.claims.spr && step->claims.spr;
    chain.demo = chain.demo || step->demo;
  }
  return chain;
}

ComposedReduction compose_ids(const std::vector<std::string>& ids) {
  std::vector<const ReductionDef*> steps;
  for (const auto& id : ids) {
    const ReductionDef* red = find_reduction(id);
    if (!red)
      throw SspError(ErrorCode::parse_error, "unknown reduction: " + id);
    steps.push_back(red);
  }
  return compose(steps);
}

ChainApplied apply_chain(const ComposedReduction& chain,
                         const Instance& source) {
  ChainApplied ca;
  const Instance* current = &source;
  for (const ReductionDef* step : chain.steps) {
    ca.stages.push_back(apply_reduction(*step, *current));
    current = &ca.stages.back().target;
  }
  ca.has_embedding = std::all_of(ca.stages.begin(), ca.stages.end(),
                                 [](const Applied& a) {
                                   return a.has_embedding;
                                 });
  if (ca.has_embedding) {
    ca.embed = ca.stages.front().embed;
    for (std::size_t i = 1; i < ca.stages.size(); ++i)
      for (auto& idx : ca.embed) idx = ca.stages[i].embed[idx];
  }
  return ca;
}

Solution lift_chain(const ComposedReduction& chain, const Instance& source,
                    const ChainApplied& applied, const Solution& s) {
  if (applied.stages.size() != chain.steps.size())
    throw SspError(ErrorCode::internal_error,
                   "chain application does not match the chain");
  Solution current = s;
  const Instance* inst = &source;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    current = lift_solution(*chain.steps[i], *inst, applied.stages[i],
                            current);
    inst = &applied.stages[i].target;
  }
  return current;
}

VerificationReport verify_chain(const ComposedReduction& chain,
                                const Instance& source, Budget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t used0 = budget.used();

  VerificationReport r;
  r.reduction_id = chain.id;
  r.fingerprint = fingerprint_instance(source);
  r.claimed_ssp = chain.claims.ssp;
  r.claimed_spr = chain.claims.spr;

  ChainApplied ca = apply_chain(chain, source);
  std::vector<std::string> src_universe = canonical_universe(source);
  r.target_universe = canonical_universe(ca.target());
  SolutionSet src = enumerate_solutions(source, budget);
  SolutionSet tgt = enumerate_solutions(ca.target(), budget);
  r.source_count = src.size();
  r.target_count = tgt.size();

  r.ssp_holds = internal::family_ssp(r.reduction_id, ca.has_embedding,
                                     ca.embed, src, tgt, r.target_universe,
                                     &r.witnesses);
  auto lift = [&](const Solution& s) {
    return lift_chain(chain, source, ca, s);
  };
  r.spr_holds = internal::family_parsimony(lift, src, tgt, src_universe,
                                           r.target_universe, &r.witnesses);
  if (ca.has_embedding) {
    r.partition = internal::family_partition(ca.embed, tgt,
                                             r.target_universe.size());
    if (!r.partition.valid)
      internal::partition_witnesses(r.partition, r.target_universe,
                                    &r.witnesses);
  } else {
    internal::add_witness(&r.witnesses, "partition",
                          r.reduction_id +
                              " registers no universe embedding",
                          {});
  }

  // As in single-step reports, only a claimed-but-failed property is a
  // contradiction; composed claims are conservative (AND over the steps).
  r.claims_matched = (!r.claimed_ssp || r.ssp_holds) &&
                     (!r.claimed_spr || r.spr_holds);
  r.nodes_used = budget.used() - used0;
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

namespace {

void path_dfs(ProblemId current, ProblemId target, std::size_t max_length,
              bool include_demos,
              const std::vector<const ReductionDef*>& edges,
              std::vector<bool>& visited,
              std::vector<const ReductionDef*>& path,
              std::vector<std::vector<const ReductionDef*>>& out) {
  if (!path.empty() && current == target) {
    out.push_back(path);
    return;  // extending past the target would revisit it later anyway
  }
  if (path.size() == max_length) return;
  for (const ReductionDef* red : edges) {
    if (red->source != current) continue;
    if (red->demo && !include_demos) continue;
    auto next = static_cast<std::size_t>(red->target);
    if (visited[next]) continue;
    visited[next] = true;
    path.push_back(red);
    path_dfs(red->target, target, max_length, include_demos, edges, visited,
             path, out);
    path.pop_back();
    visited[next] = false;
  }
}

}  // namespace

std::vector<std::vector<const ReductionDef*>> transitive_paths(
    ProblemId source, ProblemId target, std::size_t max_length,
    bool include_demos) {
  std::vector<std::vector<const ReductionDef*>> out;
  if (source == target) return out;  // cycle-free chains cannot return
  const auto& edges = reduction_registry();
  std::vector<const ReductionDef*> edge_ptrs;
  for (const auto& red : edges) edge_ptrs.push_back(&red);
  std::vector<bool> visited(kProblemCount, false);
  visited[static_cast<std::size_t>(source)] = true;
  std::vector<const ReductionDef*> path;
  path_dfs(source, target, max_length, include_demos, edge_ptrs, visited,
           path, out);
  std::sort(out.begin(), out.end(),
            [](const std::vector<const ReductionDef*>& a,
               const std::vector<const ReductionDef*>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i]->id != b[i]->id) return a[i]->id < b[i]->id;
              return false;
            });
  return out;
}

std::string export_graph_dot(bool include_demos) {
  std::string dot;
  dot += "digraph reductions {\n";
  dot += "  rankdir=LR;\n";
  for (ProblemId kind : all_problems())
    dot += "  \"" + std::string(problem_name(kind)) + "\";\n";
  for (const auto& red : reduction_registry()) {
    if (red.demo && !include_demos) continue;
    const char* style = red.claims.ssp && red.claims.spr ? "solid"
                        : red.claims.ssp               ? "dotted"
                                                       : "dashed";
    dot += "  \"" + std::string(problem_name(red.source)) + "\" -> \"" +
           std::string(problem_name(red.target)) + "\" [label=\"" +
           std::string(red.id) + "\", style=" + style + "];\n";
  }
  dot += "}\n";
  return dot;
}

nlohmann::ordered_json export_graph_json(bool include_demos) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (ProblemId kind : all_problems())
    nodes.push_back(std::string(problem_name(kind)));
  j["nodes"] = std::move(nodes);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& red : reduction_registry()) {
    if (red.demo && !include_demos) continue;
    nlohmann::ordered_json e;
    e["id"] = std::string(red.id);
    e["source"] = std::string(problem_name(red.source));
    e["target"] = std::string(problem_name(red.target));
    e["claims"]["ssp"] = red.claims.ssp;
    e["claims"]["spr"] = red.claims.spr;
    e["demo"] = red.demo;
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace sspforge
