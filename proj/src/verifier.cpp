// Property certification: per-instance checks (subset-search, parsimony,
// partition certificate with soundness replay), aggregate reports, and the
// seeded counterexample search.
#include "sspforge/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "sspforge/formats.hpp"
#include "verifier_internal.hpp"

namespace sspforge {

namespace internal {

void add_witness(std::vector<Witness>* ws, const std::string& property,
                 std::string detail, std::vector<std::string> elements) {
  if (!ws) return;
  std::size_t have = 0;
  for (const auto& w : *ws)
    if (w.property == property) ++have;
  if (have >= 3) return;  // cap witnesses per failed property
  ws->push_back({property, std::move(detail), std::move(elements)});
}

std::vector<std::string> names_of(const Solution& s,
                                  const std::vector<std::string>& universe) {
  std::vector<std::string> out;
  for (auto i : s.indices()) out.push_back(universe[i]);
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string acc;
  for (const auto& n : names) {
    if (!acc.empty()) acc += ",";
    acc += n;
  }
  return acc;
}

bool family_ssp(const std::string& label, bool has_embedding,
                const std::vector<std::uint32_t>& embed,
                const SolutionSet& src_sols, const SolutionSet& tgt_sols,
                const std::vector<std::string>& tgt_universe,
                std::vector<Witness>* witnesses) {
  if (!has_embedding) {
    add_witness(witnesses, "ssp",
                label +
                    " registers no universe embedding, so the subset-search "
                    "property cannot hold",
                {});
    return false;
  }
  std::size_t width = tgt_universe.size();
  Solution img(width);
  for (auto i : embed) img.set(i);

  SolutionSet embedded;
  for (const auto& s : src_sols.items) {
    Solution t(width);
    for (auto i : s.indices()) t.set(embed[i]);
    embedded.insert(std::move(t));
  }
  SolutionSet restricted;
  for (const auto& s : tgt_sols.items) restricted.insert(s.intersect(img));

  if (solution_equal_sets(embedded, restricted)) return true;

  for (const auto& s : restricted.items)
    if (!embedded.contains(s))
      add_witness(witnesses, "ssp",
                  "a target solution restricts to an element set that no "
                  "embedded source solution equals",
                  names_of(s, tgt_universe));
  for (const auto& s : embedded.items)
    if (!restricted.contains(s))
      add_witness(witnesses, "ssp",
                  "an embedded source solution is not the restriction of any "
                  "target solution",
                  names_of(s, tgt_universe));
  return false;
}

bool family_parsimony(const LiftFn& lift, const SolutionSet& src_sols,
                      const SolutionSet& tgt_sols,
                      const std::vector<std::string>& src_universe,
                      const std::vector<std::string>& tgt_universe,
                      std::vector<Witness>* witnesses) {
  bool ok = true;
  if (src_sols.size() != tgt_sols.size()) {
    add_witness(witnesses, "parsimony",
                "solution counts differ: " + std::to_string(src_sols.size()) +
                    " source vs " + std::to_string(tgt_sols.size()) +
                    " target",
                {});
    ok = false;
  }
  SolutionSet lifted;
  for (const auto& s : src_sols.items) {
    Solution t = lift(s);
    if (!tgt_sols.contains(t)) {
      add_witness(witnesses, "parsimony",
                  "the lift of the source solution {" +
                      join_names(names_of(s, src_universe)) +
                      "} is not a target solution",
                  names_of(t, tgt_universe));
      ok = false;
      continue;
    }
    if (lifted.contains(t)) {
      add_witness(witnesses, "parsimony",
                  "two source solutions lift to the same target solution",
                  names_of(t, tgt_universe));
      ok = false;
    }
    lifted.insert(std::move(t));
  }
  for (const auto& t : tgt_sols.items)
    if (!lifted.contains(t)) {
      add_witness(witnesses, "parsimony",
                  "a target solution is not the lift of any source solution",
                  names_of(t, tgt_universe));
      ok = false;
    }
  return ok;
}

PartitionCertificate family_partition(const std::vector<std::uint32_t>& embed,
                                      const SolutionSet& tgt_sols,
                                      std::size_t width) {
  PartitionCertificate c;
  c.embedded = Solution(width);
  for (auto i : embed) c.embedded.set(i);
  Solution full(width);
  for (std::size_t i = 0; i < width; ++i) full.set(i);

  if (tgt_sols.items.empty()) {
    c.always = Solution(width);
    c.linked = Solution(width);
    c.never = full.subtract(c.embedded);
    c.vacuous = true;
    c.valid = true;
    return c;
  }

  Solution inter = tgt_sols.items.front();
  Solution uni = tgt_sols.items.front();
  for (const auto& s : tgt_sols.items) {
    inter = inter.intersect(s);
    uni = uni.unite(s);
  }
  c.always = inter.subtract(c.embedded);
  c.never = full.subtract(uni).subtract(c.embedded);
  c.linked = full.subtract(c.embedded).subtract(c.always).subtract(c.never);

  for (const auto& s : tgt_sols.items)
    c.link_map.emplace_back(s.intersect(c.embedded), s.intersect(c.linked));
  std::sort(c.link_map.begin(), c.link_map.end());
  c.valid = true;
  for (std::size_t i = 1; i < c.link_map.size(); ++i)
    if (c.link_map[i].first == c.link_map[i - 1].first) c.valid = false;
  return c;
}

void partition_witnesses(const PartitionCertificate& cert,
                         const std::vector<std::string>& tgt_universe,
                         std::vector<Witness>* witnesses) {
  for (std::size_t i = 1; i < cert.link_map.size(); ++i) {
    const auto& prev = cert.link_map[i - 1];
    const auto& cur = cert.link_map[i];
    if (cur.first == prev.first) {
      Solution diff = cur.second.subtract(prev.second)
                          .unite(prev.second.subtract(cur.second));
      add_witness(witnesses, "partition",
                  "two target solutions share the same embedded-block "
                  "restriction but differ in the linked block",
                  names_of(diff, tgt_universe));
    }
  }
}

}  // namespace internal

namespace {

using internal::add_witness;

// Canonical instances on which a disclaimed property observably fails; used
// as trial 0 of the counterexample search so registered refutations are
// found immediately.
std::optional<Instance> known_failing_shape(const ReductionDef& red) {
  std::string id(red.id);
  if (id == "sat_to_tsat_naive") {
    CnfData d;
    d.vars = {"x1", "x2", "x3", "x4"};
    d.clauses = {{1, 2, 3, 4}};
    return Instance{ProblemId::sat, d};
  }
  if (id == "esat_to_mis" || id == "esat_to_mvc") {
    CnfData d;
    d.vars = {"x1", "x2", "x3"};
    d.clauses = {{1, 2, 3}};
    return Instance{ProblemId::esat, d};
  }
  if (id == "vc_to_ds_demo") {
    GraphKData d;
    d.vertices = {"a", "b"};
    d.edges = {{0, 1}};
    d.k = 2;
    return Instance{ProblemId::vc, d};
  }
  return std::nullopt;
}

}  // namespace

bool check_ssp(const ReductionDef& red, const Instance& source, Budget& budget,
               std::vector<Witness>* witnesses) {
  Applied ap = apply_reduction(red, source);
  SolutionSet src = enumerate_solutions(source, budget);
  SolutionSet tgt = enumerate_solutions(ap.target, budget);
  return internal::family_ssp(std::string(red.id), ap.has_embedding, ap.embed,
                              src, tgt, canonical_universe(ap.target),
                              witnesses);
}

bool check_parsimonious(const ReductionDef& red, const Instance& source,
                        Budget& budget, std::vector<Witness>* witnesses) {
  Applied ap = apply_reduction(red, source);
  SolutionSet src = enumerate_solutions(source, budget);
  SolutionSet tgt = enumerate_solutions(ap.target, budget);
  auto lift = [&](const Solution& s) {
    return lift_solution(red, source, ap, s);
  };
  return internal::family_parsimony(lift, src, tgt,
                                    canonical_universe(source),
                                    canonical_universe(ap.target), witnesses);
}

PartitionCertificate classify_partition(const ReductionDef& red,
                                        const Instance& source,
                                        Budget& budget) {
  Applied ap = apply_reduction(red, source);
  if (!ap.has_embedding)
    throw SspError(ErrorCode::no_embedding,
                   std::string(red.id) + " registers no universe embedding");
  SolutionSet tgt = enumerate_solutions(ap.target, budget);
  return internal::family_partition(ap.embed, tgt, universe_size(ap.target));
}

bool certificate_sound(const ReductionDef& red, const Instance& source,
                       const PartitionCertificate& cert, Budget& budget) {
  Applied ap = apply_reduction(red, source);
  SolutionSet tgt = enumerate_solutions(ap.target, budget);
  if (tgt.items.empty()) return cert.vacuous && cert.link_map.empty();
  if (tgt.size() != cert.link_map.size()) return false;
  for (const auto& s : tgt.items) {
    Solution rep = s.intersect(cert.embedded);
    auto it = std::lower_bound(
        cert.link_map.begin(), cert.link_map.end(), rep,
        [](const std::pair<Solution, Solution>& e, const Solution& key) {
          return e.first < key;
        });
    if (it == cert.link_map.end() || !(it->first == rep)) return false;
    Solution reconstructed = rep.unite(cert.always).unite(it->second);
    if (!(reconstructed == s)) return false;
    if (!verify_solution(ap.target, reconstructed)) return false;
  }
  return true;
}

VerificationReport full_report(const ReductionDef& red, const Instance& source,
                               Budget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t used0 = budget.used();

  VerificationReport r;
  r.reduction_id = std::string(red.id);
  r.fingerprint = fingerprint_instance(source);
  r.claimed_ssp = red.claims.ssp;
  r.claimed_spr = red.claims.spr;

  Applied ap = apply_reduction(red, source);
  std::vector<std::string> src_universe = canonical_universe(source);
  r.target_universe = canonical_universe(ap.target);
  SolutionSet src = enumerate_solutions(source, budget);
  SolutionSet tgt = enumerate_solutions(ap.target, budget);
  r.source_count = src.size();
  r.target_count = tgt.size();

  r.ssp_holds = internal::family_ssp(r.reduction_id, ap.has_embedding,
                                     ap.embed, src, tgt, r.target_universe,
                                     &r.witnesses);
  auto lift = [&](const Solution& s) {
    return lift_solution(red, source, ap, s);
  };
  r.spr_holds = internal::family_parsimony(lift, src, tgt, src_universe,
                                           r.target_universe, &r.witnesses);
  if (ap.has_embedding) {
    r.partition = internal::family_partition(ap.embed, tgt,
                                             r.target_universe.size());
    if (!r.partition.valid)
      internal::partition_witnesses(r.partition, r.target_universe,
                                    &r.witnesses);
  } else {
    add_witness(&r.witnesses, "partition",
                r.reduction_id + " registers no universe embedding", {});
  }

  // A claimed property must hold on every instance; a disclaimed one may
  // still hold on easy instances, so only claimed-but-failed contradicts.
  r.claims_matched = (!r.claimed_ssp || r.ssp_holds) &&
                     (!r.claimed_spr || r.spr_holds);
  r.nodes_used = budget.used() - used0;
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

SearchOutcome search_counterexample(
    const ReductionDef& red, Property property,
    const std::map<std::string, long long>& params, std::size_t trials,
    std::uint64_t seed, std::uint64_t per_trial_budget) {
  SearchOutcome out;
  bool claim = property == Property::ssp ? red.claims.ssp : red.claims.spr;
  for (std::size_t i = 0; i < trials; ++i) {
    std::optional<Instance> inst;
    std::string note;
    if (i == 0 && !claim) {
      if (auto shape = known_failing_shape(red)) {
        inst = std::move(*shape);
        note = "known failing shape";
      }
    }
    try {
      if (!inst) {
        std::uint64_t s = seed + i;
        inst = generate_instance(red.source, params, s);
        note = "seed " + std::to_string(s);
      }
      Budget b(per_trial_budget);
      VerificationReport rep = full_report(red, *inst, b);
      rep.note = note;
      ++out.trials_run;
      bool failed = property == Property::ssp   ? !rep.ssp_holds
                    : property == Property::spr ? !rep.spr_holds
                                                : !rep.partition.valid;
      if (failed) {
        out.counterexample = std::move(rep);
        break;
      }
    } catch (const SspError& e) {
      ++out.trials_run;
      ++out.trials_skipped;
      out.skip_reasons.push_back("trial " + std::to_string(i) + ": " +
                                 e.what());
    }
  }
  return out;
}

nlohmann::ordered_json serialize_report(const VerificationReport& report,
                                        bool include_timing) {
  nlohmann::ordered_json j;
  j["reduction"] = report.reduction_id;
  j["source_fingerprint"] = report.fingerprint;
  if (!report.note.empty()) j["note"] = report.note;
  j["claimed"]["ssp"] = report.claimed_ssp;
  j["claimed"]["spr"] = report.claimed_spr;
  j["observed"]["ssp"] = report.ssp_holds;
  j["observed"]["spr"] = report.spr_holds;
  j["claims_matched"] = report.claims_matched;
  j["source_count"] = report.source_count;
  j["target_count"] = report.target_count;

  auto names = [&](const Solution& s) {
    return internal::names_of(s, report.target_universe);
  };
  nlohmann::ordered_json p;
  p["valid"] = report.partition.valid;
  p["vacuous"] = report.partition.vacuous;
  p["embedded"] = names(report.partition.embedded);
  p["always"] = names(report.partition.always);
  p["never"] = names(report.partition.never);
  p["linked"] = names(report.partition.linked);
  nlohmann::ordered_json lm = nlohmann::ordered_json::array();
  for (const auto& [rep, link] : report.partition.link_map) {
    nlohmann::ordered_json e;
    e["embedded"] = names(rep);
    e["linked"] = names(link);
    lm.push_back(std::move(e));
  }
  p["link_map"] = std::move(lm);
  j["partition"] = std::move(p);

  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) {
    nlohmann::ordered_json e;
    e["property"] = w.property;
    e["detail"] = w.detail;
    e["elements"] = w.elements;
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  j["nodes"] = report.nodes_used;
  if (include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

}  // namespace sspforge
