// Reduction registry table and the public reduction operations: lookup,
// filtered listing, checked application, universe embedding, and canonical
// solution lifting.
#include <algorithm>
#include <set>

#include "reductions_impl.hpp"

namespace sspforge {

namespace red {

void fail_shape(const std::string& msg) {
  throw SspError(ErrorCode::unsupported_shape, msg);
}

void fail_internal(const std::string& msg) {
  throw SspError(ErrorCode::internal_error, msg);
}

std::vector<std::uint32_t> identity_embed(std::size_t n) {
  std::vector<std::uint32_t> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint32_t>(i);
  return e;
}

std::vector<std::array<int, 2>> complement_edges(
    std::size_t nv, const std::vector<std::array<int, 2>>& edges) {
  std::set<std::pair<int, int>> have;
  for (const auto& e : edges)
    have.emplace(std::min(e[0], e[1]), std::max(e[0], e[1]));
  std::vector<std::array<int, 2>> out;
  for (int a = 0; a + 1 < static_cast<int>(nv); ++a)
    for (int b = a + 1; b < static_cast<int>(nv); ++b)
      if (!have.count({a, b})) out.push_back({a, b});
  return out;
}

}  // namespace red

namespace {

using namespace red;

std::vector<ReductionDef> make_registry() {
  auto entry = [](const char* id, ProblemId s, ProblemId t, bool ssp, bool spr,
                  Applied (*apply)(const Instance&),
                  Solution (*lift)(const Instance&, const Applied&,
                                   const Solution&),
                  Solution (*unlift)(const Instance&, const Applied&,
                                     const Solution&) = nullptr,
                  bool demo = false) {
    ReductionDef d;
    d.id = id;
    d.source = s;
    d.target = t;
    d.claims = {ssp, spr};
    d.demo = demo;
    d.apply = apply;
    d.lift = lift;
    d.unlift = unlift;
    return d;
  };
  using P = ProblemId;
  std::vector<ReductionDef> r;
  r.push_back(entry("sat_to_tsat_naive", P::sat, P::tsat, true, false,
                    sat_to_tsat_naive_apply, sat_to_tsat_naive_lift));
  r.push_back(entry("sat_to_tsat", P::sat, P::tsat, true, true,
                    sat_to_tsat_apply, sat_to_tsat_lift));
  r.push_back(entry("tsat_to_esat", P::tsat, P::esat, true, true,
                    tsat_to_esat_apply, tsat_to_esat_lift));
  r.push_back(entry("esat_to_osat", P::esat, P::osat, true, true,
                    esat_to_osat_apply, esat_to_osat_lift));
  r.push_back(entry("esat_to_mis", P::esat, P::mis, true, false,
                    esat_to_mis_apply, esat_to_mis_lift));
  r.push_back(entry("esat_to_mvc", P::esat, P::mvc, true, false,
                    esat_to_mvc_apply, esat_to_mvc_lift));
  r.push_back(entry("esat_to_mds", P::esat, P::mds, true, true,
                    esat_to_mds_apply, esat_to_mds_lift));
  r.push_back(entry("esat_to_cq", P::esat, P::cq, false, true,
                    esat_to_cq_apply, esat_to_cq_lift, esat_to_cq_unlift));
  r.push_back(entry("esat_to_ss", P::esat, P::ss, true, true,
                    esat_to_ss_apply, esat_to_ss_lift));
  r.push_back(entry("esat_to_dhp", P::esat, P::dhp, true, true,
                    esat_to_dhp_apply, esat_to_dhp_lift));
  r.push_back(entry("esat_to_dhc", P::esat, P::dhc, true, true,
                    esat_to_dhc_apply, esat_to_dhc_lift));
  r.push_back(entry("osat_to_stt", P::osat, P::stt, true, true,
                    osat_to_stt_apply, osat_to_stt_lift));
  r.push_back(entry("osat_to_mvc", P::osat, P::mvc, true, true,
                    esat_to_mvc_apply, esat_to_mvc_lift));
  r.push_back(entry("osat_to_mis", P::osat, P::mis, true, true,
                    esat_to_mis_apply, esat_to_mis_lift));
  r.push_back(entry("osat_to_odm", P::osat, P::odm, true, true,
                    osat_to_odm_apply, osat_to_odm_lift));
  r.push_back(entry("odm_to_dm", P::odm, P::dm, true, true, odm_to_dm_apply,
                    odm_to_dm_lift));
  r.push_back(entry("ss_to_ks", P::ss, P::ks, true, true, ss_to_ks_apply,
                    ss_to_ks_lift));
  r.push_back(entry("ss_to_p", P::ss, P::p, true, true, ss_to_p_apply,
                    ss_to_p_lift));
  r.push_back(entry("p_to_tms", P::p, P::tms, true, true, p_to_tms_apply,
                    p_to_tms_lift));
  r.push_back(entry("mvc_to_mds", P::mvc, P::mds, true, true,
                    mvc_to_mds_apply, mvc_to_mds_lift));
  r.push_back(entry("mvc_to_sc", P::mvc, P::sc, true, true, mvc_to_sc_apply,
                    mvc_to_sc_lift));
  r.push_back(entry("mvc_to_hs", P::mvc, P::hs, true, true, mvc_to_hs_apply,
                    mvc_to_hs_lift));
  r.push_back(entry("mvc_to_fvs", P::mvc, P::fvs, true, true,
                    mvc_to_fvs_apply, mvc_to_fvs_lift));
  r.push_back(entry("mvc_to_fas", P::mvc, P::fas, true, true,
                    mvc_to_fas_apply, mvc_to_fas_lift));
  r.push_back(entry("mvc_to_ufl", P::mvc, P::ufl, true, true,
                    mvc_to_ufl_apply, mvc_to_ufl_lift));
  r.push_back(entry("mvc_to_pcen", P::mvc, P::pcen, true, true,
                    mvc_to_pcen_apply, mvc_to_pcen_lift));
  r.push_back(entry("mvc_to_pmed", P::mvc, P::pmed, true, true,
                    mvc_to_pmed_apply, mvc_to_pmed_lift));
  r.push_back(entry("mvc_to_vcv", P::mvc, P::vcv, true, true,
                    mvc_to_vcv_apply, mvc_to_vcv_lift));
  r.push_back(entry("mis_to_mvc", P::mis, P::mvc, false, true,
                    mis_to_mvc_apply, mis_to_mvc_lift, mis_to_mvc_unlift));
  r.push_back(entry("mis_to_cq", P::mis, P::cq, true, true, mis_to_cq_apply,
                    mis_to_cq_lift));
  r.push_back(entry("mis_to_sp", P::mis, P::sp, true, true, mis_to_sp_apply,
                    mis_to_sp_lift));
  r.push_back(entry("sp_to_mis", P::sp, P::mis, true, true, sp_to_mis_apply,
                    sp_to_mis_lift));
  r.push_back(entry("cq_to_mis", P::cq, P::mis, true, true, cq_to_mis_apply,
                    cq_to_mis_lift));
  r.push_back(entry("cq_to_mvc", P::cq, P::mvc, false, true, cq_to_mvc_apply,
                    cq_to_mvc_lift, cq_to_mvc_unlift));
  r.push_back(entry("dhc_to_uhc", P::dhc, P::uhc, true, true,
                    dhc_to_uhc_apply, dhc_to_uhc_lift));
  r.push_back(entry("dhp_to_uhp", P::dhp, P::uhp, true, true,
                    dhp_to_uhp_apply, dhp_to_uhp_lift));
  r.push_back(entry("uhc_to_tsp", P::uhc, P::tsp, true, true,
                    uhc_to_tsp_apply, uhc_to_tsp_lift));
  r.push_back(entry("uhp_to_uhc", P::uhp, P::uhc, true, true,
                    uhp_to_uhc_apply, uhp_to_uhc_lift));
  r.push_back(entry("uhp_to_tsp", P::uhp, P::tsp, true, true,
                    uhp_to_tsp_apply, uhp_to_tsp_lift));
  r.push_back(entry("vc_to_ds_demo", P::vc, P::ds, true, false,
                    vc_to_ds_demo_apply, vc_to_ds_demo_lift, nullptr, true));
  return r;
}

}  // namespace

const std::vector<ReductionDef>& reduction_registry() {
  static const std::vector<ReductionDef> registry = make_registry();
  return registry;
}

const ReductionDef* find_reduction(std::string_view id) {
  for (const auto& r : reduction_registry())
    if (r.id == id) return &r;
  return nullptr;
}

std::vector<const ReductionDef*> list_reductions(const ReductionFilter& f) {
  std::vector<const ReductionDef*> out;
  for (const auto& r : reduction_registry()) {
    if (f.source && r.source != *f.source) continue;
    if (f.target && r.target != *f.target) continue;
    if (f.ssp && r.claims.ssp != *f.ssp) continue;
    if (f.spr && r.claims.spr != *f.spr) continue;
    if (!f.include_demos && r.demo) continue;
    out.push_back(&r);
  }
  return out;
}

Applied apply_reduction(const ReductionDef& red, const Instance& source) {
  if (source.kind != red.source)
    throw SspError(ErrorCode::kind_mismatch,
                   red.id + " expects a " +
                       std::string(problem_name(red.source)) +
                       " source, got " +
                       std::string(problem_name(source.kind)));
  validate_instance(source);
  Applied ap = red.apply(source);
  if (ap.target.kind != red.target)
    red::fail_internal(red.id + " produced the wrong target kind");
  validate_instance(ap.target);
  if (ap.has_embedding) {
    const std::size_t us = universe_size(source);
    const std::size_t ut = universe_size(ap.target);
    if (ap.embed.size() != us)
      red::fail_internal(red.id + " embedding has the wrong arity");
    std::vector<bool> seen(ut, false);
    for (auto e : ap.embed) {
      if (e >= ut || seen[e])
        red::fail_internal(red.id + " embedding is not injective");
      seen[e] = true;
    }
  } else if (!ap.embed.empty()) {
    red::fail_internal(red.id + " embedding table without embedding flag");
  }
  return ap;
}

std::string embed_element(const ReductionDef& red, const Instance& source,
                          const std::string& element) {
  auto u = canonical_universe(source);
  auto it = std::find(u.begin(), u.end(), element);
  if (it == u.end())
    throw SspError(ErrorCode::invalid_instance,
                   "element '" + element + "' is not in the source universe");
  Applied ap = apply_reduction(red, source);
  if (!ap.has_embedding)
    throw SspError(ErrorCode::no_embedding,
                   red.id + " registers no universe embedding");
  auto tu = canonical_universe(ap.target);
  return tu[ap.embed[static_cast<std::size_t>(it - u.begin())]];
}

Solution embed_solution(const ReductionDef& red, const Applied& ap,
                        const Solution& s) {
  if (!ap.has_embedding)
    throw SspError(ErrorCode::no_embedding,
                   red.id + " registers no universe embedding");
  if (s.universe_size() != ap.embed.size())
    red::fail_internal("solution width does not match the source universe");
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < ap.embed.size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  return out;
}

Solution lift_solution(const ReductionDef& red, const Instance& source,
                       const Applied& ap, const Solution& s) {
  if (s.universe_size() != universe_size(source))
    red::fail_internal("solution width does not match the source universe");
  return red.lift(source, ap, s);
}

Solution unlift_solution(const ReductionDef& red, const Instance& source,
                         const Applied& ap, const Solution& t) {
  if (t.universe_size() != universe_size(ap.target))
    red::fail_internal("solution width does not match the target universe");
  if (red.unlift) return red.unlift(source, ap, t);
  if (!ap.has_embedding)
    throw SspError(ErrorCode::no_embedding,
                   red.id + " has neither an inverse lift nor an embedding");
  Solution out(universe_size(source));
  for (std::size_t i = 0; i < ap.embed.size(); ++i)
    if (t.test(ap.embed[i])) out.set(i);
  return out;
}

Solution lift_solution(const ReductionDef& red, const Instance& source,
                       const Solution& s) {
  return lift_solution(red, source, apply_reduction(red, source), s);
}

Solution unlift_solution(const ReductionDef& red, const Instance& source,
                         const Solution& t) {
  return unlift_solution(red, source, apply_reduction(red, source), t);
}

std::size_t encoding_size(const Instance& inst) {
  std::size_t n = universe_size(inst);
  switch (inst.kind) {
    case ProblemId::sat:
    case ProblemId::tsat:
    case ProblemId::esat:
    case ProblemId::osat: {
      const auto& d = std::get<CnfData>(inst.data);
      for (const auto& c : d.clauses) n += c.size();
      break;
    }
    case ProblemId::vc:
    case ProblemId::mvc:
    case ProblemId::ds:
    case ProblemId::mds:
    case ProblemId::mis:
    case ProblemId::cq:
      n += 2 * std::get<GraphKData>(inst.data).edges.size();
      break;
    case ProblemId::vcv:
      n += 2 * std::get<VcvData>(inst.data).edges.size();
      break;
    case ProblemId::fvs:
    case ProblemId::fas: {
      const auto& d = std::get<DigraphKData>(inst.data);
      n += d.vertices.size() + 2 * d.arcs.size();
      break;
    }
    case ProblemId::sp:
    case ProblemId::sc:
    case ProblemId::hs: {
      const auto& d = std::get<SetSystemData>(inst.data);
      n += d.ground.size();
      for (const auto& s : d.sets) n += s.size() + 1;
      break;
    }
    case ProblemId::ufl: {
      const auto& d = std::get<UflData>(inst.data);
      n += d.clients.size() * d.facilities.size() + d.facilities.size();
      break;
    }
    case ProblemId::pcen:
    case ProblemId::pmed: {
      const auto& d = std::get<CenterData>(inst.data);
      n += d.clients.size() * d.facilities.size();
      break;
    }
    case ProblemId::dhp: {
      const auto& d = std::get<DhpData>(inst.data);
      n += d.vertices.size() + d.arcs.size();
      break;
    }
    case ProblemId::dhc: {
      const auto& d = std::get<DhcData>(inst.data);
      n += d.vertices.size() + d.arcs.size();
      break;
    }
    case ProblemId::uhp: {
      const auto& d = std::get<UhpData>(inst.data);
      n += d.vertices.size() + d.edges.size();
      break;
    }
    case ProblemId::uhc: {
      const auto& d = std::get<UhcData>(inst.data);
      n += d.vertices.size() + d.edges.size();
      break;
    }
    case ProblemId::tsp: {
      const auto& d = std::get<TspData>(inst.data);
      n += d.vertices.size() + d.edges.size();
      break;
    }
    case ProblemId::stt: {
      const auto& d = std::get<SttData>(inst.data);
      n += d.vertices.size() + d.edges.size() + d.terminals.size();
      break;
    }
    case ProblemId::ss: {
      const auto& d = std::get<SsData>(inst.data);
      for (const auto& x : d.numbers) n += 1 + (x > 0 ? msb(x) : 0);
      n += 1 + (d.target > 0 ? msb(d.target) : 0);
      break;
    }
    case ProblemId::ks: {
      const auto& d = std::get<KsData>(inst.data);
      for (const auto& x : d.prices) n += 1 + (x > 0 ? msb(x) : 0);
      for (const auto& x : d.weights) n += 1 + (x > 0 ? msb(x) : 0);
      break;
    }
    case ProblemId::p: {
      const auto& d = std::get<PartData>(inst.data);
      for (const auto& x : d.numbers) n += 1 + (x > 0 ? msb(x) : 0);
      break;
    }
    case ProblemId::tms: {
      const auto& d = std::get<TmsData>(inst.data);
      for (const auto& x : d.jobs) n += 1 + (x > 0 ? msb(x) : 0);
      break;
    }
    case ProblemId::odm: {
      const auto& d = std::get<OdmData>(inst.data);
      n += d.xs.size() + d.ys.size() + d.zs.size() + 3 * d.triples.size() +
           d.singletons.size();
      break;
    }
    case ProblemId::dm: {
      const auto& d = std::get<DmData>(inst.data);
      n += d.xs.size() + d.ys.size() + d.zs.size() + 3 * d.triples.size();
      break;
    }
  }
  return n;
}

}  // namespace sspforge
