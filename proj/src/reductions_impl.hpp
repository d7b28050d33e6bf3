// Internal declarations shared by the reduction translation units: one
// apply/lift/unlift triple per registry entry plus small gadget-construction
// helpers.  Not installed; include only from src/.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "sspforge/reductions.hpp"

namespace sspforge {
namespace red {

// ---------------------------------------------------------------------------
// Shared helpers

[[noreturn]] void fail_shape(const std::string& msg);
[[noreturn]] void fail_internal(const std::string& msg);

// Hands out names that are unique within one target name space.  Base names
// derived from gadget stems may collide with source-derived names; collisions
// are resolved deterministically by appending apostrophes.
class NameAllocator {
 public:
  // Pre-claims existing names (e.g. copied source vertex names).
  void claim(const std::string& name) { used_.insert(name); }
  std::string fresh(std::string base) {
    while (!used_.insert(base).second) base += '\'';
    return base;
  }

 private:
  std::unordered_set<std::string> used_;
};

// CNF accessors: literal `lit` is a signed 1-based variable index; the
// canonical CNF universe interleaves positive/negative literals per variable.
inline std::size_t lit_universe_index(int lit) {
  std::size_t var = static_cast<std::size_t>(lit > 0 ? lit : -lit) - 1;
  return 2 * var + (lit > 0 ? 0 : 1);
}
inline bool lit_true_in(const Solution& assignment, int lit) {
  return assignment.test(lit_universe_index(lit));
}

// Identity embedding over the first n target universe slots.
std::vector<std::uint32_t> identity_embed(std::size_t n);

// Lexicographically ordered complement edge list of an undirected graph.
std::vector<std::array<int, 2>> complement_edges(
    std::size_t nv, const std::vector<std::array<int, 2>>& edges);

// ---------------------------------------------------------------------------
// Per-reduction entry points (registry order).

Applied sat_to_tsat_naive_apply(const Instance&);
Solution sat_to_tsat_naive_lift(const Instance&, const Applied&,
                                const Solution&);
Applied sat_to_tsat_apply(const Instance&);
Solution sat_to_tsat_lift(const Instance&, const Applied&, const Solution&);
Applied tsat_to_esat_apply(const Instance&);
Solution tsat_to_esat_lift(const Instance&, const Applied&, const Solution&);
Applied esat_to_osat_apply(const Instance&);
Solution esat_to_osat_lift(const Instance&, const Applied&, const Solution&);

Applied esat_to_mis_apply(const Instance&);
Solution esat_to_mis_lift(const Instance&, const Applied&, const Solution&);
Applied esat_to_mvc_apply(const Instance&);
Solution esat_to_mvc_lift(const Instance&, const Applied&, const Solution&);
Applied esat_to_mds_apply(const Instance&);
Solution esat_to_mds_lift(const Instance&, const Applied&, const Solution&);
Applied esat_to_cq_apply(const Instance&);
Solution esat_to_cq_lift(const Instance&, const Applied&, const Solution&);
Solution esat_to_cq_unlift(const Instance&, const Applied&, const Solution&);
Applied esat_to_ss_apply(const Instance&);
Solution esat_to_ss_lift(const Instance&, const Applied&, const Solution&);

Applied esat_to_dhp_apply(const Instance&);
Solution esat_to_dhp_lift(const Instance&, const Applied&, const Solution&);
Applied esat_to_dhc_apply(const Instance&);
Solution esat_to_dhc_lift(const Instance&, const Applied&, const Solution&);

Applied osat_to_stt_apply(const Instance&);
Solution osat_to_stt_lift(const Instance&, const Applied&, const Solution&);
Applied osat_to_odm_apply(const Instance&);
Solution osat_to_odm_lift(const Instance&, const Applied&, const Solution&);
Applied odm_to_dm_apply(const Instance&);
Solution odm_to_dm_lift(const Instance&, const Applied&, const Solution&);

Applied ss_to_ks_apply(const Instance&);
Solution ss_to_ks_lift(const Instance&, const Applied&, const Solution&);
Applied ss_to_p_apply(const Instance&);
Solution ss_to_p_lift(const Instance&, const Applied&, const Solution&);
Applied p_to_tms_apply(const Instance&);
Solution p_to_tms_lift(const Instance&, const Applied&, const Solution&);

Applied mvc_to_mds_apply(const Instance&);
Solution mvc_to_mds_lift(const Instance&, const Applied&, const Solution&);
Applied mvc_to_sc_apply(const Instance&);
Solution mvc_to_sc_lift(const Instance&, const Applied&, const Solution&);
Applied mvc_to_hs_apply(const Instance&);
Solution mvc_to_hs_lift(const Instance&, const Applied&, const Solution&);
Applied mvc_to_fvs_apply(const Instance&);
Solution mvc_to_fvs_lift(const Instance&, const Applied&, const Solution&);
Applied mvc_to_fas_apply(const Instance&);
Solution mvc_to_fas_lift(const Instance&, const Applied&, const Solution&);
Applied mvc_to_ufl_apply(const Instance&);
Solution mvc_to_ufl_lift(const Instance&, const Applied&, const Solution&);
Applied mvc_to_pcen_apply(const Instance&);
Solution mvc_to_pcen_lift(const Instance&, const Applied&, const Solution&);
Applied mvc_to_pmed_apply(const Instance&);
Solution mvc_to_pmed_lift(const Instance&, const Applied&, const Solution&);
Applied mvc_to_vcv_apply(const Instance&);
Solution mvc_to_vcv_lift(const Instance&, const Applied&, const Solution&);
Applied vc_to_ds_demo_apply(const Instance&);
Solution vc_to_ds_demo_lift(const Instance&, const Applied&, const Solution&);

Applied mis_to_mvc_apply(const Instance&);
Solution mis_to_mvc_lift(const Instance&, const Applied&, const Solution&);
Solution mis_to_mvc_unlift(const Instance&, const Applied&, const Solution&);
Applied mis_to_cq_apply(const Instance&);
Solution mis_to_cq_lift(const Instance&, const Applied&, const Solution&);
Applied mis_to_sp_apply(const Instance&);
Solution mis_to_sp_lift(const Instance&, const Applied&, const Solution&);
Applied sp_to_mis_apply(const Instance&);
Solution sp_to_mis_lift(const Instance&, const Applied&, const Solution&);
Applied cq_to_mis_apply(const Instance&);
Solution cq_to_mis_lift(const Instance&, const Applied&, const Solution&);
Applied cq_to_mvc_apply(const Instance&);
Solution cq_to_mvc_lift(const Instance&, const Applied&, const Solution&);
Solution cq_to_mvc_unlift(const Instance&, const Applied&, const Solution&);

Applied dhc_to_uhc_apply(const Instance&);
Solution dhc_to_uhc_lift(const Instance&, const Applied&, const Solution&);
Applied dhp_to_uhp_apply(const Instance&);
Solution dhp_to_uhp_lift(const Instance&, const Applied&, const Solution&);
Applied uhc_to_tsp_apply(const Instance&);
Solution uhc_to_tsp_lift(const Instance&, const Applied&, const Solution&);
Applied uhp_to_uhc_apply(const Instance&);
Solution uhp_to_uhc_lift(const Instance&, const Applied&, const Solution&);
Applied uhp_to_tsp_apply(const Instance&);
Solution uhp_to_tsp_lift(const Instance&, const Applied&, const Solution&);

}  // namespace red
}  // namespace sspforge
