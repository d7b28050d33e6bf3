// Problem catalog: payload types for the 31 supported problem kinds, instance
// validation, canonical universes, solution verification, exhaustive
// enumeration, cardinality optimization, and seeded instance generation.
//
// Solution semantics summary (universe in brackets):
//   sat/tsat/esat/osat  [literals]   total assignments satisfying every clause
//                                    (osat: exactly one true literal/clause)
//   vc, ds              [vertices]   covers / dominating sets of size <= k
//   mvc, mds, mis, cq   [vertices]   exact-size-k cover / dominating set /
//                                    independent set / clique
//   vcv                 [vertices]   exact-size-k covers containing a fixed
//                                    vertex
//   sp                  [sets]       exactly k pairwise disjoint sets
//   sc                  [sets]       covers of the ground set, size <= k
//                                    (or exactly k with the exact flag)
//   hs                  [ground]     hitting sets, size <= k (or exactly k)
//   fvs                 [vertices]   exact-size-k sets meeting all directed
//                                    cycles
//   fas                 [arcs]       exact-size-k arc sets meeting all cycles
//   ufl                 [facilities] open sets serving every client with
//                                    opening + connection cost <= k
//   pcen, pmed          [facilities] exactly p facilities with max / total
//                                    service distance <= k
//   dhp, uhp            [arcs/edges] Hamiltonian s-t paths
//   dhc, uhc            [arcs/edges] Hamiltonian cycles
//   tsp                 [edges]      Hamiltonian cycles of weight <= k
//   stt                 [edges]      trees spanning all terminals, weight <= k
//   ss                  [numbers]    subsets with sum exactly the target
//   ks                  [objects]    subsets with price >= P and weight <= W
//   p                   [numbers]    subsets containing the last number whose
//                                    sum is half the total
//   tms                 [jobs]       subsets containing the last job with both
//                                    machine loads <= T
//   odm                 [triples+singletons]  exact covers of X, Y, Z
//   dm                  [triples]    exact covers of X', Y', Z'
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sspforge/core.hpp"

namespace sspforge {

using BigInt = boost::multiprecision::cpp_int;

enum class ProblemId {
  sat, tsat, esat, osat,
  vc, mvc, ds, mds, mis, cq,
  sp, sc, hs,
  fvs, fas,
  ufl, pcen, pmed,
  vcv,
  dhp, dhc, uhp, uhc, tsp, stt,
  ss, ks, p, tms,
  odm, dm,
};

constexpr int kProblemCount = 31;

std::string_view problem_name(ProblemId id);
std::optional<ProblemId> problem_from_name(std::string_view name);
std::vector<ProblemId> all_problems();

// ---------------------------------------------------------------------------
// Payloads.  Vertices, variables, clients etc. are referenced by index into
// the corresponding name table; clause literals use signed 1-based variable
// indices (DIMACS convention).

struct CnfData {                     // sat, tsat, esat, osat
  std::vector<std::string> vars;
  std::vector<std::vector<int>> clauses;
};

struct GraphKData {                  // vc, mvc, ds, mds, mis, cq
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> edges;
  long long k = 0;
};

struct VcvData {                     // vcv: cover must contain fixed vertex
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> edges;
  long long k = 0;
  int fixed = 0;
};

struct DigraphKData {                // fvs (vertex set), fas (arc set)
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> arcs;
  long long k = 0;
};

struct SetSystemData {               // sp, sc (universe: sets), hs (ground)
  std::vector<std::string> ground;
  std::vector<std::vector<int>> sets;
  long long k = 0;
  bool exact = false;                // sc/hs: require |S| == k instead of <=
};

struct UflData {
  std::vector<std::string> clients;
  std::vector<std::string> facilities;
  std::vector<long long> open_cost;            // per facility
  std::vector<std::vector<long long>> service; // [client][facility]
  long long k = 0;
};

struct CenterData {                  // pcen (max), pmed (sum)
  std::vector<std::string> clients;
  std::vector<std::string> facilities;
  std::vector<std::vector<long long>> service;
  long long p = 0;
  long long k = 0;
};

struct DhpData {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> arcs;
  int s = 0, t = 0;
};

struct DhcData {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> arcs;
};

struct UhpData {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> edges;
  int s = 0, t = 0;
};

struct UhcData {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> edges;
};

struct TspData {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<long long> weights;    // parallel to edges
  long long k = 0;
};

struct SttData {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<long long> weights;
  std::vector<int> terminals;
  long long k = 0;
};

struct SsData {
  std::vector<BigInt> numbers;
  BigInt target;
};

struct KsData {
  std::vector<BigInt> prices;
  std::vector<BigInt> weights;
  BigInt min_price;
  BigInt max_weight;
};

struct PartData {
  std::vector<BigInt> numbers;
};

struct TmsData {
  std::vector<BigInt> jobs;
  BigInt bound;
};

struct OdmData {
  std::vector<std::string> xs, ys, zs;
  std::vector<std::array<int, 3>> triples;  // (x, y, z) indices
  std::vector<int> singletons;              // x indices with one-element cover
  // Advisory binding: phi[i] is the triple bound to singleton i (or -1).
  // Carried as instance metadata; not used by the verifier.
  std::vector<int> phi;
};

struct DmData {
  std::vector<std::string> xs, ys, zs;
  std::vector<std::array<int, 3>> triples;
};

using Payload =
    std::variant<CnfData, GraphKData, VcvData, DigraphKData, SetSystemData,
                 UflData, CenterData, DhpData, DhcData, UhpData, UhcData,
                 TspData, SttData, SsData, KsData, PartData, TmsData, OdmData,
                 DmData>;

struct Instance {
  ProblemId kind = ProblemId::sat;
  Payload data;
};

// ---------------------------------------------------------------------------
// Operations

// Throws invalid_instance when the payload violates the kind's structural
// rules (bad indices, duplicate names, clause arity, negative thresholds...).
void validate_instance(const Instance& inst);

// Canonical universe: element names in canonical order (bit i of a Solution
// corresponds to element i of this vector).  Stable across runs.
std::vector<std::string> canonical_universe(const Instance& inst);
std::size_t universe_size(const Instance& inst);

// True when `s` (over the instance's canonical universe) is a solution.
bool verify_solution(const Instance& inst, const Solution& s);

// Exhaustively enumerates all solutions using kind-specific pruned
// backtracking; `complete` is always true on normal return (budget exhaustion
// throws).  `limit` optionally stops after that many solutions are found, in
// which case `complete` is false unless the space was exhausted first.
SolutionSet enumerate_solutions(const Instance& inst, Budget& budget,
                                std::size_t limit = SIZE_MAX);

// Generic fallback enumerator iterating all 2^|U| subsets (|U| <= 26 only);
// used to cross-check the pruned enumerators in tests.
SolutionSet enumerate_solutions_generic(const Instance& inst, Budget& budget);

// Optimal cardinality for the exact-size kinds: minimum feasible k for mvc,
// mds, vcv, fvs, fas; maximum for mis, cq.  Throws kind_mismatch otherwise.
long long minimum_cardinality(const Instance& inst, Budget& budget);

// Deterministic seeded generator.  Supported size parameters depend on the
// kind (see README); unknown parameter names are rejected.  Exact-cardinality
// kinds receive k set to the optimum; threshold kinds receive the tightest
// satisfiable threshold.  Throws generation_failed when constraints cannot be
// met within a bounded number of retries.
Instance generate_instance(ProblemId kind,
                           const std::map<std::string, long long>& params,
                           std::uint64_t seed);

}  // namespace sspforge
