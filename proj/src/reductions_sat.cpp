// Clause-rewriting reductions between the satisfiability kinds: long-clause
// splitting (with and without guard clauses), padding to exactly-three
// literals, and the exactly-one-true rewrite.
#include <set>
#include <string>

#include "reductions_impl.hpp"

namespace sspforge {
namespace red {

namespace {

// Splits every clause longer than three literals into a helper chain:
//   (l1, l2, h1), (!h1, l3, h2), ..., (!h_{k-3}, l_{k-1}, l_k).
// Helper h_j stands for the tail l_{j+2} | ... | l_k.  With `guards`, the
// clauses {!t, h_j} for every tail literal t pin h_j to exactly that value;
// without them h_j floats whenever head and tail are both satisfied.
struct SplitResult {
  CnfData out;
  // Tail literals (source clause literals) per emitted helper, in helper
  // declaration order; used to compute the canonical lift.
  std::vector<std::vector<int>> helper_tails;
};

SplitResult split_clauses(const CnfData& src, bool guards) {
  SplitResult r;
  r.out.vars = src.vars;
  NameAllocator names;
  for (const auto& v : src.vars) names.claim(v);
  int helper_ordinal = 0;
  std::vector<std::vector<int>> clauses;
  for (const auto& cl : src.clauses) {
    if (cl.size() <= 3) {
      clauses.push_back(cl);
      continue;
    }
    const int k = static_cast<int>(cl.size());
    std::vector<int> h;
    for (int j = 0; j + 3 < k; ++j) {
      r.out.vars.push_back(names.fresh("h" + std::to_string(++helper_ordinal)));
      h.push_back(static_cast<int>(r.out.vars.size()));
      r.helper_tails.emplace_back(cl.begin() + j + 2, cl.end());
    }
    clauses.push_back({cl[0], cl[1], h[0]});
    for (int j = 1; j + 3 < k; ++j)
      clauses.push_back({-h[j - 1], cl[j + 1], h[j]});
    clauses.push_back({-h[k - 4], cl[k - 2], cl[k - 1]});
    if (guards)
      for (int j = 0; j + 3 < k; ++j)
        for (int t = j + 2; t < k; ++t)
          clauses.push_back({-cl[t], h[j]});
  }
  std::set<std::vector<int>> seen;
  for (auto& c : clauses)
    if (seen.insert(c).second) r.out.clauses.push_back(std::move(c));
  return r;
}

Applied split_apply(const Instance& src, bool guards) {
  const auto& d = std::get<CnfData>(src.data);
  Applied ap;
  ap.target.kind = ProblemId::tsat;
  ap.target.data = split_clauses(d, guards).out;
  ap.has_embedding = true;
  ap.embed = identity_embed(2 * d.vars.size());
  return ap;
}

Solution split_lift(const Instance& src, const Applied& ap, const Solution& s,
                    bool guards) {
  const auto& d = std::get<CnfData>(src.data);
  auto info = split_clauses(d, guards);
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < 2 * d.vars.size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  for (std::size_t j = 0; j < info.helper_tails.size(); ++j) {
    bool tail_true = false;
    for (int lit : info.helper_tails[j])
      if (lit_true_in(s, lit)) tail_true = true;
    std::size_t base = 2 * (d.vars.size() + j);
    out.set(tail_true ? base : base + 1);
  }
  return out;
}

}  // namespace

Applied sat_to_tsat_naive_apply(const Instance& src) {
  return split_apply(src, false);
}
Solution sat_to_tsat_naive_lift(const Instance& src, const Applied& ap,
                                const Solution& s) {
  return split_lift(src, ap, s, false);
}

Applied sat_to_tsat_apply(const Instance& src) {
  return split_apply(src, true);
}
Solution sat_to_tsat_lift(const Instance& src, const Applied& ap,
                          const Solution& s) {
  return split_lift(src, ap, s, true);
}

// ---------------------------------------------------------------------------
// tsat -> esat: pad short clauses with negated fresh helpers h1..h3, then add
// the seven clauses over {h1,h2,h3} that leave (true,true,true) as the only
// surviving helper assignment.

Applied tsat_to_esat_apply(const Instance& src) {
  const auto& d = std::get<CnfData>(src.data);
  CnfData out;
  out.vars = d.vars;
  NameAllocator names;
  for (const auto& v : d.vars) names.claim(v);
  const int n = static_cast<int>(d.vars.size());
  int h[3];
  for (int i = 0; i < 3; ++i) {
    out.vars.push_back(names.fresh("h" + std::to_string(i + 1)));
    h[i] = n + i + 1;
  }
  for (const auto& cl : d.clauses) {
    std::vector<int> padded = cl;
    for (int i = 0; padded.size() < 3; ++i) padded.push_back(-h[i]);
    out.clauses.push_back(std::move(padded));
  }
  for (int mask = 7; mask >= 1; --mask)
    out.clauses.push_back({(mask & 4) ? h[0] : -h[0],
                           (mask & 2) ? h[1] : -h[1],
                           (mask & 1) ? h[2] : -h[2]});
  Applied ap;
  ap.target.kind = ProblemId::esat;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(2 * d.vars.size());
  return ap;
}

Solution tsat_to_esat_lift(const Instance& src, const Applied& ap,
                           const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < 2 * d.vars.size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  for (std::size_t i = 0; i < 3; ++i) out.set(2 * (d.vars.size() + i));
  return out;
}

// ---------------------------------------------------------------------------
// esat -> osat: per source clause (e1,e2,e3) introduce nine helpers
// z1..z3, h1..h3, g1..g3 and emit seven exactly-one-true clauses.  Each of
// the seven satisfying cases of the source clause extends to exactly one
// helper assignment.

namespace {

// Helper variable indices (1-based) for source clause j over n source vars.
struct OsatHelpers {
  int z[3], h[3], g[3];
};

OsatHelpers osat_helpers(int n, int j) {
  OsatHelpers v;
  int base = n + 9 * j;
  for (int i = 0; i < 3; ++i) {
    v.z[i] = base + 1 + i;
    v.h[i] = base + 4 + i;
    v.g[i] = base + 7 + i;
  }
  return v;
}

std::vector<std::vector<int>> osat_block(const std::vector<int>& cl,
                                         const OsatHelpers& v) {
  return {
      {-cl[0], v.z[0], v.h[0]},
      {-cl[1], v.z[1], v.h[1]},
      {-cl[2], v.z[2], v.h[2]},
      {v.z[0], v.z[1], v.z[2]},
      {v.z[0], v.h[1], v.g[0]},
      {v.z[1], v.h[2], v.g[1]},
      {v.z[0], v.h[2], v.g[2]},
  };
}

}  // namespace

Applied esat_to_osat_apply(const Instance& src) {
  const auto& d = std::get<CnfData>(src.data);
  CnfData out;
  out.vars = d.vars;
  NameAllocator names;
  for (const auto& v : d.vars) names.claim(v);
  const int n = static_cast<int>(d.vars.size());
  const char* stems[3] = {"z", "h", "g"};
  for (std::size_t j = 0; j < d.clauses.size(); ++j)
    for (const char* stem : stems)
      for (int i = 1; i <= 3; ++i)
        out.vars.push_back(
            names.fresh(stem + std::to_string(i) + "_" + std::to_string(j + 1)));
  for (std::size_t j = 0; j < d.clauses.size(); ++j) {
    auto block = osat_block(d.clauses[j], osat_helpers(n, static_cast<int>(j)));
    out.clauses.insert(out.clauses.end(), block.begin(), block.end());
  }
  Applied ap;
  ap.target.kind = ProblemId::osat;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(2 * d.vars.size());
  return ap;
}

Solution esat_to_osat_lift(const Instance& src, const Applied& ap,
                           const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  const int n = static_cast<int>(d.vars.size());
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < 2 * d.vars.size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  for (std::size_t j = 0; j < d.clauses.size(); ++j) {
    auto v = osat_helpers(n, static_cast<int>(j));
    auto block = osat_block(d.clauses[j], v);
    int found = -1;
    for (int bits = 0; bits < 512; ++bits) {
      // bit i of `bits` is the value of helper (base + 1 + i)
      auto value = [&](int lit) {
        int var = lit > 0 ? lit : -lit;
        bool val;
        if (var <= n)
          val = lit_true_in(s, var);  // source literal, positive form
        else
          val = (bits >> (var - n - 9 * static_cast<int>(j) - 1)) & 1;
        return lit > 0 ? val : !val;
      };
      bool ok = true;
      for (const auto& cl : block) {
        int t = 0;
        for (int lit : cl)
          if (value(lit)) ++t;
        if (t != 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        if (found >= 0) fail_internal("ambiguous helper extension");
        found = bits;
      }
    }
    if (found < 0) fail_internal("no helper extension for satisfied clause");
    for (int i = 0; i < 9; ++i) {
      std::size_t base = 2 * static_cast<std::size_t>(n + 9 * j + i);
      out.set((found >> i) & 1 ? base : base + 1);
    }
  }
  return out;
}

}  // namespace red
}  // namespace sspforge
