// Hamiltonian-structure reductions: the variable-chain / clause-triangle
// construction from three-literal satisfiability, the three-way vertex split
// from directed to undirected, cycle/path interconversions, and zero-weight
// tour encodings.
#include <array>
#include <unordered_map>

#include "reductions_impl.hpp"

namespace sspforge {
namespace red {

namespace {

// ---------------------------------------------------------------------------
// Chain construction shared by esat -> dhp and esat -> dhc.
//
// Each variable owns a 4m-vertex chain traversed left-to-right when true and
// right-to-left when false; clause j owns a triangle and, per occurrence, a
// removed chain arc at slot 4j+2 forcing satisfied occurrences to detour
// through the triangle.  The triangle is then covered by a unique cyclic
// segmentation, one segment per satisfied occurrence.

struct ChainLayout {
  int n = 0, m = 0;
  int s() const { return 0; }
  int t() const { return 1; }
  int chain(int var, int p) const {  // var 1-based, p in [1, 4m]
    return 2 + (var - 1) * 4 * m + (p - 1);
  }
  int tri(int j, int q) const {  // j, q zero-based
    return 2 + 4 * m * n + 3 * j + q;
  }
};

struct ChainOcc {
  int clause = 0, pos = 0;  // zero-based
  bool positive = false;
};

struct ChainInfo {
  ChainLayout L;
  // removed[var-1][slot-1]: forward/backward chain arc dropped at this slot.
  std::vector<std::vector<bool>> removed_fwd, removed_bwd;
  // occurrence at (var, clause), if any
  std::vector<std::unordered_map<int, ChainOcc>> occ_at;
};

ChainInfo chain_info(const CnfData& d) {
  ChainInfo info;
  info.L.n = static_cast<int>(d.vars.size());
  info.L.m = static_cast<int>(d.clauses.size());
  info.removed_fwd.assign(d.vars.size(),
                          std::vector<bool>(4 * d.clauses.size(), false));
  info.removed_bwd = info.removed_fwd;
  info.occ_at.resize(d.vars.size());
  for (int j = 0; j < info.L.m; ++j)
    for (int p = 0; p < 3; ++p) {
      int lit = d.clauses[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)];
      int var = lit > 0 ? lit : -lit;
      ChainOcc o;
      o.clause = j;
      o.pos = p;
      o.positive = lit > 0;
      info.occ_at[static_cast<std::size_t>(var - 1)][j] = o;
      int slot = 4 * j + 2;  // 1-based chain slot of the removed arc
      if (o.positive)
        info.removed_fwd[static_cast<std::size_t>(var - 1)]
                        [static_cast<std::size_t>(slot - 1)] = true;
      else
        info.removed_bwd[static_cast<std::size_t>(var - 1)]
                        [static_cast<std::size_t>(slot - 1)] = true;
    }
  return info;
}

struct ChainBuild {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> arcs;
  std::vector<std::uint32_t> embed;  // literal -> arc index
};

ChainBuild build_chain_graph(const CnfData& d) {
  ChainInfo info = chain_info(d);
  const ChainLayout& L = info.L;
  ChainBuild b;
  NameAllocator names;
  b.vertices.push_back(names.fresh("s"));
  b.vertices.push_back(names.fresh("t"));
  for (const auto& v : d.vars)
    for (int p = 1; p <= 4 * L.m; ++p)
      b.vertices.push_back(names.fresh(v + "_" + std::to_string(p)));
  for (int j = 0; j < L.m; ++j)
    for (int q = 1; q <= 3; ++q)
      b.vertices.push_back(names.fresh("c" + std::to_string(j + 1) + "_" +
                                       std::to_string(q)));
  b.embed.assign(2 * d.vars.size(), 0);
  for (int i = 1; i <= L.n; ++i)
    for (int p = 1; p < 4 * L.m; ++p) {
      if (!info.removed_fwd[static_cast<std::size_t>(i - 1)]
                           [static_cast<std::size_t>(p - 1)]) {
        if (p == 1)
          b.embed[2 * static_cast<std::size_t>(i - 1)] =
              static_cast<std::uint32_t>(b.arcs.size());
        b.arcs.push_back({L.chain(i, p), L.chain(i, p + 1)});
      }
      if (!info.removed_bwd[static_cast<std::size_t>(i - 1)]
                           [static_cast<std::size_t>(p - 1)]) {
        if (p == 1)
          b.embed[2 * static_cast<std::size_t>(i - 1) + 1] =
              static_cast<std::uint32_t>(b.arcs.size());
        b.arcs.push_back({L.chain(i, p + 1), L.chain(i, p)});
      }
    }
  b.arcs.push_back({L.s(), L.chain(1, 1)});
  b.arcs.push_back({L.s(), L.chain(1, 4 * L.m)});
  b.arcs.push_back({L.chain(L.n, 1), L.t()});
  b.arcs.push_back({L.chain(L.n, 4 * L.m), L.t()});
  for (int i = 1; i < L.n; ++i) {
    b.arcs.push_back({L.chain(i, 1), L.chain(i + 1, 1)});
    b.arcs.push_back({L.chain(i, 1), L.chain(i + 1, 4 * L.m)});
    b.arcs.push_back({L.chain(i, 4 * L.m), L.chain(i + 1, 1)});
    b.arcs.push_back({L.chain(i, 4 * L.m), L.chain(i + 1, 4 * L.m)});
  }
  for (int j = 0; j < L.m; ++j) {
    b.arcs.push_back({L.tri(j, 0), L.tri(j, 1)});
    b.arcs.push_back({L.tri(j, 1), L.tri(j, 2)});
    b.arcs.push_back({L.tri(j, 2), L.tri(j, 0)});
  }
  for (int j = 0; j < L.m; ++j)
    for (int p = 0; p < 3; ++p) {
      int lit = d.clauses[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)];
      int var = lit > 0 ? lit : -lit;
      int lo = L.chain(var, 4 * j + 2), hi = L.chain(var, 4 * j + 3);
      if (lit > 0) {
        b.arcs.push_back({lo, L.tri(j, p)});
        for (int q = 0; q < 3; ++q) b.arcs.push_back({L.tri(j, q), hi});
      } else {
        b.arcs.push_back({hi, L.tri(j, p)});
        for (int q = 0; q < 3; ++q) b.arcs.push_back({L.tri(j, q), lo});
      }
    }
  return b;
}

// The unique Hamiltonian path arc set realizing `assignment`.
std::vector<std::array<int, 2>> chain_path_arcs(const CnfData& d,
                                                const Solution& assignment) {
  ChainInfo info = chain_info(d);
  const ChainLayout& L = info.L;
  // Satisfied occurrence positions and their detour exits, per clause.
  std::vector<std::vector<int>> sat(static_cast<std::size_t>(L.m));
  for (int j = 0; j < L.m; ++j)
    for (int p = 0; p < 3; ++p)
      if (lit_true_in(assignment,
                      d.clauses[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)]))
        sat[static_cast<std::size_t>(j)].push_back(p);
  std::vector<std::array<int, 2>> arcs;
  // Triangle detour for satisfied occurrence (j, p): entry, segment up to the
  // vertex preceding the next satisfied entry, then exit to `resume`.
  auto detour = [&](int j, int p, int from, int resume) {
    const auto& P = sat[static_cast<std::size_t>(j)];
    if (P.empty()) fail_internal("detour in an unsatisfied clause");
    int next = P.front();
    for (int cand : P)
      if (cand > p) {
        next = cand;
        break;
      }
    int exit = (next + 2) % 3;
    arcs.push_back({from, L.tri(j, p)});
    for (int r = p; r != exit; r = (r + 1) % 3)
      arcs.push_back({L.tri(j, r), L.tri(j, (r + 1) % 3)});
    arcs.push_back({L.tri(j, exit), resume});
  };
  int prev_exit = L.s();
  for (int i = 1; i <= L.n; ++i) {
    bool val = lit_true_in(assignment, i);
    arcs.push_back({prev_exit, L.chain(i, val ? 1 : 4 * L.m)});
    if (val) {
      for (int p = 1; p < 4 * L.m; ++p) {
        if (info.removed_fwd[static_cast<std::size_t>(i - 1)]
                            [static_cast<std::size_t>(p - 1)]) {
          int j = (p - 2) / 4;
          detour(j, info.occ_at[static_cast<std::size_t>(i - 1)].at(j).pos,
                 L.chain(i, p), L.chain(i, p + 1));
        } else {
          arcs.push_back({L.chain(i, p), L.chain(i, p + 1)});
        }
      }
      prev_exit = L.chain(i, 4 * L.m);
    } else {
      for (int p = 4 * L.m - 1; p >= 1; --p) {
        if (info.removed_bwd[static_cast<std::size_t>(i - 1)]
                            [static_cast<std::size_t>(p - 1)]) {
          int j = (p - 2) / 4;
          detour(j, info.occ_at[static_cast<std::size_t>(i - 1)].at(j).pos,
                 L.chain(i, p + 1), L.chain(i, p));
        } else {
          arcs.push_back({L.chain(i, p + 1), L.chain(i, p)});
        }
      }
      prev_exit = L.chain(i, 1);
    }
  }
  arcs.push_back({prev_exit, L.t()});
  return arcs;
}

Solution arcs_to_solution(const Instance& target,
                          const std::vector<std::array<int, 2>>& want) {
  const std::vector<std::array<int, 2>>* arcs = nullptr;
  std::size_t nv = 0;
  if (target.kind == ProblemId::dhp) {
    const auto& t = std::get<DhpData>(target.data);
    arcs = &t.arcs;
    nv = t.vertices.size();
  } else {
    const auto& t = std::get<DhcData>(target.data);
    arcs = &t.arcs;
    nv = t.vertices.size();
  }
  std::unordered_map<long long, std::size_t> index;
  for (std::size_t i = 0; i < arcs->size(); ++i)
    index[(*arcs)[i][0] * static_cast<long long>(nv) + (*arcs)[i][1]] = i;
  Solution out(arcs->size());
  for (const auto& a : want) {
    auto it = index.find(a[0] * static_cast<long long>(nv) + a[1]);
    if (it == index.end()) fail_internal("lift produced an absent arc");
    out.set(it->second);
  }
  return out;
}

}  // namespace

Applied esat_to_dhp_apply(const Instance& src) {
  const auto& d = std::get<CnfData>(src.data);
  if (d.clauses.empty())
    fail_shape("chain construction needs at least one clause");
  ChainBuild b = build_chain_graph(d);
  DhpData out;
  out.vertices = std::move(b.vertices);
  out.arcs = std::move(b.arcs);
  out.s = 0;
  out.t = 1;
  Applied ap;
  ap.target.kind = ProblemId::dhp;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = std::move(b.embed);
  return ap;
}

Solution esat_to_dhp_lift(const Instance& src, const Applied& ap,
                          const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  return arcs_to_solution(ap.target, chain_path_arcs(d, s));
}

Applied esat_to_dhc_apply(const Instance& src) {
  const auto& d = std::get<CnfData>(src.data);
  if (d.clauses.empty())
    fail_shape("chain construction needs at least one clause");
  ChainBuild b = build_chain_graph(d);
  DhcData out;
  out.vertices = std::move(b.vertices);
  out.arcs = std::move(b.arcs);
  out.arcs.push_back({1, 0});  // close t back to s
  Applied ap;
  ap.target.kind = ProblemId::dhc;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = std::move(b.embed);
  return ap;
}

Solution esat_to_dhc_lift(const Instance& src, const Applied& ap,
                          const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  auto arcs = chain_path_arcs(d, s);
  arcs.push_back({1, 0});
  return arcs_to_solution(ap.target, arcs);
}

// ---------------------------------------------------------------------------
// Directed-to-undirected vertex split: v becomes in/mid/out, every cycle or
// path must take both gadget edges at every vertex, and {u_out, v_in} edges
// stand for the original arcs.

namespace {

struct SplitBuild {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> edges;
};

SplitBuild split_vertices(const std::vector<std::string>& vs,
                          const std::vector<std::array<int, 2>>& arcs) {
  SplitBuild b;
  NameAllocator names;
  for (const auto& v : vs) {
    b.vertices.push_back(names.fresh(v + "_in"));
    b.vertices.push_back(names.fresh(v + "_mid"));
    b.vertices.push_back(names.fresh(v + "_out"));
  }
  for (std::size_t v = 0; v < vs.size(); ++v) {
    int base = static_cast<int>(3 * v);
    b.edges.push_back({base, base + 1});
    b.edges.push_back({base + 1, base + 2});
  }
  for (const auto& a : arcs)
    b.edges.push_back({3 * a[0] + 2, 3 * a[1]});
  return b;
}

Solution split_lift_common(std::size_t nv, std::size_t target_universe,
                           const Applied& ap, const Solution& s) {
  Solution out(target_universe);
  for (std::size_t i = 0; i < 2 * nv; ++i) out.set(i);  // gadget edges
  for (std::size_t i = 0; i < s.universe_size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  return out;
}

}  // namespace

Applied dhc_to_uhc_apply(const Instance& src) {
  const auto& d = std::get<DhcData>(src.data);
  SplitBuild b = split_vertices(d.vertices, d.arcs);
  UhcData out;
  out.vertices = std::move(b.vertices);
  out.edges = std::move(b.edges);
  Applied ap;
  ap.target.kind = ProblemId::uhc;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  for (std::size_t i = 0; i < d.arcs.size(); ++i)
    ap.embed.push_back(static_cast<std::uint32_t>(2 * d.vertices.size() + i));
  return ap;
}

Solution dhc_to_uhc_lift(const Instance& src, const Applied& ap,
                         const Solution& s) {
  const auto& d = std::get<DhcData>(src.data);
  return split_lift_common(d.vertices.size(), universe_size(ap.target), ap, s);
}

Applied dhp_to_uhp_apply(const Instance& src) {
  const auto& d = std::get<DhpData>(src.data);
  SplitBuild b = split_vertices(d.vertices, d.arcs);
  UhpData out;
  out.vertices = std::move(b.vertices);
  out.edges = std::move(b.edges);
  out.s = 3 * d.s;      // s_in
  out.t = 3 * d.t + 2;  // t_out
  Applied ap;
  ap.target.kind = ProblemId::uhp;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  for (std::size_t i = 0; i < d.arcs.size(); ++i)
    ap.embed.push_back(static_cast<std::uint32_t>(2 * d.vertices.size() + i));
  return ap;
}

Solution dhp_to_uhp_lift(const Instance& src, const Applied& ap,
                         const Solution& s) {
  const auto& d = std::get<DhpData>(src.data);
  return split_lift_common(d.vertices.size(), universe_size(ap.target), ap, s);
}

// uhc -> tsp: original edges at weight 0, complement edges at weight 1,
// budget 0.
Applied uhc_to_tsp_apply(const Instance& src) {
  const auto& d = std::get<UhcData>(src.data);
  TspData out;
  out.vertices = d.vertices;
  out.edges = d.edges;
  out.weights.assign(d.edges.size(), 0);
  for (const auto& e : complement_edges(d.vertices.size(), d.edges)) {
    out.edges.push_back(e);
    out.weights.push_back(1);
  }
  out.k = 0;
  Applied ap;
  ap.target.kind = ProblemId::tsp;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.edges.size());
  return ap;
}

Solution uhc_to_tsp_lift(const Instance& /*src*/, const Applied& ap,
                         const Solution& s) {
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < s.universe_size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  return out;
}

// uhp -> uhc: one fresh vertex adjacent to both endpoints closes every path.
Applied uhp_to_uhc_apply(const Instance& src) {
  const auto& d = std::get<UhpData>(src.data);
  UhcData out;
  NameAllocator names;
  for (const auto& v : d.vertices) out.vertices.push_back(names.fresh(v));
  int vnew = static_cast<int>(d.vertices.size());
  out.vertices.push_back(names.fresh("v_new"));
  out.edges = d.edges;
  out.edges.push_back({d.s, vnew});
  out.edges.push_back({d.t, vnew});
  Applied ap;
  ap.target.kind = ProblemId::uhc;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.edges.size());
  return ap;
}

Solution uhp_to_uhc_lift(const Instance& src, const Applied& ap,
                         const Solution& s) {
  const auto& d = std::get<UhpData>(src.data);
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < s.universe_size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  out.set(d.edges.size());
  out.set(d.edges.size() + 1);
  return out;
}

// uhp -> tsp: add the closing vertex, then complete the graph; original and
// endpoint-closing edges cost 0, all other fill edges cost 1, budget 0.
Applied uhp_to_tsp_apply(const Instance& src) {
  const auto& d = std::get<UhpData>(src.data);
  TspData out;
  NameAllocator names;
  for (const auto& v : d.vertices) out.vertices.push_back(names.fresh(v));
  int vnew = static_cast<int>(d.vertices.size());
  out.vertices.push_back(names.fresh("v_new"));
  out.edges = d.edges;
  out.weights.assign(d.edges.size(), 0);
  for (const auto& e : complement_edges(out.vertices.size(), d.edges)) {
    bool closes_endpoint =
        (e[0] == std::min(d.s, vnew) && e[1] == std::max(d.s, vnew)) ||
        (e[0] == std::min(d.t, vnew) && e[1] == std::max(d.t, vnew));
    out.edges.push_back(e);
    out.weights.push_back(closes_endpoint ? 0 : 1);
  }
  out.k = 0;
  Applied ap;
  ap.target.kind = ProblemId::tsp;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.edges.size());
  return ap;
}

Solution uhp_to_tsp_lift(const Instance& src, const Applied& ap,
                         const Solution& s) {
  const auto& d = std::get<UhpData>(src.data);
  const auto& t = std::get<TspData>(ap.target.data);
  int vnew = static_cast<int>(d.vertices.size());
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < s.universe_size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  for (std::size_t i = d.edges.size(); i < t.edges.size(); ++i)
    if (t.edges[i][1] == vnew &&
        (t.edges[i][0] == d.s || t.edges[i][0] == d.t))
      out.set(i);
  return out;
}

}  // namespace red
}  // namespace sspforge
