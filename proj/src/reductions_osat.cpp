// Reductions out of one-in-three satisfiability and onward from the
// one-sided matching kind: the diamond-chain Steiner tree construction, the
// occurrence-copy matching gadget, and the three-copy blow-up from one-sided
// to plain three-dimensional matching.
#include <string>

#include "reductions_impl.hpp"

namespace sspforge {
namespace red {

// ---------------------------------------------------------------------------
// osat -> stt: a chain of per-variable diamonds between s and t carries the
// assignment; every clause occurrence hangs a long private path from its
// literal vertex to the clause terminal.  Budget 2n + m(2n+1) pays for one
// side of each diamond plus one private path per clause.

namespace {

struct SttLayout {
  int n = 0, m = 0;
  // vertex indices
  int s = 0, t = 0;
  int vnode(int i) const { return i == 0 ? s : (i == n ? t : i); }
  int lit_vertex(int lit) const {
    int var = lit > 0 ? lit : -lit;
    return n + 1 + 2 * (var - 1) + (lit > 0 ? 0 : 1);
  }
  int path_vertex(int j, int p, int q) const {  // all zero-based, q in [0,2n)
    return 3 * n + 1 + 2 * n * (3 * j + p) + q;
  }
  int terminal(int j) const { return 3 * n + 1 + 6 * n * m + j; }
  // edge indices
  int entry_edge(int var, bool positive) const {
    return 4 * (var - 1) + (positive ? 0 : 1);
  }
  int exit_edge(int var, bool positive) const {
    return 4 * (var - 1) + 2 + (positive ? 0 : 1);
  }
  int path_edge_base(int j, int p) const {  // zero-based clause/position
    return 4 * n + (2 * n + 1) * (3 * j + p);
  }
};

int stt_first_satisfied(const std::vector<int>& clause, const Solution& s) {
  for (int i = 0; i < 3; ++i)
    if (lit_true_in(s, clause[i])) return i;
  fail_internal("lifting an assignment that violates a clause");
}

}  // namespace

Applied osat_to_stt_apply(const Instance& src) {
  const auto& d = std::get<CnfData>(src.data);
  SttLayout L;
  L.n = static_cast<int>(d.vars.size());
  L.m = static_cast<int>(d.clauses.size());
  L.s = 0;
  L.t = L.n;
  SttData g;
  NameAllocator names;
  g.vertices.push_back(names.fresh("s"));
  for (int i = 1; i < L.n; ++i)
    g.vertices.push_back(names.fresh("v" + std::to_string(i)));
  g.vertices.push_back(names.fresh("t"));
  for (const auto& v : d.vars) {
    g.vertices.push_back(names.fresh(v));
    g.vertices.push_back(names.fresh("neg_" + v));
  }
  for (int j = 0; j < L.m; ++j)
    for (int p = 0; p < 3; ++p)
      for (int q = 1; q <= 2 * L.n; ++q)
        g.vertices.push_back(names.fresh("c" + std::to_string(j + 1) + "_" +
                                         std::to_string(p + 1) + "_" +
                                         std::to_string(q)));
  for (int j = 0; j < L.m; ++j)
    g.vertices.push_back(names.fresh("C" + std::to_string(j + 1)));
  auto edge = [&](int a, int b) {
    g.edges.push_back({std::min(a, b), std::max(a, b)});
  };
  for (int i = 1; i <= L.n; ++i) {
    edge(L.vnode(i - 1), L.lit_vertex(i));
    edge(L.vnode(i - 1), L.lit_vertex(-i));
    edge(L.lit_vertex(i), L.vnode(i));
    edge(L.lit_vertex(-i), L.vnode(i));
  }
  for (int j = 0; j < L.m; ++j)
    for (int p = 0; p < 3; ++p) {
      int lit = d.clauses[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)];
      edge(L.lit_vertex(lit), L.path_vertex(j, p, 0));
      for (int q = 0; q + 1 < 2 * L.n; ++q)
        edge(L.path_vertex(j, p, q), L.path_vertex(j, p, q + 1));
      edge(L.path_vertex(j, p, 2 * L.n - 1), L.terminal(j));
    }
  g.weights.assign(g.edges.size(), 1);
  g.terminals.push_back(L.s);
  g.terminals.push_back(L.t);
  for (int j = 0; j < L.m; ++j) g.terminals.push_back(L.terminal(j));
  g.k = 2LL * L.n + static_cast<long long>(L.m) * (2 * L.n + 1);
  Applied ap;
  ap.target.kind = ProblemId::stt;
  ap.target.data = std::move(g);
  ap.has_embedding = true;
  ap.embed.reserve(2 * static_cast<std::size_t>(L.n));
  for (int i = 1; i <= L.n; ++i) {
    ap.embed.push_back(static_cast<std::uint32_t>(L.entry_edge(i, true)));
    ap.embed.push_back(static_cast<std::uint32_t>(L.entry_edge(i, false)));
  }
  return ap;
}

Solution osat_to_stt_lift(const Instance& src, const Applied& ap,
                          const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  SttLayout L;
  L.n = static_cast<int>(d.vars.size());
  L.m = static_cast<int>(d.clauses.size());
  L.s = 0;
  L.t = L.n;
  Solution out(universe_size(ap.target));
  for (int i = 1; i <= L.n; ++i) {
    bool pos = lit_true_in(s, i);
    out.set(static_cast<std::size_t>(L.entry_edge(i, pos)));
    out.set(static_cast<std::size_t>(L.exit_edge(i, pos)));
  }
  for (int j = 0; j < L.m; ++j) {
    int p = stt_first_satisfied(d.clauses[static_cast<std::size_t>(j)], s);
    int base = L.path_edge_base(j, p);
    for (int e = 0; e <= 2 * L.n; ++e)
      out.set(static_cast<std::size_t>(base + e));
  }
  return out;
}

// ---------------------------------------------------------------------------
// osat -> odm: every variable occurrence gets its own pair of literal copies.
// Wheel triples force one polarity's copies to be consumed internally; the
// free copies are consumed by clause triples (satisfying occurrences) or
// singletons (falsified occurrences).

namespace {

struct OdmLayout {
  // Per-occurrence record in clause-scan order.
  struct Occ {
    int var = 0;       // 1-based
    bool positive = false;
    int k = 0;         // 1-based occurrence ordinal within the variable
    int clause = 0;    // 0-based
    int pos = 0;       // 0-based position in clause
  };
  std::vector<int> occ_count;       // per variable (1-based index - 1)
  std::vector<Occ> occs;
  std::vector<int> base_x, base_a, base_b, wheel_base;
  int n = 0, m = 0, total_occ = 0;

  void build(const CnfData& d) {
    n = static_cast<int>(d.vars.size());
    m = static_cast<int>(d.clauses.size());
    occ_count.assign(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < m; ++j)
      for (int p = 0; p < 3; ++p) {
        int lit = d.clauses[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)];
        int var = lit > 0 ? lit : -lit;
        Occ o;
        o.var = var;
        o.positive = lit > 0;
        o.k = ++occ_count[static_cast<std::size_t>(var - 1)];
        o.clause = j;
        o.pos = p;
        occs.push_back(o);
      }
    total_occ = static_cast<int>(occs.size());
    base_x.assign(static_cast<std::size_t>(n), 0);
    base_a = base_b = wheel_base = base_x;
    int x = 0, a = 0, w = 0;
    for (int i = 0; i < n; ++i) {
      base_x[static_cast<std::size_t>(i)] = x;
      base_a[static_cast<std::size_t>(i)] = a;
      base_b[static_cast<std::size_t>(i)] = a;
      wheel_base[static_cast<std::size_t>(i)] = w;
      x += 2 * occ_count[static_cast<std::size_t>(i)];
      a += occ_count[static_cast<std::size_t>(i)];
      w += 2 * occ_count[static_cast<std::size_t>(i)];
    }
  }
  int copy_x(int var, bool positive, int k) const {
    int o = occ_count[static_cast<std::size_t>(var - 1)];
    return base_x[static_cast<std::size_t>(var - 1)] + (positive ? 0 : o) +
           (k - 1);
  }
  int a_elem(int var, int k) const {
    return base_a[static_cast<std::size_t>(var - 1)] + (k - 1);
  }
  int b_elem(int var, int k) const {  // k == 0 aliases k == occ_count
    int o = occ_count[static_cast<std::size_t>(var - 1)];
    return base_b[static_cast<std::size_t>(var - 1)] + ((k + o - 1) % o);
  }
  int cy(int j) const {  // after all a-elements
    return base_a[static_cast<std::size_t>(n - 1)] +
           occ_count[static_cast<std::size_t>(n - 1)] + j;
  }
  int cz(int j) const { return cy(j); }
  int wheel(int var, bool positive, int k) const {
    return wheel_base[static_cast<std::size_t>(var - 1)] + 2 * (k - 1) +
           (positive ? 0 : 1);
  }
  int clause_triple(int j, int p) const { return 2 * total_occ + 3 * j + p; }
  int num_triples() const { return 2 * total_occ + 3 * m; }
};

}  // namespace

Applied osat_to_odm_apply(const Instance& src) {
  const auto& d = std::get<CnfData>(src.data);
  OdmLayout L;
  L.build(d);
  for (int i = 0; i < L.n; ++i)
    if (L.occ_count[static_cast<std::size_t>(i)] == 0)
      fail_shape("occurrence-copy construction needs every variable to occur "
                 "in some clause");
  OdmData out;
  NameAllocator xnames;
  for (int i = 0; i < L.n; ++i) {
    const auto& v = d.vars[static_cast<std::size_t>(i)];
    int o = L.occ_count[static_cast<std::size_t>(i)];
    for (int k = 1; k <= o; ++k)
      out.xs.push_back(xnames.fresh(v + "_" + std::to_string(k)));
    for (int k = 1; k <= o; ++k)
      out.xs.push_back(xnames.fresh("neg_" + v + "_" + std::to_string(k)));
  }
  for (int i = 0; i < L.n; ++i)
    for (int k = 1; k <= L.occ_count[static_cast<std::size_t>(i)]; ++k)
      out.ys.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(k));
  for (int j = 0; j < L.m; ++j)
    out.ys.push_back("c" + std::to_string(j + 1) + "y");
  for (int i = 0; i < L.n; ++i)
    for (int k = 1; k <= L.occ_count[static_cast<std::size_t>(i)]; ++k)
      out.zs.push_back("b" + std::to_string(i + 1) + "_" + std::to_string(k));
  for (int j = 0; j < L.m; ++j)
    out.zs.push_back("c" + std::to_string(j + 1) + "z");
  for (int i = 1; i <= L.n; ++i)
    for (int k = 1; k <= L.occ_count[static_cast<std::size_t>(i - 1)]; ++k) {
      out.triples.push_back({L.copy_x(i, true, k), L.a_elem(i, k),
                             L.b_elem(i, k)});
      out.triples.push_back({L.copy_x(i, false, k), L.a_elem(i, k),
                             L.b_elem(i, k - 1)});
    }
  for (const auto& o : L.occs)
    out.triples.push_back({L.copy_x(o.var, o.positive, o.k), L.cy(o.clause),
                           L.cz(o.clause)});
  for (const auto& o : L.occs) {
    out.singletons.push_back(L.copy_x(o.var, !o.positive, o.k));
    out.phi.push_back(L.wheel(o.var, o.positive, o.k));
  }
  Applied ap;
  ap.target.kind = ProblemId::odm;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  // Literal image: the clause triple of its first occurrence when the
  // polarity occurs, otherwise the singleton guarding the first occurrence of
  // the complement (chosen exactly when this literal is true).
  for (int var = 1; var <= L.n; ++var)
    for (int sign = 0; sign < 2; ++sign) {
      bool positive = sign == 0;
      const OdmLayout::Occ* same = nullptr;
      const OdmLayout::Occ* opposite = nullptr;
      for (const auto& o : L.occs) {
        if (o.var != var) continue;
        if (o.positive == positive && !same) same = &o;
        if (o.positive != positive && !opposite) opposite = &o;
      }
      if (same)
        ap.embed.push_back(static_cast<std::uint32_t>(
            L.clause_triple(same->clause, same->pos)));
      else if (opposite)
        ap.embed.push_back(static_cast<std::uint32_t>(
            L.num_triples() + static_cast<int>(opposite - L.occs.data())));
      else
        fail_internal("variable without occurrences after shape check");
    }
  return ap;
}

Solution osat_to_odm_lift(const Instance& src, const Applied& ap,
                          const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  OdmLayout L;
  L.build(d);
  Solution out(universe_size(ap.target));
  for (int var = 1; var <= L.n; ++var) {
    bool var_true = lit_true_in(s, var);
    // Consume the false side's copies internally.
    for (int k = 1; k <= L.occ_count[static_cast<std::size_t>(var - 1)]; ++k)
      out.set(static_cast<std::size_t>(L.wheel(var, !var_true, k)));
  }
  for (std::size_t idx = 0; idx < L.occs.size(); ++idx) {
    const auto& o = L.occs[idx];
    bool lit_true = lit_true_in(s, o.positive ? o.var : -o.var);
    if (lit_true)
      out.set(static_cast<std::size_t>(L.clause_triple(o.clause, o.pos)));
    else
      out.set(static_cast<std::size_t>(L.num_triples()) + idx);
  }
  return out;
}

// ---------------------------------------------------------------------------
// odm -> dm: three copies of every element, rotated through the classes so
// that copy c of a triple covers exactly the c-copies of its members; each
// singleton becomes one fusion triple covering the three copies of its
// element.  Faithful on instances where a matching is determined by its
// singleton set (the generator guarantees this).

Applied odm_to_dm_apply(const Instance& src) {
  const auto& d = std::get<OdmData>(src.data);
  const int nx = static_cast<int>(d.xs.size());
  const int ny = static_cast<int>(d.ys.size());
  const int nt = static_cast<int>(d.triples.size());
  DmData out;
  auto append = [](std::vector<std::string>& to,
                   const std::vector<std::string>& from, const char* suffix) {
    for (const auto& s : from) to.push_back(s + suffix);
  };
  append(out.xs, d.xs, "_1");
  append(out.xs, d.ys, "_2");
  append(out.xs, d.zs, "_3");
  append(out.ys, d.xs, "_2");
  append(out.ys, d.ys, "_3");
  append(out.ys, d.zs, "_1");
  append(out.zs, d.xs, "_3");
  append(out.zs, d.ys, "_1");
  append(out.zs, d.zs, "_2");
  // Offsets of the x/y/z copy groups inside each target class.
  auto xo = [&](int x) { return x; };
  auto yo = [&](int y) { return nx + y; };
  auto zo = [&](int z) { return nx + ny + z; };
  for (const auto& t : d.triples)
    out.triples.push_back({xo(t[0]), zo(t[2]), yo(t[1])});
  for (const auto& t : d.triples)
    out.triples.push_back({yo(t[1]), xo(t[0]), zo(t[2])});
  for (const auto& t : d.triples)
    out.triples.push_back({zo(t[2]), yo(t[1]), xo(t[0])});
  for (int s : d.singletons) out.triples.push_back({xo(s), xo(s), xo(s)});
  Applied ap;
  ap.target.kind = ProblemId::dm;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  for (int i = 0; i < nt; ++i)
    ap.embed.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t s = 0; s < d.singletons.size(); ++s)
    ap.embed.push_back(static_cast<std::uint32_t>(3 * nt + s));
  return ap;
}

Solution odm_to_dm_lift(const Instance& src, const Applied& ap,
                        const Solution& s) {
  const auto& d = std::get<OdmData>(src.data);
  const std::size_t nt = d.triples.size();
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < nt; ++i)
    if (s.test(i)) {
      out.set(i);
      out.set(nt + i);
      out.set(2 * nt + i);
    }
  for (std::size_t w = 0; w < d.singletons.size(); ++w)
    if (s.test(nt + w)) out.set(3 * nt + w);
  return out;
}

}  // namespace red
}  // namespace sspforge
