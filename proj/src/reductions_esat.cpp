// Gadget reductions out of three-literal satisfiability: literal-pair plus
// clause-triangle graphs (independent set / vertex cover), the pair-gadget
// domination graph, the assignment-cluster clique graph, and the digit-coded
// subset-sum encoding.
#include <string>

#include "reductions_impl.hpp"

namespace sspforge {
namespace red {

namespace {

// Shared vertex block for the triangle constructions: one vertex per literal
// (interleaved, matching the source universe order) followed by one triangle
// per clause.  Attachment edges connect triangle corner i of clause j to
// either the occurrence's own literal vertex or its complement.
Applied triangle_apply(const Instance& src, bool attach_complement,
                       long long k_per_clause) {
  const auto& d = std::get<CnfData>(src.data);
  const std::size_t n = d.vars.size();
  GraphKData g;
  NameAllocator names;
  for (const auto& v : d.vars) {
    g.vertices.push_back(names.fresh(v));
    g.vertices.push_back(names.fresh("neg_" + v));
  }
  for (std::size_t j = 0; j < d.clauses.size(); ++j)
    for (int i = 1; i <= 3; ++i)
      g.vertices.push_back(names.fresh("c" + std::to_string(j + 1) + "_" +
                                       std::to_string(i)));
  for (std::size_t p = 0; p < n; ++p)
    g.edges.push_back({static_cast<int>(2 * p), static_cast<int>(2 * p + 1)});
  for (std::size_t j = 0; j < d.clauses.size(); ++j) {
    int t = static_cast<int>(2 * n + 3 * j);
    g.edges.push_back({t, t + 1});
    g.edges.push_back({t, t + 2});
    g.edges.push_back({t + 1, t + 2});
  }
  for (std::size_t j = 0; j < d.clauses.size(); ++j)
    for (int i = 0; i < 3; ++i) {
      int lit = d.clauses[j][i];
      int anchor = static_cast<int>(
          lit_universe_index(attach_complement ? -lit : lit));
      g.edges.push_back({static_cast<int>(2 * n + 3 * j + i), anchor});
    }
  g.k = static_cast<long long>(n) +
        k_per_clause * static_cast<long long>(d.clauses.size());
  Applied ap;
  ap.target.kind = attach_complement ? ProblemId::mis : ProblemId::mvc;
  ap.target.data = std::move(g);
  ap.has_embedding = true;
  ap.embed = identity_embed(2 * n);
  return ap;
}

// Smallest clause position (0-based) whose literal is true under `s`.
int first_satisfied(const std::vector<int>& clause, const Solution& s) {
  for (int i = 0; i < 3; ++i)
    if (lit_true_in(s, clause[i])) return i;
  fail_internal("lifting an assignment that violates a clause");
}

}  // namespace

Applied esat_to_mis_apply(const Instance& src) {
  return triangle_apply(src, true, 1);
}

Solution esat_to_mis_lift(const Instance& src, const Applied& ap,
                          const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < 2 * d.vars.size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  for (std::size_t j = 0; j < d.clauses.size(); ++j)
    out.set(2 * d.vars.size() + 3 * j + first_satisfied(d.clauses[j], s));
  return out;
}

Applied esat_to_mvc_apply(const Instance& src) {
  return triangle_apply(src, false, 2);
}

Solution esat_to_mvc_lift(const Instance& src, const Applied& ap,
                          const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < 2 * d.vars.size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  for (std::size_t j = 0; j < d.clauses.size(); ++j) {
    int skip = first_satisfied(d.clauses[j], s);
    for (int i = 0; i < 3; ++i)
      if (i != skip) out.set(2 * d.vars.size() + 3 * j + i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// esat -> mds: per variable a four-vertex gadget (literal pair joined to two
// private degree-2 vertices) forcing any size-n dominating set to pick one
// literal per pair; clause vertices hang off their occurrence literals.

Applied esat_to_mds_apply(const Instance& src) {
  const auto& d = std::get<CnfData>(src.data);
  const std::size_t n = d.vars.size();
  GraphKData g;
  NameAllocator names;
  for (std::size_t p = 0; p < n; ++p) {
    g.vertices.push_back(names.fresh(d.vars[p]));
    g.vertices.push_back(names.fresh("neg_" + d.vars[p]));
    g.vertices.push_back(names.fresh("x" + std::to_string(p + 1) + "_1"));
    g.vertices.push_back(names.fresh("x" + std::to_string(p + 1) + "_2"));
  }
  for (std::size_t j = 0; j < d.clauses.size(); ++j)
    g.vertices.push_back(names.fresh("C" + std::to_string(j + 1)));
  auto lit_vertex = [](int lit) {
    return 4 * ((lit > 0 ? lit : -lit) - 1) + (lit > 0 ? 0 : 1);
  };
  for (std::size_t p = 0; p < n; ++p) {
    int b = static_cast<int>(4 * p);
    g.edges.push_back({b, b + 1});
    g.edges.push_back({b, b + 2});
    g.edges.push_back({b, b + 3});
    g.edges.push_back({b + 1, b + 2});
    g.edges.push_back({b + 1, b + 3});
  }
  for (std::size_t j = 0; j < d.clauses.size(); ++j) {
    int cv = static_cast<int>(4 * n + j);
    for (int lit : d.clauses[j]) g.edges.push_back({cv, lit_vertex(lit)});
  }
  g.k = static_cast<long long>(n);
  Applied ap;
  ap.target.kind = ProblemId::mds;
  ap.target.data = std::move(g);
  ap.has_embedding = true;
  ap.embed.reserve(2 * n);
  for (std::size_t p = 0; p < n; ++p) {
    ap.embed.push_back(static_cast<std::uint32_t>(4 * p));
    ap.embed.push_back(static_cast<std::uint32_t>(4 * p + 1));
  }
  return ap;
}

Solution esat_to_mds_lift(const Instance& src, const Applied& ap,
                          const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < 2 * d.vars.size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  return out;
}

// ---------------------------------------------------------------------------
// esat -> cq: one cluster per clause holding a vertex for every satisfying
// total assignment; equal-assignment vertices in different clusters are
// adjacent, so size-m cliques are exactly the models.  Registers no universe
// embedding (single literals have no fixed image).

namespace {

// Satisfying total assignments of one clause, as n-bit masks in lexicographic
// order of their bit strings (bit of variable 1 first and most significant).
std::vector<std::uint32_t> cluster_masks(int n, const std::vector<int>& cl) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    auto var_true = [&](int var) { return (m >> (n - var)) & 1u; };
    bool sat = false;
    for (int lit : cl)
      if (lit > 0 ? var_true(lit) : !var_true(-lit)) sat = true;
    if (sat) out.push_back(m);
  }
  return out;
}

std::string mask_label(int n, std::uint32_t m) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((m >> (n - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::uint32_t assignment_mask(const CnfData& d, const Solution& s) {
  const int n = static_cast<int>(d.vars.size());
  std::uint32_t m = 0;
  for (int var = 1; var <= n; ++var)
    if (lit_true_in(s, var)) m |= 1u << (n - var);
  return m;
}

}  // namespace

Applied esat_to_cq_apply(const Instance& src) {
  const auto& d = std::get<CnfData>(src.data);
  const int n = static_cast<int>(d.vars.size());
  if (n < 3 || d.clauses.empty())
    fail_shape("assignment-cluster construction needs >= 3 variables and >= 1 "
               "clause");
  if (n > 20) fail_shape("cluster construction is exponential in variables");
  GraphKData g;
  std::vector<std::vector<std::uint32_t>> clusters;
  std::vector<std::size_t> offset;
  for (std::size_t j = 0; j < d.clauses.size(); ++j) {
    clusters.push_back(cluster_masks(n, d.clauses[j]));
    offset.push_back(g.vertices.size());
    for (std::uint32_t m : clusters.back())
      g.vertices.push_back("c" + std::to_string(j + 1) + "_a" +
                           mask_label(n, m));
  }
  for (std::size_t j1 = 0; j1 < clusters.size(); ++j1)
    for (std::size_t j2 = j1 + 1; j2 < clusters.size(); ++j2)
      for (std::size_t i1 = 0; i1 < clusters[j1].size(); ++i1)
        for (std::size_t i2 = 0; i2 < clusters[j2].size(); ++i2)
          if (clusters[j1][i1] == clusters[j2][i2])
            g.edges.push_back({static_cast<int>(offset[j1] + i1),
                               static_cast<int>(offset[j2] + i2)});
  g.k = static_cast<long long>(d.clauses.size());
  Applied ap;
  ap.target.kind = ProblemId::cq;
  ap.target.data = std::move(g);
  ap.has_embedding = false;
  return ap;
}

Solution esat_to_cq_lift(const Instance& src, const Applied& ap,
                         const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  const int n = static_cast<int>(d.vars.size());
  std::uint32_t want = assignment_mask(d, s);
  Solution out(universe_size(ap.target));
  std::size_t offset = 0;
  for (std::size_t j = 0; j < d.clauses.size(); ++j) {
    auto masks = cluster_masks(n, d.clauses[j]);
    bool hit = false;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (masks[i] == want) {
        out.set(offset + i);
        hit = true;
        break;
      }
    if (!hit) fail_internal("lifting an assignment that violates a clause");
    offset += masks.size();
  }
  return out;
}

Solution esat_to_cq_unlift(const Instance& src, const Applied& /*ap*/,
                           const Solution& t) {
  const auto& d = std::get<CnfData>(src.data);
  const int n = static_cast<int>(d.vars.size());
  auto picked = t.indices();
  if (picked.empty()) fail_internal("clique solution has no member to decode");
  std::size_t b = picked.front();
  std::size_t offset = 0;
  for (std::size_t j = 0; j < d.clauses.size(); ++j) {
    auto masks = cluster_masks(n, d.clauses[j]);
    if (b < offset + masks.size()) {
      std::uint32_t m = masks[b - offset];
      Solution out(2 * d.vars.size());
      for (int var = 1; var <= n; ++var)
        out.set(lit_universe_index((m >> (n - var)) & 1u ? var : -var));
      return out;
    }
    offset += masks.size();
  }
  fail_internal("clique member outside all clusters");
}

// ---------------------------------------------------------------------------
// esat -> ss: binary digit coding.  Variable i owns bit 3m + (n - i); clause
// j owns a three-bit block at 3(m - j).  Literal numbers carry their variable
// bit plus a 1 in each clause block where the literal occurs; two slack
// numbers (1 and 2) per block absorb the gap to the block target 4.  Block
// sums never exceed 6 and variable bits never carry, so subsets hitting the
// target are exactly assignment choices with forced slacks.

Applied esat_to_ss_apply(const Instance& src) {
  const auto& d = std::get<CnfData>(src.data);
  const int n = static_cast<int>(d.vars.size());
  const int m = static_cast<int>(d.clauses.size());
  SsData out;
  auto var_bit = [&](int var) { return BigInt(1) << (3 * m + (n - var)); };
  auto block_unit = [&](int j) { return BigInt(1) << (3 * (m - 1 - j)); };
  for (int var = 1; var <= n; ++var)
    for (int sign = 0; sign < 2; ++sign) {
      int lit = sign == 0 ? var : -var;
      BigInt a = var_bit(var);
      for (int j = 0; j < m; ++j)
        for (int l : d.clauses[static_cast<std::size_t>(j)])
          if (l == lit) a += block_unit(j);
      out.numbers.push_back(a);
    }
  for (int j = 0; j < m; ++j) {
    out.numbers.push_back(block_unit(j));
    out.numbers.push_back(2 * block_unit(j));
  }
  out.target = 0;
  for (int var = 1; var <= n; ++var) out.target += var_bit(var);
  for (int j = 0; j < m; ++j) out.target += 4 * block_unit(j);
  Applied ap;
  ap.target.kind = ProblemId::ss;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(2 * static_cast<std::size_t>(n));
  return ap;
}

Solution esat_to_ss_lift(const Instance& src, const Applied& ap,
                         const Solution& s) {
  const auto& d = std::get<CnfData>(src.data);
  const std::size_t n = d.vars.size();
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < 2 * n; ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  for (std::size_t j = 0; j < d.clauses.size(); ++j) {
    int t = 0;
    for (int lit : d.clauses[j])
      if (lit_true_in(s, lit)) ++t;
    std::size_t slack1 = 2 * n + 2 * j, slack2 = slack1 + 1;
    if (t == 3) out.set(slack1);
    else if (t == 2) out.set(slack2);
    else if (t == 1) { out.set(slack1); out.set(slack2); }
    else fail_internal("lifting an assignment that violates a clause");
  }
  return out;
}

}  // namespace red
}  // namespace sspforge
