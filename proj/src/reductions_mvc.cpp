// Reductions out of exact-size vertex cover: domination with a forced hub,
// covering/hitting set systems, cycle-hitting digraph forms, facility and
// center formulations, the fixed-vertex cover variant, and the pedagogical
// threshold cover-to-domination example.
#include <string>

#include "reductions_impl.hpp"

namespace sspforge {
namespace red {

namespace {

// Projection through an identity-prefix embedding.
Solution prefix_lift(const Applied& ap, const Solution& s) {
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < s.universe_size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  return out;
}

}  // namespace

// mvc -> mds: keep the graph, add a hub adjacent to k+2 pendants and to the
// isolated vertices, and replace nothing else; each edge additionally gets
// |V|+1 midpoints adjacent to both endpoints, so a size-(k+1) dominating set
// is the hub plus a size-k cover (k is the cover optimum on generated and
// parsed instances, which pins the correspondence).
Applied mvc_to_mds_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  const int nv = static_cast<int>(d.vertices.size());
  GraphKData g;
  NameAllocator names;
  for (const auto& v : d.vertices) g.vertices.push_back(names.fresh(v));
  const int hub = nv;
  g.vertices.push_back(names.fresh("v_iso"));
  for (long long i = 1; i <= d.k + 2; ++i)
    g.vertices.push_back(names.fresh("d" + std::to_string(i)));
  const int mid_base = hub + 1 + static_cast<int>(d.k) + 2;
  for (std::size_t j = 0; j < d.edges.size(); ++j)
    for (int i = 1; i <= nv + 1; ++i)
      g.vertices.push_back(names.fresh("e" + std::to_string(j + 1) + "_" +
                                       std::to_string(i)));
  g.edges = d.edges;
  std::vector<int> degree(static_cast<std::size_t>(nv), 0);
  for (const auto& e : d.edges) {
    ++degree[static_cast<std::size_t>(e[0])];
    ++degree[static_cast<std::size_t>(e[1])];
  }
  for (int v = 0; v < nv; ++v)
    if (degree[static_cast<std::size_t>(v)] == 0) g.edges.push_back({v, hub});
  for (long long i = 1; i <= d.k + 2; ++i)
    g.edges.push_back({hub, hub + static_cast<int>(i)});
  for (std::size_t j = 0; j < d.edges.size(); ++j)
    for (int i = 0; i <= nv; ++i) {
      int mid = mid_base + static_cast<int>(j) * (nv + 1) + i;
      g.edges.push_back({d.edges[j][0], mid});
      g.edges.push_back({d.edges[j][1], mid});
    }
  g.k = d.k + 1;
  Applied ap;
  ap.target.kind = ProblemId::mds;
  ap.target.data = std::move(g);
  ap.has_embedding = true;
  ap.embed = identity_embed(static_cast<std::size_t>(nv));
  return ap;
}

Solution mvc_to_mds_lift(const Instance& src, const Applied& ap,
                         const Solution& s) {
  const auto& d = std::get<GraphKData>(src.data);
  Solution out = prefix_lift(ap, s);
  out.set(d.vertices.size());  // the hub
  return out;
}

// mvc -> sc: one set per vertex holding its incident edges; exact-size cover.
Applied mvc_to_sc_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  SetSystemData out;
  for (std::size_t j = 0; j < d.edges.size(); ++j)
    out.ground.push_back("e" + std::to_string(j + 1));
  out.sets.assign(d.vertices.size(), {});
  for (std::size_t j = 0; j < d.edges.size(); ++j) {
    out.sets[static_cast<std::size_t>(d.edges[j][0])].push_back(
        static_cast<int>(j));
    out.sets[static_cast<std::size_t>(d.edges[j][1])].push_back(
        static_cast<int>(j));
  }
  out.k = d.k;
  out.exact = true;
  Applied ap;
  ap.target.kind = ProblemId::sc;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.vertices.size());
  return ap;
}

Solution mvc_to_sc_lift(const Instance& /*src*/, const Applied& ap,
                        const Solution& s) {
  return prefix_lift(ap, s);
}

// mvc -> hs: ground = vertices, one two-element set per edge.
Applied mvc_to_hs_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  SetSystemData out;
  out.ground = d.vertices;
  for (const auto& e : d.edges) out.sets.push_back({e[0], e[1]});
  out.k = d.k;
  out.exact = true;
  Applied ap;
  ap.target.kind = ProblemId::hs;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.vertices.size());
  return ap;
}

Solution mvc_to_hs_lift(const Instance& /*src*/, const Applied& ap,
                        const Solution& s) {
  return prefix_lift(ap, s);
}

// mvc -> fvs: each edge becomes a two-cycle; hitting all directed cycles is
// hitting every edge.
Applied mvc_to_fvs_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  DigraphKData out;
  out.vertices = d.vertices;
  for (const auto& e : d.edges) {
    out.arcs.push_back({e[0], e[1]});
    out.arcs.push_back({e[1], e[0]});
  }
  out.k = d.k;
  Applied ap;
  ap.target.kind = ProblemId::fvs;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.vertices.size());
  return ap;
}

Solution mvc_to_fvs_lift(const Instance& /*src*/, const Applied& ap,
                         const Solution& s) {
  return prefix_lift(ap, s);
}

// mvc -> fas: split every vertex into an arc v0 -> v1; every edge becomes
// |V|+1 parallel two-arc branches in each direction, so only vertex arcs can
// break all cycles within budget.  The vertex arcs come first, giving an
// identity embedding into the arc universe.
Applied mvc_to_fas_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  const int nv = static_cast<int>(d.vertices.size());
  DigraphKData out;
  NameAllocator names;
  for (const auto& v : d.vertices) {
    out.vertices.push_back(names.fresh(v + "_0"));
    out.vertices.push_back(names.fresh(v + "_1"));
  }
  auto v0 = [](int v) { return 2 * v; };
  auto v1 = [](int v) { return 2 * v + 1; };
  std::vector<int> mid;  // midpoint vertex indices, appended per use
  for (int v = 0; v < nv; ++v) out.arcs.push_back({v0(v), v1(v)});
  for (std::size_t j = 0; j < d.edges.size(); ++j) {
    int u = d.edges[j][0], v = d.edges[j][1];
    for (int i = 1; i <= nv + 1; ++i) {
      int a = static_cast<int>(out.vertices.size());
      out.vertices.push_back(names.fresh("e" + std::to_string(j + 1) + "a" +
                                         std::to_string(i)));
      out.arcs.push_back({v1(u), a});
      out.arcs.push_back({a, v0(v)});
    }
    for (int i = 1; i <= nv + 1; ++i) {
      int b = static_cast<int>(out.vertices.size());
      out.vertices.push_back(names.fresh("e" + std::to_string(j + 1) + "b" +
                                         std::to_string(i)));
      out.arcs.push_back({v1(v), b});
      out.arcs.push_back({b, v0(u)});
    }
  }
  out.k = d.k;
  Applied ap;
  ap.target.kind = ProblemId::fas;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(static_cast<std::size_t>(nv));
  return ap;
}

Solution mvc_to_fas_lift(const Instance& /*src*/, const Applied& ap,
                         const Solution& s) {
  return prefix_lift(ap, s);
}

// mvc -> ufl: facilities = vertices at opening cost 1, clients = edges served
// free by endpoints and prohibitively otherwise; budget k buys exactly a
// minimum cover.
Applied mvc_to_ufl_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  UflData out;
  for (std::size_t j = 0; j < d.edges.size(); ++j)
    out.clients.push_back("e" + std::to_string(j + 1));
  out.facilities = d.vertices;
  out.open_cost.assign(d.vertices.size(), 1);
  const long long far = static_cast<long long>(d.vertices.size()) + 1;
  for (const auto& e : d.edges) {
    std::vector<long long> row(d.vertices.size(), far);
    row[static_cast<std::size_t>(e[0])] = 0;
    row[static_cast<std::size_t>(e[1])] = 0;
    out.service.push_back(std::move(row));
  }
  out.k = d.k;
  Applied ap;
  ap.target.kind = ProblemId::ufl;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.vertices.size());
  return ap;
}

Solution mvc_to_ufl_lift(const Instance& /*src*/, const Applied& ap,
                         const Solution& s) {
  return prefix_lift(ap, s);
}

namespace {

// Shared construction for the two center kinds: facilities = vertices,
// clients = edges, distance 0 from endpoints and 1 otherwise, p = k and
// radius/total budget 0.
template <typename DataT>
DataT center_payload(const GraphKData& d) {
  DataT out;
  for (std::size_t j = 0; j < d.edges.size(); ++j)
    out.clients.push_back("e" + std::to_string(j + 1));
  out.facilities = d.vertices;
  for (const auto& e : d.edges) {
    std::vector<long long> row(d.vertices.size(), 1);
    row[static_cast<std::size_t>(e[0])] = 0;
    row[static_cast<std::size_t>(e[1])] = 0;
    out.service.push_back(std::move(row));
  }
  out.p = d.k;
  out.k = 0;
  return out;
}

}  // namespace

Applied mvc_to_pcen_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  Applied ap;
  ap.target.kind = ProblemId::pcen;
  ap.target.data = center_payload<CenterData>(d);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.vertices.size());
  return ap;
}

Solution mvc_to_pcen_lift(const Instance& /*src*/, const Applied& ap,
                          const Solution& s) {
  return prefix_lift(ap, s);
}

Applied mvc_to_pmed_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  Applied ap;
  ap.target.kind = ProblemId::pmed;
  ap.target.data = center_payload<CenterData>(d);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.vertices.size());
  return ap;
}

Solution mvc_to_pmed_lift(const Instance& /*src*/, const Applied& ap,
                          const Solution& s) {
  return prefix_lift(ap, s);
}

// mvc -> vcv: append an isolated mandatory vertex and raise k by one.
Applied mvc_to_vcv_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  VcvData out;
  NameAllocator names;
  for (const auto& v : d.vertices) out.vertices.push_back(names.fresh(v));
  out.vertices.push_back(names.fresh("v_all"));
  out.edges = d.edges;
  out.k = d.k + 1;
  out.fixed = static_cast<int>(d.vertices.size());
  Applied ap;
  ap.target.kind = ProblemId::vcv;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.vertices.size());
  return ap;
}

Solution mvc_to_vcv_lift(const Instance& src, const Applied& ap,
                         const Solution& s) {
  const auto& d = std::get<GraphKData>(src.data);
  Solution out = prefix_lift(ap, s);
  out.set(d.vertices.size());
  return out;
}

// vc -> ds (demo): clone every edge k+1 times onto fresh degree-2 vertices.
// Dominating sets project onto covers, but extra clone members make the
// correspondence non-bijective; kept as the registry's negative example.
Applied vc_to_ds_demo_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  const int nv = static_cast<int>(d.vertices.size());
  std::vector<int> degree(static_cast<std::size_t>(nv), 0);
  for (const auto& e : d.edges) {
    ++degree[static_cast<std::size_t>(e[0])];
    ++degree[static_cast<std::size_t>(e[1])];
  }
  for (int v = 0; v < nv; ++v)
    if (degree[static_cast<std::size_t>(v)] == 0)
      fail_shape("edge-clone construction needs a graph without isolated "
                 "vertices");
  GraphKData g;
  NameAllocator names;
  for (const auto& v : d.vertices) g.vertices.push_back(names.fresh(v));
  g.edges = d.edges;
  for (std::size_t j = 0; j < d.edges.size(); ++j)
    for (long long i = 1; i <= d.k + 1; ++i) {
      int c = static_cast<int>(g.vertices.size());
      g.vertices.push_back(names.fresh("e" + std::to_string(j + 1) + "_" +
                                       std::to_string(i)));
      g.edges.push_back({d.edges[j][0], c});
      g.edges.push_back({d.edges[j][1], c});
    }
  g.k = d.k;
  Applied ap;
  ap.target.kind = ProblemId::ds;
  ap.target.data = std::move(g);
  ap.has_embedding = true;
  ap.embed = identity_embed(static_cast<std::size_t>(nv));
  return ap;
}

Solution vc_to_ds_demo_lift(const Instance& /*src*/, const Applied& ap,
                            const Solution& s) {
  return prefix_lift(ap, s);
}

}  // namespace red
}  // namespace sspforge
