// Reductions among independent set, clique, vertex cover, and set packing:
// complement graphs, complement solutions, and the closed-neighborhood set
// encoding.
#include <string>

#include "reductions_impl.hpp"

namespace sspforge {
namespace red {

namespace {

Solution prefix_lift(const Applied& ap, const Solution& s) {
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < s.universe_size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  return out;
}

Solution complement_bits(std::size_t n, const Solution& s) {
  Solution out(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!s.test(i)) out.set(i);
  return out;
}

}  // namespace

// mis -> mvc: same graph, k' = |V| - k; solutions swap with their
// complements, which fixes no single vertex, so no universe embedding is
// registered.
Applied mis_to_mvc_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  if (d.k > static_cast<long long>(d.vertices.size()))
    fail_shape("complement construction needs k <= |V|");
  GraphKData out = d;
  out.k = static_cast<long long>(d.vertices.size()) - d.k;
  Applied ap;
  ap.target.kind = ProblemId::mvc;
  ap.target.data = std::move(out);
  ap.has_embedding = false;
  return ap;
}

Solution mis_to_mvc_lift(const Instance& /*src*/, const Applied& /*ap*/,
                         const Solution& s) {
  return complement_bits(s.universe_size(), s);
}

Solution mis_to_mvc_unlift(const Instance& /*src*/, const Applied& /*ap*/,
                           const Solution& t) {
  return complement_bits(t.universe_size(), t);
}

// mis -> cq: complement the edge set, keep k.
Applied mis_to_cq_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  GraphKData out;
  out.vertices = d.vertices;
  out.edges = complement_edges(d.vertices.size(), d.edges);
  out.k = d.k;
  Applied ap;
  ap.target.kind = ProblemId::cq;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.vertices.size());
  return ap;
}

Solution mis_to_cq_lift(const Instance& /*src*/, const Applied& ap,
                        const Solution& s) {
  return prefix_lift(ap, s);
}

// mis -> sp: one set per vertex holding the vertex itself plus its incident
// edge labels; sets are disjoint exactly for non-adjacent vertex pairs.
Applied mis_to_sp_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  SetSystemData out;
  NameAllocator names;
  for (const auto& v : d.vertices) out.ground.push_back(names.fresh(v));
  for (std::size_t j = 0; j < d.edges.size(); ++j)
    out.ground.push_back(names.fresh("e" + std::to_string(j + 1)));
  out.sets.resize(d.vertices.size());
  for (std::size_t v = 0; v < d.vertices.size(); ++v)
    out.sets[v].push_back(static_cast<int>(v));
  for (std::size_t j = 0; j < d.edges.size(); ++j) {
    int label = static_cast<int>(d.vertices.size() + j);
    out.sets[static_cast<std::size_t>(d.edges[j][0])].push_back(label);
    out.sets[static_cast<std::size_t>(d.edges[j][1])].push_back(label);
  }
  out.k = d.k;
  Applied ap;
  ap.target.kind = ProblemId::sp;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.vertices.size());
  return ap;
}

Solution mis_to_sp_lift(const Instance& /*src*/, const Applied& ap,
                        const Solution& s) {
  return prefix_lift(ap, s);
}

// sp -> mis: one vertex per set, edges between intersecting pairs.
Applied sp_to_mis_apply(const Instance& src) {
  const auto& d = std::get<SetSystemData>(src.data);
  GraphKData out;
  for (std::size_t i = 0; i < d.sets.size(); ++i)
    out.vertices.push_back("s" + std::to_string(i + 1));
  for (std::size_t i = 0; i < d.sets.size(); ++i)
    for (std::size_t j = i + 1; j < d.sets.size(); ++j) {
      bool overlap = false;
      for (int a : d.sets[i]) {
        for (int b : d.sets[j])
          if (a == b) {
            overlap = true;
            break;
          }
        if (overlap) break;
      }
      if (overlap)
        out.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  out.k = d.k;
  Applied ap;
  ap.target.kind = ProblemId::mis;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.sets.size());
  return ap;
}

Solution sp_to_mis_lift(const Instance& /*src*/, const Applied& ap,
                        const Solution& s) {
  return prefix_lift(ap, s);
}

// cq -> mis: complement the edge set, keep k.
Applied cq_to_mis_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  GraphKData out;
  out.vertices = d.vertices;
  out.edges = complement_edges(d.vertices.size(), d.edges);
  out.k = d.k;
  Applied ap;
  ap.target.kind = ProblemId::mis;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.vertices.size());
  return ap;
}

Solution cq_to_mis_lift(const Instance& /*src*/, const Applied& ap,
                        const Solution& s) {
  return prefix_lift(ap, s);
}

// cq -> mvc: complement the edges and take k' = |V| - k; solutions are the
// complements of cliques, so again no embedding exists.
Applied cq_to_mvc_apply(const Instance& src) {
  const auto& d = std::get<GraphKData>(src.data);
  if (d.k > static_cast<long long>(d.vertices.size()))
    fail_shape("complement construction needs k <= |V|");
  GraphKData out;
  out.vertices = d.vertices;
  out.edges = complement_edges(d.vertices.size(), d.edges);
  out.k = static_cast<long long>(d.vertices.size()) - d.k;
  Applied ap;
  ap.target.kind = ProblemId::mvc;
  ap.target.data = std::move(out);
  ap.has_embedding = false;
  return ap;
}

Solution cq_to_mvc_lift(const Instance& /*src*/, const Applied& /*ap*/,
                        const Solution& s) {
  return complement_bits(s.universe_size(), s);
}

Solution cq_to_mvc_unlift(const Instance& /*src*/, const Applied& /*ap*/,
                          const Solution& t) {
  return complement_bits(t.universe_size(), t);
}

}  // namespace red
}  // namespace sspforge
