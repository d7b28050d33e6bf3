// Seeded random instance generation.  Every generator is deterministic for a
// fixed (parameter map, seed) pair, produces a structurally valid instance,
// and sets cardinality bounds to the true optimum of the drawn structure so
// that exact-cardinality kinds are properly canonicalized.  Draws that cannot
// reach a feasible structure (say, a graph with no Hamiltonian cycle) are
// retried a bounded number of times before GenerationFailed is raised.
#include <algorithm>
#include <set>
#include <string>

#include "sspforge/problems.hpp"

namespace sspforge {

namespace {

constexpr int kMaxRetries = 50;

long long get_param(const std::map<std::string, long long>& params,
                    const std::string& name, long long fallback,
                    long long lo, long long hi,
                    std::set<std::string>& consumed) {
  consumed.insert(name);
  auto it = params.find(name);
  long long value = it == params.end() ? fallback : it->second;
  if (value < lo || value > hi)
    throw SspError(ErrorCode::invalid_instance,
                   "generator parameter '" + name + "' out of range [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return value;
}

void reject_unknown(const std::map<std::string, long long>& params,
                    const std::set<std::string>& consumed) {
  for (const auto& [name, value] : params)
    if (!consumed.count(name))
      throw SspError(ErrorCode::invalid_instance,
                     "unknown generator parameter '" + name + "'");
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::array<int, 2>> random_edges(Rng& rng, int n, int pct) {
  std::vector<std::array<int, 2>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(pct)) edges.push_back({u, v});
  return edges;
}

std::vector<std::array<int, 2>> random_arcs(Rng& rng, int n, int pct) {
  std::vector<std::array<int, 2>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.chance(pct)) arcs.push_back({u, v});
  return arcs;
}

std::vector<std::vector<int>> random_clauses(Rng& rng, int vars, int clauses,
                                             int min_len, int max_len) {
  std::vector<std::vector<int>> out;
  for (int c = 0; c < clauses; ++c) {
    int len = static_cast<int>(rng.range(min_len, std::min(max_len, vars)));
    // distinct variables per clause
    std::vector<int> pool(vars);
    for (int i = 0; i < vars; ++i) pool[i] = i + 1;
    std::vector<int> clause;
    for (int i = 0; i < len; ++i) {
      std::size_t pick = rng.below(pool.size());
      int var = pool[pick];
      pool.erase(pool.begin() + static_cast<long>(pick));
      clause.push_back(rng.chance(50) ? var : -var);
    }
    std::sort(clause.begin(), clause.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    out.push_back(std::move(clause));
  }
  return out;
}

BigInt random_bigint(Rng& rng, int bits) {
  BigInt v = 0;
  for (int i = 0; i < bits; ++i) {
    v <<= 1;
    if (rng.chance(50)) v += 1;
  }
  return v;
}

bool has_solution(const Instance& inst) {
  Budget probe;
  return enumerate_solutions(inst, probe, 1).size() > 0;
}

// optimum for exact-cardinality kinds, via the public search
long long optimum_of(Instance inst, ProblemId as_kind) {
  inst.kind = as_kind;
  Budget probe;
  return minimum_cardinality(inst, probe);
}

}  // namespace

Instance generate_instance(ProblemId id,
                           const std::map<std::string, long long>& params,
                           std::uint64_t seed) {
  std::set<std::string> consumed;
  auto p = [&](const std::string& name, long long fallback, long long lo,
               long long hi) {
    return get_param(params, name, fallback, lo, hi, consumed);
  };
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(id) + 1);

  auto retry = [&](auto draw, auto feasible) {
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
      Instance inst = draw();
      if (feasible(inst)) return inst;
    }
    throw SspError(ErrorCode::generation_failed,
                   "no feasible draw after bounded retries for kind '" +
                       std::string(problem_name(id)) + "'");
  };

  switch (id) {
    case ProblemId::sat:
    case ProblemId::tsat: {
      long long vars = p("vars", 4, 1, 6);
      long long clauses = p("clauses", 3, 1, 6);
      long long cap = id == ProblemId::tsat ? 3 : p("max_len", 4, 1, 6);
      reject_unknown(params, consumed);
      CnfData d;
      d.vars = numbered("x", static_cast<std::size_t>(vars));
      d.clauses = random_clauses(rng, static_cast<int>(vars),
                                 static_cast<int>(clauses), 1,
                                 static_cast<int>(cap));
      Instance inst{id, std::move(d)};
      validate_instance(inst);
      return inst;
    }
    case ProblemId::esat:
    case ProblemId::osat: {
      long long vars = p("vars", 4, 3, 6);
      long long clauses = p("clauses", 2, 1, 6);
      reject_unknown(params, consumed);
      auto draw = [&]() -> Instance {
        CnfData d;
        d.vars = numbered("x", static_cast<std::size_t>(vars));
        d.clauses = random_clauses(rng, static_cast<int>(vars),
                                   static_cast<int>(clauses), 3, 3);
        Instance inst{id, std::move(d)};
        validate_instance(inst);
        return inst;
      };
      if (id == ProblemId::esat) return draw();
      // one-in-three instances additionally guarantee that every variable
      // occurs somewhere, which downstream occurrence-based transformations
      // rely on
      auto all_vars_used = [](const Instance& inst) {
        const auto& d = std::get<CnfData>(inst.data);
        std::vector<bool> used(d.vars.size(), false);
        for (const auto& cl : d.clauses)
          for (int lit : cl)
            used[static_cast<std::size_t>(std::abs(lit)) - 1] = true;
        return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
      };
      return retry(draw, all_vars_used);
    }
    case ProblemId::vc:
    case ProblemId::mvc:
    case ProblemId::ds:
    case ProblemId::mds:
    case ProblemId::mis:
    case ProblemId::cq: {
      bool big = id == ProblemId::mis || id == ProblemId::cq;
      long long n = p("vertices", big ? 6 : 5, 1, 10);
      long long pct = p("edge_pct", 50, 0, 100);
      reject_unknown(params, consumed);
      GraphKData d;
      d.vertices = numbered("v", static_cast<std::size_t>(n));
      d.edges = random_edges(rng, static_cast<int>(n), static_cast<int>(pct));
      d.k = 0;
      Instance inst{id, std::move(d)};
      ProblemId probe_kind = id;
      if (id == ProblemId::vc) probe_kind = ProblemId::mvc;
      if (id == ProblemId::ds) probe_kind = ProblemId::mds;
      std::get<GraphKData>(inst.data).k = optimum_of(inst, probe_kind);
      validate_instance(inst);
      return inst;
    }
    case ProblemId::vcv: {
      long long n = p("vertices", 5, 1, 10);
      long long pct = p("edge_pct", 50, 0, 100);
      reject_unknown(params, consumed);
      VcvData d;
      d.vertices = numbered("v", static_cast<std::size_t>(n));
      d.edges = random_edges(rng, static_cast<int>(n), static_cast<int>(pct));
      d.fixed = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      d.k = 0;
      Instance inst{ProblemId::vcv, std::move(d)};
      Budget probe;
      std::get<VcvData>(inst.data).k = minimum_cardinality(inst, probe);
      validate_instance(inst);
      return inst;
    }
    case ProblemId::fvs:
    case ProblemId::fas: {
      long long n = p("vertices", 5, 1, 10);
      long long pct = p("arc_pct", 40, 0, 100);
      reject_unknown(params, consumed);
      DigraphKData d;
      d.vertices = numbered("v", static_cast<std::size_t>(n));
      d.arcs = random_arcs(rng, static_cast<int>(n), static_cast<int>(pct));
      d.k = 0;
      Instance inst{id, std::move(d)};
      Budget probe;
      std::get<DigraphKData>(inst.data).k = minimum_cardinality(inst, probe);
      validate_instance(inst);
      return inst;
    }
    case ProblemId::sp:
    case ProblemId::sc:
    case ProblemId::hs: {
      long long ground = p("ground", 6, 1, 10);
      long long sets = p("sets", id == ProblemId::hs ? 4 : 5, 1, 8);
      long long set_max = p("set_max", 3, 1, ground);
      reject_unknown(params, consumed);
      SetSystemData d;
      d.ground = numbered("e", static_cast<std::size_t>(ground));
      for (long long s = 0; s < sets; ++s) {
        long long len = rng.range(1, static_cast<std::uint64_t>(set_max));
        std::set<int> members;
        while (static_cast<long long>(members.size()) < len)
          members.insert(
              static_cast<int>(rng.below(static_cast<std::uint64_t>(ground))));
        d.sets.emplace_back(members.begin(), members.end());
      }
      if (id == ProblemId::sc) {
        // make every ground element coverable
        std::vector<bool> covered(static_cast<std::size_t>(ground), false);
        for (const auto& s : d.sets)
          for (int e : s) covered[static_cast<std::size_t>(e)] = true;
        for (long long e = 0; e < ground; ++e)
          if (!covered[static_cast<std::size_t>(e)]) {
            auto& target = d.sets[rng.below(d.sets.size())];
            target.push_back(static_cast<int>(e));
            std::sort(target.begin(), target.end());
          }
      }
      d.exact = false;
      d.k = 0;
      Instance inst{id, std::move(d)};
      // probe the optimal bound: largest packing, else smallest cover/hitter
      auto& payload = std::get<SetSystemData>(inst.data);
      if (id == ProblemId::sp) {
        for (long long k = sets; k >= 0; --k) {
          payload.k = k;
          if (has_solution(inst)) break;
        }
      } else {
        long long cap = id == ProblemId::sc ? sets : ground;
        for (long long k = 0; k <= cap; ++k) {
          payload.k = k;
          if (has_solution(inst)) break;
        }
      }
      validate_instance(inst);
      return inst;
    }
    case ProblemId::ufl: {
      long long clients = p("clients", 4, 1, 8);
      long long facilities = p("facilities", 3, 1, 8);
      long long open_max = p("open_max", 3, 1, 100);
      long long service_max = p("service_max", 5, 1, 100);
      reject_unknown(params, consumed);
      UflData d;
      d.clients = numbered("c", static_cast<std::size_t>(clients));
      d.facilities = numbered("f", static_cast<std::size_t>(facilities));
      for (long long f = 0; f < facilities; ++f)
        d.open_cost.push_back(static_cast<long long>(
            rng.range(1, static_cast<std::uint64_t>(open_max))));
      for (long long c = 0; c < clients; ++c) {
        std::vector<long long> row;
        for (long long f = 0; f < facilities; ++f)
          row.push_back(static_cast<long long>(
              rng.range(0, static_cast<std::uint64_t>(service_max))));
        d.service.push_back(std::move(row));
      }
      // optimal total cost over nonempty facility subsets
      long long best = -1;
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << facilities);
           ++bits) {
        long long cost = 0;
        for (long long f = 0; f < facilities; ++f)
          if ((bits >> f) & 1) cost += d.open_cost[static_cast<std::size_t>(f)];
        for (long long c = 0; c < clients; ++c) {
          long long cheapest = -1;
          for (long long f = 0; f < facilities; ++f)
            if ((bits >> f) & 1) {
              long long s = d.service[static_cast<std::size_t>(c)]
                                     [static_cast<std::size_t>(f)];
              if (cheapest < 0 || s < cheapest) cheapest = s;
            }
          cost += cheapest;
        }
        if (best < 0 || cost < best) best = cost;
      }
      d.k = best;
      Instance inst{ProblemId::ufl, std::move(d)};
      validate_instance(inst);
      return inst;
    }
    case ProblemId::pcen:
    case ProblemId::pmed: {
      long long clients = p("clients", 4, 1, 8);
      long long facilities = p("facilities", 4, 1, 8);
      long long pp = p("p", 2, 0, facilities);
      long long service_max = p("service_max", 5, 1, 100);
      reject_unknown(params, consumed);
      CenterData d;
      d.clients = numbered("c", static_cast<std::size_t>(clients));
      d.facilities = numbered("f", static_cast<std::size_t>(facilities));
      for (long long c = 0; c < clients; ++c) {
        std::vector<long long> row;
        for (long long f = 0; f < facilities; ++f)
          row.push_back(static_cast<long long>(
              rng.range(1, static_cast<std::uint64_t>(service_max))));
        d.service.push_back(std::move(row));
      }
      d.p = pp;
      d.k = 0;
      Instance inst{id, std::move(d)};
      // optimal objective over all p-subsets via the enumerator itself
      auto& payload = std::get<CenterData>(inst.data);
      long long hi = service_max * (id == ProblemId::pcen ? 1 : clients);
      long long best = hi;
      for (long long k = 0; k <= hi; ++k) {
        payload.k = k;
        if (has_solution(inst)) {
          best = k;
          break;
        }
      }
      payload.k = best;
      validate_instance(inst);
      return inst;
    }
    case ProblemId::dhp: {
      long long n = p("vertices", 5, 2, 8);
      long long pct = p("arc_pct", 50, 0, 100);
      reject_unknown(params, consumed);
      auto draw = [&] {
        DhpData d;
        d.vertices = numbered("v", static_cast<std::size_t>(n));
        d.arcs = random_arcs(rng, static_cast<int>(n), static_cast<int>(pct));
        d.s = 0;
        d.t = static_cast<int>(n) - 1;
        Instance inst{ProblemId::dhp, std::move(d)};
        validate_instance(inst);
        return inst;
      };
      return retry(draw, has_solution);
    }
    case ProblemId::dhc: {
      long long n = p("vertices", 5, 2, 8);
      long long pct = p("arc_pct", 50, 0, 100);
      reject_unknown(params, consumed);
      auto draw = [&] {
        DhcData d;
        d.vertices = numbered("v", static_cast<std::size_t>(n));
        d.arcs = random_arcs(rng, static_cast<int>(n), static_cast<int>(pct));
        Instance inst{ProblemId::dhc, std::move(d)};
        validate_instance(inst);
        return inst;
      };
      return retry(draw, has_solution);
    }
    case ProblemId::uhp: {
      long long n = p("vertices", 5, 2, 8);
      long long pct = p("edge_pct", 60, 0, 100);
      reject_unknown(params, consumed);
      auto draw = [&] {
        UhpData d;
        d.vertices = numbered("v", static_cast<std::size_t>(n));
        d.edges = random_edges(rng, static_cast<int>(n), static_cast<int>(pct));
        d.s = 0;
        d.t = static_cast<int>(n) - 1;
        Instance inst{ProblemId::uhp, std::move(d)};
        validate_instance(inst);
        return inst;
      };
      return retry(draw, has_solution);
    }
    case ProblemId::uhc: {
      long long n = p("vertices", 5, 3, 8);
      long long pct = p("edge_pct", 60, 0, 100);
      reject_unknown(params, consumed);
      auto draw = [&] {
        UhcData d;
        d.vertices = numbered("v", static_cast<std::size_t>(n));
        d.edges = random_edges(rng, static_cast<int>(n), static_cast<int>(pct));
        Instance inst{ProblemId::uhc, std::move(d)};
        validate_instance(inst);
        return inst;
      };
      return retry(draw, has_solution);
    }
    case ProblemId::tsp: {
      long long n = p("vertices", 5, 3, 8);
      long long wmax = p("weight_max", 5, 1, 100);
      reject_unknown(params, consumed);
      TspData d;
      d.vertices = numbered("v", static_cast<std::size_t>(n));
      long long total = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          d.edges.push_back({u, v});
          long long w = static_cast<long long>(
              rng.range(1, static_cast<std::uint64_t>(wmax)));
          d.weights.push_back(w);
          total += w;
        }
      d.k = total;
      Instance inst{ProblemId::tsp, std::move(d)};
      // tighten the bound to the cheapest tour
      Budget probe;
      SolutionSet tours = enumerate_solutions(inst, probe);
      auto& payload = std::get<TspData>(inst.data);
      long long best = total;
      for (const Solution& tour : tours.items) {
        long long w = 0;
        for (std::uint32_t e : tour.indices())
          w += payload.weights[e];
        best = std::min(best, w);
      }
      payload.k = best;
      validate_instance(inst);
      return inst;
    }
    case ProblemId::stt: {
      long long n = p("vertices", 6, 1, 10);
      long long pct = p("edge_pct", 60, 0, 100);
      long long wmax = p("weight_max", 3, 1, 100);
      long long nt = p("terminals", std::min(3LL, n), 1, n);
      reject_unknown(params, consumed);
      auto draw = [&]() -> Instance {
        SttData d;
        d.vertices = numbered("v", static_cast<std::size_t>(n));
        long long total = 0;
        for (auto [u, v] :
             random_edges(rng, static_cast<int>(n), static_cast<int>(pct))) {
          d.edges.push_back({u, v});
          long long w = static_cast<long long>(
              rng.range(1, static_cast<std::uint64_t>(wmax)));
          d.weights.push_back(w);
          total += w;
        }
        std::set<int> terms;
        while (static_cast<long long>(terms.size()) < nt)
          terms.insert(
              static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        d.terminals.assign(terms.begin(), terms.end());
        d.k = -1;
        // smallest weight bound admitting a tree, if the terminals connect
        for (long long k = 0; k <= total; ++k) {
          SttData probe_data = d;
          probe_data.k = k;
          Instance probe_inst{ProblemId::stt, std::move(probe_data)};
          if (has_solution(probe_inst)) {
            d.k = k;
            break;
          }
        }
        if (d.k < 0) {
          // disconnected draw; signal infeasibility with an invalid bound
          d.k = -1;
        }
        return Instance{ProblemId::stt, std::move(d)};
      };
      auto feasible = [](const Instance& inst) {
        return std::get<SttData>(inst.data).k >= 0;
      };
      Instance inst = retry(draw, feasible);
      validate_instance(inst);
      return inst;
    }
    case ProblemId::ss: {
      long long count = p("count", 6, 1, 12);
      long long bits = p("bits", 4, 1, 30);
      reject_unknown(params, consumed);
      SsData d;
      for (long long i = 0; i < count; ++i)
        d.numbers.push_back(random_bigint(rng, static_cast<int>(bits)));
      // target realized by a nonempty random subset
      d.target = 0;
      bool any = false;
      for (long long i = 0; i < count; ++i)
        if (rng.chance(50)) {
          d.target += d.numbers[static_cast<std::size_t>(i)];
          any = true;
        }
      if (!any) d.target = d.numbers[rng.below(d.numbers.size())];
      Instance inst{ProblemId::ss, std::move(d)};
      validate_instance(inst);
      return inst;
    }
    case ProblemId::ks: {
      long long count = p("count", 6, 1, 12);
      long long bits = p("bits", 4, 1, 30);
      reject_unknown(params, consumed);
      KsData d;
      for (long long i = 0; i < count; ++i) {
        d.prices.push_back(random_bigint(rng, static_cast<int>(bits)));
        d.weights.push_back(random_bigint(rng, static_cast<int>(bits)));
      }
      // thresholds realized by a random subset
      d.min_price = 0;
      d.max_weight = 0;
      for (long long i = 0; i < count; ++i)
        if (rng.chance(50)) {
          d.min_price += d.prices[static_cast<std::size_t>(i)];
          d.max_weight += d.weights[static_cast<std::size_t>(i)];
        }
      Instance inst{ProblemId::ks, std::move(d)};
      validate_instance(inst);
      return inst;
    }
    case ProblemId::p: {
      long long count = p("count", 6, 2, 12);
      long long bits = p("bits", 4, 1, 30);
      reject_unknown(params, consumed);
      PartData d;
      for (long long i = 0; i + 1 < count; ++i)
        d.numbers.push_back(random_bigint(rng, static_cast<int>(bits)));
      // close the gap with a final element so a balanced split exists and
      // contains it
      BigInt side_a = 0, side_b = 0;
      for (const BigInt& v : d.numbers)
        (rng.chance(50) ? side_a : side_b) += v;
      d.numbers.push_back(side_a >= side_b ? side_a - side_b : side_b - side_a);
      Instance inst{ProblemId::p, std::move(d)};
      validate_instance(inst);
      return inst;
    }
    case ProblemId::tms: {
      long long count = p("count", 6, 1, 12);
      long long bits = p("bits", 4, 1, 30);
      reject_unknown(params, consumed);
      TmsData d;
      for (long long i = 0; i < count; ++i)
        d.jobs.push_back(random_bigint(rng, static_cast<int>(bits)));
      // minimal makespan with the last job pinned to machine one
      BigInt total = 0;
      for (const BigInt& v : d.jobs) total += v;
      BigInt best = total;
      std::size_t free_jobs = d.jobs.size() - 1;
      for (std::uint64_t bitsel = 0;
           bitsel < (std::uint64_t{1} << free_jobs); ++bitsel) {
        BigInt load = d.jobs.back();
        for (std::size_t i = 0; i < free_jobs; ++i)
          if ((bitsel >> i) & 1) load += d.jobs[i];
        BigInt other = total - load;
        BigInt makespan = load > other ? load : other;
        if (makespan < best) best = makespan;
      }
      d.bound = best;
      Instance inst{ProblemId::tms, std::move(d)};
      validate_instance(inst);
      return inst;
    }
    case ProblemId::odm: {
      long long nx = p("x_size", 5, 1, 8);
      long long nyz = p("yz_size", 3, 0, 8);
      long long nt = p("triples", 8, 0, 24);
      reject_unknown(params, consumed);
      auto draw = [&]() -> Instance {
        OdmData d;
        d.xs = numbered("x", static_cast<std::size_t>(nx));
        d.ys = numbered("y", static_cast<std::size_t>(nyz));
        d.zs = numbered("z", static_cast<std::size_t>(nyz));
        std::set<std::array<int, 3>> seen;
        int budget_draws = 0;
        while (static_cast<long long>(d.triples.size()) < nt &&
               budget_draws++ < 400) {
          if (nyz == 0) break;
          std::array<int, 3> t = {
              static_cast<int>(rng.below(static_cast<std::uint64_t>(nx))),
              static_cast<int>(rng.below(static_cast<std::uint64_t>(nyz))),
              static_cast<int>(rng.below(static_cast<std::uint64_t>(nyz)))};
          if (seen.insert(t).second) d.triples.push_back(t);
        }
        for (long long i = 0; i < nx; ++i)
          d.singletons.push_back(static_cast<int>(i));
        Instance inst{ProblemId::odm, std::move(d)};
        validate_instance(inst);
        return inst;
      };
      // Require at least one matching, and that no two matchings share a
      // singleton set: downstream blow-up constructions are faithful exactly
      // on that subclass.
      auto determined = [](const Instance& inst) {
        Budget probe;
        SolutionSet sols = enumerate_solutions(inst, probe);
        if (sols.items.empty()) return false;
        const auto& d = std::get<OdmData>(inst.data);
        const std::uint32_t nt = static_cast<std::uint32_t>(d.triples.size());
        std::set<std::vector<std::uint32_t>> singleton_sets;
        for (const auto& s : sols.items) {
          std::vector<std::uint32_t> key;
          for (std::uint32_t i : s.indices())
            if (i >= nt) key.push_back(i);
          if (!singleton_sets.insert(std::move(key)).second) return false;
        }
        return true;
      };
      return retry(draw, determined);
    }
    case ProblemId::dm: {
      long long nxyz = p("size", 3, 1, 8);
      long long nt = p("triples", 7, 1, 24);
      reject_unknown(params, consumed);
      auto draw = [&]() -> Instance {
        DmData d;
        d.xs = numbered("x", static_cast<std::size_t>(nxyz));
        d.ys = numbered("y", static_cast<std::size_t>(nxyz));
        d.zs = numbered("z", static_cast<std::size_t>(nxyz));
        std::set<std::array<int, 3>> seen;
        int budget_draws = 0;
        while (static_cast<long long>(d.triples.size()) < nt &&
               budget_draws++ < 400) {
          std::array<int, 3> t = {
              static_cast<int>(rng.below(static_cast<std::uint64_t>(nxyz))),
              static_cast<int>(rng.below(static_cast<std::uint64_t>(nxyz))),
              static_cast<int>(rng.below(static_cast<std::uint64_t>(nxyz)))};
          if (seen.insert(t).second) d.triples.push_back(t);
        }
        Instance inst{ProblemId::dm, std::move(d)};
        validate_instance(inst);
        return inst;
      };
      return retry(draw, has_solution);
    }
  }
  throw SspError(ErrorCode::internal_error, "unhandled generator kind");
}

}  // namespace sspforge
