// Problem catalog: names, payload validation, canonical universes, and
// solution verification for all 31 problem kinds.
#include "sspforge/problems.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sspforge {

namespace {

struct NameEntry {
  ProblemId id;
  std::string_view name;
};

constexpr NameEntry kNames[] = {
    {ProblemId::sat, "sat"},   {ProblemId::tsat, "tsat"},
    {ProblemId::esat, "esat"}, {ProblemId::osat, "osat"},
    {ProblemId::vc, "vc"},     {ProblemId::mvc, "mvc"},
    {ProblemId::ds, "ds"},     {ProblemId::mds, "mds"},
    {ProblemId::mis, "mis"},   {ProblemId::cq, "cq"},
    {ProblemId::sp, "sp"},     {ProblemId::sc, "sc"},
    {ProblemId::hs, "hs"},     {ProblemId::fvs, "fvs"},
    {ProblemId::fas, "fas"},   {ProblemId::ufl, "ufl"},
    {ProblemId::pcen, "pcen"}, {ProblemId::pmed, "pmed"},
    {ProblemId::vcv, "vcv"},   {ProblemId::dhp, "dhp"},
    {ProblemId::dhc, "dhc"},   {ProblemId::uhp, "uhp"},
    {ProblemId::uhc, "uhc"},   {ProblemId::tsp, "tsp"},
    {ProblemId::stt, "stt"},   {ProblemId::ss, "ss"},
    {ProblemId::ks, "ks"},     {ProblemId::p, "p"},
    {ProblemId::tms, "tms"},   {ProblemId::odm, "odm"},
    {ProblemId::dm, "dm"},
};

[[noreturn]] void invalid(const std::string& msg) {
  throw SspError(ErrorCode::invalid_instance, msg);
}

bool name_ok(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '{' || c == '}' || c == '(' || c == ')' || c == ',' ||
        c == ' ' || c == '\t' || c == '\n' || c == '\r')
      return false;
  return true;
}

void check_names(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!name_ok(n)) invalid(std::string(what) + " name invalid: '" + n + "'");
    if (!seen.insert(n).second)
      invalid(std::string(what) + " name duplicated: '" + n + "'");
  }
}

void check_index(int i, std::size_t n, const char* what) {
  if (i < 0 || static_cast<std::size_t>(i) >= n)
    invalid(std::string(what) + " index out of range");
}

// Shared validation for undirected edge lists: valid endpoints, no loops,
// no duplicate edges.
void check_edges(const std::vector<std::array<int, 2>>& edges,
                 std::size_t nv) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    check_index(u, nv, "edge endpoint");
    check_index(v, nv, "edge endpoint");
    if (u == v) invalid("self-loop edges are not supported");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      invalid("duplicate edge");
  }
}

void check_arcs(const std::vector<std::array<int, 2>>& arcs, std::size_t nv) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : arcs) {
    check_index(u, nv, "arc endpoint");
    check_index(v, nv, "arc endpoint");
    if (u == v) invalid("self-loop arcs are not supported");
    if (!seen.insert({u, v}).second) invalid("duplicate arc");
  }
}

void check_clauses(const CnfData& d, ProblemId kind) {
  for (const auto& cl : d.clauses) {
    if (kind == ProblemId::tsat && cl.size() > 3)
      invalid("clause exceeds three literals");
    if ((kind == ProblemId::esat || kind == ProblemId::osat) && cl.size() != 3)
      invalid("clause must have exactly three literals");
    std::unordered_set<int> vars_in_clause;
    for (int lit : cl) {
      if (lit == 0) invalid("zero literal");
      int v = lit > 0 ? lit : -lit;
      if (static_cast<std::size_t>(v) > d.vars.size())
        invalid("literal references unknown variable");
      if (!vars_in_clause.insert(v).second)
        invalid("clause repeats a variable");
    }
  }
  for (const auto& n : d.vars)
    if (!n.empty() && n[0] == '!')
      invalid("variable names must not start with '!'");
}

void check_nonneg(const BigInt& v, const char* what) {
  if (v < 0) invalid(std::string(what) + " must be non-negative");
}

// ---- small graph helpers used by verifiers --------------------------------

std::vector<std::vector<int>> adjacency(std::size_t nv,
                                        const std::vector<std::array<int, 2>>& edges) {
  std::vector<std::vector<int>> adj(nv);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// True when the digraph restricted to `keep_vertex` / `keep_arc` is acyclic.
bool restricted_acyclic(std::size_t nv,
                        const std::vector<std::array<int, 2>>& arcs,
                        const std::vector<bool>* drop_vertex,
                        const std::vector<bool>* drop_arc) {
  std::vector<std::vector<int>> out(nv);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (drop_arc && (*drop_arc)[a]) continue;
    int u = arcs[a][0], v = arcs[a][1];
    if (drop_vertex && ((*drop_vertex)[u] || (*drop_vertex)[v])) continue;
    out[u].push_back(v);
  }
  // Iterative three-color DFS cycle detection.
  std::vector<int> color(nv, 0);
  for (std::size_t s = 0; s < nv; ++s) {
    if (color[s] != 0) continue;
    if (drop_vertex && (*drop_vertex)[s]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(s), 0}};
    color[s] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < out[v].size()) {
        int w = out[v][i++];
        if (color[w] == 1) return false;
        if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

std::string_view problem_name(ProblemId id) {
  for (const auto& e : kNames)
    if (e.id == id) return e.name;
  throw SspError(ErrorCode::internal_error, "unknown problem id");
}

std::optional<ProblemId> problem_from_name(std::string_view name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.id;
  return std::nullopt;
}

std::vector<ProblemId> all_problems() {
  std::vector<ProblemId> out;
  for (const auto& e : kNames) out.push_back(e.id);
  return out;
}

// ---------------------------------------------------------------------------
// validate_instance

void validate_instance(const Instance& inst) {
  switch (inst.kind) {
    case ProblemId::sat:
    case ProblemId::tsat:
    case ProblemId::esat:
    case ProblemId::osat: {
      const auto& d = std::get<CnfData>(inst.data);
      check_names(d.vars, "variable");
      check_clauses(d, inst.kind);
      break;
    }
    case ProblemId::vc:
    case ProblemId::mvc:
    case ProblemId::ds:
    case ProblemId::mds:
    case ProblemId::mis:
    case ProblemId::cq: {
      const auto& d = std::get<GraphKData>(inst.data);
      check_names(d.vertices, "vertex");
      check_edges(d.edges, d.vertices.size());
      if (d.k < 0) invalid("k must be non-negative");
      break;
    }
    case ProblemId::vcv: {
      const auto& d = std::get<VcvData>(inst.data);
      check_names(d.vertices, "vertex");
      check_edges(d.edges, d.vertices.size());
      if (d.k < 0) invalid("k must be non-negative");
      check_index(d.fixed, d.vertices.size(), "fixed vertex");
      break;
    }
    case ProblemId::fvs:
    case ProblemId::fas: {
      const auto& d = std::get<DigraphKData>(inst.data);
      check_names(d.vertices, "vertex");
      check_arcs(d.arcs, d.vertices.size());
      if (d.k < 0) invalid("k must be non-negative");
      break;
    }
    case ProblemId::sp:
    case ProblemId::sc:
    case ProblemId::hs: {
      const auto& d = std::get<SetSystemData>(inst.data);
      check_names(d.ground, "ground element");
      for (const auto& s : d.sets) {
        std::unordered_set<int> seen;
        for (int e : s) {
          check_index(e, d.ground.size(), "set element");
          if (!seen.insert(e).second) invalid("set repeats an element");
        }
      }
      if (d.k < 0) invalid("k must be non-negative");
      break;
    }
    case ProblemId::ufl: {
      const auto& d = std::get<UflData>(inst.data);
      check_names(d.clients, "client");
      check_names(d.facilities, "facility");
      if (d.open_cost.size() != d.facilities.size())
        invalid("open_cost size mismatch");
      if (d.service.size() != d.clients.size())
        invalid("service_cost row count mismatch");
      for (const auto& row : d.service)
        if (row.size() != d.facilities.size())
          invalid("service_cost column count mismatch");
      for (auto c : d.open_cost)
        if (c < 0) invalid("open cost must be non-negative");
      for (const auto& row : d.service)
        for (auto c : row)
          if (c < 0) invalid("service cost must be non-negative");
      if (d.k < 0) invalid("k must be non-negative");
      break;
    }
    case ProblemId::pcen:
    case ProblemId::pmed: {
      const auto& d = std::get<CenterData>(inst.data);
      check_names(d.clients, "client");
      check_names(d.facilities, "facility");
      if (d.service.size() != d.clients.size())
        invalid("service_cost row count mismatch");
      for (const auto& row : d.service)
        if (row.size() != d.facilities.size())
          invalid("service_cost column count mismatch");
      for (const auto& row : d.service)
        for (auto c : row)
          if (c < 0) invalid("service cost must be non-negative");
      if (d.p < 0 || static_cast<std::size_t>(d.p) > d.facilities.size())
        invalid("p out of range");
      if (d.k < 0) invalid("k must be non-negative");
      break;
    }
    case ProblemId::dhp: {
      const auto& d = std::get<DhpData>(inst.data);
      check_names(d.vertices, "vertex");
      check_arcs(d.arcs, d.vertices.size());
      check_index(d.s, d.vertices.size(), "path start");
      check_index(d.t, d.vertices.size(), "path end");
      if (d.s == d.t) invalid("path start and end must differ");
      break;
    }
    case ProblemId::dhc: {
      const auto& d = std::get<DhcData>(inst.data);
      check_names(d.vertices, "vertex");
      check_arcs(d.arcs, d.vertices.size());
      break;
    }
    case ProblemId::uhp: {
      const auto& d = std::get<UhpData>(inst.data);
      check_names(d.vertices, "vertex");
      check_edges(d.edges, d.vertices.size());
      check_index(d.s, d.vertices.size(), "path start");
      check_index(d.t, d.vertices.size(), "path end");
      if (d.s == d.t) invalid("path start and end must differ");
      break;
    }
    case ProblemId::uhc: {
      const auto& d = std::get<UhcData>(inst.data);
      check_names(d.vertices, "vertex");
      check_edges(d.edges, d.vertices.size());
      break;
    }
    case ProblemId::tsp: {
      const auto& d = std::get<TspData>(inst.data);
      check_names(d.vertices, "vertex");
      check_edges(d.edges, d.vertices.size());
      if (d.weights.size() != d.edges.size()) invalid("weight count mismatch");
      for (auto w : d.weights)
        if (w < 0) invalid("weights must be non-negative");
      if (d.k < 0) invalid("k must be non-negative");
      break;
    }
    case ProblemId::stt: {
      const auto& d = std::get<SttData>(inst.data);
      check_names(d.vertices, "vertex");
      check_edges(d.edges, d.vertices.size());
      if (d.weights.size() != d.edges.size()) invalid("weight count mismatch");
      for (auto w : d.weights)
        if (w < 0) invalid("weights must be non-negative");
      if (d.terminals.empty()) invalid("at least one terminal required");
      std::unordered_set<int> seen;
      for (int t : d.terminals) {
        check_index(t, d.vertices.size(), "terminal");
        if (!seen.insert(t).second) invalid("duplicate terminal");
      }
      if (d.k < 0) invalid("k must be non-negative");
      break;
    }
    case ProblemId::ss: {
      const auto& d = std::get<SsData>(inst.data);
      for (const auto& n : d.numbers) check_nonneg(n, "number");
      check_nonneg(d.target, "target");
      break;
    }
    case ProblemId::ks: {
      const auto& d = std::get<KsData>(inst.data);
      if (d.prices.size() != d.weights.size())
        invalid("object price/weight count mismatch");
      for (const auto& v : d.prices) check_nonneg(v, "price");
      for (const auto& v : d.weights) check_nonneg(v, "weight");
      check_nonneg(d.min_price, "price threshold");
      check_nonneg(d.max_weight, "weight threshold");
      break;
    }
    case ProblemId::p: {
      const auto& d = std::get<PartData>(inst.data);
      if (d.numbers.empty()) invalid("at least one number required");
      for (const auto& n : d.numbers) check_nonneg(n, "number");
      break;
    }
    case ProblemId::tms: {
      const auto& d = std::get<TmsData>(inst.data);
      if (d.jobs.empty()) invalid("at least one job required");
      for (const auto& n : d.jobs) check_nonneg(n, "job length");
      check_nonneg(d.bound, "makespan bound");
      break;
    }
    case ProblemId::odm: {
      const auto& d = std::get<OdmData>(inst.data);
      check_names(d.xs, "x element");
      check_names(d.ys, "y element");
      check_names(d.zs, "z element");
      for (auto [x, y, z] : d.triples) {
        check_index(x, d.xs.size(), "triple x");
        check_index(y, d.ys.size(), "triple y");
        check_index(z, d.zs.size(), "triple z");
      }
      std::unordered_set<int> seen;
      for (int s : d.singletons) {
        check_index(s, d.xs.size(), "singleton");
        if (!seen.insert(s).second) invalid("duplicate singleton");
      }
      if (!d.phi.empty()) {
        if (d.phi.size() != d.singletons.size())
          invalid("phi size must match singleton count");
        for (int t : d.phi)
          if (t < -1 || t >= static_cast<int>(d.triples.size()))
            invalid("phi triple index out of range");
      }
      break;
    }
    case ProblemId::dm: {
      const auto& d = std::get<DmData>(inst.data);
      check_names(d.xs, "x element");
      check_names(d.ys, "y element");
      check_names(d.zs, "z element");
      for (auto [x, y, z] : d.triples) {
        check_index(x, d.xs.size(), "triple x");
        check_index(y, d.ys.size(), "triple y");
        check_index(z, d.zs.size(), "triple z");
      }
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// canonical_universe

namespace {

std::string edge_name(const std::vector<std::string>& vertices, int u, int v) {
  if (u > v) std::swap(u, v);
  return "{" + vertices[u] + "," + vertices[v] + "}";
}

std::string arc_name(const std::vector<std::string>& vertices, int u, int v) {
  return "(" + vertices[u] + "," + vertices[v] + ")";
}

std::vector<std::string> indexed_names(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(prefix + std::to_string(i + 1));
  return out;
}

}  // namespace

std::vector<std::string> canonical_universe(const Instance& inst) {
  std::vector<std::string> u;
  switch (inst.kind) {
    case ProblemId::sat:
    case ProblemId::tsat:
    case ProblemId::esat:
    case ProblemId::osat: {
      const auto& d = std::get<CnfData>(inst.data);
      for (const auto& v : d.vars) {
        u.push_back(v);
        u.push_back("!" + v);
      }
      break;
    }
    case ProblemId::vc:
    case ProblemId::mvc:
    case ProblemId::ds:
    case ProblemId::mds:
    case ProblemId::mis:
    case ProblemId::cq:
      u = std::get<GraphKData>(inst.data).vertices;
      break;
    case ProblemId::vcv:
      u = std::get<VcvData>(inst.data).vertices;
      break;
    case ProblemId::fvs:
      u = std::get<DigraphKData>(inst.data).vertices;
      break;
    case ProblemId::fas: {
      const auto& d = std::get<DigraphKData>(inst.data);
      for (auto [a, b] : d.arcs) u.push_back(arc_name(d.vertices, a, b));
      break;
    }
    case ProblemId::sp:
    case ProblemId::sc:
      u = indexed_names("s", std::get<SetSystemData>(inst.data).sets.size());
      break;
    case ProblemId::hs:
      u = std::get<SetSystemData>(inst.data).ground;
      break;
    case ProblemId::ufl:
      u = std::get<UflData>(inst.data).facilities;
      break;
    case ProblemId::pcen:
    case ProblemId::pmed:
      u = std::get<CenterData>(inst.data).facilities;
      break;
    case ProblemId::dhp: {
      const auto& d = std::get<DhpData>(inst.data);
      for (auto [a, b] : d.arcs) u.push_back(arc_name(d.vertices, a, b));
      break;
    }
    case ProblemId::dhc: {
      const auto& d = std::get<DhcData>(inst.data);
      for (auto [a, b] : d.arcs) u.push_back(arc_name(d.vertices, a, b));
      break;
    }
    case ProblemId::uhp: {
      const auto& d = std::get<UhpData>(inst.data);
      for (auto [a, b] : d.edges) u.push_back(edge_name(d.vertices, a, b));
      break;
    }
    case ProblemId::uhc: {
      const auto& d = std::get<UhcData>(inst.data);
      for (auto [a, b] : d.edges) u.push_back(edge_name(d.vertices, a, b));
      break;
    }
    case ProblemId::tsp: {
      const auto& d = std::get<TspData>(inst.data);
      for (auto [a, b] : d.edges) u.push_back(edge_name(d.vertices, a, b));
      break;
    }
    case ProblemId::stt: {
      const auto& d = std::get<SttData>(inst.data);
      for (auto [a, b] : d.edges) u.push_back(edge_name(d.vertices, a, b));
      break;
    }
    case ProblemId::ss:
      u = indexed_names("a", std::get<SsData>(inst.data).numbers.size());
      break;
    case ProblemId::ks:
      u = indexed_names("o", std::get<KsData>(inst.data).prices.size());
      break;
    case ProblemId::p:
      u = indexed_names("a", std::get<PartData>(inst.data).numbers.size());
      break;
    case ProblemId::tms:
      u = indexed_names("j", std::get<TmsData>(inst.data).jobs.size());
      break;
    case ProblemId::odm: {
      const auto& d = std::get<OdmData>(inst.data);
      u = indexed_names("t", d.triples.size());
      auto w = indexed_names("w", d.singletons.size());
      u.insert(u.end(), w.begin(), w.end());
      break;
    }
    case ProblemId::dm:
      u = indexed_names("t", std::get<DmData>(inst.data).triples.size());
      break;
  }
  return u;
}

std::size_t universe_size(const Instance& inst) {
  switch (inst.kind) {
    case ProblemId::sat:
    case ProblemId::tsat:
    case ProblemId::esat:
    case ProblemId::osat:
      return 2 * std::get<CnfData>(inst.data).vars.size();
    case ProblemId::vc:
    case ProblemId::mvc:
    case ProblemId::ds:
    case ProblemId::mds:
    case ProblemId::mis:
    case ProblemId::cq:
      return std::get<GraphKData>(inst.data).vertices.size();
    case ProblemId::vcv:
      return std::get<VcvData>(inst.data).vertices.size();
    case ProblemId::fvs:
      return std::get<DigraphKData>(inst.data).vertices.size();
    case ProblemId::fas:
      return std::get<DigraphKData>(inst.data).arcs.size();
    case ProblemId::sp:
    case ProblemId::sc:
      return std::get<SetSystemData>(inst.data).sets.size();
    case ProblemId::hs:
      return std::get<SetSystemData>(inst.data).ground.size();
    case ProblemId::ufl:
      return std::get<UflData>(inst.data).facilities.size();
    case ProblemId::pcen:
    case ProblemId::pmed:
      return std::get<CenterData>(inst.data).facilities.size();
    case ProblemId::dhp:
      return std::get<DhpData>(inst.data).arcs.size();
    case ProblemId::dhc:
      return std::get<DhcData>(inst.data).arcs.size();
    case ProblemId::uhp:
      return std::get<UhpData>(inst.data).edges.size();
    case ProblemId::uhc:
      return std::get<UhcData>(inst.data).edges.size();
    case ProblemId::tsp:
      return std::get<TspData>(inst.data).edges.size();
    case ProblemId::stt:
      return std::get<SttData>(inst.data).edges.size();
    case ProblemId::ss:
      return std::get<SsData>(inst.data).numbers.size();
    case ProblemId::ks:
      return std::get<KsData>(inst.data).prices.size();
    case ProblemId::p:
      return std::get<PartData>(inst.data).numbers.size();
    case ProblemId::tms:
      return std::get<TmsData>(inst.data).jobs.size();
    case ProblemId::odm: {
      const auto& d = std::get<OdmData>(inst.data);
      return d.triples.size() + d.singletons.size();
    }
    case ProblemId::dm:
      return std::get<DmData>(inst.data).triples.size();
  }
  throw SspError(ErrorCode::internal_error, "unknown problem id");
}

// ---------------------------------------------------------------------------
// verify_solution

namespace {

// total assignment: exactly one of each literal pair selected
bool assignment_shape_ok(const CnfData& d, const Solution& s) {
  for (std::size_t i = 0; i < d.vars.size(); ++i)
    if (s.test(2 * i) == s.test(2 * i + 1)) return false;
  return true;
}

// literal truth under a total assignment
bool literal_true(const Solution& s, int lit) {
  std::size_t var = static_cast<std::size_t>(lit > 0 ? lit : -lit) - 1;
  return lit > 0 ? s.test(2 * var) : s.test(2 * var + 1);
}

bool verify_cnf(const CnfData& d, ProblemId kind, const Solution& s) {
  if (!assignment_shape_ok(d, s)) return false;
  for (const auto& cl : d.clauses) {
    int sat = 0;
    for (int lit : cl)
      if (literal_true(s, lit)) ++sat;
    if (kind == ProblemId::osat ? sat != 1 : sat == 0) return false;
  }
  return true;
}

bool covers_all_edges(const std::vector<std::array<int, 2>>& edges,
                      const Solution& s) {
  for (auto [u, v] : edges)
    if (!s.test(u) && !s.test(v)) return false;
  return true;
}

bool dominates_all(std::size_t nv, const std::vector<std::array<int, 2>>& edges,
                   const Solution& s) {
  std::vector<bool> dom(nv, false);
  for (std::size_t v = 0; v < nv; ++v)
    if (s.test(v)) dom[v] = true;
  for (auto [u, v] : edges) {
    if (s.test(u)) dom[v] = true;
    if (s.test(v)) dom[u] = true;
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (!dom[v]) return false;
  return true;
}

bool independent(const std::vector<std::array<int, 2>>& edges,
                 const Solution& s) {
  for (auto [u, v] : edges)
    if (s.test(u) && s.test(v)) return false;
  return true;
}

bool clique(std::size_t nv, const std::vector<std::array<int, 2>>& edges,
            const Solution& s) {
  std::set<std::pair<int, int>> have;
  for (auto [u, v] : edges)
    have.insert(std::minmax(u, v));
  auto idx = s.indices();
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (!have.count(std::minmax<int>(idx[i], idx[j]))) return false;
  (void)nv;
  return true;
}

// Checks that the arc subset forms a Hamiltonian path from s to t.
bool directed_ham_path(std::size_t nv,
                       const std::vector<std::array<int, 2>>& arcs, int s,
                       int t, const Solution& sol) {
  if (sol.count() != nv - 1) return false;
  std::vector<int> nxt(nv, -1);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (!sol.test(a)) continue;
    if (nxt[arcs[a][0]] != -1) return false;  // out-degree two
    nxt[arcs[a][0]] = arcs[a][1];
  }
  std::vector<bool> seen(nv, false);
  int cur = s;
  seen[cur] = true;
  for (std::size_t step = 0; step + 1 < nv; ++step) {
    cur = nxt[cur];
    if (cur < 0 || seen[cur]) return false;
    seen[cur] = true;
  }
  return cur == t;
}

bool directed_ham_cycle(std::size_t nv,
                        const std::vector<std::array<int, 2>>& arcs,
                        const Solution& sol) {
  if (nv == 0 || sol.count() != nv) return false;
  std::vector<int> nxt(nv, -1);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (!sol.test(a)) continue;
    if (nxt[arcs[a][0]] != -1) return false;
    nxt[arcs[a][0]] = arcs[a][1];
  }
  std::vector<bool> seen(nv, false);
  int cur = 0;
  for (std::size_t step = 0; step < nv; ++step) {
    if (cur < 0 || (step > 0 && seen[cur])) return false;
    seen[cur] = true;
    cur = nxt[cur];
    if (cur < 0) return false;
  }
  return cur == 0;
}

bool undirected_ham_path(std::size_t nv,
                         const std::vector<std::array<int, 2>>& edges, int s,
                         int t, const Solution& sol) {
  if (sol.count() != nv - 1) return false;
  std::vector<std::vector<int>> adj(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!sol.test(e)) continue;
    adj[edges[e][0]].push_back(edges[e][1]);
    adj[edges[e][1]].push_back(edges[e][0]);
  }
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t want = (static_cast<int>(v) == s || static_cast<int>(v) == t)
                           ? 1
                           : 2;
    if (adj[v].size() != want) return false;
  }
  // walk from s; degree conditions + edge count make a single s-t path the
  // only possibility once the walk covers every vertex
  std::vector<bool> seen(nv, false);
  int cur = s, prev = -1;
  seen[cur] = true;
  std::size_t visited = 1;
  while (cur != t) {
    int nxt = -1;
    for (int w : adj[cur])
      if (w != prev) nxt = w;
    if (nxt < 0 || seen[nxt]) return false;
    prev = cur;
    cur = nxt;
    seen[cur] = true;
    ++visited;
  }
  return visited == nv;
}

bool undirected_ham_cycle(std::size_t nv,
                          const std::vector<std::array<int, 2>>& edges,
                          const Solution& sol) {
  if (nv < 3 || sol.count() != nv) return false;
  std::vector<std::vector<int>> adj(nv);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!sol.test(e)) continue;
    adj[edges[e][0]].push_back(edges[e][1]);
    adj[edges[e][1]].push_back(edges[e][0]);
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (adj[v].size() != 2) return false;
  std::vector<bool> seen(nv, false);
  int cur = 0, prev = -1;
  std::size_t visited = 0;
  do {
    seen[cur] = true;
    ++visited;
    int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
  } while (cur != 0 && !seen[cur]);
  return cur == 0 && visited == nv;
}

bool steiner_tree_ok(const SttData& d, const Solution& sol) {
  auto idx = sol.indices();
  long long weight = 0;
  for (auto e : idx) weight += d.weights[e];
  if (weight > d.k) return false;
  if (idx.empty()) return d.terminals.size() == 1;
  // collect touched vertices
  std::set<int> verts;
  for (auto e : idx) {
    verts.insert(d.edges[e][0]);
    verts.insert(d.edges[e][1]);
  }
  // tree test: |E| = |V| - 1 and connected
  if (idx.size() + 1 != verts.size()) return false;
  std::map<int, std::vector<int>> adj;
  for (auto e : idx) {
    adj[d.edges[e][0]].push_back(d.edges[e][1]);
    adj[d.edges[e][1]].push_back(d.edges[e][0]);
  }
  std::set<int> seen;
  std::vector<int> stack{*verts.begin()};
  seen.insert(*verts.begin());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  if (seen.size() != verts.size()) return false;
  for (int t : d.terminals)
    if (!verts.count(t)) return false;
  return true;
}

bool odm_cover_ok(const OdmData& d, const Solution& sol) {
  std::vector<int> cx(d.xs.size(), 0), cy(d.ys.size(), 0), cz(d.zs.size(), 0);
  std::size_t nt = d.triples.size();
  for (std::size_t i = 0; i < nt; ++i)
    if (sol.test(i)) {
      ++cx[d.triples[i][0]];
      ++cy[d.triples[i][1]];
      ++cz[d.triples[i][2]];
    }
  for (std::size_t i = 0; i < d.singletons.size(); ++i)
    if (sol.test(nt + i)) ++cx[d.singletons[i]];
  for (int c : cx)
    if (c != 1) return false;
  for (int c : cy)
    if (c != 1) return false;
  for (int c : cz)
    if (c != 1) return false;
  return true;
}

bool dm_cover_ok(const DmData& d, const Solution& sol) {
  std::vector<int> cx(d.xs.size(), 0), cy(d.ys.size(), 0), cz(d.zs.size(), 0);
  for (std::size_t i = 0; i < d.triples.size(); ++i)
    if (sol.test(i)) {
      ++cx[d.triples[i][0]];
      ++cy[d.triples[i][1]];
      ++cz[d.triples[i][2]];
    }
  for (int c : cx)
    if (c != 1) return false;
  for (int c : cy)
    if (c != 1) return false;
  for (int c : cz)
    if (c != 1) return false;
  return true;
}

}  // namespace

bool verify_solution(const Instance& inst, const Solution& s) {
  if (s.universe_size() != universe_size(inst))
    throw SspError(ErrorCode::invalid_instance,
                   "solution width does not match instance universe");
  switch (inst.kind) {
    case ProblemId::sat:
    case ProblemId::tsat:
    case ProblemId::esat:
    case ProblemId::osat:
      return verify_cnf(std::get<CnfData>(inst.data), inst.kind, s);

    case ProblemId::vc: {
      const auto& d = std::get<GraphKData>(inst.data);
      return s.count() <= static_cast<std::size_t>(d.k) &&
             covers_all_edges(d.edges, s);
    }
    case ProblemId::mvc: {
      const auto& d = std::get<GraphKData>(inst.data);
      return s.count() == static_cast<std::size_t>(d.k) &&
             covers_all_edges(d.edges, s);
    }
    case ProblemId::ds: {
      const auto& d = std::get<GraphKData>(inst.data);
      return s.count() <= static_cast<std::size_t>(d.k) &&
             dominates_all(d.vertices.size(), d.edges, s);
    }
    case ProblemId::mds: {
      const auto& d = std::get<GraphKData>(inst.data);
      return s.count() == static_cast<std::size_t>(d.k) &&
             dominates_all(d.vertices.size(), d.edges, s);
    }
    case ProblemId::mis: {
      const auto& d = std::get<GraphKData>(inst.data);
      return s.count() == static_cast<std::size_t>(d.k) &&
             independent(d.edges, s);
    }
    case ProblemId::cq: {
      const auto& d = std::get<GraphKData>(inst.data);
      return s.count() == static_cast<std::size_t>(d.k) &&
             clique(d.vertices.size(), d.edges, s);
    }
    case ProblemId::vcv: {
      const auto& d = std::get<VcvData>(inst.data);
      return s.count() == static_cast<std::size_t>(d.k) && s.test(d.fixed) &&
             covers_all_edges(d.edges, s);
    }
    case ProblemId::sp: {
      const auto& d = std::get<SetSystemData>(inst.data);
      if (s.count() != static_cast<std::size_t>(d.k)) return false;
      std::vector<int> used(d.ground.size(), 0);
      for (auto i : s.indices())
        for (int e : d.sets[i])
          if (++used[e] > 1) return false;
      return true;
    }
    case ProblemId::sc: {
      const auto& d = std::get<SetSystemData>(inst.data);
      if (d.exact ? s.count() != static_cast<std::size_t>(d.k)
                  : s.count() > static_cast<std::size_t>(d.k))
        return false;
      std::vector<bool> cov(d.ground.size(), false);
      for (auto i : s.indices())
        for (int e : d.sets[i]) cov[e] = true;
      for (bool c : cov)
        if (!c) return false;
      return true;
    }
    case ProblemId::hs: {
      const auto& d = std::get<SetSystemData>(inst.data);
      if (d.exact ? s.count() != static_cast<std::size_t>(d.k)
                  : s.count() > static_cast<std::size_t>(d.k))
        return false;
      for (const auto& set : d.sets) {
        bool hit = false;
        for (int e : set)
          if (s.test(e)) hit = true;
        if (!hit) return false;
      }
      return true;
    }
    case ProblemId::fvs: {
      const auto& d = std::get<DigraphKData>(inst.data);
      if (s.count() != static_cast<std::size_t>(d.k)) return false;
      std::vector<bool> drop(d.vertices.size(), false);
      for (auto i : s.indices()) drop[i] = true;
      return restricted_acyclic(d.vertices.size(), d.arcs, &drop, nullptr);
    }
    case ProblemId::fas: {
      const auto& d = std::get<DigraphKData>(inst.data);
      if (s.count() != static_cast<std::size_t>(d.k)) return false;
      std::vector<bool> drop(d.arcs.size(), false);
      for (auto i : s.indices()) drop[i] = true;
      return restricted_acyclic(d.vertices.size(), d.arcs, nullptr, &drop);
    }
    case ProblemId::ufl: {
      const auto& d = std::get<UflData>(inst.data);
      auto open = s.indices();
      if (open.empty()) return d.clients.empty() && 0 <= d.k;
      long long cost = 0;
      for (auto j : open) cost += d.open_cost[j];
      for (std::size_t i = 0; i < d.clients.size(); ++i) {
        long long best = -1;
        for (auto j : open)
          if (best < 0 || d.service[i][j] < best) best = d.service[i][j];
        cost += best;
      }
      return cost <= d.k;
    }
    case ProblemId::pcen:
    case ProblemId::pmed: {
      const auto& d = std::get<CenterData>(inst.data);
      auto open = s.indices();
      if (open.size() != static_cast<std::size_t>(d.p)) return false;
      if (open.empty()) return d.clients.empty();
      long long agg = 0;
      for (std::size_t i = 0; i < d.clients.size(); ++i) {
        long long best = -1;
        for (auto j : open)
          if (best < 0 || d.service[i][j] < best) best = d.service[i][j];
        if (inst.kind == ProblemId::pcen)
          agg = std::max(agg, best);
        else
          agg += best;
      }
      return agg <= d.k;
    }
    case ProblemId::dhp: {
      const auto& d = std::get<DhpData>(inst.data);
      return directed_ham_path(d.vertices.size(), d.arcs, d.s, d.t, s);
    }
    case ProblemId::dhc: {
      const auto& d = std::get<DhcData>(inst.data);
      return directed_ham_cycle(d.vertices.size(), d.arcs, s);
    }
    case ProblemId::uhp: {
      const auto& d = std::get<UhpData>(inst.data);
      return undirected_ham_path(d.vertices.size(), d.edges, d.s, d.t, s);
    }
    case ProblemId::uhc: {
      const auto& d = std::get<UhcData>(inst.data);
      return undirected_ham_cycle(d.vertices.size(), d.edges, s);
    }
    case ProblemId::tsp: {
      const auto& d = std::get<TspData>(inst.data);
      if (!undirected_ham_cycle(d.vertices.size(), d.edges, s)) return false;
      long long w = 0;
      for (auto e : s.indices()) w += d.weights[e];
      return w <= d.k;
    }
    case ProblemId::stt:
      return steiner_tree_ok(std::get<SttData>(inst.data), s);
    case ProblemId::ss: {
      const auto& d = std::get<SsData>(inst.data);
      BigInt sum = 0;
      for (auto i : s.indices()) sum += d.numbers[i];
      return sum == d.target;
    }
    case ProblemId::ks: {
      const auto& d = std::get<KsData>(inst.data);
      BigInt price = 0, weight = 0;
      for (auto i : s.indices()) {
        price += d.prices[i];
        weight += d.weights[i];
      }
      return price >= d.min_price && weight <= d.max_weight;
    }
    case ProblemId::p: {
      const auto& d = std::get<PartData>(inst.data);
      if (!s.test(d.numbers.size() - 1)) return false;
      BigInt sum = 0, total = 0;
      for (const auto& n : d.numbers) total += n;
      for (auto i : s.indices()) sum += d.numbers[i];
      return sum * 2 == total;
    }
    case ProblemId::tms: {
      const auto& d = std::get<TmsData>(inst.data);
      if (!s.test(d.jobs.size() - 1)) return false;
      BigInt sum = 0, total = 0;
      for (const auto& n : d.jobs) total += n;
      for (auto i : s.indices()) sum += d.jobs[i];
      return sum <= d.bound && total - sum <= d.bound;
    }
    case ProblemId::odm:
      return odm_cover_ok(std::get<OdmData>(inst.data), s);
    case ProblemId::dm:
      return dm_cover_ok(std::get<DmData>(inst.data), s);
  }
  throw SspError(ErrorCode::internal_error, "unknown problem id");
}

// Exposed for enumerate.cpp / generate.cpp.
namespace detail {
bool restricted_acyclic_for_enum(std::size_t nv,
                                 const std::vector<std::array<int, 2>>& arcs,
                                 const std::vector<bool>* drop_vertex,
                                 const std::vector<bool>* drop_arc) {
  return restricted_acyclic(nv, arcs, drop_vertex, drop_arc);
}
std::vector<std::vector<int>> adjacency_for_enum(
    std::size_t nv, const std::vector<std::array<int, 2>>& edges) {
  return adjacency(nv, edges);
}
}  // namespace detail

}  // namespace sspforge
