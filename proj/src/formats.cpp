// Instance/solution documents and DIMACS import.  See formats.hpp for the
// contract; the schema is strict and name-based, and parse errors carry the
// offending field path.
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "sspforge/formats.hpp"

namespace sspforge {

namespace {

using njson = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& message) {
  throw SspError(ErrorCode::parse_error, "document error: " + message);
}

const njson& require_field(const njson& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) bad("missing field '" + key + "'");
  return *it;
}

void check_allowed(const njson& doc, const std::set<std::string>& allowed) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (key == "version" || key == "problem" || key == "metadata") continue;
    if (!allowed.count(key)) bad("unknown field '" + key + "'");
  }
}

long long as_integer(const njson& j, const std::string& path) {
  if (!j.is_number_integer())
    bad("expected integer at " + path);
  return j.get<long long>();
}

std::string as_string(const njson& j, const std::string& path) {
  if (!j.is_string()) bad("expected string at " + path);
  return j.get<std::string>();
}

std::vector<std::string> name_list(const njson& j, const std::string& path) {
  if (!j.is_array()) bad("expected array at " + path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::map<std::string, int> index_of(const std::vector<std::string>& names) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < names.size(); ++i)
    out.emplace(names[i], static_cast<int>(i));
  return out;
}

int resolve(const std::map<std::string, int>& index, const njson& j,
            const std::string& path) {
  std::string name = as_string(j, path);
  auto it = index.find(name);
  if (it == index.end()) bad("unknown name '" + name + "' at " + path);
  return it->second;
}

std::vector<std::array<int, 2>> pair_list(
    const njson& j, const std::map<std::string, int>& index,
    const std::string& path) {
  if (!j.is_array()) bad("expected array at " + path);
  std::vector<std::array<int, 2>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string item = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2)
      bad("expected [name, name] at " + item);
    out.push_back({resolve(index, j[i][0], item + "[0]"),
                   resolve(index, j[i][1], item + "[1]")});
  }
  return out;
}

std::vector<long long> int_list(const njson& j, const std::string& path) {
  if (!j.is_array()) bad("expected array at " + path);
  std::vector<long long> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_integer(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

BigInt parse_bigint(const njson& j, const std::string& path) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 0) bad("expected nonnegative integer at " + path);
    return BigInt(v);
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.empty()) bad("empty number string at " + path);
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        bad("expected decimal digits at " + path);
    return BigInt(s);
  }
  bad("expected integer or decimal string at " + path);
}

std::vector<BigInt> bigint_list(const njson& j, const std::string& path) {
  if (!j.is_array()) bad("expected array at " + path);
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_bigint(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

constexpr long long kJsonIntMax = (1LL << 53) - 1;

ojson emit_bigint(const BigInt& v) {
  if (v <= kJsonIntMax) return static_cast<long long>(v);
  return v.str();
}

ojson emit_bigints(const std::vector<BigInt>& vs) {
  ojson arr = ojson::array();
  for (const auto& v : vs) arr.push_back(emit_bigint(v));
  return arr;
}

ojson emit_names(const std::vector<std::string>& names) {
  ojson arr = ojson::array();
  for (const auto& n : names) arr.push_back(n);
  return arr;
}

ojson emit_pairs(const std::vector<std::array<int, 2>>& pairs,
                 const std::vector<std::string>& names) {
  ojson arr = ojson::array();
  for (auto [a, b] : pairs)
    arr.push_back(ojson::array({names[static_cast<std::size_t>(a)],
                                names[static_cast<std::size_t>(b)]}));
  return arr;
}

// Exact-cardinality kinds must carry the true optimum of their structure.
void recheck_optimum(const Instance& inst) {
  long long claimed = -1;
  switch (inst.kind) {
    case ProblemId::mvc:
    case ProblemId::mds:
    case ProblemId::mis:
    case ProblemId::cq:
      claimed = std::get<GraphKData>(inst.data).k;
      break;
    case ProblemId::vcv:
      claimed = std::get<VcvData>(inst.data).k;
      break;
    case ProblemId::fvs:
    case ProblemId::fas:
      claimed = std::get<DigraphKData>(inst.data).k;
      break;
    case ProblemId::sp: {
      const auto& d = std::get<SetSystemData>(inst.data);
      Budget budget;
      for (long long k = static_cast<long long>(d.sets.size()); k >= 0; --k) {
        Instance probe = inst;
        std::get<SetSystemData>(probe.data).k = k;
        if (enumerate_solutions(probe, budget, 1).size() > 0) {
          if (d.k != k)
            throw SspError(ErrorCode::invalid_instance,
                           "bound k=" + std::to_string(d.k) +
                               " is not the optimum (" + std::to_string(k) +
                               ") for this sp instance");
          return;
        }
      }
      return;
    }
    default:
      return;
  }
  Budget budget;
  long long optimum = minimum_cardinality(inst, budget);
  if (claimed != optimum)
    throw SspError(ErrorCode::invalid_instance,
                   "bound k=" + std::to_string(claimed) +
                       " is not the optimum (" + std::to_string(optimum) +
                       ") for this " + std::string(problem_name(inst.kind)) +
                       " instance");
}

}  // namespace

Instance parse_instance(const njson& doc) {
  if (!doc.is_object()) bad("instance document must be an object");
  const njson& version = require_field(doc, "version");
  if (!(version.is_number_integer() && version == 1))
    bad("unsupported document version");
  if (doc.contains("metadata") && !doc["metadata"].is_object())
    bad("expected object at metadata");
  std::string problem = as_string(require_field(doc, "problem"), "problem");
  auto kind = problem_from_name(problem);
  if (!kind) bad("unknown problem '" + problem + "'");

  Instance inst{*kind, CnfData{}};
  switch (*kind) {
    case ProblemId::sat:
    case ProblemId::tsat:
    case ProblemId::esat:
    case ProblemId::osat: {
      check_allowed(doc, {"vars", "clauses"});
      CnfData d;
      d.vars = name_list(require_field(doc, "vars"), "vars");
      const njson& cl = require_field(doc, "clauses");
      if (!cl.is_array()) bad("expected array at clauses");
      for (std::size_t i = 0; i < cl.size(); ++i) {
        std::string path = "clauses[" + std::to_string(i) + "]";
        if (!cl[i].is_array()) bad("expected array at " + path);
        std::vector<int> clause;
        for (std::size_t l = 0; l < cl[i].size(); ++l) {
          long long lit = as_integer(cl[i][l],
                                     path + "[" + std::to_string(l) + "]");
          clause.push_back(static_cast<int>(lit));
        }
        d.clauses.push_back(std::move(clause));
      }
      inst.data = std::move(d);
      break;
    }
    case ProblemId::vc:
    case ProblemId::mvc:
    case ProblemId::ds:
    case ProblemId::mds:
    case ProblemId::mis:
    case ProblemId::cq: {
      check_allowed(doc, {"vertices", "edges", "k"});
      GraphKData d;
      d.vertices = name_list(require_field(doc, "vertices"), "vertices");
      auto index = index_of(d.vertices);
      d.edges = pair_list(require_field(doc, "edges"), index, "edges");
      d.k = as_integer(require_field(doc, "k"), "k");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::vcv: {
      check_allowed(doc, {"vertices", "edges", "k", "fixed"});
      VcvData d;
      d.vertices = name_list(require_field(doc, "vertices"), "vertices");
      auto index = index_of(d.vertices);
      d.edges = pair_list(require_field(doc, "edges"), index, "edges");
      d.k = as_integer(require_field(doc, "k"), "k");
      d.fixed = resolve(index, require_field(doc, "fixed"), "fixed");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::fvs:
    case ProblemId::fas: {
      check_allowed(doc, {"vertices", "arcs", "k"});
      DigraphKData d;
      d.vertices = name_list(require_field(doc, "vertices"), "vertices");
      auto index = index_of(d.vertices);
      d.arcs = pair_list(require_field(doc, "arcs"), index, "arcs");
      d.k = as_integer(require_field(doc, "k"), "k");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::sp:
    case ProblemId::sc:
    case ProblemId::hs: {
      check_allowed(doc, {"ground", "sets", "k", "exact"});
      SetSystemData d;
      d.ground = name_list(require_field(doc, "ground"), "ground");
      auto index = index_of(d.ground);
      const njson& sets = require_field(doc, "sets");
      if (!sets.is_array()) bad("expected array at sets");
      for (std::size_t s = 0; s < sets.size(); ++s) {
        std::string path = "sets[" + std::to_string(s) + "]";
        if (!sets[s].is_array()) bad("expected array at " + path);
        std::vector<int> members;
        for (std::size_t m = 0; m < sets[s].size(); ++m)
          members.push_back(resolve(index, sets[s][m],
                                    path + "[" + std::to_string(m) + "]"));
        d.sets.push_back(std::move(members));
      }
      d.k = as_integer(require_field(doc, "k"), "k");
      d.exact = false;
      if (doc.contains("exact")) {
        if (!doc["exact"].is_boolean()) bad("expected boolean at exact");
        d.exact = doc["exact"].get<bool>();
      }
      inst.data = std::move(d);
      break;
    }
    case ProblemId::ufl: {
      check_allowed(doc,
                    {"clients", "facilities", "open_cost", "service_cost",
                     "k"});
      UflData d;
      d.clients = name_list(require_field(doc, "clients"), "clients");
      d.facilities = name_list(require_field(doc, "facilities"), "facilities");
      d.open_cost = int_list(require_field(doc, "open_cost"), "open_cost");
      const njson& rows = require_field(doc, "service_cost");
      if (!rows.is_array()) bad("expected array at service_cost");
      for (std::size_t r = 0; r < rows.size(); ++r)
        d.service.push_back(
            int_list(rows[r], "service_cost[" + std::to_string(r) + "]"));
      d.k = as_integer(require_field(doc, "k"), "k");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::pcen:
    case ProblemId::pmed: {
      check_allowed(doc, {"clients", "facilities", "service_cost", "p", "k"});
      CenterData d;
      d.clients = name_list(require_field(doc, "clients"), "clients");
      d.facilities = name_list(require_field(doc, "facilities"), "facilities");
      const njson& rows = require_field(doc, "service_cost");
      if (!rows.is_array()) bad("expected array at service_cost");
      for (std::size_t r = 0; r < rows.size(); ++r)
        d.service.push_back(
            int_list(rows[r], "service_cost[" + std::to_string(r) + "]"));
      d.p = as_integer(require_field(doc, "p"), "p");
      d.k = as_integer(require_field(doc, "k"), "k");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::dhp: {
      check_allowed(doc, {"vertices", "arcs", "s", "t"});
      DhpData d;
      d.vertices = name_list(require_field(doc, "vertices"), "vertices");
      auto index = index_of(d.vertices);
      d.arcs = pair_list(require_field(doc, "arcs"), index, "arcs");
      d.s = resolve(index, require_field(doc, "s"), "s");
      d.t = resolve(index, require_field(doc, "t"), "t");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::dhc: {
      check_allowed(doc, {"vertices", "arcs"});
      DhcData d;
      d.vertices = name_list(require_field(doc, "vertices"), "vertices");
      auto index = index_of(d.vertices);
      d.arcs = pair_list(require_field(doc, "arcs"), index, "arcs");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::uhp: {
      check_allowed(doc, {"vertices", "edges", "s", "t"});
      UhpData d;
      d.vertices = name_list(require_field(doc, "vertices"), "vertices");
      auto index = index_of(d.vertices);
      d.edges = pair_list(require_field(doc, "edges"), index, "edges");
      d.s = resolve(index, require_field(doc, "s"), "s");
      d.t = resolve(index, require_field(doc, "t"), "t");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::uhc: {
      check_allowed(doc, {"vertices", "edges"});
      UhcData d;
      d.vertices = name_list(require_field(doc, "vertices"), "vertices");
      auto index = index_of(d.vertices);
      d.edges = pair_list(require_field(doc, "edges"), index, "edges");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::tsp:
    case ProblemId::stt: {
      std::set<std::string> allowed = {"vertices", "edges", "k"};
      if (*kind == ProblemId::stt) allowed.insert("terminals");
      check_allowed(doc, allowed);
      std::vector<std::string> vertices =
          name_list(require_field(doc, "vertices"), "vertices");
      auto index = index_of(vertices);
      std::vector<std::array<int, 2>> edges;
      std::vector<long long> weights;
      const njson& ed = require_field(doc, "edges");
      if (!ed.is_array()) bad("expected array at edges");
      for (std::size_t e = 0; e < ed.size(); ++e) {
        std::string path = "edges[" + std::to_string(e) + "]";
        if (!ed[e].is_array() || ed[e].size() != 3)
          bad("expected [name, name, weight] at " + path);
        edges.push_back({resolve(index, ed[e][0], path + "[0]"),
                         resolve(index, ed[e][1], path + "[1]")});
        weights.push_back(as_integer(ed[e][2], path + "[2]"));
      }
      long long k = as_integer(require_field(doc, "k"), "k");
      if (*kind == ProblemId::tsp) {
        inst.data = TspData{std::move(vertices), std::move(edges),
                            std::move(weights), k};
      } else {
        std::vector<int> terminals;
        const njson& ts = require_field(doc, "terminals");
        if (!ts.is_array()) bad("expected array at terminals");
        for (std::size_t t = 0; t < ts.size(); ++t)
          terminals.push_back(
              resolve(index, ts[t], "terminals[" + std::to_string(t) + "]"));
        inst.data = SttData{std::move(vertices), std::move(edges),
                            std::move(weights), std::move(terminals), k};
      }
      break;
    }
    case ProblemId::ss: {
      check_allowed(doc, {"numbers", "target"});
      SsData d;
      d.numbers = bigint_list(require_field(doc, "numbers"), "numbers");
      d.target = parse_bigint(require_field(doc, "target"), "target");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::ks: {
      check_allowed(doc, {"objects", "min_price", "max_weight"});
      KsData d;
      const njson& objs = require_field(doc, "objects");
      if (!objs.is_array()) bad("expected array at objects");
      for (std::size_t i = 0; i < objs.size(); ++i) {
        std::string path = "objects[" + std::to_string(i) + "]";
        if (!objs[i].is_array() || objs[i].size() != 2)
          bad("expected [price, weight] at " + path);
        d.prices.push_back(parse_bigint(objs[i][0], path + "[0]"));
        d.weights.push_back(parse_bigint(objs[i][1], path + "[1]"));
      }
      d.min_price = parse_bigint(require_field(doc, "min_price"), "min_price");
      d.max_weight =
          parse_bigint(require_field(doc, "max_weight"), "max_weight");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::p: {
      check_allowed(doc, {"numbers"});
      PartData d;
      d.numbers = bigint_list(require_field(doc, "numbers"), "numbers");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::tms: {
      check_allowed(doc, {"jobs", "bound"});
      TmsData d;
      d.jobs = bigint_list(require_field(doc, "jobs"), "jobs");
      d.bound = parse_bigint(require_field(doc, "bound"), "bound");
      inst.data = std::move(d);
      break;
    }
    case ProblemId::odm:
    case ProblemId::dm: {
      std::set<std::string> allowed = {"x", "y", "z", "triples"};
      if (*kind == ProblemId::odm) {
        allowed.insert("singletons");
        allowed.insert("phi");
      }
      check_allowed(doc, allowed);
      std::vector<std::string> xs = name_list(require_field(doc, "x"), "x");
      std::vector<std::string> ys = name_list(require_field(doc, "y"), "y");
      std::vector<std::string> zs = name_list(require_field(doc, "z"), "z");
      auto xi = index_of(xs), yi = index_of(ys), zi = index_of(zs);
      std::vector<std::array<int, 3>> triples;
      const njson& ts = require_field(doc, "triples");
      if (!ts.is_array()) bad("expected array at triples");
      for (std::size_t t = 0; t < ts.size(); ++t) {
        std::string path = "triples[" + std::to_string(t) + "]";
        if (!ts[t].is_array() || ts[t].size() != 3)
          bad("expected [x, y, z] at " + path);
        triples.push_back({resolve(xi, ts[t][0], path + "[0]"),
                           resolve(yi, ts[t][1], path + "[1]"),
                           resolve(zi, ts[t][2], path + "[2]")});
      }
      if (*kind == ProblemId::dm) {
        inst.data = DmData{std::move(xs), std::move(ys), std::move(zs),
                           std::move(triples)};
      } else {
        OdmData d;
        d.xs = std::move(xs);
        d.ys = std::move(ys);
        d.zs = std::move(zs);
        d.triples = std::move(triples);
        if (doc.contains("singletons")) {
          const njson& ss = doc["singletons"];
          if (!ss.is_array()) bad("expected array at singletons");
          auto xindex = index_of(d.xs);
          for (std::size_t s = 0; s < ss.size(); ++s)
            d.singletons.push_back(
                resolve(xindex, ss[s],
                        "singletons[" + std::to_string(s) + "]"));
        }
        if (doc.contains("phi")) {
          std::vector<long long> phi = int_list(doc["phi"], "phi");
          for (std::size_t i = 0; i < phi.size(); ++i)
            d.phi.push_back(static_cast<int>(phi[i]));
        }
        inst.data = std::move(d);
      }
      break;
    }
  }
  validate_instance(inst);
  recheck_optimum(inst);
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  njson doc;
  try {
    doc = njson::parse(text);
  } catch (const njson::parse_error& e) {
    throw SspError(ErrorCode::parse_error,
                   std::string("document error: invalid JSON: ") + e.what());
  }
  return parse_instance(doc);
}

nlohmann::ordered_json serialize_instance(const Instance& inst) {
  ojson doc;
  doc["version"] = 1;
  doc["problem"] = std::string(problem_name(inst.kind));
  switch (inst.kind) {
    case ProblemId::sat:
    case ProblemId::tsat:
    case ProblemId::esat:
    case ProblemId::osat: {
      const auto& d = std::get<CnfData>(inst.data);
      doc["vars"] = emit_names(d.vars);
      ojson clauses = ojson::array();
      for (const auto& clause : d.clauses) {
        ojson arr = ojson::array();
        for (int lit : clause) arr.push_back(lit);
        clauses.push_back(std::move(arr));
      }
      doc["clauses"] = std::move(clauses);
      break;
    }
    case ProblemId::vc:
    case ProblemId::mvc:
    case ProblemId::ds:
    case ProblemId::mds:
    case ProblemId::mis:
    case ProblemId::cq: {
      const auto& d = std::get<GraphKData>(inst.data);
      doc["vertices"] = emit_names(d.vertices);
      doc["edges"] = emit_pairs(d.edges, d.vertices);
      doc["k"] = d.k;
      break;
    }
    case ProblemId::vcv: {
      const auto& d = std::get<VcvData>(inst.data);
      doc["vertices"] = emit_names(d.vertices);
      doc["edges"] = emit_pairs(d.edges, d.vertices);
      doc["k"] = d.k;
      doc["fixed"] = d.vertices[static_cast<std::size_t>(d.fixed)];
      break;
    }
    case ProblemId::fvs:
    case ProblemId::fas: {
      const auto& d = std::get<DigraphKData>(inst.data);
      doc["vertices"] = emit_names(d.vertices);
      doc["arcs"] = emit_pairs(d.arcs, d.vertices);
      doc["k"] = d.k;
      break;
    }
    case ProblemId::sp:
    case ProblemId::sc:
    case ProblemId::hs: {
      const auto& d = std::get<SetSystemData>(inst.data);
      doc["ground"] = emit_names(d.ground);
      ojson sets = ojson::array();
      for (const auto& s : d.sets) {
        ojson arr = ojson::array();
        for (int e : s) arr.push_back(d.ground[static_cast<std::size_t>(e)]);
        sets.push_back(std::move(arr));
      }
      doc["sets"] = std::move(sets);
      doc["k"] = d.k;
      if (d.exact) doc["exact"] = true;
      break;
    }
    case ProblemId::ufl: {
      const auto& d = std::get<UflData>(inst.data);
      doc["clients"] = emit_names(d.clients);
      doc["facilities"] = emit_names(d.facilities);
      ojson open = ojson::array();
      for (long long c : d.open_cost) open.push_back(c);
      doc["open_cost"] = std::move(open);
      ojson rows = ojson::array();
      for (const auto& row : d.service) {
        ojson arr = ojson::array();
        for (long long c : row) arr.push_back(c);
        rows.push_back(std::move(arr));
      }
      doc["service_cost"] = std::move(rows);
      doc["k"] = d.k;
      break;
    }
    case ProblemId::pcen:
    case ProblemId::pmed: {
      const auto& d = std::get<CenterData>(inst.data);
      doc["clients"] = emit_names(d.clients);
      doc["facilities"] = emit_names(d.facilities);
      ojson rows = ojson::array();
      for (const auto& row : d.service) {
        ojson arr = ojson::array();
        for (long long c : row) arr.push_back(c);
        rows.push_back(std::move(arr));
      }
      doc["service_cost"] = std::move(rows);
      doc["p"] = d.p;
      doc["k"] = d.k;
      break;
    }
    case ProblemId::dhp: {
      const auto& d = std::get<DhpData>(inst.data);
      doc["vertices"] = emit_names(d.vertices);
      doc["arcs"] = emit_pairs(d.arcs, d.vertices);
      doc["s"] = d.vertices[static_cast<std::size_t>(d.s)];
      doc["t"] = d.vertices[static_cast<std::size_t>(d.t)];
      break;
    }
    case ProblemId::dhc: {
      const auto& d = std::get<DhcData>(inst.data);
      doc["vertices"] = emit_names(d.vertices);
      doc["arcs"] = emit_pairs(d.arcs, d.vertices);
      break;
    }
    case ProblemId::uhp: {
      const auto& d = std::get<UhpData>(inst.data);
      doc["vertices"] = emit_names(d.vertices);
      doc["edges"] = emit_pairs(d.edges, d.vertices);
      doc["s"] = d.vertices[static_cast<std::size_t>(d.s)];
      doc["t"] = d.vertices[static_cast<std::size_t>(d.t)];
      break;
    }
    case ProblemId::uhc: {
      const auto& d = std::get<UhcData>(inst.data);
      doc["vertices"] = emit_names(d.vertices);
      doc["edges"] = emit_pairs(d.edges, d.vertices);
      break;
    }
    case ProblemId::tsp:
    case ProblemId::stt: {
      const std::vector<std::string>* vertices;
      const std::vector<std::array<int, 2>>* edges;
      const std::vector<long long>* weights;
      long long k;
      if (inst.kind == ProblemId::tsp) {
        const auto& d = std::get<TspData>(inst.data);
        vertices = &d.vertices;
        edges = &d.edges;
        weights = &d.weights;
        k = d.k;
      } else {
        const auto& d = std::get<SttData>(inst.data);
        vertices = &d.vertices;
        edges = &d.edges;
        weights = &d.weights;
        k = d.k;
      }
      doc["vertices"] = emit_names(*vertices);
      ojson arr = ojson::array();
      for (std::size_t e = 0; e < edges->size(); ++e)
        arr.push_back(ojson::array(
            {(*vertices)[static_cast<std::size_t>((*edges)[e][0])],
             (*vertices)[static_cast<std::size_t>((*edges)[e][1])],
             (*weights)[e]}));
      doc["edges"] = std::move(arr);
      if (inst.kind == ProblemId::stt) {
        const auto& d = std::get<SttData>(inst.data);
        ojson ts = ojson::array();
        for (int t : d.terminals)
          ts.push_back(d.vertices[static_cast<std::size_t>(t)]);
        doc["terminals"] = std::move(ts);
      }
      doc["k"] = k;
      break;
    }
    case ProblemId::ss: {
      const auto& d = std::get<SsData>(inst.data);
      doc["numbers"] = emit_bigints(d.numbers);
      doc["target"] = emit_bigint(d.target);
      break;
    }
    case ProblemId::ks: {
      const auto& d = std::get<KsData>(inst.data);
      ojson objs = ojson::array();
      for (std::size_t i = 0; i < d.prices.size(); ++i)
        objs.push_back(
            ojson::array({emit_bigint(d.prices[i]), emit_bigint(d.weights[i])}));
      doc["objects"] = std::move(objs);
      doc["min_price"] = emit_bigint(d.min_price);
      doc["max_weight"] = emit_bigint(d.max_weight);
      break;
    }
    case ProblemId::p: {
      const auto& d = std::get<PartData>(inst.data);
      doc["numbers"] = emit_bigints(d.numbers);
      break;
    }
    case ProblemId::tms: {
      const auto& d = std::get<TmsData>(inst.data);
      doc["jobs"] = emit_bigints(d.jobs);
      doc["bound"] = emit_bigint(d.bound);
      break;
    }
    case ProblemId::odm: {
      const auto& d = std::get<OdmData>(inst.data);
      doc["x"] = emit_names(d.xs);
      doc["y"] = emit_names(d.ys);
      doc["z"] = emit_names(d.zs);
      ojson ts = ojson::array();
      for (auto [x, y, z] : d.triples)
        ts.push_back(ojson::array({d.xs[static_cast<std::size_t>(x)],
                                   d.ys[static_cast<std::size_t>(y)],
                                   d.zs[static_cast<std::size_t>(z)]}));
      doc["triples"] = std::move(ts);
      ojson singles = ojson::array();
      for (int s : d.singletons)
        singles.push_back(d.xs[static_cast<std::size_t>(s)]);
      doc["singletons"] = std::move(singles);
      if (!d.phi.empty()) {
        ojson phi = ojson::array();
        for (int v : d.phi) phi.push_back(v);
        doc["phi"] = std::move(phi);
      }
      break;
    }
    case ProblemId::dm: {
      const auto& d = std::get<DmData>(inst.data);
      doc["x"] = emit_names(d.xs);
      doc["y"] = emit_names(d.ys);
      doc["z"] = emit_names(d.zs);
      ojson ts = ojson::array();
      for (auto [x, y, z] : d.triples)
        ts.push_back(ojson::array({d.xs[static_cast<std::size_t>(x)],
                                   d.ys[static_cast<std::size_t>(y)],
                                   d.zs[static_cast<std::size_t>(z)]}));
      doc["triples"] = std::move(ts);
      break;
    }
  }
  return doc;
}

std::string document_text(const nlohmann::ordered_json& doc) {
  return doc.dump(2) + "\n";
}

std::string fingerprint_text(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

std::string fingerprint_instance(const Instance& inst) {
  return fingerprint_text(document_text(serialize_instance(inst)));
}

nlohmann::ordered_json serialize_solutions(const Instance& inst,
                                           const SolutionSet& solutions) {
  ojson doc;
  doc["version"] = 1;
  doc["problem"] = std::string(problem_name(inst.kind));
  doc["complete"] = solutions.complete;
  doc["count"] = solutions.items.size();
  std::vector<std::string> universe = canonical_universe(inst);
  ojson arr = ojson::array();
  for (const Solution& s : solutions.items) {
    ojson names = ojson::array();
    for (std::uint32_t i : s.indices())
      names.push_back(universe[i]);
    arr.push_back(std::move(names));
  }
  doc["solutions"] = std::move(arr);
  return doc;
}

Instance import_dimacs_cnf(const std::string& text) {
  auto fail = [](std::size_t line, const std::string& message) {
    throw SspError(ErrorCode::parse_error,
                   "dimacs error at line " + std::to_string(line) + ": " +
                       message);
  };
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  long long vars = -1, clause_count = -1;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  bool current_open = false;
  std::size_t current_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;  // blank line
    if (first == "c") continue;
    if (first.size() > 1 && first[0] == 'c') continue;
    if (first == "p") {
      if (vars >= 0) fail(line_no, "duplicate problem line");
      std::string fmt;
      if (!(tokens >> fmt) || fmt != "cnf")
        fail(line_no, "expected 'p cnf V C'");
      if (!(tokens >> vars >> clause_count) || vars < 0 || clause_count < 0)
        fail(line_no, "expected 'p cnf V C'");
      std::string extra;
      if (tokens >> extra) fail(line_no, "trailing tokens on problem line");
      continue;
    }
    if (vars < 0) fail(line_no, "clause data before problem line");
    // literal tokens, 0-terminated; the first token was already consumed
    std::string tok = first;
    do {
      long long lit;
      try {
        std::size_t used = 0;
        lit = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail(line_no, "bad literal token '" + tok + "'");
        return Instance{ProblemId::sat, CnfData{}};  // unreachable
      }
      if (lit == 0) {
        clauses.push_back(current);
        current.clear();
        current_open = false;
      } else {
        if (lit > vars || lit < -vars)
          fail(line_no, "literal out of range: " + std::to_string(lit));
        if (!current_open) {
          current_open = true;
          current_line = line_no;
        }
        current.push_back(static_cast<int>(lit));
      }
    } while (tokens >> tok);
  }
  if (vars < 0) fail(line_no == 0 ? 1 : line_no, "missing problem line");
  if (current_open)
    fail(current_line, "clause not terminated by 0");
  if (static_cast<long long>(clauses.size()) != clause_count)
    fail(line_no == 0 ? 1 : line_no,
         "header announced " + std::to_string(clause_count) +
             " clauses but found " + std::to_string(clauses.size()));
  CnfData d;
  for (long long v = 1; v <= vars; ++v)
    d.vars.push_back("x" + std::to_string(v));
  d.clauses = std::move(clauses);
  Instance inst{ProblemId::sat, std::move(d)};
  validate_instance(inst);
  return inst;
}

}  // namespace sspforge
