// Command line front end: instance generation, exhaustive solving, reduction
// application, property verification, partition certification, chain
// composition, and catalogue export.  Exit codes: 0 success, 1 parse or
// validation failure, 2 budget exhausted, 3 internal error, 4 observed
// properties contradict registered claims.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sspforge/compendium.hpp"
#include "sspforge/formats.hpp"
#include "sspforge/verifier.hpp"

namespace {

using namespace sspforge;

int exit_code_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::budget_exceeded:
      return 2;
    case ErrorCode::internal_error:
      return 3;
    case ErrorCode::claims_mismatch:
      return 4;
    default:
      return 1;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw SspError(ErrorCode::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path, bool dimacs) {
  std::string text = read_input(path);
  return dimacs ? import_dimacs_cnf(text) : parse_instance_text(text);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f)
    throw SspError(ErrorCode::parse_error, "cannot open " + out_path);
  f << text;
}

std::map<std::string, long long> parse_params(
    const std::vector<std::string>& entries) {
  std::map<std::string, long long> out;
  for (const auto& entry : entries) {
    std::stringstream ss(entry);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw SspError(ErrorCode::parse_error,
                       "expected name=value in --params, got '" + item + "'");
      try {
        std::size_t used = 0;
        long long value = std::stoll(item.substr(eq + 1), &used);
        if (eq + 1 + used != item.size()) throw std::invalid_argument(item);
        out[item.substr(0, eq)] = value;
      } catch (const std::exception&) {
        throw SspError(ErrorCode::parse_error,
                       "expected integer value in --params entry '" + item +
                           "'");
      }
    }
  }
  return out;
}

ProblemId parse_kind(const std::string& name) {
  if (auto id = problem_from_name(name)) return *id;
  throw SspError(ErrorCode::parse_error, "unknown problem kind: " + name);
}

const ReductionDef& parse_reduction(const std::string& id) {
  if (const ReductionDef* red = find_reduction(id)) return *red;
  throw SspError(ErrorCode::parse_error, "unknown reduction: " + id);
}

std::string solution_braces(const Solution& s,
                            const std::vector<std::string>& universe) {
  std::string acc = "{";
  bool first = true;
  for (auto i : s.indices()) {
    if (!first) acc += ",";
    acc += universe[i];
    first = false;
  }
  return acc + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string report_text(const VerificationReport& r) {
  std::string out;
  out += "reduction: " + r.reduction_id + "\n";
  out += "source_fingerprint: " + r.fingerprint + "\n";
  if (!r.note.empty()) out += "note: " + r.note + "\n";
  out += "claimed: ssp=" + yes_no(r.claimed_ssp) +
         " spr=" + yes_no(r.claimed_spr) + "\n";
  out += "observed: ssp=" + yes_no(r.ssp_holds) +
         " spr=" + yes_no(r.spr_holds) + "\n";
  out += "claims_matched: " + yes_no(r.claims_matched) + "\n";
  out += "source_count: " + std::to_string(r.source_count) + "\n";
  out += "target_count: " + std::to_string(r.target_count) + "\n";
  out += "partition_valid: " + yes_no(r.partition.valid) + "\n";
  for (const auto& w : r.witnesses) {
    out += "witness [" + w.property + "]: " + w.detail;
    if (!w.elements.empty()) {
      out += " {";
      for (std::size_t i = 0; i < w.elements.size(); ++i) {
        if (i) out += ",";
        out += w.elements[i];
      }
      out += "}";
    }
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand options

struct GenOpts {
  std::string kind;
  std::uint64_t seed = 1;
  std::vector<std::string> params;
  std::string out;
};

struct SolveOpts {
  std::string file = "-";
  bool dimacs = false;
  std::uint64_t budget = kDefaultBudget;
  std::size_t limit = SIZE_MAX;
  std::string format = "json";
  std::string out;
};

struct ReduceOpts {
  std::string reduction;
  std::string file = "-";
  bool dimacs = false;
  bool trace = false;
  std::string out;
};

struct VerifyOpts {
  std::string reduction;
  std::string file;
  bool dimacs = false;
  bool all = false;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> params;
  std::uint64_t budget = kDefaultBudget;
  std::string require = "claims";
  std::string format = "json";
  std::string out;
};

struct CertifyOpts {
  std::string reduction;
  std::string file = "-";
  bool dimacs = false;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "json";
  std::string out;
};

struct ComposeOpts {
  std::vector<std::string> reductions;
  std::string file;
  bool dimacs = false;
  bool trace = false;
  std::string out;
};

struct GraphOpts {
  std::string format = "dot";
  bool no_demos = false;
  bool with_demos = false;
  std::vector<std::string> path;  // SRC TGT
  std::size_t max_length = 6;
  std::string out;
};

// ---------------------------------------------------------------------------
// Subcommand implementations

int cmd_gen(const GenOpts& o) {
  Instance inst =
      generate_instance(parse_kind(o.kind), parse_params(o.params), o.seed);
  emit(document_text(serialize_instance(inst)), o.out);
  return 0;
}

int cmd_solve(const SolveOpts& o) {
  Instance inst = load_instance(o.file, o.dimacs);
  Budget budget(o.budget);
  SolutionSet sols = enumerate_solutions(inst, budget, o.limit);
  if (o.format == "json") {
    emit(document_text(serialize_solutions(inst, sols)), o.out);
  } else {
    std::vector<std::string> universe = canonical_universe(inst);
    std::string text;
    text += "problem: " + std::string(problem_name(inst.kind)) + "\n";
    text += "universe: " + std::to_string(universe.size()) + " elements\n";
    text += "complete: " + yes_no(sols.complete) + "\n";
    text += "count: " + std::to_string(sols.size()) + "\n";
    for (const Solution& s : sols.items)
      text += solution_braces(s, universe) + "\n";
    emit(text, o.out);
  }
  return 0;
}

int cmd_reduce(const ReduceOpts& o) {
  const ReductionDef& red = parse_reduction(o.reduction);
  Instance inst = load_instance(o.file, o.dimacs);
  Applied ap = apply_reduction(red, inst);
  if (o.trace) {
    if (ap.has_embedding) {
      std::vector<std::string> src_u = canonical_universe(inst);
      std::vector<std::string> tgt_u = canonical_universe(ap.target);
      for (std::size_t i = 0; i < ap.embed.size(); ++i)
        std::cerr << src_u[i] << " -> " << tgt_u[ap.embed[i]] << "\n";
    } else {
      std::cerr << red.id << " registers no universe embedding\n";
    }
  }
  emit(document_text(serialize_instance(ap.target)), o.out);
  return 0;
}

int cmd_verify(const VerifyOpts& o) {
  if (o.all == !o.reduction.empty())
    throw SspError(ErrorCode::parse_error,
                   "verify needs exactly one of a reduction id or --all");
  if (!o.all && o.file.empty() && o.random == 0)
    throw SspError(ErrorCode::parse_error,
                   "verify needs an instance file or --random N");
  if (o.all && !o.file.empty())
    throw SspError(ErrorCode::parse_error,
                   "--all verifies generated instances and cannot take an "
                   "instance file");
  if (o.all && !o.params.empty())
    throw SspError(ErrorCode::parse_error,
                   "--params names are specific to one problem kind; with "
                   "--all the per-kind defaults are used");

  auto violated = [&](const VerificationReport& r) {
    if (o.require == "ssp") return !r.ssp_holds;
    if (o.require == "spr") return !r.spr_holds;
    if (o.require == "partition") return !r.partition.valid;
    return !r.claims_matched;
  };

  std::vector<const ReductionDef*> targets;
  if (o.all) {
    for (const auto& red : reduction_registry()) targets.push_back(&red);
  } else {
    targets.push_back(&parse_reduction(o.reduction));
  }
  auto params = parse_params(o.params);

  bool any_violation = false;
  std::optional<VerificationReport> single;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  std::string text;
  for (const ReductionDef* red : targets) {
    std::size_t violations = 0, skipped = 0, checked = 0;
    std::vector<VerificationReport> failures;
    auto consider = [&](const VerificationReport& r) {
      ++checked;
      if (violated(r)) {
        ++violations;
        if (failures.size() < 3) failures.push_back(r);
      }
    };
    if (!o.all && !o.file.empty() && o.random == 0) {
      Budget budget(o.budget);
      single = full_report(*red, load_instance(o.file, o.dimacs), budget);
      consider(*single);
    } else {
      std::size_t trials = o.random == 0 ? 5 : o.random;
      for (std::size_t i = 0; i < trials; ++i) {
        std::uint64_t seed = o.seed + i;
        try {
          Instance inst = generate_instance(red->source, params, seed);
          Budget budget(o.budget);
          VerificationReport r = full_report(*red, inst, budget);
          r.note = "seed " + std::to_string(seed);
          consider(r);
        } catch (const SspError& e) {
          if (e.code() == ErrorCode::budget_exceeded ||
              e.code() == ErrorCode::generation_failed ||
              e.code() == ErrorCode::unsupported_shape) {
            ++skipped;  // per-trial difficulty, not a verdict
          } else {
            throw;
          }
        }
      }
    }
    any_violation = any_violation || violations > 0;

    if (o.format == "json") {
      nlohmann::ordered_json entry;
      entry["reduction"] = red->id;
      entry["require"] = o.require;
      entry["checked"] = checked;
      entry["skipped"] = skipped;
      entry["violations"] = violations;
      nlohmann::ordered_json fr = nlohmann::ordered_json::array();
      for (const auto& r : failures) fr.push_back(serialize_report(r));
      entry["failures"] = std::move(fr);
      results.push_back(std::move(entry));
    } else {
      text += red->id + ": checked " + std::to_string(checked) +
              ", skipped " + std::to_string(skipped) + ", " +
              std::to_string(violations) + " violations of " + o.require +
              "\n";
      for (const auto& r : failures) text += report_text(r);
    }
  }

  if (o.format == "json") {
    nlohmann::ordered_json doc;
    if (single) {
      // Single instance: the full report is the document.
      doc = serialize_report(*single);
    } else {
      doc["require"] = o.require;
      doc["results"] = std::move(results);
    }
    emit(document_text(doc), o.out);
  } else {
    if (single) text = report_text(*single);
    emit(text, o.out);
  }
  return any_violation ? 4 : 0;
}

int cmd_certify(const CertifyOpts& o) {
  const ReductionDef& red = parse_reduction(o.reduction);
  Instance inst = load_instance(o.file, o.dimacs);
  Budget budget(o.budget);
  PartitionCertificate cert = classify_partition(red, inst, budget);
  bool sound = certificate_sound(red, inst, cert, budget);

  Applied ap = apply_reduction(red, inst);
  std::vector<std::string> universe = canonical_universe(ap.target);
  auto names = [&](const Solution& s) {
    std::vector<std::string> out;
    for (auto i : s.indices()) out.push_back(universe[i]);
    return out;
  };

  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["reduction"] = red.id;
    doc["source_fingerprint"] = fingerprint_instance(inst);
    doc["valid"] = cert.valid;
    doc["vacuous"] = cert.vacuous;
    doc["sound"] = sound;
    doc["embedded"] = names(cert.embedded);
    doc["always"] = names(cert.always);
    doc["never"] = names(cert.never);
    doc["linked"] = names(cert.linked);
    nlohmann::ordered_json lm = nlohmann::ordered_json::array();
    for (const auto& [rep, link] : cert.link_map) {
      nlohmann::ordered_json e;
      e["embedded"] = names(rep);
      e["linked"] = names(link);
      lm.push_back(std::move(e));
    }
    doc["link_map"] = std::move(lm);
    emit(document_text(doc), o.out);
  } else {
    auto brace_line = [&](const char* label, const Solution& s) {
      return std::string(label) + ": " + solution_braces(s, universe) + "\n";
    };
    std::string text;
    text += "reduction: " + red.id + "\n";
    text += "valid: " + yes_no(cert.valid) + "\n";
    text += "vacuous: " + yes_no(cert.vacuous) + "\n";
    text += "sound: " + yes_no(sound) + "\n";
    text += brace_line("embedded", cert.embedded);
    text += brace_line("always", cert.always);
    text += brace_line("never", cert.never);
    text += brace_line("linked", cert.linked);
    for (const auto& [rep, link] : cert.link_map)
      text += "link: " + solution_braces(rep, universe) + " -> " +
              solution_braces(link, universe) + "\n";
    emit(text, o.out);
  }
  return 0;
}

int cmd_compose(const ComposeOpts& o) {
  ComposedReduction chain = compose_ids(o.reductions);
  if (o.file.empty()) {
    nlohmann::ordered_json doc;
    doc["id"] = chain.id;
    doc["source"] = std::string(problem_name(chain.source()));
    doc["target"] = std::string(problem_name(chain.target()));
    doc["claims"]["ssp"] = chain.claims.ssp;
    doc["claims"]["spr"] = chain.claims.spr;
    doc["demo"] = chain.demo;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto* step : chain.steps) steps.push_back(step->id);
    doc["steps"] = std::move(steps);
    emit(document_text(doc), o.out);
    return 0;
  }
  Instance inst = load_instance(o.file, o.dimacs);
  ChainApplied ca = apply_chain(chain, inst);
  if (o.trace) {
    for (std::size_t i = 0; i < ca.stages.size(); ++i)
      std::cerr << "stage " << i + 1 << " (" << chain.steps[i]->id
                << "): " << problem_name(ca.stages[i].target.kind) << ", "
                << universe_size(ca.stages[i].target)
                << " universe elements, fingerprint "
                << fingerprint_instance(ca.stages[i].target) << "\n";
    if (!ca.has_embedding)
      std::cerr << "chain has no composed universe embedding\n";
  }
  emit(document_text(serialize_instance(ca.target())), o.out);
  return 0;
}

int cmd_graph(const GraphOpts& o) {
  if (!o.path.empty()) {
    ProblemId src = parse_kind(o.path[0]);
    ProblemId tgt = parse_kind(o.path[1]);
    auto paths = transitive_paths(src, tgt, o.max_length, o.with_demos);
    std::string text;
    for (const auto& path : paths) {
      std::string line;
      for (const auto* red : path) {
        if (!line.empty()) line += ", ";
        line += red->id;
      }
      text += line + "\n";
    }
    emit(text, o.out);
    return 0;
  }
  if (o.format == "json")
    emit(document_text(export_graph_json(!o.no_demos)), o.out);
  else
    emit(export_graph_dot(!o.no_demos), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "subset-search reductions: generate, solve, transform, and certify"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* cgen = app.add_subcommand("gen", "generate a seeded random instance");
  cgen->add_option("kind", gen.kind, "problem kind (sat, mvc, ...)")
      ->required();
  cgen->add_option("--seed", gen.seed, "generator seed");
  cgen->add_option("--params", gen.params,
                   "name=value generator sizes, comma separated");
  cgen->add_option("-o,--output", gen.out, "write to file instead of stdout");

  SolveOpts solve;
  auto* csolve =
      app.add_subcommand("solve", "enumerate all solutions of an instance");
  csolve->add_option("file", solve.file, "instance document ('-' for stdin)");
  csolve->add_flag("--dimacs", solve.dimacs, "read DIMACS CNF input");
  csolve->add_option("--budget", solve.budget, "search node budget")
      ->envname("SSPFORGE_BUDGET");
  csolve->add_option("--limit", solve.limit, "stop after this many solutions");
  csolve->add_option("--format", solve.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  csolve->add_option("-o,--output", solve.out,
                     "write to file instead of stdout");

  ReduceOpts reduce;
  auto* creduce =
      app.add_subcommand("reduce", "transform an instance along a reduction");
  creduce->add_option("reduction", reduce.reduction, "reduction id")
      ->required();
  creduce->add_option("file", reduce.file,
                      "instance document ('-' for stdin)");
  creduce->add_flag("--dimacs", reduce.dimacs, "read DIMACS CNF input");
  creduce->add_flag("--trace", reduce.trace,
                    "print the universe embedding to stderr");
  creduce->add_option("-o,--output", reduce.out,
                      "write to file instead of stdout");

  VerifyOpts verify;
  auto* cverify = app.add_subcommand(
      "verify", "check observed properties against registered claims");
  cverify->add_option("reduction", verify.reduction, "reduction id");
  cverify->add_option("file", verify.file,
                      "instance document ('-' for stdin)");
  cverify->add_flag("--dimacs", verify.dimacs, "read DIMACS CNF input");
  cverify->add_flag("--all", verify.all, "verify every registered reduction");
  cverify->add_option("--random", verify.random,
                      "verify on this many generated instances");
  cverify->add_option("--seed", verify.seed, "first generator seed");
  cverify->add_option("--params", verify.params,
                      "name=value generator sizes, comma separated");
  cverify->add_option("--budget", verify.budget,
                      "search node budget per instance")
      ->envname("SSPFORGE_BUDGET");
  cverify->add_option("--require", verify.require,
                      "property that must hold on every instance")
      ->check(CLI::IsMember({"claims", "ssp", "spr", "partition"}));
  cverify->add_option("--format", verify.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cverify->add_option("-o,--output", verify.out,
                      "write to file instead of stdout");

  CertifyOpts certify;
  auto* ccertify = app.add_subcommand(
      "certify", "build and replay the target universe partition");
  ccertify->add_option("reduction", certify.reduction, "reduction id")
      ->required();
  ccertify->add_option("file", certify.file,
                       "instance document ('-' for stdin)");
  ccertify->add_flag("--dimacs", certify.dimacs, "read DIMACS CNF input");
  ccertify->add_option("--budget", certify.budget, "search node budget")
      ->envname("SSPFORGE_BUDGET");
  ccertify->add_option("--format", certify.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  ccertify->add_option("-o,--output", certify.out,
                       "write to file instead of stdout");

  ComposeOpts compose_opts;
  auto* ccompose = app.add_subcommand(
      "compose", "chain reductions whose kinds line up end to end");
  ccompose
      ->add_option("reductions", compose_opts.reductions,
                   "reduction ids, in order")
      ->required()
      ->expected(-1);
  ccompose->add_option("-i,--instance", compose_opts.file,
                       "apply the chain to this instance ('-' for stdin)");
  ccompose->add_flag("--dimacs", compose_opts.dimacs,
                     "read DIMACS CNF input");
  ccompose->add_flag("--trace", compose_opts.trace,
                     "print per-stage summaries to stderr");
  ccompose->add_option("-o,--output", compose_opts.out,
                       "write to file instead of stdout");

  GraphOpts graph;
  auto* cgraph =
      app.add_subcommand("graph", "export the catalogue or list chains");
  cgraph->add_option("--format", graph.format, "export format")
      ->check(CLI::IsMember({"dot", "json"}));
  cgraph->add_flag("--no-demos", graph.no_demos,
                   "exclude demonstration-only reductions from the export");
  cgraph
      ->add_option("--path", graph.path,
                   "list reduction chains between two problem kinds")
      ->expected(2);
  cgraph->add_flag("--with-demos", graph.with_demos,
                   "allow demonstration-only reductions in chains");
  cgraph->add_option("--max-length", graph.max_length,
                     "maximum chain length for --path");
  cgraph->add_option("-o,--output", graph.out,
                     "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (cgen->parsed()) return cmd_gen(gen);
    if (csolve->parsed()) return cmd_solve(solve);
    if (creduce->parsed()) return cmd_reduce(reduce);
    if (cverify->parsed()) return cmd_verify(verify);
    if (ccertify->parsed()) return cmd_certify(certify);
    if (ccompose->parsed()) return cmd_compose(compose_opts);
    if (cgraph->parsed()) return cmd_graph(graph);
    std::cerr << "error: no subcommand\n";
    return 3;
  } catch (const SspError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_of(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
