// JSON documents for instances and solution sets, DIMACS CNF import, and the
// canonical content fingerprint.  Documents reference vertices/elements by
// name; parsing maps names to dense indices, and name order defines universe
// order.  The schema is strict: unknown fields are rejected, and
// exact-cardinality kinds are re-checked so that their bound equals the true
// optimum of the encoded structure.
#pragma once

#include <string>

#include "json.hpp"
#include "sspforge/problems.hpp"

namespace sspforge {

// Parses a version-1 instance document.  Throws SspError(parse_error) for
// schema violations (with a field path in the message) and
// SspError(invalid_instance) for structurally or semantically invalid
// payloads.
Instance parse_instance(const nlohmann::json& doc);
Instance parse_instance_text(const std::string& text);

// Serializes an instance to its canonical document.  Integers beyond 2^53-1
// are emitted as decimal strings.
nlohmann::ordered_json serialize_instance(const Instance& inst);

// Canonical text form: two-space-indented dump with a trailing newline.
std::string document_text(const nlohmann::ordered_json& doc);

// FNV-1a 64-bit hash of the canonical document text, as 16 lowercase hex
// digits.
std::string fingerprint_instance(const Instance& inst);
std::string fingerprint_text(const std::string& text);

// Solution-set document: element names per solution, canonical order.
nlohmann::ordered_json serialize_solutions(const Instance& inst,
                                           const SolutionSet& solutions);

// DIMACS CNF ("p cnf V C", clauses 0-terminated, 'c' comment lines) to a SAT
// instance with variables x1..xV.  Errors carry 1-based line numbers.
Instance import_dimacs_cnf(const std::string& text);

}  // namespace sspforge
