#pragma once

// JSON exchange formats. Vectors and generators are columns; PMT steps and
// list positions are 1-based; integers beyond 2^53 - 1 in magnitude are
// written as decimal strings and accepted either way on input.

#include "valext/error.hpp"
#include "valext/extension_invariants.hpp"
#include "valext/monomial_blowup.hpp"
#include "valext/ordered_group.hpp"

#include <json.hpp>

#include <vector>

namespace valext::io {

using Json = nlohmann::json;

Json to_json(const Integer& v);
Integer integer_from(const Json& j, const char* what);

Json to_json(const LexVector& v);
LexVector vector_from(const Json& j, const char* what);
Json to_json(const std::vector<LexVector>& vs);

/// {"n": int, "generators": [[...], ...]}
Subgroup subgroup_from(const Json& j);
/// Same shape, plus "hnf" (columns).
Json to_json(const Subgroup& s);

/// {"n": int, "values": [[...], ...], optional "names"}
Frame frame_from(const Json& j);
Json to_json(const Frame& f);

Monomial monomial_from(const Json& j, const char* what);
Json to_json(const Monomial& m);
std::vector<Monomial> monomials_from(const Json& j, const char* what);
Json to_json(const std::vector<Monomial>& ms);

/// [{"i": int, "j": int}, ...], 1-based.
std::vector<PmtStep> steps_from(const Json& j, std::size_t n);
PmtStep step_from(const Json& j, std::size_t n);
Json to_json(const PmtStep& s);
Json to_json(const std::vector<PmtStep>& steps);

/// {"a","b","c","d","e"}
Relation2 relation_from(const Json& j);
Json to_json(const Relation2& r);

/// {"name", "groups": {"kind": "lattice", "n", "generators"} |
///  {"kind": "dense_rank1", "index"}, "f", "hensel_degree", "lk_degree",
///  "external": {"1": bool, "2": bool, "5": bool, "6": bool}}
ExtensionRecord record_from(const Json& j);
std::vector<ExtensionRecord> family_from(const Json& j);

Json to_json(const StatementProfile& p);
Json to_json(const FamilyReport& r);

/// {"error": name, "detail": text}
Json error_json(const Error& e);

/// Required member of an object, InvalidInput when missing.
const Json& member(const Json& j, const char* key);

}  // namespace valext::io
