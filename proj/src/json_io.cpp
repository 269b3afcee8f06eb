#include "valext/json_io.hpp"

#include <cctype>
#include <string>

namespace valext::io {

namespace {

const Integer kSafeMax = make_integer((std::int64_t{1} << 53) - 1);

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::size_t index_from(const Json& j, std::size_t n, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  auto k = j.get<std::int64_t>();
  if (k < 1 || static_cast<std::size_t>(k) > n)
    bad(std::string(what) + " = " + std::to_string(k) + " is outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(k - 1);
}

std::size_t rank_from(const Json& j) {
  const Json& n = member(j, "n");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1) bad("n must be a positive integer");
  return n.get<std::size_t>();
}

std::vector<LexVector> columns_from(const Json& j, std::size_t n, const char* what) {
  std::vector<LexVector> cols;
  for (const auto& c : array_of(j, what)) {
    LexVector v = vector_from(c, what);
    if (v.size() != n)
      throw Error(ErrorCode::LengthMismatch,
                  std::string(what) + " column has length " + std::to_string(v.size()) + ", expected " +
                      std::to_string(n));
    cols.push_back(std::move(v));
  }
  return cols;
}

std::optional<Integer> optional_integer(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return integer_from(j.at(key), key);
}

}  // namespace

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

Json to_json(const Integer& v) {
  if (abs(v) <= kSafeMax) return Json(*to_int64(v));
  return Json(to_string(v));
}

Integer integer_from(const Json& j, const char* what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return make_integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t k = start; ok && k < s.size(); ++k) ok = std::isdigit(static_cast<unsigned char>(s[k])) != 0;
    if (!ok) bad(std::string(what) + ": \"" + s + "\" is not a decimal integer");
    return Integer(s);
  }
  bad(std::string(what) + " must be an integer or a decimal string");
}

Json to_json(const LexVector& v) {
  Json out = Json::array();
  for (const auto& x : v.coords()) out.push_back(to_json(x));
  return out;
}

LexVector vector_from(const Json& j, const char* what) {
  std::vector<Integer> coords;
  for (const auto& x : array_of(j, what)) coords.push_back(integer_from(x, what));
  if (coords.empty()) bad(std::string(what) + " must not be empty");
  return LexVector(std::move(coords));
}

Json to_json(const std::vector<LexVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Subgroup subgroup_from(const Json& j) {
  std::size_t n = rank_from(j);
  auto gens = columns_from(member(j, "generators"), n, "generators");
  if (gens.empty()) throw Error(ErrorCode::NotFiniteIndex, "no generators");
  return canonicalize(n, gens);
}

Json to_json(const Subgroup& s) {
  return Json{{"n", s.rank()}, {"generators", to_json(s.generators())}, {"hnf", to_json(s.basis())}};
}

Frame frame_from(const Json& j) {
  std::size_t n = rank_from(j);
  auto values = columns_from(member(j, "values"), n, "values");
  if (values.size() != n)
    throw Error(ErrorCode::InvalidFrame, "a frame needs exactly n = " + std::to_string(n) + " value columns");
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& s : array_of(j.at("names"), "names")) {
      if (!s.is_string()) bad("names must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  return Frame(std::move(values), std::move(names));
}

Json to_json(const Frame& f) {
  return Json{{"n", f.size()}, {"values", to_json(f.values())}, {"names", f.names()}};
}

Monomial monomial_from(const Json& j, const char* what) {
  Monomial m;
  for (const auto& x : array_of(j, what)) m.exps.push_back(integer_from(x, what));
  return m;
}

Json to_json(const Monomial& m) {
  Json out = Json::array();
  for (const auto& x : m.exps) out.push_back(to_json(x));
  return out;
}

std::vector<Monomial> monomials_from(const Json& j, const char* what) {
  std::vector<Monomial> out;
  for (const auto& m : array_of(j, what)) out.push_back(monomial_from(m, what));
  return out;
}

Json to_json(const std::vector<Monomial>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

PmtStep step_from(const Json& j, std::size_t n) {
  return PmtStep{index_from(member(j, "i"), n, "i"), index_from(member(j, "j"), n, "j")};
}

std::vector<PmtStep> steps_from(const Json& j, std::size_t n) {
  std::vector<PmtStep> out;
  for (const auto& s : array_of(j, "steps")) out.push_back(step_from(s, n));
  return out;
}

Json to_json(const PmtStep& s) { return Json{{"i", s.i + 1}, {"j", s.j + 1}}; }

Json to_json(const std::vector<PmtStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back(to_json(s));
  return out;
}

Relation2 relation_from(const Json& j) {
  return Relation2{integer_from(member(j, "a"), "a"), integer_from(member(j, "b"), "b"),
                   integer_from(member(j, "c"), "c"), integer_from(member(j, "d"), "d"),
                   integer_from(member(j, "e"), "e")};
}

Json to_json(const Relation2& r) {
  return Json{{"a", to_json(r.a)}, {"b", to_json(r.b)}, {"c", to_json(r.c)}, {"d", to_json(r.d)},
              {"e", to_json(r.e)}};
}

ExtensionRecord record_from(const Json& j) {
  ExtensionRecord rec;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) bad("name must be a string");
    rec.name = j.at("name").get<std::string>();
  }
  const Json& g = member(j, "groups");
  const Json& kind = member(g, "kind");
  if (kind == "lattice") {
    rec.groups = LatticeModel{subgroup_from(g)};
  } else if (kind == "dense_rank1") {
    rec.groups = DenseRank1Model{integer_from(member(g, "index"), "index")};
  } else {
    bad("groups.kind must be \"lattice\" or \"dense_rank1\"");
  }
  rec.f = j.contains("f") ? integer_from(j.at("f"), "f") : Integer(1);
  rec.hensel_degree = optional_integer(j, "hensel_degree");
  rec.lk_degree = optional_integer(j, "lk_degree");
  if (j.contains("external")) {
    const Json& ext = j.at("external");
    if (!ext.is_object()) bad("external must be an object");
    for (const auto& [key, value] : ext.items()) {
      if (!value.is_boolean() && !value.is_null()) bad("external assertions must be booleans");
      std::optional<bool> v;
      if (value.is_boolean()) v = value.get<bool>();
      if (key == "1") rec.external.s1 = v;
      else if (key == "2") rec.external.s2 = v;
      else if (key == "5") rec.external.s5 = v;
      else if (key == "6") rec.external.s6 = v;
      else bad("only statements 1, 2, 5 and 6 can be asserted externally, got \"" + key + "\"");
    }
  }
  validate(rec);
  return rec;
}

std::vector<ExtensionRecord> family_from(const Json& j) {
  std::vector<ExtensionRecord> out;
  for (const auto& r : array_of(member(j, "records"), "records")) out.push_back(record_from(r));
  return out;
}

Json to_json(const StatementProfile& p) {
  Json statements = Json::object();
  for (int k = 1; k <= 8; ++k) statements[std::to_string(k)] = std::string(truth_name(p.statement(k)));
  Json out{{"name", p.name},
           {"e", to_json(p.e)},
           {"epsilon", to_json(p.epsilon)},
           {"f", to_json(p.f)},
           {"d", p.d ? to_json(*p.d) : Json(nullptr)},
           {"dim", to_json(p.dim)},
           {"statements", statements},
           {"statement_3_basis", std::string(kStatement3Basis)},
           {"cover", p.cover ? to_json(p.cover->representatives) : Json(nullptr)},
           {"hensel_matches_dim", p.hensel_matches_dim},
           {"lk_matches_dim", p.lk_matches_dim}};
  return out;
}

Json to_json(const FamilyReport& r) {
  Json profiles = Json::array();
  for (const auto& p : r.profiles) profiles.push_back(to_json(p));
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"arrow", v.arrow},
                              {"record", v.record ? Json(*v.record + 1) : Json(nullptr)},
                              {"detail", v.detail}});
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  return Json{{"profiles", profiles},
              {"statement_9", std::string(truth_name(r.s9))},
              {"asserted_5", opt(r.s5)},
              {"asserted_6", opt(r.s6)},
              {"consistent", r.consistent()},
              {"violations", violations}};
}

Json error_json(const Error& e) { return Json{{"error", std::string(error_name(e.code()))}, {"detail", e.detail()}}; }

}  // namespace valext::io
