#include "valext/extension_invariants.hpp"

#include "valext/error.hpp"

namespace valext {

Truth truth_of(bool b) { return b ? Truth::True : Truth::False; }

Truth truth_and(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::True && b == Truth::True) return Truth::True;
  return Truth::Unknown;
}

std::string_view truth_name(Truth t) {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Unknown: return "undecidable";
  }
  return "undecidable";
}

namespace {

void require_positive(const Integer& v, const std::string& what) {
  if (v <= 0) throw Error(ErrorCode::InvalidRecord, what + " must be positive, got " + to_string(v));
}

const LatticeModel* lattice(const ExtensionRecord& rec) { return std::get_if<LatticeModel>(&rec.groups); }

}  // namespace

void validate(const ExtensionRecord& rec) {
  if (auto* dense = std::get_if<DenseRank1Model>(&rec.groups)) require_positive(dense->index, "index");
  require_positive(rec.f, "f");
  if (rec.hensel_degree) require_positive(*rec.hensel_degree, "hensel_degree");
  if (rec.lk_degree) require_positive(*rec.lk_degree, "lk_degree");
  if (rec.hensel_degree && rec.lk_degree && *rec.hensel_degree > *rec.lk_degree)
    throw Error(ErrorCode::InvalidRecord, "hensel_degree " + to_string(*rec.hensel_degree) +
                                              " exceeds lk_degree " + to_string(*rec.lk_degree));
}

Integer ramification_index(const ExtensionRecord& rec) {
  if (auto* lat = lattice(rec)) return group_index(lat->delta);
  return std::get<DenseRank1Model>(rec.groups).index;
}

Integer initial_index_ext(const ExtensionRecord& rec) {
  if (auto* lat = lattice(rec)) return initial_index(lat->delta);
  // no least positive element in Γ_ω, so nothing sits below Γ_ν>0 but 0
  return Integer(1);
}

Integer defect(const ExtensionRecord& rec) {
  if (!rec.hensel_degree) throw Error(ErrorCode::MissingData, "hensel_degree is required for the defect");
  Integer ef = ramification_index(rec) * rec.f;
  if (!divides(ef, *rec.hensel_degree))
    throw Error(ErrorCode::NonIntegralDefect,
                "e*f = " + to_string(ef) + " does not divide hensel_degree " + to_string(*rec.hensel_degree));
  return *rec.hensel_degree / ef;
}

namespace {

Truth echo(const std::optional<bool>& v) { return v ? truth_of(*v) : Truth::Unknown; }

}  // namespace

StatementProfile statement_profile(const ExtensionRecord& rec) {
  validate(rec);
  StatementProfile p;
  p.name = rec.name;
  p.e = ramification_index(rec);
  p.epsilon = initial_index_ext(rec);
  p.f = rec.f;
  p.dim = p.epsilon * p.f;
  if (rec.hensel_degree) p.d = defect(rec);

  Truth s3, s4;
  if (auto* lat = lattice(rec)) {
    s3 = truth_of(unit_triangular_criterion(lat->delta));
    p.cover = semigroup_cover(lat->delta);
    s4 = truth_of(p.cover.has_value());
  } else {
    // a dense Γ_ω is a finite union of translates of (Γ_ν)>=0 only when equal
    s3 = truth_of(p.e == 1);
    s4 = truth_of(p.e == 1);
  }
  Truth s7 = truth_of(p.epsilon == p.e);
  Truth s8 = truth_and(s7, p.d ? truth_of(*p.d == 1) : Truth::Unknown);

  p.statements = {echo(rec.external.s1), echo(rec.external.s2), s3, s4,
                  echo(rec.external.s5), echo(rec.external.s6), s7, s8};

  if (rec.hensel_degree && p.dim == *rec.hensel_degree) {
    p.hensel_matches_dim = true;
    p.lk_matches_dim = rec.lk_degree && *rec.lk_degree == p.dim;
  }
  return p;
}

namespace {

std::string name_of(const ExtensionRecord& rec, std::size_t i) {
  return rec.name.empty() ? "record " + std::to_string(i + 1) : rec.name;
}

// Merges one record's assertion of a statement about L|K into the family's.
void merge_shared(std::optional<bool>& family, const std::optional<bool>& v, int statement, std::size_t i,
                  std::vector<Violation>& out) {
  if (!v) return;
  if (family && *family != *v) {
    out.push_back({"shared:" + std::to_string(statement), i,
                   "statement " + std::to_string(statement) + " is asserted both true and false"});
    return;
  }
  family = v;
}

void check_equivalence(const std::string& arrow, const std::optional<bool>& lhs, Truth rhs,
                       std::vector<Violation>& out, const std::string& what) {
  if (!lhs || rhs == Truth::Unknown) return;
  if (truth_of(*lhs) != rhs)
    out.push_back({arrow, std::nullopt, what + (*lhs ? " asserted true" : " asserted false") +
                                            " but statement 9 is " + std::string(truth_name(rhs))});
}

}  // namespace

FamilyReport family_check(const std::vector<ExtensionRecord>& recs) {
  FamilyReport report;
  if (recs.empty()) throw Error(ErrorCode::InvalidRecord, "a family needs at least one record");

  std::optional<Integer> lk;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    if (!r.lk_degree) continue;
    if (lk && *lk != *r.lk_degree)
      throw Error(ErrorCode::InvalidRecord, name_of(r, i) + " has lk_degree " + to_string(*r.lk_degree) +
                                                " but the family uses " + to_string(*lk));
    lk = r.lk_degree;
  }

  report.s9 = Truth::True;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    report.profiles.push_back(statement_profile(recs[i]));
    report.s9 = truth_and(report.s9, report.profiles.back().statement(8));
  }

  auto& out = report.violations;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    merge_shared(report.s5, recs[i].external.s5, 5, i, out);
    merge_shared(report.s6, recs[i].external.s6, 6, i, out);
  }

  if (report.s5 && report.s6 && *report.s5 != *report.s6)
    out.push_back({"5<=>6", std::nullopt, "statements 5 and 6 are asserted with different truth values"});
  check_equivalence("5<=>9", report.s5, report.s9, out, "statement 5");
  check_equivalence("6<=>9", report.s6, report.s9, out, "statement 6");

  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    const auto& p = report.profiles[i];
    if (report.s5 && *report.s5 && r.external.s1 && !*r.external.s1)
      out.push_back({"5=>1", i, name_of(r, i) + ": statement 5 holds for the family but 1 is asserted false"});
    if (r.external.s1 && *r.external.s1 && p.statement(8) == Truth::False)
      out.push_back({"1=>8", i, name_of(r, i) + ": statement 1 asserted true but epsilon = " +
                                    to_string(p.epsilon) + ", e = " + to_string(p.e) +
                                    (p.d ? ", d = " + to_string(*p.d) : std::string())});
    if (r.external.s2 && truth_of(*r.external.s2) != p.statement(3))
      out.push_back({"2<=>3", i, name_of(r, i) + ": statement 2 asserted " + (*r.external.s2 ? "true" : "false") +
                                    " but 3 is " + std::string(truth_name(p.statement(3)))});
  }

  if (recs.size() == 1 && report.s6 && *report.s6 && lk) {
    const auto& p = report.profiles.front();
    if (*lk != p.dim)
      out.push_back({"6=>[L:K]=eps*f", 0, "statement 6 asserted true but [L:K] = " + to_string(*lk) +
                                              " differs from epsilon*f = " + to_string(p.dim)});
  }
  return report;
}

void require_consistent(const FamilyReport& report) {
  if (report.consistent()) return;
  std::string detail;
  for (const auto& v : report.violations) {
    if (!detail.empty()) detail += "; ";
    detail += v.arrow + ": " + v.detail;
  }
  throw Error(ErrorCode::InconsistentFamily, detail);
}

}  // namespace valext
