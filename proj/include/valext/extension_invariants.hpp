#pragma once

// Numeric invariants e, f, d, ε of one extension ω|ν and the implication
// diagram between the statements below, evaluated as far as numbers allow.
//
//   1  O_ω essentially finitely generated over O_ν        (external)
//   2  graded algebra of ω finitely generated, as asserted (external)
//   3  gr_ω(O_ω) finitely generated over gr_ν(O_ν)       (via semigroup criterion)
//   4  (Γ_ν)_{>=0} has finite index in (Γ_ω)_{>=0}
//   5  integral closure D finitely generated O_ν-algebra   (external)
//   6  integral closure D finite O_ν-module                (external)
//   7  ε = e
//   8  ε = e and d = 1
//   9  8 for every extension of ν to L                     (families only)

#include "valext/integer.hpp"
#include "valext/ordered_group.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace valext {

/// Γ_ν ⊆ Γ_ω = Z^n, Γ_ν given as a finite-index sublattice.
struct LatticeModel {
  Subgroup delta;
};

/// Rank-one Γ_ω without a least positive element; only (Γ_ω : Γ_ν) is kept.
struct DenseRank1Model {
  Integer index;
};

using ValueGroupModel = std::variant<LatticeModel, DenseRank1Model>;

enum class Truth { False, True, Unknown };

Truth truth_of(bool b);
Truth truth_and(Truth a, Truth b);
std::string_view truth_name(Truth t);

/// Statements that cannot be computed from the invariants.
struct ExternalAssertions {
  std::optional<bool> s1, s2, s5, s6;
};

struct ExtensionRecord {
  std::string name;
  ValueGroupModel groups;
  Integer f{1};
  std::optional<Integer> hensel_degree;
  std::optional<Integer> lk_degree;
  ExternalAssertions external;
};

/// Throws InvalidRecord on nonpositive degrees or hensel_degree > lk_degree.
void validate(const ExtensionRecord& rec);

Integer ramification_index(const ExtensionRecord& rec);
Integer initial_index_ext(const ExtensionRecord& rec);
/// hensel_degree / (e·f). MissingData without hensel_degree,
/// NonIntegralDefect when e·f does not divide it.
Integer defect(const ExtensionRecord& rec);

inline constexpr std::string_view kStatement3Basis = "via semigroup criterion";

struct StatementProfile {
  std::string name;
  std::array<Truth, 8> statements{};  // statements 1..8 at [0..7]

  Integer e, epsilon, f;
  std::optional<Integer> d;
  Integer dim;                         // ε·f
  std::optional<CosetCover> cover;     // Lattice model with a cover only
  /// ε·f equals the supplied hensel_degree, which forces d = 1 and ε = e.
  bool hensel_matches_dim = false;
  /// ε·f = hensel_degree = lk_degree.
  bool lk_matches_dim = false;

  Truth statement(int k) const { return statements.at(static_cast<std::size_t>(k - 1)); }
};

StatementProfile statement_profile(const ExtensionRecord& rec);

struct Violation {
  std::string arrow;                  // e.g. "5<=>9", "1=>8"
  std::optional<std::size_t> record;  // index into the family, if per record
  std::string detail;
};

struct FamilyReport {
  std::vector<StatementProfile> profiles;
  Truth s9 = Truth::Unknown;
  std::optional<bool> s5, s6;  // family-level external assertions
  std::vector<Violation> violations;

  bool consistent() const { return violations.empty(); }
};

/// Evaluates 9 and checks every external assertion against the proven
/// arrows. Records must share lk_degree when present (else InvalidRecord).
FamilyReport family_check(const std::vector<ExtensionRecord>& recs);

/// Throws InconsistentFamily listing the violated arrows.
void require_consistent(const FamilyReport& report);

}  // namespace valext
