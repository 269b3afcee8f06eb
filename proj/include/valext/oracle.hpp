#pragma once

// Brute-force ground truth for the fast paths in ordered_group and
// monomial_blowup. Nothing here reads the Hermite diagonal, solves a
// triangular system, or calls pmt(); every answer comes from enumeration
// over explicit boxes. Slow on purpose.

#include "valext/monomial_blowup.hpp"
#include "valext/oracle_kernels.hpp"
#include "valext/ordered_group.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace valext::oracle {

using kernels::Exec;

/// The cube [-bound, bound]^n, used both for coefficients and for points.
struct Box {
  std::int64_t bound;
  explicit Box(std::int64_t b);
  Box doubled() const { return Box(2 * bound); }
};

/// 8 for n <= 3, 5 for n = 4 and above.
Box default_box(std::size_t n);
inline constexpr std::size_t kDefaultBfsDepth = 8;

/// Lex-least positive H·c over coefficients c in the box, from the Hermite
/// basis treated as an arbitrary basis.
std::optional<LexVector> brute_min_positive(const Subgroup& delta, const Box& box,
                                            Exec exec = Exec::Parallel);

/// Same search over integer combinations of the raw input generators.
std::optional<LexVector> brute_min_positive_raw(const Subgroup& delta, const Box& box,
                                                Exec exec = Exec::Parallel);

/// Every γ in the point box with 0 <= γ < upper, in increasing order;
/// restricted to γ ∈ sigma when sigma is given.
std::vector<LexVector> brute_points_below(const LexVector& upper, const Box& box,
                                          const Subgroup* sigma = nullptr);

/// |{γ ∈ Γ_{>=0} : γ < Δ_{>0}}| counted literally. The minimum positive
/// element is searched in `coefficients`, the count runs over `points`; both
/// boxes are doubled once and the two counts must agree (else UnstableCount).
Integer brute_epsilon(const Subgroup& delta, const Box& coefficients, const Box& points);
inline Integer brute_epsilon(const Subgroup& delta, const Box& box) { return brute_epsilon(delta, box, box); }

/// Doubles the coefficient box from `start` until the minimum positive element
/// is stable, then the point box until the count is, both up to `max_bound`.
/// The point box starts large enough to contain that minimum.
Integer brute_epsilon_auto(const Subgroup& delta, const Box& start, std::int64_t max_bound = 1 << 14);

/// |{σ ∈ Σ_{>=0} : σ < Δ_{>0}}| for Δ ⊆ Σ, counted the same way.
Integer brute_relative_epsilon(const Subgroup& sigma, const Subgroup& delta, const Box& coefficients,
                               const Box& points);
Integer brute_relative_epsilon_auto(const Subgroup& sigma, const Subgroup& delta, const Box& start,
                                    std::int64_t max_bound = 1 << 14);

/// Adjugate-based membership, independent of forward substitution.
bool brute_member(const Subgroup& delta, const LexVector& v);

/// Number of cosets of Δ in Z^n found by breadth-first search over unit
/// steps; each coset is identified by its adjugate key.
Integer brute_index(const Subgroup& delta, std::size_t max_cosets = 1u << 20);

/// |{x ∈ Z^n/Δ : k·x = 0}| by enumerating all cosets.
Integer brute_torsion_count(const Subgroup& delta, const Integer& k, std::size_t max_cosets = 1u << 20);

struct CoverCheck {
  bool ok;
  std::optional<LexVector> counterexample;
};

/// Checks Γ_{>=0} = ∪ (γ_i + Δ_{>=0}) on every γ >= 0 in the box.
CoverCheck brute_cover_verify(const Subgroup& delta, const std::vector<LexVector>& reps, const Box& box,
                              Exec exec = Exec::Parallel);

/// Shortest PMT sequence making m1 | m2, by breadth-first search over every
/// legal step; nullopt if none exists within `depth` steps.
std::optional<std::vector<PmtStep>> pmt_bfs(const Frame& frame, const Monomial& m1, const Monomial& m2,
                                            std::size_t depth = kDefaultBfsDepth);

}  // namespace valext::oracle
