#pragma once

// Finite-index subgroups of Z^n under the lexicographic order.
//
// Convention used everywhere in valext: coordinate 0 is the most significant
// one, so the convex subgroups of Z^n are the trailing-coordinate subgroups
// and e_n = (0,...,0,1) is the least positive element. A subgroup is kept in
// column-style lower-triangular Hermite normal form H, so that
// Delta ∩ Z·e_n = H[n-1][n-1]·Z·e_n.

#include "valext/integer.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace valext {

class LexVector {
 public:
  LexVector() = default;
  explicit LexVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LexVector(std::initializer_list<std::int64_t> coords);

  static LexVector zero(std::size_t n) { return LexVector(std::vector<Integer>(n, Integer(0))); }
  /// k·e_n, the k-th multiple of the least positive element.
  static LexVector last_axis(std::size_t n, const Integer& k);

  std::size_t size() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  /// a >= 0 iff a = 0 or its leading nonzero coordinate is positive.
  bool is_nonnegative() const;
  bool is_positive() const;
  /// Index of the first nonzero coordinate, or size() for the zero vector.
  std::size_t leading_index() const;

  LexVector& operator+=(const LexVector& o);
  LexVector& operator-=(const LexVector& o);
  friend LexVector operator+(LexVector a, const LexVector& b) { return a += b; }
  friend LexVector operator-(LexVector a, const LexVector& b) { return a -= b; }
  friend LexVector operator*(const Integer& k, const LexVector& v);
  friend bool operator==(const LexVector& a, const LexVector& b) { return a.coords_ == b.coords_; }
  /// Lexicographic; throws LengthMismatch on differing lengths.
  friend std::strong_ordering operator<=>(const LexVector& a, const LexVector& b);

 private:
  std::vector<Integer> coords_;
};

enum class Ordering { LT, EQ, GT };

Ordering lex_compare(const LexVector& a, const LexVector& b);

/// A full-rank subgroup of Z^n with its canonical Hermite basis.
class Subgroup {
 public:
  std::size_t rank() const noexcept { return n_; }
  const std::vector<LexVector>& generators() const noexcept { return generators_; }
  /// Column j of the lower-triangular Hermite basis.
  const LexVector& basis(std::size_t j) const { return hnf_[j]; }
  const std::vector<LexVector>& basis() const noexcept { return hnf_; }
  /// H[row][col].
  const Integer& hnf(std::size_t row, std::size_t col) const { return hnf_[col][row]; }
  const Integer& diagonal(std::size_t i) const { return hnf_[i][i]; }

 private:
  friend Subgroup canonicalize(std::size_t n, const std::vector<LexVector>& generators);
  std::size_t n_ = 0;
  std::vector<LexVector> generators_;
  std::vector<LexVector> hnf_;
};

/// Column Hermite normal form of the lattice spanned by `generators`
/// (zero columns ignored). Throws NotFiniteIndex when rank < n.
Subgroup canonicalize(std::size_t n, const std::vector<LexVector>& generators);

struct QuotientStructure {
  std::vector<Integer> invariant_factors;  // d_1 | d_2 | ... | d_n
};

struct CosetCover {
  std::vector<LexVector> representatives;  // increasing, all >= 0
};

struct EpsilonChain {
  Integer gamma_sigma;  // ε(Γ|Σ)
  Integer sigma_delta;  // ε(Σ|Δ)
  Integer gamma_delta;  // ε(Γ|Δ)
};

Integer group_index(const Subgroup& delta);

/// Number of nonnegative elements of Z^n strictly below every positive
/// element of Δ; read off as the last Hermite diagonal entry.
Integer initial_index(const Subgroup& delta);

/// [0, e_n, ..., (ε-1)e_n]: every γ >= 0 with γ < Δ_{>0}, increasing.
std::vector<LexVector> smallest_positive_elements(const Subgroup& delta);

/// True iff every Hermite diagonal entry above the last is 1, which holds
/// exactly when the initial index equals the group index.
bool unit_triangular_criterion(const Subgroup& delta);

/// Finite cover Γ_{>=0} = ∪ (γ_i + Δ_{>=0}), or nullopt when none exists.
std::optional<CosetCover> semigroup_cover(const Subgroup& delta);

QuotientStructure quotient_invariants(const Subgroup& delta);

bool membership(const Subgroup& delta, const LexVector& v);

/// inner ⊆ outer, checked on the generators of inner.
bool is_subgroup_of(const Subgroup& inner, const Subgroup& outer);

/// Initial indices along Δ ⊆ Σ ⊆ Z^n. Throws NotNested if Δ ⊄ Σ.
EpsilonChain epsilon_chain(const Subgroup& delta, const Subgroup& sigma);

}  // namespace valext
