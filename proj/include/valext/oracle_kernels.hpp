#pragma once

// Enumeration kernels behind the brute-force oracle. Each kernel has a serial
// reference path and an OpenMP path; both must return identical results, the
// parallel one only reorders the work.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace valext::oracle::kernels {

enum class Exec { Serial, Parallel };

using Vec = std::vector<std::int64_t>;

/// Small dense integer matrix stored by columns.
struct Columns {
  std::size_t rows = 0;
  std::vector<Vec> cols;
};

bool lex_less(const Vec& a, const Vec& b);
bool lex_positive(const Vec& v);
bool lex_nonnegative(const Vec& v);

/// Lex-least strictly positive G·c over c ∈ [-bound, bound]^m.
std::optional<Vec> min_positive_combination(const Columns& g, std::int64_t bound, Exec exec);

/// Membership test Z^n -> Z^n / Δ via the adjugate of a square basis:
/// v ∈ Δ iff adj(B)·v ≡ 0 (mod det B). Determinant and adjugate come from
/// cofactor expansion, independent of any triangular reduction.
class CosetKey {
 public:
  explicit CosetKey(const Columns& basis);

  std::size_t rank() const noexcept { return n_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  /// adj(B)·v reduced componentwise into [0, |det B|).
  Vec key(const Vec& v) const;
  bool contains(const Vec& v) const;

 private:
  std::size_t n_;
  std::int64_t modulus_;
  std::vector<Vec> adj_;  // adj_[row][col]
};

/// First point γ ∈ [-bound, bound]^n, γ >= 0, with no representative r such
/// that γ - r >= 0 and γ - r ∈ Δ. "First" is by L1 norm, then lex order.
std::optional<Vec> first_cover_failure(const CosetKey& delta, const std::vector<Vec>& reps,
                                       std::int64_t bound, Exec exec);

}  // namespace valext::oracle::kernels
