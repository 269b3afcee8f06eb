#pragma once

// Regular-parameter frames with Z^n-lex values, primitive monoidal
// transforms (PMTs) and the monomial divisibility procedures built on them.
//
// Units are never tracked: every monomial and relation here is "up to a
// unit". A PMT (i, j) adjoins x_j / x_i, i.e. x_j = x_j(1)·x_i(1), which on
// values subtracts column i from column j and on exponent vectors adds the
// exponent of x_j to the exponent of x_i.

#include "valext/error.hpp"
#include "valext/integer.hpp"
#include "valext/ordered_group.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace valext {

inline constexpr std::size_t kDefaultPmtBudget = 10000;

struct Monomial {
  std::vector<Integer> exps;

  std::size_t size() const noexcept { return exps.size(); }
  static Monomial from(std::initializer_list<std::int64_t> e);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Exponentwise a | b.
bool divides(const Monomial& a, const Monomial& b);

class Frame {
 public:
  /// Validates |det V| = 1 and that every value is lex-positive.
  explicit Frame(std::vector<LexVector> values, std::vector<std::string> names = {});

  std::size_t size() const noexcept { return values_.size(); }
  const LexVector& value(std::size_t k) const { return values_[k]; }
  const std::vector<LexVector>& values() const noexcept { return values_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Row of the leading nonzero entry of ν(x_k); 0 is the most significant.
  std::size_t level(std::size_t k) const { return values_[k].leading_index(); }

  friend bool operator==(const Frame& a, const Frame& b) { return a.values_ == b.values_; }

 private:
  struct Unchecked {};
  Frame(Unchecked, std::vector<LexVector> values, std::vector<std::string> names)
      : values_(std::move(values)), names_(std::move(names)) {}
  friend Frame apply_pmt_unchecked(const Frame&, std::size_t, std::size_t);

  std::vector<LexVector> values_;
  std::vector<std::string> names_;
};

/// Determinant by fraction-free elimination; columns are the matrix columns.
Integer determinant(const std::vector<LexVector>& columns);

struct PmtStep {
  std::size_t i;  // dividing parameter
  std::size_t j;  // divided parameter, x_j <- x_j / x_i
  friend bool operator==(const PmtStep&, const PmtStep&) = default;
};

LexVector monomial_value(const Frame& frame, const Monomial& m);

/// Exponent rewrite of one PMT: a'_i = a_i + a_j.
Monomial rewrite(const PmtStep& step, const Monomial& m);

struct PmtResult {
  Frame frame;
  PmtStep step;
  Monomial rewrite(const Monomial& m) const { return valext::rewrite(step, m); }
};

/// Throws InvalidPmt unless ν(x_j) > ν(x_i).
PmtResult pmt(const Frame& frame, const PmtStep& step);

/// Raised when a divisibility search runs out of steps; carries the steps
/// taken so far.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::vector<PmtStep> trace, std::size_t budget)
      : Error(ErrorCode::BudgetExceeded,
              "no divisibility certificate within " + std::to_string(budget) + " steps"),
        trace_(std::move(trace)) {}
  const std::vector<PmtStep>& trace() const noexcept { return trace_; }

 private:
  std::vector<PmtStep> trace_;
};

struct DivisibilityResult {
  std::vector<PmtStep> steps;
  Frame frame;
  Monomial m1;
  Monomial m2;
};

/// Finds PMTs after which m1 | m2. Requires ν(m1) <= ν(m2).
DivisibilityResult make_divisible(const Frame& frame, const Monomial& m1, const Monomial& m2,
                                  std::size_t budget = kDefaultPmtBudget);

struct Replay {
  Frame frame;
  std::vector<Monomial> monomials;
};

/// Applies `steps` in order, rewriting every monomial.
Replay replay(const Frame& frame, const std::vector<PmtStep>& steps, std::vector<Monomial> monomials);

/// x1 = (unit)·y1^a y2^b, x2 = (unit)·y1^c y2^d with |ad - bc| = e.
struct Relation2 {
  Integer a, b, c, d, e;
  friend bool operator==(const Relation2&, const Relation2&) = default;
};

/// Throws MalformedRelation unless exponents are >= 0, e > 0 and |ad-bc| = e.
void validate(const Relation2& rel);

struct Rank2Normalization {
  Integer r;  // least r >= 0 with e | b + r
  Integer s;  // (b + r) / e
  Relation2 relation;
};

/// Input form x1 = y1 y2^b, x2 = y2^e (a = 1, c = 0, d = e).
Rank2Normalization rank2_normalize(const Relation2& rel);

struct PairedRank1Step {
  Relation2 relation;          // still x1 = y1^e, x2 = y2
  Integer omega_x1;            // e, since ω(y1) = 1
  Integer omega_x2;            // value of x2(1) = x2 / x1
  Integer omega_y2_over_y1;    // value of y2 / y1 on the S side
  bool residue_parameter;      // x2 / x1 is a unit; the next x2(1) comes from the residue field
};

/// Value bookkeeping of the paired transforms R[x2/x1], S[y2/y1] in the
/// discrete rank-one case Γ_ν = eZ ⊆ Z = Γ_ω.
PairedRank1Step paired_step_rank1(const Relation2& state, const Integer& omega_x2);

struct FractionCertificate {
  std::vector<PmtStep> steps;
  Frame frame;
  std::size_t m1_index;  // designated lex-min of Ms
  std::size_t n1_index;  // designated lex-min of Ns
  std::vector<Monomial> ms;  // x-side exponents M^e in the final frame
  std::vector<Monomial> ns;
};

/// PMTs after which, for the x-side powers M^e and N^e, N1 divides every
/// N_j and every M_i, and M1 divides every M_i.
FractionCertificate reduce_fraction_supports(const Frame& frame, const Integer& e,
                                             const std::vector<Monomial>& ms,
                                             const std::vector<Monomial>& ns,
                                             std::size_t budget = kDefaultPmtBudget);

/// Re-derives the certificate's divisibility claims from its replay.
bool check_certificate(const Frame& frame, const Integer& e, const std::vector<Monomial>& ms,
                       const std::vector<Monomial>& ns, const FractionCertificate& cert);

}  // namespace valext
