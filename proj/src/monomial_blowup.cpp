#include "valext/monomial_blowup.hpp"

#include <algorithm>
#include <optional>

namespace valext {

Monomial Monomial::from(std::initializer_list<std::int64_t> e) {
  Monomial m;
  for (auto x : e) m.exps.push_back(make_integer(x));
  return m;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "monomials of different length");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.exps[k] > b.exps[k]) return false;
  return true;
}

Integer determinant(const std::vector<LexVector>& columns) {
  const std::size_t n = columns.size();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (columns[i].size() != n) throw Error(ErrorCode::LengthMismatch, "value matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m[j][i] = columns[i][j];
  }
  // Bareiss: every intermediate division is exact.
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    }
    prev = m[k][k];
  }
  return n == 0 ? Integer(1) : Integer(sign * m[n - 1][n - 1]);
}

Frame::Frame(std::vector<LexVector> values, std::vector<std::string> names)
    : values_(std::move(values)), names_(std::move(names)) {
  const std::size_t n = values_.size();
  if (n == 0) throw Error(ErrorCode::InvalidFrame, "a frame needs at least one parameter");
  for (std::size_t k = 0; k < n; ++k) {
    if (values_[k].size() != n)
      throw Error(ErrorCode::InvalidFrame, "value of x" + std::to_string(k + 1) + " has the wrong length");
    if (!values_[k].is_positive())
      throw Error(ErrorCode::InvalidFrame, "value of x" + std::to_string(k + 1) + " is not positive");
  }
  if (abs(determinant(values_)) != 1)
    throw Error(ErrorCode::InvalidFrame, "parameter values are not a Z-basis (|det| != 1)");
  if (names_.empty())
    for (std::size_t k = 0; k < n; ++k) names_.push_back("x" + std::to_string(k + 1));
  if (names_.size() != n) throw Error(ErrorCode::InvalidFrame, "name count does not match parameter count");
}

LexVector monomial_value(const Frame& frame, const Monomial& m) {
  const std::size_t n = frame.size();
  if (m.size() != n) throw Error(ErrorCode::LengthMismatch, "monomial length does not match frame");
  LexVector v = LexVector::zero(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (m.exps[k] == 0) continue;
    v += m.exps[k] * frame.value(k);
  }
  return v;
}

Monomial rewrite(const PmtStep& step, const Monomial& m) {
  Monomial out = m;
  out.exps[step.i] += m.exps[step.j];
  return out;
}

Frame apply_pmt_unchecked(const Frame& frame, std::size_t i, std::size_t j) {
  auto values = frame.values_;
  values[j] -= values[i];
  return Frame(Frame::Unchecked{}, std::move(values), frame.names_);
}

PmtResult pmt(const Frame& frame, const PmtStep& step) {
  const std::size_t n = frame.size();
  if (step.i >= n || step.j >= n || step.i == step.j)
    throw Error(ErrorCode::InvalidPmt, "parameter indices out of range or equal");
  if (!(frame.value(step.j) > frame.value(step.i)))
    throw Error(ErrorCode::InvalidPmt, "PMT needs nu(x" + std::to_string(step.j + 1) + ") > nu(x" +
                                           std::to_string(step.i + 1) + ")");
  return PmtResult{apply_pmt_unchecked(frame, step.i, step.j), step};
}

Replay replay(const Frame& frame, const std::vector<PmtStep>& steps, std::vector<Monomial> monomials) {
  Frame f = frame;
  for (const auto& st : steps) {
    f = pmt(f, st).frame;
    for (auto& m : monomials) m = rewrite(st, m);
  }
  return Replay{std::move(f), std::move(monomials)};
}

// ---------------------------------------------------------------------------
// Divisibility search

namespace {

/// The step chosen for the difference exponent vector b - a.
///
/// Same-level parameters are first collapsed by a subtractive Euclidean loop
/// (divide the largest by the smallest) until each level carries exactly one
/// parameter, whose leading entry is then 1. On such a frame the leading
/// parameter p_l of the most significant level where a and b differ has a
/// surplus, and every deficit at a less significant level is cleared by
/// dividing p_l by that level's parameter.
PmtStep next_step(const Frame& frame, const Monomial& a, const Monomial& b) {
  const std::size_t n = frame.size();
  std::vector<std::vector<std::size_t>> by_level(n);
  for (std::size_t k = 0; k < n; ++k) by_level[frame.level(k)].push_back(k);

  for (const auto& group : by_level) {
    if (group.size() < 2) continue;
    auto [lo, hi] = std::minmax_element(group.begin(), group.end(), [&](std::size_t x, std::size_t y) {
      return frame.value(x) < frame.value(y);
    });
    return PmtStep{*lo, *hi};
  }

  // Stratified: by_level[l] = {p_l}.
  std::optional<std::size_t> surplus;
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t p = by_level[l].front();
    Integer d = b.exps[p] - a.exps[p];
    if (!surplus) {
      if (d == 0) continue;
      if (d < 0) throw Error(ErrorCode::PreconditionViolated, "nu(M1) > nu(M2)");
      surplus = p;
      continue;
    }
    if (d < 0) return PmtStep{p, *surplus};
  }
  throw Error(ErrorCode::PreconditionViolated, "no step available although M1 does not divide M2");
}

/// A frame plus a set of tracked monomials, all rewritten by every step.
class Transformer {
 public:
  Transformer(Frame frame, std::vector<Monomial> tracked, std::size_t budget)
      : frame_(std::move(frame)), tracked_(std::move(tracked)), budget_(budget) {}

  void make_divide(std::size_t lower, std::size_t upper) {
    while (!divides(tracked_[lower], tracked_[upper]))
      apply(next_step(frame_, tracked_[lower], tracked_[upper]));
  }

  void apply(const PmtStep& st) {
    if (steps_.size() >= budget_) throw BudgetExceededError(steps_, budget_);
    frame_ = pmt(frame_, st).frame;
    for (auto& m : tracked_) m = rewrite(st, m);
    steps_.push_back(st);
  }

  const Frame& frame() const { return frame_; }
  const std::vector<Monomial>& tracked() const { return tracked_; }
  const std::vector<PmtStep>& steps() const { return steps_; }

 private:
  Frame frame_;
  std::vector<Monomial> tracked_;
  std::vector<PmtStep> steps_;
  std::size_t budget_;
};

void require_monomial(const Frame& frame, const Monomial& m, const char* what) {
  if (m.size() != frame.size())
    throw Error(ErrorCode::LengthMismatch, std::string(what) + " has the wrong number of exponents");
  for (const auto& x : m.exps)
    if (x < 0) throw Error(ErrorCode::PreconditionViolated, std::string(what) + " has a negative exponent");
}

}  // namespace

DivisibilityResult make_divisible(const Frame& frame, const Monomial& m1, const Monomial& m2,
                                  std::size_t budget) {
  if (budget == 0) throw Error(ErrorCode::PreconditionViolated, "budget must be positive");
  require_monomial(frame, m1, "M1");
  require_monomial(frame, m2, "M2");
  if (monomial_value(frame, m1) > monomial_value(frame, m2))
    throw Error(ErrorCode::PreconditionViolated, "nu(M1) > nu(M2)");

  Transformer t(frame, {m1, m2}, budget);
  t.make_divide(0, 1);
  return DivisibilityResult{t.steps(), t.frame(), t.tracked()[0], t.tracked()[1]};
}

// ---------------------------------------------------------------------------

void validate(const Relation2& rel) {
  if (rel.a < 0 || rel.b < 0 || rel.c < 0 || rel.d < 0)
    throw Error(ErrorCode::MalformedRelation, "exponents must be nonnegative");
  if (rel.e <= 0) throw Error(ErrorCode::MalformedRelation, "e must be positive");
  if (abs(rel.a * rel.d - rel.b * rel.c) != rel.e)
    throw Error(ErrorCode::MalformedRelation, "|ad - bc| != e");
}

Rank2Normalization rank2_normalize(const Relation2& rel) {
  validate(rel);
  if (rel.a != 1 || rel.c != 0 || rel.d != rel.e)
    throw Error(ErrorCode::MalformedRelation, "expected x1 = y1 y2^b, x2 = y2^e");
  Integer r = floor_mod(-rel.b, rel.e);
  Integer s = (rel.b + r) / rel.e;
  Relation2 out{1, 0, 0, rel.e, rel.e};
  return Rank2Normalization{r, s, out};
}

PairedRank1Step paired_step_rank1(const Relation2& state, const Integer& omega_x2) {
  validate(state);
  if (state.a != state.e || state.b != 0 || state.c != 0 || state.d != 1)
    throw Error(ErrorCode::MalformedRelation, "expected x1 = y1^e, x2 = y2");
  if (omega_x2 <= 0 || !divides(state.e, omega_x2))
    throw Error(ErrorCode::MalformedRelation, "omega(x2) must be a positive multiple of e");
  PairedRank1Step out;
  out.relation = state;
  out.omega_x1 = state.e;
  out.omega_x2 = omega_x2 - state.e;
  out.omega_y2_over_y1 = omega_x2 - 1;
  out.residue_parameter = out.omega_x2 == 0;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t lex_min_index(const Frame& frame, const std::vector<Monomial>& ms) {
  std::size_t best = 0;
  LexVector best_value = monomial_value(frame, ms[0]);
  for (std::size_t k = 1; k < ms.size(); ++k) {
    LexVector v = monomial_value(frame, ms[k]);
    if (v < best_value) {
      best = k;
      best_value = std::move(v);
    }
  }
  return best;
}

std::vector<Monomial> x_side(const Integer& e, const std::vector<Monomial>& ms) {
  std::vector<Monomial> out = ms;
  for (auto& m : out)
    for (auto& x : m.exps) x *= e;
  return out;
}

}  // namespace

FractionCertificate reduce_fraction_supports(const Frame& frame, const Integer& e,
                                             const std::vector<Monomial>& ms,
                                             const std::vector<Monomial>& ns, std::size_t budget) {
  if (budget == 0) throw Error(ErrorCode::PreconditionViolated, "budget must be positive");
  if (e <= 0) throw Error(ErrorCode::PreconditionViolated, "e must be positive");
  if (ms.empty() || ns.empty()) throw Error(ErrorCode::PreconditionViolated, "Ms and Ns must be nonempty");
  for (const auto& m : ms) require_monomial(frame, m, "an M monomial");
  for (const auto& m : ns) require_monomial(frame, m, "an N monomial");

  const std::size_t m1 = lex_min_index(frame, ms);
  const std::size_t n1 = lex_min_index(frame, ns);
  if (monomial_value(frame, ns[n1]) > monomial_value(frame, ms[m1]))
    throw Error(ErrorCode::PreconditionViolated, "nu(N1) > nu(M1)");

  std::vector<Monomial> tracked = x_side(e, ms);
  auto nbar = x_side(e, ns);
  tracked.insert(tracked.end(), nbar.begin(), nbar.end());
  const std::size_t off = ms.size();

  // PMTs keep exponent differences nonnegative, so each established
  // divisibility survives every later step.
  Transformer t(frame, std::move(tracked), budget);
  t.make_divide(off + n1, m1);
  for (std::size_t j = 0; j < ns.size(); ++j) t.make_divide(off + n1, off + j);
  for (std::size_t i = 0; i < ms.size(); ++i) t.make_divide(m1, i);
  for (std::size_t i = 0; i < ms.size(); ++i) t.make_divide(off + n1, i);

  FractionCertificate cert{t.steps(), t.frame(), m1, n1, {}, {}};
  cert.ms.assign(t.tracked().begin(), t.tracked().begin() + static_cast<std::ptrdiff_t>(off));
  cert.ns.assign(t.tracked().begin() + static_cast<std::ptrdiff_t>(off), t.tracked().end());
  return cert;
}

bool check_certificate(const Frame& frame, const Integer& e, const std::vector<Monomial>& ms,
                       const std::vector<Monomial>& ns, const FractionCertificate& cert) {
  if (cert.m1_index >= ms.size() || cert.n1_index >= ns.size()) return false;
  auto all = x_side(e, ms);
  auto nbar = x_side(e, ns);
  all.insert(all.end(), nbar.begin(), nbar.end());
  Replay r = replay(frame, cert.steps, std::move(all));
  if (!(r.frame == cert.frame)) return false;
  const std::size_t off = ms.size();
  std::vector<Monomial> final_ms(r.monomials.begin(), r.monomials.begin() + static_cast<std::ptrdiff_t>(off));
  std::vector<Monomial> final_ns(r.monomials.begin() + static_cast<std::ptrdiff_t>(off), r.monomials.end());
  if (final_ms != cert.ms || final_ns != cert.ns) return false;
  const Monomial& n1 = final_ns[cert.n1_index];
  const Monomial& m1 = final_ms[cert.m1_index];
  for (const auto& nj : final_ns)
    if (!divides(n1, nj)) return false;
  for (const auto& mi : final_ms)
    if (!divides(n1, mi) || !divides(m1, mi)) return false;
  return true;
}

}  // namespace valext
