#include "valext/oracle.hpp"

#include "valext/error.hpp"

#include <deque>
#include <limits>
#include <set>

namespace valext::oracle {

using kernels::Columns;
using kernels::CosetKey;
using kernels::Vec;

Box::Box(std::int64_t b) : bound(b) {
  if (b < 1) throw Error(ErrorCode::InvalidInput, "box bound must be at least 1");
  if (b > (std::int64_t{1} << 24)) throw Error(ErrorCode::OracleRange, "box bound too large");
}

Box default_box(std::size_t n) { return Box(n <= 3 ? 8 : 5); }

namespace {

constexpr std::int64_t kEntryLimit = std::int64_t{1} << 31;

std::int64_t small(const Integer& x) {
  auto v = to_int64(x);
  if (!v || *v > kEntryLimit || *v < -kEntryLimit)
    throw Error(ErrorCode::OracleRange, "entry " + to_string(x) + " too large for enumeration");
  return *v;
}

Vec small(const LexVector& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v.coords()) out.push_back(small(x));
  return out;
}

LexVector big(const Vec& v) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(make_integer(x));
  return LexVector(std::move(out));
}

Columns columns_of(std::size_t rows, const std::vector<LexVector>& cols) {
  Columns c;
  c.rows = rows;
  for (const auto& col : cols)
    if (!col.is_zero()) c.cols.push_back(small(col));
  return c;
}

CosetKey key_of(const Subgroup& delta) { return CosetKey(columns_of(delta.rank(), delta.basis())); }

// Literal enumeration of the lex interval [lower, upper) inside the box:
// coordinates are chosen most-significant first, and a prefix is only
// extended while some completion can still land inside the interval.
void enumerate_interval(const Vec& lower, const Vec& upper, std::int64_t bound, std::size_t k, bool tight_low,
                        bool tight_high, Vec& cur, const CosetKey* sigma, std::vector<Vec>& out) {
  const std::size_t n = cur.size();
  if (k == n) {
    if (tight_high) return;  // equal to upper
    if (sigma && !sigma->contains(cur)) return;
    out.push_back(cur);
    return;
  }
  std::int64_t lo = -bound, hi = bound;
  if (tight_low) lo = std::max(lo, lower[k]);
  if (tight_high) hi = std::min(hi, upper[k]);
  for (std::int64_t x = lo; x <= hi; ++x) {
    cur[k] = x;
    enumerate_interval(lower, upper, bound, k + 1, tight_low && x == lower[k], tight_high && x == upper[k],
                       cur, sigma, out);
  }
}

std::vector<Vec> points_below(const Vec& upper, std::int64_t bound, const CosetKey* sigma) {
  const std::size_t n = upper.size();
  Vec lower(n, 0), cur(n, 0);
  std::vector<Vec> out;
  if (!kernels::lex_positive(upper)) return out;
  enumerate_interval(lower, upper, bound, 0, true, true, cur, sigma, out);
  return out;
}

Vec require_min_positive(const Subgroup& delta, const Box& box) {
  auto m = kernels::min_positive_combination(columns_of(delta.rank(), delta.basis()), box.bound,
                                             Exec::Parallel);
  if (!m) throw Error(ErrorCode::UnstableCount, "no positive lattice element in the coefficient box");
  return *m;
}

// Counts below the minimum found at B (d1) and at 2B (d2), over the point
// box and its double.
Integer stable_count(const Vec& d1, const Vec& d2, const Box& points, const CosetKey* sigma) {
  auto c1 = points_below(d1, points.bound, sigma).size();
  auto c2 = points_below(d2, points.doubled().bound, sigma).size();
  if (d1 != d2 || c1 != c2)
    throw Error(ErrorCode::UnstableCount, "count " + std::to_string(c1) + " at bound " +
                                              std::to_string(points.bound) + " but " + std::to_string(c2) +
                                              " at the doubled bound");
  return make_integer(static_cast<std::int64_t>(c1));
}

Integer stable_count(const Subgroup& delta, const Box& coefficients, const Box& points, const CosetKey* sigma) {
  return stable_count(require_min_positive(delta, coefficients), require_min_positive(delta, coefficients.doubled()),
                      points, sigma);
}

// Minimum positive element from the smallest coefficient box, doubling
// from `start`, on which it no longer moves when the box is doubled once more.
Vec stable_minimum(const Subgroup& delta, const Box& start, std::int64_t max_bound) {
  for (Box c = start;; c = c.doubled()) {
    auto d1 = kernels::min_positive_combination(columns_of(delta.rank(), delta.basis()), c.bound, Exec::Parallel);
    auto d2 = kernels::min_positive_combination(columns_of(delta.rank(), delta.basis()), 2 * c.bound,
                                                Exec::Parallel);
    if (d1 && d1 == d2) return *d1;
    if (4 * c.bound > max_bound)
      throw Error(ErrorCode::UnstableCount, "minimum positive element not stable up to bound " +
                                                std::to_string(max_bound));
  }
}

// Smallest point box at least `start` that contains `d`.
Box enclosing(const Box& start, const Vec& d) {
  std::int64_t b = start.bound;
  for (auto x : d) b = std::max(b, x < 0 ? -x : x);
  return Box(b);
}

template <typename F>
Integer auto_double(const Box& start, std::int64_t max_bound, F&& count) {
  for (std::int64_t b = start.bound;; b *= 2) {
    try {
      return count(Box(b));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnstableCount || 4 * b > max_bound) throw;
    }
  }
}

}  // namespace

std::optional<LexVector> brute_min_positive(const Subgroup& delta, const Box& box, Exec exec) {
  auto m = kernels::min_positive_combination(columns_of(delta.rank(), delta.basis()), box.bound, exec);
  if (!m) return std::nullopt;
  return big(*m);
}

std::optional<LexVector> brute_min_positive_raw(const Subgroup& delta, const Box& box, Exec exec) {
  auto m = kernels::min_positive_combination(columns_of(delta.rank(), delta.generators()), box.bound, exec);
  if (!m) return std::nullopt;
  return big(*m);
}

std::vector<LexVector> brute_points_below(const LexVector& upper, const Box& box, const Subgroup* sigma) {
  std::optional<CosetKey> key;
  if (sigma) key.emplace(key_of(*sigma));
  std::vector<LexVector> out;
  for (const auto& p : points_below(small(upper), box.bound, key ? &*key : nullptr)) out.push_back(big(p));
  return out;
}

Integer brute_epsilon(const Subgroup& delta, const Box& coefficients, const Box& points) {
  return stable_count(delta, coefficients, points, nullptr);
}

Integer brute_epsilon_auto(const Subgroup& delta, const Box& start, std::int64_t max_bound) {
  Vec d = stable_minimum(delta, start, max_bound);
  return auto_double(enclosing(start, d), max_bound,
                     [&](const Box& points) { return stable_count(d, d, points, nullptr); });
}

Integer brute_relative_epsilon(const Subgroup& sigma, const Subgroup& delta, const Box& coefficients,
                               const Box& points) {
  CosetKey key = key_of(sigma);
  return stable_count(delta, coefficients, points, &key);
}

Integer brute_relative_epsilon_auto(const Subgroup& sigma, const Subgroup& delta, const Box& start,
                                    std::int64_t max_bound) {
  Vec d = stable_minimum(delta, start, max_bound);
  CosetKey key = key_of(sigma);
  return auto_double(enclosing(start, d), max_bound,
                     [&](const Box& points) { return stable_count(d, d, points, &key); });
}

bool brute_member(const Subgroup& delta, const LexVector& v) {
  if (v.size() != delta.rank()) throw Error(ErrorCode::LengthMismatch, "vector length does not match rank");
  return key_of(delta).contains(small(v));
}

namespace {

std::vector<Vec> all_cosets(const CosetKey& key, std::size_t max_cosets) {
  const std::size_t n = key.rank();
  std::set<Vec> seen;
  std::vector<Vec> reps;
  std::deque<Vec> queue;
  Vec zero(n, 0);
  seen.insert(key.key(zero));
  reps.push_back(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    Vec cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      for (int s : {1, -1}) {
        Vec next = cur;
        next[i] += s;
        if (seen.insert(key.key(next)).second) {
          if (reps.size() >= max_cosets) throw Error(ErrorCode::OracleRange, "too many cosets to enumerate");
          reps.push_back(next);
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return reps;
}

}  // namespace

Integer brute_index(const Subgroup& delta, std::size_t max_cosets) {
  return make_integer(static_cast<std::int64_t>(all_cosets(key_of(delta), max_cosets).size()));
}

Integer brute_torsion_count(const Subgroup& delta, const Integer& k, std::size_t max_cosets) {
  CosetKey key = key_of(delta);
  const std::int64_t kk = small(k);
  std::int64_t count = 0;
  for (auto v : all_cosets(key, max_cosets)) {
    for (auto& x : v) x *= kk;
    if (key.contains(v)) ++count;
  }
  return make_integer(count);
}

CoverCheck brute_cover_verify(const Subgroup& delta, const std::vector<LexVector>& reps, const Box& box,
                              Exec exec) {
  std::vector<Vec> r;
  for (const auto& g : reps) {
    if (g.size() != delta.rank()) throw Error(ErrorCode::LengthMismatch, "representative of the wrong length");
    if (!g.is_nonnegative()) throw Error(ErrorCode::PreconditionViolated, "representatives must be >= 0");
    r.push_back(small(g));
  }
  auto failure = kernels::first_cover_failure(key_of(delta), r, box.bound, exec);
  if (!failure) return CoverCheck{true, std::nullopt};
  return CoverCheck{false, big(*failure)};
}

// ---------------------------------------------------------------------------

namespace {

struct BfsState {
  std::vector<Vec> values;  // parameter values, by parameter
  Vec diff;                 // exponents of m2 minus exponents of m1
  std::size_t parent;
  PmtStep step;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::OracleRange, "BFS exponent overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::OracleRange, "BFS value overflow");
  return r;
}

bool all_nonnegative(const Vec& v) {
  for (auto x : v)
    if (x < 0) return false;
  return true;
}

}  // namespace

std::optional<std::vector<PmtStep>> pmt_bfs(const Frame& frame, const Monomial& m1, const Monomial& m2,
                                            std::size_t depth) {
  const std::size_t n = frame.size();
  if (m1.size() != n || m2.size() != n) throw Error(ErrorCode::LengthMismatch, "monomial length");
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::vector<BfsState> nodes;
  BfsState root;
  for (const auto& v : frame.values()) root.values.push_back(small(v));
  for (std::size_t k = 0; k < n; ++k) root.diff.push_back(checked_sub(small(m2.exps[k]), small(m1.exps[k])));
  root.parent = kNone;
  root.step = PmtStep{0, 0};
  nodes.push_back(std::move(root));

  auto path_to = [&](std::size_t idx) {
    std::vector<PmtStep> path;
    for (; nodes[idx].parent != kNone; idx = nodes[idx].parent) path.push_back(nodes[idx].step);
    return std::vector<PmtStep>(path.rbegin(), path.rend());
  };

  std::vector<std::size_t> layer{0};
  for (std::size_t d = 0;; ++d) {
    for (auto idx : layer)
      if (all_nonnegative(nodes[idx].diff)) return path_to(idx);
    if (d == depth) return std::nullopt;
    std::vector<std::size_t> next;
    for (auto idx : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          const auto& vals = nodes[idx].values;
          if (!kernels::lex_less(vals[i], vals[j])) continue;  // need ν(x_j) > ν(x_i)
          BfsState child;
          child.values = vals;
          for (std::size_t r = 0; r < n; ++r) child.values[j][r] = checked_sub(vals[j][r], vals[i][r]);
          child.diff = nodes[idx].diff;
          child.diff[i] = checked_add(child.diff[i], child.diff[j]);
          child.parent = idx;
          child.step = PmtStep{i, j};
          nodes.push_back(std::move(child));
          next.push_back(nodes.size() - 1);
        }
      }
    }
    layer = std::move(next);
  }
}

}  // namespace valext::oracle
