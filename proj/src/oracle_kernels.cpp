#include "valext/oracle_kernels.hpp"

#include "valext/error.hpp"

#include <algorithm>
#include <limits>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace valext::oracle::kernels {

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_positive(const Vec& v) {
  for (auto x : v)
    if (x != 0) return x > 0;
  return false;
}

bool lex_nonnegative(const Vec& v) {
  for (auto x : v)
    if (x != 0) return x > 0;
  return true;
}

namespace {

std::int64_t box_points(std::size_t dims, std::int64_t bound) {
  const std::int64_t side = 2 * bound + 1;
  std::int64_t total = 1;
  for (std::size_t k = 0; k < dims; ++k) {
    if (total > std::numeric_limits<std::int64_t>::max() / side)
      throw Error(ErrorCode::OracleRange, "enumeration box too large");
    total *= side;
  }
  return total;
}

// Point number `idx` of the box, coordinate 0 varying slowest.
void decode(std::int64_t idx, std::int64_t bound, Vec& out) {
  const std::int64_t side = 2 * bound + 1;
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = idx % side - bound;
    idx /= side;
  }
}

void combine(const Columns& g, const Vec& c, Vec& v) {
  std::fill(v.begin(), v.end(), 0);
  for (std::size_t j = 0; j < g.cols.size(); ++j) {
    if (c[j] == 0) continue;
    for (std::size_t i = 0; i < g.rows; ++i) v[i] += g.cols[j][i] * c[j];
  }
}

bool better_failure(const Vec& a, const Vec& b) {
  std::int64_t na = 0, nb = 0;
  for (auto x : a) na += x < 0 ? -x : x;
  for (auto x : b) nb += x < 0 ? -x : x;
  if (na != nb) return na < nb;
  return lex_less(a, b);
}

__int128 cofactor_det(const std::vector<std::vector<__int128>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  __int128 det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<__int128>> minor(n - 1, std::vector<__int128>(n - 1));
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor[r - 1][cc++] = m[r][c];
    __int128 term = m[0][j] * cofactor_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

std::int64_t narrow(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::OracleRange, "adjugate entry exceeds 64 bits");
  return static_cast<std::int64_t>(x);
}

}  // namespace

std::optional<Vec> min_positive_combination(const Columns& g, std::int64_t bound, Exec exec) {
  const std::size_t m = g.cols.size();
  const std::int64_t total = box_points(m, bound);
  std::optional<Vec> best;

  if (exec == Exec::Serial) {
    Vec c(m), v(g.rows);
    for (std::int64_t idx = 0; idx < total; ++idx) {
      decode(idx, bound, c);
      combine(g, c, v);
      if (lex_positive(v) && (!best || lex_less(v, *best))) best = v;
    }
    return best;
  }

#pragma omp parallel
  {
    std::optional<Vec> local;
    Vec c(m), v(g.rows);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      decode(idx, bound, c);
      combine(g, c, v);
      if (lex_positive(v) && (!local || lex_less(v, *local))) local = v;
    }
#pragma omp critical
    {
      if (local && (!best || lex_less(*local, *best))) best = std::move(local);
    }
  }
  return best;
}

CosetKey::CosetKey(const Columns& basis) : n_(basis.rows) {
  if (basis.cols.size() != n_) throw Error(ErrorCode::OracleRange, "coset key needs a square basis");
  if (n_ > 6) throw Error(ErrorCode::OracleRange, "cofactor expansion limited to rank 6");
  // m[i][j] = B[i][j]
  std::vector<std::vector<__int128>> m(n_, std::vector<__int128>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = basis.cols[j][i];
  __int128 det = cofactor_det(m);
  if (det == 0) throw Error(ErrorCode::NotFiniteIndex, "singular basis");
  modulus_ = narrow(det < 0 ? -det : det);

  // adj(B)[i][j] = (-1)^{i+j} det(B without row j and column i)
  adj_.assign(n_, Vec(n_, 0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<std::vector<__int128>> minor;
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == j) continue;
        std::vector<__int128> row;
        for (std::size_t c = 0; c < n_; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      __int128 cof = cofactor_det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj_[i][j] = narrow(cof);
    }
  }
}

Vec CosetKey::key(const Vec& v) const {
  Vec k(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc += static_cast<__int128>(adj_[i][j]) * v[j];
    __int128 r = acc % modulus_;
    if (r < 0) r += modulus_;
    k[i] = static_cast<std::int64_t>(r);
  }
  return k;
}

bool CosetKey::contains(const Vec& v) const {
  for (std::size_t i = 0; i < n_; ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc += static_cast<__int128>(adj_[i][j]) * v[j];
    if (acc % modulus_ != 0) return false;
  }
  return true;
}

namespace {

// Representatives grouped by coset key, so each point is compared only with
// the representatives of its own coset.
using RepIndex = std::map<Vec, std::vector<const Vec*>>;

RepIndex index_reps(const CosetKey& delta, const std::vector<Vec>& reps) {
  RepIndex out;
  for (const auto& r : reps) out[delta.key(r)].push_back(&r);
  return out;
}

bool covered(const CosetKey& delta, const RepIndex& reps, const Vec& gamma, Vec& diff) {
  auto it = reps.find(delta.key(gamma));
  if (it == reps.end()) return false;
  for (const Vec* r : it->second) {
    for (std::size_t k = 0; k < gamma.size(); ++k) diff[k] = gamma[k] - (*r)[k];
    if (lex_nonnegative(diff)) return true;
  }
  return false;
}

}  // namespace

std::optional<Vec> first_cover_failure(const CosetKey& delta, const std::vector<Vec>& reps,
                                       std::int64_t bound, Exec exec) {
  const std::size_t n = delta.rank();
  const std::int64_t total = box_points(n, bound);
  const RepIndex index = index_reps(delta, reps);
  std::optional<Vec> first;

  if (exec == Exec::Serial) {
    Vec gamma(n), diff(n);
    for (std::int64_t idx = 0; idx < total; ++idx) {
      decode(idx, bound, gamma);
      if (!lex_nonnegative(gamma) || covered(delta, index, gamma, diff)) continue;
      if (!first || better_failure(gamma, *first)) first = gamma;
    }
    return first;
  }

#pragma omp parallel
  {
    std::optional<Vec> local;
    Vec gamma(n), diff(n);
#pragma omp for schedule(dynamic, 4096)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      decode(idx, bound, gamma);
      if (!lex_nonnegative(gamma) || covered(delta, index, gamma, diff)) continue;
      if (!local || better_failure(gamma, *local)) local = gamma;
    }
#pragma omp critical
    {
      if (local && (!first || better_failure(*local, *first))) first = std::move(local);
    }
  }
  return first;
}

}  // namespace valext::oracle::kernels
