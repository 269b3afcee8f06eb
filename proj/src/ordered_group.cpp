#include "valext/ordered_group.hpp"

#include "valext/error.hpp"

#include <algorithm>
#include <utility>

namespace valext {

LexVector::LexVector(std::initializer_list<std::int64_t> coords) {
  coords_.reserve(coords.size());
  for (auto c : coords) coords_.push_back(make_integer(c));
}

LexVector LexVector::last_axis(std::size_t n, const Integer& k) {
  LexVector v = zero(n);
  if (n > 0) v.coords_[n - 1] = k;
  return v;
}

bool LexVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

std::size_t LexVector::leading_index() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) return i;
  return coords_.size();
}

bool LexVector::is_nonnegative() const {
  auto i = leading_index();
  return i == coords_.size() || coords_[i] > 0;
}

bool LexVector::is_positive() const {
  auto i = leading_index();
  return i < coords_.size() && coords_[i] > 0;
}

static void require_same_length(const LexVector& a, const LexVector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::LengthMismatch,
                "vectors of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

LexVector& LexVector::operator+=(const LexVector& o) {
  require_same_length(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LexVector& LexVector::operator-=(const LexVector& o) {
  require_same_length(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LexVector operator*(const Integer& k, const LexVector& v) {
  LexVector r = v;
  for (auto& c : r.coords_) c *= k;
  return r;
}

Ordering lex_compare(const LexVector& a, const LexVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    int s = cmp(a[i], b[i]);
    if (s < 0) return Ordering::LT;
    if (s > 0) return Ordering::GT;
  }
  return Ordering::EQ;
}

std::strong_ordering operator<=>(const LexVector& a, const LexVector& b) {
  switch (lex_compare(a, b)) {
    case Ordering::LT: return std::strong_ordering::less;
    case Ordering::GT: return std::strong_ordering::greater;
    case Ordering::EQ: break;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Hermite normal form

namespace {

void axpy_column(std::vector<Integer>& target, const Integer& q, const std::vector<Integer>& src) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] -= q * src[i];
}

}  // namespace

Subgroup canonicalize(std::size_t n, const std::vector<LexVector>& generators) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "rank must be at least 1");
  std::vector<std::vector<Integer>> cols;
  for (const auto& g : generators) {
    if (g.size() != n)
      throw Error(ErrorCode::LengthMismatch,
                  "generator of length " + std::to_string(g.size()) + " in rank " + std::to_string(n));
    if (!g.is_zero()) cols.push_back(g.coords());
  }
  if (cols.size() < n)
    throw Error(ErrorCode::NotFiniteIndex, "fewer nonzero generators than the rank");

  for (std::size_t r = 0; r < n; ++r) {
    // Euclid on row r across the not-yet-pivoted columns.
    while (true) {
      std::size_t pivot = cols.size();
      for (std::size_t j = r; j < cols.size(); ++j) {
        if (cols[j][r] == 0) continue;
        if (pivot == cols.size() || abs(cols[j][r]) < abs(cols[pivot][r])) pivot = j;
      }
      if (pivot == cols.size())
        throw Error(ErrorCode::NotFiniteIndex, "generators span a lattice of rank < " + std::to_string(n));
      std::swap(cols[r], cols[pivot]);
      bool cleared = true;
      for (std::size_t j = r + 1; j < cols.size(); ++j) {
        if (cols[j][r] == 0) continue;
        Integer q = cols[j][r] / cols[r][r];
        axpy_column(cols[j], q, cols[r]);
        if (cols[j][r] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (cols[r][r] < 0)
      for (auto& x : cols[r]) x = -x;
  }
  cols.resize(n);

  // Reduce entries left of the diagonal into [0, H[i][i]).
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      Integer q = floor_div(cols[k][i], cols[i][i]);
      if (q != 0) axpy_column(cols[k], q, cols[i]);
    }
  }

  Subgroup s;
  s.n_ = n;
  s.generators_ = generators;
  s.hnf_.reserve(n);
  for (auto& c : cols) s.hnf_.emplace_back(std::move(c));
  return s;
}

// ---------------------------------------------------------------------------

Integer group_index(const Subgroup& delta) {
  Integer idx = 1;
  for (std::size_t i = 0; i < delta.rank(); ++i) idx *= delta.diagonal(i);
  return idx;
}

Integer initial_index(const Subgroup& delta) { return delta.diagonal(delta.rank() - 1); }

std::vector<LexVector> smallest_positive_elements(const Subgroup& delta) {
  const std::size_t n = delta.rank();
  const Integer eps = initial_index(delta);
  std::vector<LexVector> out;
  for (Integer k = 0; k < eps; ++k) out.push_back(LexVector::last_axis(n, k));
  return out;
}

bool unit_triangular_criterion(const Subgroup& delta) {
  for (std::size_t i = 0; i + 1 < delta.rank(); ++i)
    if (delta.diagonal(i) != 1) return false;
  return true;
}

std::optional<CosetCover> semigroup_cover(const Subgroup& delta) {
  if (!unit_triangular_criterion(delta)) return std::nullopt;
  return CosetCover{smallest_positive_elements(delta)};
}

bool membership(const Subgroup& delta, const LexVector& v) {
  const std::size_t n = delta.rank();
  if (v.size() != n)
    throw Error(ErrorCode::LengthMismatch, "vector length does not match subgroup rank");
  // Forward substitution: H c = v with H lower triangular.
  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer rest = v[i];
    for (std::size_t k = 0; k < i; ++k) rest -= delta.hnf(i, k) * c[k];
    if (!divides(delta.diagonal(i), rest)) return false;
    c[i] = rest / delta.diagonal(i);
  }
  return true;
}

bool is_subgroup_of(const Subgroup& inner, const Subgroup& outer) {
  if (inner.rank() != outer.rank())
    throw Error(ErrorCode::LengthMismatch, "subgroups of different rank");
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const LexVector& g) { return membership(outer, g); });
}

EpsilonChain epsilon_chain(const Subgroup& delta, const Subgroup& sigma) {
  if (!is_subgroup_of(delta, sigma))
    throw Error(ErrorCode::NotNested, "a generator of the inner subgroup is not in the outer one");
  EpsilonChain chain;
  chain.gamma_sigma = initial_index(sigma);
  chain.gamma_delta = initial_index(delta);
  chain.sigma_delta = chain.gamma_delta / chain.gamma_sigma;
  return chain;
}

// ---------------------------------------------------------------------------
// Smith normal form of the Hermite basis.

QuotientStructure quotient_invariants(const Subgroup& delta) {
  const std::size_t n = delta.rank();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = delta.hnf(i, j);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == n || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility chain: fold an offending row into row t and retry.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(a[t][t], a[i][j])) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
    a[t][t] = abs(a[t][t]);
  }

  QuotientStructure q;
  for (std::size_t i = 0; i < n; ++i) q.invariant_factors.push_back(a[i][i]);
  return q;
}

}  // namespace valext
