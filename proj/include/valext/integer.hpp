#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace valext {

/// Arbitrary-precision integer used by every exact computation in the library.
using Integer = mpz_class;

inline Integer make_integer(std::int64_t v) {
  Integer r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline bool fits_int64(const Integer& v) {
  static const Integer lo = make_integer(INT64_MIN);
  static const Integer hi = make_integer(INT64_MAX);
  return v >= lo && v <= hi;
}

inline std::optional<std::int64_t> to_int64(const Integer& v) {
  if (!fits_int64(v)) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

/// Floor division and the matching nonnegative remainder (divisor > 0).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::vector<Integer> to_integers(const std::vector<std::int64_t>& v) {
  std::vector<Integer> out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(make_integer(x));
  return out;
}

}  // namespace valext
