#include "valext/oracle.hpp"
#include "valext/ordered_group.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace valext;
namespace oracle = valext::oracle;

namespace {

Subgroup lattice(std::size_t n, std::vector<LexVector> gens) { return canonicalize(n, gens); }

Subgroup scaled_identity(std::size_t n, std::int64_t k) {
  std::vector<LexVector> gens;
  for (std::size_t j = 0; j < n; ++j) {
    LexVector c = LexVector::zero(n);
    c[j] = make_integer(k);
    gens.push_back(c);
  }
  return canonicalize(n, gens);
}

// Lattice equality by membership of every point of [-6,6]^2.
bool same_lattice_on_box(const Subgroup& a, const Subgroup& b) {
  for (std::int64_t x = -6; x <= 6; ++x)
    for (std::int64_t y = -6; y <= 6; ++y) {
      LexVector v{x, y};
      if (oracle::brute_member(a, v) != oracle::brute_member(b, v)) return false;
    }
  return true;
}

}  // namespace

TEST(LexCompare, Examples) {
  EXPECT_EQ(lex_compare(LexVector{0, 0}, LexVector{0, 0}), Ordering::EQ);
  EXPECT_EQ(lex_compare(LexVector{1, -100}, LexVector{0, 7}), Ordering::GT);
  EXPECT_EQ(lex_compare(LexVector{0, 2}, LexVector{0, 5}), Ordering::LT);
}

TEST(LexCompare, LengthMismatchThrows) {
  try {
    lex_compare(LexVector{1}, LexVector{1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(LexCompare, CompatibleWithAddition) {
  testgen::Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    auto a = testgen::random_vector(rng, 3, -4, 4);
    auto b = testgen::random_vector(rng, 3, -4, 4);
    auto c = testgen::random_vector(rng, 3, -4, 4);
    EXPECT_EQ(lex_compare(a, b), lex_compare(a + c, b + c));
    EXPECT_EQ((a - b).is_positive(), a > b);
  }
}

TEST(Canonicalize, Identity) {
  Subgroup s = lattice(2, {{1, 0}, {0, 1}});
  EXPECT_EQ(s.basis(0), (LexVector{1, 0}));
  EXPECT_EQ(s.basis(1), (LexVector{0, 1}));
}

TEST(Canonicalize, TriangularExample) {
  Subgroup s = lattice(2, {{1, 1}, {0, 3}});
  EXPECT_EQ(s.basis(0), (LexVector{1, 1}));
  EXPECT_EQ(s.basis(1), (LexVector{0, 3}));
  // the same lattice given by a different generating set
  Subgroup raw = lattice(2, {{1, 1}, {2, 5}, {-1, 2}});
  EXPECT_TRUE(same_lattice_on_box(s, raw));
  EXPECT_EQ(raw.basis(), s.basis());
}

TEST(Canonicalize, RedundantGenerators) {
  Subgroup s = lattice(2, {{2, 0}, {0, 2}, {1, 1}});
  EXPECT_EQ(s.diagonal(0), 1);
  EXPECT_EQ(s.diagonal(1), 2);
  // lattice {(2,0),(0,2),(1,1)} = {(x,y) : x ≡ y mod 2}
  for (std::int64_t x = -6; x <= 6; ++x)
    for (std::int64_t y = -6; y <= 6; ++y)
      EXPECT_EQ(oracle::brute_member(s, LexVector{x, y}), (x - y) % 2 == 0);
}

TEST(Canonicalize, RankDeficientThrows) {
  for (auto gens : std::vector<std::vector<LexVector>>{{{1, 1}, {2, 2}}, {{0, 0}, {0, 0}}, {{0, 0, 0}}}) {
    try {
      canonicalize(gens[0].size(), gens);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotFiniteIndex);
    }
  }
}

TEST(Canonicalize, ZeroColumnsIgnored) {
  Subgroup s = lattice(2, {{0, 0}, {1, 0}, {0, 0}, {0, 4}});
  EXPECT_EQ(group_index(s), 4);
}

TEST(Canonicalize, IdempotentAndLatticePreserving) {
  testgen::Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 4;
    auto gens = testgen::random_generators(rng, n);
    Subgroup s = canonicalize(n, gens);
    Subgroup again = canonicalize(n, s.basis());
    EXPECT_EQ(again.basis(), s.basis());
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_GT(s.diagonal(i), 0);
      for (std::size_t j = 0; j < i; ++j) {
        EXPECT_GE(s.hnf(i, j), 0);
        EXPECT_LT(s.hnf(i, j), s.diagonal(i));
      }
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_EQ(s.hnf(i, j), 0);
    }
    // every generator lies in the Hermite lattice and conversely
    Subgroup from_raw = canonicalize(n, gens);
    for (const auto& g : gens) EXPECT_TRUE(oracle::brute_member(s, g));
    for (const auto& h : s.basis()) EXPECT_TRUE(membership(from_raw, h));
    for (int k = 0; k < 20; ++k) {
      auto v = testgen::random_vector(rng, n, -8, 8);
      EXPECT_EQ(membership(s, v), oracle::brute_member(s, v));
    }
  }
}

TEST(GroupIndex, Examples) {
  EXPECT_EQ(group_index(scaled_identity(2, 1)), 1);
  EXPECT_EQ(group_index(scaled_identity(2, 3)), 9);
  Subgroup s = lattice(2, {{1, 1}, {0, 3}});
  EXPECT_EQ(group_index(s), 3);
  EXPECT_EQ(oracle::brute_index(s), 3);
}

TEST(InitialIndex, Examples) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(initial_index(scaled_identity(n, 1)), 1);
  EXPECT_EQ(initial_index(lattice(1, {{5}})), 5);
  Subgroup three = scaled_identity(2, 3);
  EXPECT_EQ(initial_index(three), 3);
  EXPECT_EQ(group_index(three), 9);
  EXPECT_EQ(oracle::brute_epsilon(three, oracle::Box(8)), 3);
}

TEST(InitialIndex, BoundsAndDivisibility) {
  testgen::Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + t % 4;
    Subgroup s = testgen::random_subgroup(rng, n);
    Integer eps = initial_index(s), index = group_index(s);
    EXPECT_GE(eps, 1);
    EXPECT_LE(eps, index);
    EXPECT_TRUE(divides(eps, index));
    if (n == 1) EXPECT_EQ(eps, index);
  }
}

TEST(SmallestPositive, Examples) {
  EXPECT_EQ(smallest_positive_elements(scaled_identity(2, 1)), (std::vector<LexVector>{{0, 0}}));
  std::vector<LexVector> expected{{0, 0}, {0, 1}, {0, 2}};
  Subgroup three = scaled_identity(2, 3);
  EXPECT_EQ(smallest_positive_elements(three), expected);
  auto min = oracle::brute_min_positive(three, oracle::Box(8));
  ASSERT_TRUE(min);
  EXPECT_EQ(oracle::brute_points_below(*min, oracle::Box(8)), expected);

  Subgroup four = lattice(1, {{4}});
  EXPECT_EQ(smallest_positive_elements(four), (std::vector<LexVector>{{0}, {1}, {2}, {3}}));
  EXPECT_TRUE(membership(four, LexVector{4}));
}

TEST(SmallestPositive, MatchesLiteralDefinition) {
  testgen::Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + t % 3;
    Subgroup s = testgen::random_subgroup(rng, n);
    auto elems = smallest_positive_elements(s);
    Integer eps = initial_index(s);
    ASSERT_EQ(Integer(static_cast<long>(elems.size())), eps);
    for (std::size_t k = 0; k < elems.size(); ++k)
      EXPECT_EQ(elems[k], LexVector::last_axis(n, Integer(static_cast<long>(k))));
    EXPECT_TRUE(membership(s, LexVector::last_axis(n, eps)));
    if (eps <= 40) {
      auto min = oracle::brute_min_positive(s, oracle::Box(2));
      ASSERT_TRUE(min);
      EXPECT_EQ(oracle::brute_points_below(*min, oracle::Box(64)), elems);
    }
  }
}

TEST(Criterion, Examples) {
  EXPECT_TRUE(unit_triangular_criterion(scaled_identity(2, 1)));
  Subgroup s = lattice(2, {{1, 0}, {0, 3}});
  EXPECT_TRUE(unit_triangular_criterion(s));
  EXPECT_EQ(oracle::brute_epsilon(s, oracle::Box(8)), oracle::brute_index(s));
  Subgroup three = scaled_identity(2, 3);
  EXPECT_FALSE(unit_triangular_criterion(three));
  EXPECT_NE(oracle::brute_epsilon(three, oracle::Box(8)), oracle::brute_index(three));
}

TEST(SemigroupCover, Examples) {
  auto trivial = semigroup_cover(scaled_identity(2, 1));
  ASSERT_TRUE(trivial);
  EXPECT_EQ(trivial->representatives, (std::vector<LexVector>{{0, 0}}));

  Subgroup s = lattice(2, {{1, 0}, {0, 3}});
  auto cover = semigroup_cover(s);
  ASSERT_TRUE(cover);
  EXPECT_EQ(cover->representatives, (std::vector<LexVector>{{0, 0}, {0, 1}, {0, 2}}));
  EXPECT_TRUE(oracle::brute_cover_verify(s, cover->representatives, oracle::Box(8)).ok);

  Subgroup three = scaled_identity(2, 3);
  EXPECT_FALSE(semigroup_cover(three));
  auto check = oracle::brute_cover_verify(three, {{0, 0}, {0, 1}, {0, 2}}, oracle::Box(8));
  EXPECT_FALSE(check.ok);
  ASSERT_TRUE(check.counterexample);
  EXPECT_EQ(*check.counterexample, (LexVector{1, 0}));
}

TEST(SemigroupCover, RepresentativesIncongruent) {
  testgen::Rng rng(15);
  for (int t = 0; t < 150; ++t) {
    Subgroup s = testgen::random_subgroup(rng, 1 + t % 3);
    auto cover = semigroup_cover(s);
    if (!cover) continue;
    const auto& r = cover->representatives;
    for (std::size_t a = 0; a < r.size(); ++a) {
      EXPECT_TRUE(r[a].is_nonnegative());
      if (a + 1 < r.size()) EXPECT_LT(r[a], r[a + 1]);
      for (std::size_t b = a + 1; b < r.size() && b < a + 8; ++b) EXPECT_FALSE(membership(s, r[b] - r[a]));
    }
  }
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient_invariants(scaled_identity(2, 1)).invariant_factors, (std::vector<Integer>{1, 1}));
  Subgroup s = lattice(2, {{1, 0}, {0, 3}});
  EXPECT_EQ(quotient_invariants(s).invariant_factors, (std::vector<Integer>{1, 3}));
  // a cyclic group of order 3 has 3 elements killed by 3 and 1 killed by 2
  EXPECT_EQ(oracle::brute_torsion_count(s, 3), 3);
  EXPECT_EQ(oracle::brute_torsion_count(s, 2), 1);

  Subgroup two = scaled_identity(2, 2);
  EXPECT_EQ(quotient_invariants(two).invariant_factors, (std::vector<Integer>{2, 2}));
  EXPECT_FALSE(unit_triangular_criterion(two));
  // Z/2 x Z/2: every element has order dividing 2
  EXPECT_EQ(oracle::brute_torsion_count(two, 2), 4);
}

TEST(Quotient, FactorsMatchTorsionCounts) {
  testgen::Rng rng(16);
  for (int t = 0; t < 120; ++t) {
    std::size_t n = 1 + t % 3;
    Subgroup s = testgen::random_subgroup_max_index(rng, n, 200);
    auto d = quotient_invariants(s).invariant_factors;
    ASSERT_EQ(d.size(), n);
    Integer product = 1;
    for (std::size_t i = 0; i < n; ++i) {
      product *= d[i];
      if (i > 0) EXPECT_TRUE(divides(d[i - 1], d[i]));
    }
    EXPECT_EQ(product, group_index(s));
    // |{x : kx = 0}| = prod gcd(k, d_i) pins down the invariant factors
    for (std::int64_t k = 2; k <= 6; ++k) {
      Integer expected = 1;
      for (const auto& di : d) expected *= gcd(Integer(static_cast<long>(k)), di);
      EXPECT_EQ(oracle::brute_torsion_count(s, Integer(static_cast<long>(k))), expected);
    }
  }
}

TEST(EpsilonChain, Examples) {
  auto trivial = epsilon_chain(scaled_identity(2, 1), scaled_identity(2, 1));
  EXPECT_EQ(trivial.gamma_sigma, 1);
  EXPECT_EQ(trivial.sigma_delta, 1);
  EXPECT_EQ(trivial.gamma_delta, 1);

  Subgroup sigma = lattice(2, {{1, 0}, {0, 2}}), delta = lattice(2, {{1, 0}, {0, 6}});
  auto c = epsilon_chain(delta, sigma);
  EXPECT_EQ(c.gamma_sigma, 2);
  EXPECT_EQ(c.sigma_delta, 3);
  EXPECT_EQ(c.gamma_delta, 6);
  oracle::Box box(8);
  EXPECT_EQ(oracle::brute_epsilon(sigma, box), 2);
  EXPECT_EQ(oracle::brute_relative_epsilon(sigma, delta, box, box), 3);
  EXPECT_EQ(oracle::brute_epsilon(delta, box), 6);

  Subgroup two = scaled_identity(2, 2), six = scaled_identity(2, 6);
  auto d = epsilon_chain(six, two);
  EXPECT_EQ(d.gamma_sigma, 2);
  EXPECT_EQ(d.sigma_delta, 3);
  EXPECT_EQ(d.gamma_delta, 6);
  EXPECT_EQ(group_index(two), 4);
  EXPECT_EQ(group_index(six), 36);
  EXPECT_EQ(oracle::brute_relative_epsilon(two, six, box, box), 3);
}

TEST(EpsilonChain, NotNestedThrows) {
  try {
    epsilon_chain(lattice(2, {{1, 0}, {0, 3}}), lattice(2, {{1, 0}, {0, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNested);
  }
}

TEST(Membership, Examples) {
  Subgroup s = lattice(2, {{1, 1}, {0, 3}});
  auto combination_exists = [](const LexVector& v) {
    for (std::int64_t a = -6; a <= 6; ++a)
      for (std::int64_t b = -6; b <= 6; ++b)
        if (Integer(static_cast<long>(a)) * LexVector{1, 1} + Integer(static_cast<long>(b)) * LexVector{0, 3} == v)
          return true;
    return false;
  };
  EXPECT_TRUE(membership(s, LexVector{0, 0}));
  EXPECT_TRUE(membership(s, LexVector{2, 5}));
  EXPECT_TRUE(combination_exists(LexVector{2, 5}));
  EXPECT_FALSE(membership(s, LexVector{0, 1}));
  EXPECT_FALSE(combination_exists(LexVector{0, 1}));
}

TEST(Membership, LengthMismatchThrows) {
  EXPECT_THROW(membership(lattice(2, {{1, 0}, {0, 1}}), LexVector{1}), Error);
}
