#include <gtest/gtest.h>

#include <random>

#include "froblab/errors.hpp"
#include "froblab/gfp_linalg.hpp"

using namespace froblab;

namespace {

GfpMatrix random_matrix(std::mt19937& rng, Residue p, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<Residue> dist(0, p - 1);
  GfpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dist(rng));
  }
  return m;
}

Subspace random_subspace(std::mt19937& rng, Residue p, std::size_t n) {
  std::uniform_int_distribution<std::size_t> gens(0, n);
  return Subspace::span(random_matrix(rng, p, gens(rng), n));
}

}  // namespace

TEST(Modular, Arithmetic) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7919));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(reduce_mod(-1, 7), 6u);
  EXPECT_EQ(reduce_mod(-15, 7), 6u);
  for (Residue a = 1; a < 13; ++a) EXPECT_EQ(a * inverse_mod(a, 13) % 13, 1u);
  EXPECT_EQ(pow_mod(3, 6, 7), 1u);
  EXPECT_THROW(require_prime(9), InvalidParameters);
  EXPECT_THROW(require_prime(kMaxPrime + 1), InvalidParameters);
  EXPECT_NO_THROW(require_prime(32749));
}

TEST(Matrix, ProductAndApply) {
  const auto a = GfpMatrix::from_rows(5, {{1, 2}, {3, 4}});
  const auto b = GfpMatrix::from_rows(5, {{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, GfpMatrix::from_rows(5, {{2, 1}, {4, 3}}));
  EXPECT_EQ(a * GfpMatrix::identity(5, 2), a);
  const std::vector<Residue> v{1, 1};
  EXPECT_EQ(a.apply(v), (std::vector<Residue>{3, 2}));
  EXPECT_THROW(GfpMatrix::from_rows(5, {{1, 2}, {3}}), DimensionMismatch);
  EXPECT_THROW(a * GfpMatrix(5, 3, 1), DimensionMismatch);
}

TEST(Rref, KnownRank) {
  const auto m = GfpMatrix::from_rows(2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);  // rows sum to zero mod 2
  const auto m3 = GfpMatrix::from_rows(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(rank(m3), 3u);
}

TEST(Rref, IdempotentAndTransposeRank) {
  std::mt19937 rng(17);
  for (Residue p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = random_matrix(rng, p, 1 + trial % 6, 1 + (trial * 7) % 5);
      const auto r = rref(m);
      EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
      EXPECT_EQ(r.rank, rank(m.transpose()));
      EXPECT_EQ(r.pivots.size(), r.rank);
    }
  }
}

TEST(Kernel, RankNullity) {
  std::mt19937 rng(5);
  for (Residue p : {2u, 5u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto m = random_matrix(rng, p, 1 + trial % 4, 2 + trial % 5);
      const auto k = kernel_basis(m);
      EXPECT_EQ(k.dim() + rank(m), m.cols());
      for (std::size_t r = 0; r < k.dim(); ++r) {
        for (auto x : m.apply(k.basis().row(r))) EXPECT_EQ(x, 0u);
      }
    }
  }
}

TEST(Subspace, LatticeLaws) {
  std::mt19937 rng(99);
  for (Residue p : {2u, 3u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + trial % 5;
      const auto a = random_subspace(rng, p, n);
      const auto b = random_subspace(rng, p, n);
      const auto c = random_subspace(rng, p, n);
      const auto sum = subspace_sum(a, b);
      const auto meet = subspace_intersection(a, b);
      EXPECT_EQ(sum.dim() + meet.dim(), a.dim() + b.dim());
      EXPECT_TRUE(sum.contains(a));
      EXPECT_TRUE(a.contains(meet));
      EXPECT_TRUE(b.contains(meet));
      // Modular law with b' = a ∩ b ⊆ a.
      const auto small = meet;
      EXPECT_EQ(subspace_intersection(a, subspace_sum(small, c)),
                subspace_sum(small, subspace_intersection(a, c)));
    }
  }
}

TEST(Subspace, ContainsAndResidual) {
  const auto s = Subspace::span(3, 3, {{1, 1, 0}});
  EXPECT_TRUE(s.contains(std::vector<Residue>{2, 2, 0}));
  EXPECT_FALSE(s.contains(std::vector<Residue>{1, 0, 0}));
  const auto res = s.residual(std::vector<Residue>{1, 1, 0});
  for (auto x : res) EXPECT_EQ(x, 0u);
  EXPECT_EQ(Subspace::zero(3, 3).dim(), 0u);
  EXPECT_EQ(Subspace::full(3, 3).dim(), 3u);
}

TEST(Subspace, ImageOf) {
  const auto m = GfpMatrix::from_rows(2, {{1, 0}, {1, 0}, {0, 0}});
  const auto img = image_of(m, Subspace::full(2, 2));
  EXPECT_EQ(img.dim(), 1u);
  EXPECT_TRUE(img.contains(std::vector<Residue>{1, 1, 0}));
}

TEST(Enumeration, MatchesGaussianCounts) {
  EXPECT_EQ(enumerate_subspaces(2, 2).size(), 5u);
  EXPECT_EQ(enumerate_subspaces(3, 2).size(), 6u);
  EXPECT_EQ(enumerate_subspaces(2, 0).size(), 1u);
  for (Residue p : {2u, 3u, 5u}) {
    for (std::size_t n = 0; n <= 4; ++n) {
      if (std::uint64_t{p} * p * p * p > 1000 && n == 4) continue;
      const auto subs = enumerate_subspaces(p, n);
      EXPECT_EQ(subs.size(), num_subspaces(p, n)) << "p=" << p << " n=" << n;
      std::vector<std::size_t> by_dim(n + 1, 0);
      for (std::size_t k = 1; k < subs.size(); ++k) EXPECT_FALSE(subs[k] == subs[k - 1]);
      for (const auto& s : subs) ++by_dim[s.dim()];
      for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(by_dim[k], gaussian_binomial(n, k, p));
    }
  }
  EXPECT_THROW(enumerate_subspaces(2, 20, 1000), CapacityExceeded);
}

TEST(Gaussian, KnownValues) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35u);
  EXPECT_EQ(gaussian_binomial(3, 1, 3), 13u);
  EXPECT_EQ(gaussian_binomial(5, 0, 7), 1u);
  EXPECT_EQ(gaussian_binomial(2, 3, 2), 0u);
  EXPECT_EQ(num_subspaces(2, 1), 2u);
  EXPECT_EQ(num_subspaces(2, 3), 16u);
}

TEST(Rref, Examples) {
  const auto id = rref(GfpMatrix::identity(5, 2));
  EXPECT_EQ(id.rank, 2u);
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));
  const auto zero = rref(GfpMatrix(3, 3, 4));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_TRUE(zero.pivots.empty());
  EXPECT_EQ(rank(GfpMatrix::from_rows(2, {{1, 1}, {1, 1}})), 1u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(GfpMatrix::identity(7, 3)).dim(), 0u);
  EXPECT_EQ(kernel_basis(GfpMatrix(2, 2, 3)).dim(), 3u);
  const auto k = kernel_basis(GfpMatrix::from_rows(2, {{1, 1, 0}, {0, 1, 1}}));
  EXPECT_EQ(k, Subspace::span(2, 3, {{1, 1, 1}}));
}

TEST(Subspace, SumAndIntersectionExamples) {
  const auto a = Subspace::span(3, 2, {{1, 2}});
  EXPECT_EQ(subspace_sum(a, a), a);
  EXPECT_EQ(subspace_intersection(a, a), a);
  const auto x = Subspace::span(2, 2, {{1, 0}});
  const auto y = Subspace::span(2, 2, {{0, 1}});
  EXPECT_EQ(subspace_sum(x, y), Subspace::full(2, 2));
  EXPECT_EQ(subspace_intersection(x, y), Subspace::zero(2, 2));
}
