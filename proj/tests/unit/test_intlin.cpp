#include <random>

#include <gtest/gtest.h>

#include "cohom1/intlin.hpp"

using namespace cohom1;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Product of random elementary operations.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> k(-2, 2);
  for (int step = 0; step < 8; ++step) {
    auto a = idx(rng), b = idx(rng);
    if (a == b) continue;
    u.add_row(a, b, k(rng));
    if (step % 3 == 0) u.swap_rows(a, b);
  }
  return u;
}

// Leibniz expansion; independent of the Bareiss determinant.
BigInt leibniz(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  BigInt total = 0;
  do {
    BigInt term = 1;
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term *= a(i, p[i]);
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    }
    total += (inv % 2 ? -term : term);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

void expect_valid_smith(const IntMatrix& a, const SmithDecomposition& s) {
  ASSERT_EQ(s.U * a * s.V, s.D);
  EXPECT_EQ(abs(determinant(s.U)), 1);
  EXPECT_EQ(abs(determinant(s.V)), 1);
  EXPECT_EQ(s.U * s.U_inv, IntMatrix::identity(a.rows()));
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j) {
      if (i != j) {
        EXPECT_EQ(s.D(i, j), 0);
      }
    }
  auto d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_GE(d[i], 0);
    if (i + 1 < d.size()) {
      if (d[i] == 0) {
        EXPECT_EQ(d[i + 1], 0);
      } else {
        EXPECT_EQ(d[i + 1] % d[i], 0);
      }
    }
  }
}

}  // namespace

TEST(SmithNormalForm, Identity) {
  auto s = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(s.D, IntMatrix::identity(3));
  expect_valid_smith(IntMatrix::identity(3), s);
}

TEST(SmithNormalForm, TwoByTwo) {
  IntMatrix a{{2, 4}, {6, 8}};
  auto s = smith_normal_form(a);
  EXPECT_EQ(s.D, (IntMatrix{{2, 0}, {0, 4}}));
  expect_valid_smith(a, s);
}

TEST(SmithNormalForm, ZeroAndEmpty) {
  IntMatrix z(2, 3);
  auto s = smith_normal_form(z);
  EXPECT_TRUE(s.D.is_zero());
  expect_valid_smith(z, s);

  IntMatrix e(0, 3);
  auto se = smith_normal_form(e);
  EXPECT_EQ(se.V, IntMatrix::identity(3));
  EXPECT_EQ(se.rank(), 0u);
}

TEST(SmithNormalForm, RandomProperty) {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_matrix(rng, dim(rng), dim(rng), 5);
    auto s = smith_normal_form(a);
    expect_valid_smith(a, s);
    if (a.rows() == a.cols()) {
      BigInt prod = 1;
      for (auto& d : s.diagonal()) prod *= d;
      EXPECT_EQ(prod, abs(leibniz(a))) << a;
      EXPECT_EQ(determinant(a), leibniz(a));
    }
  }
}

TEST(SmithNormalForm, LargeIntermediates) {
  // Entries beyond 64 bits stay exact.
  BigInt big = BigInt(1) << 80;
  IntMatrix a(2, 2);
  a(0, 0) = big;
  a(0, 1) = big + 1;
  a(1, 0) = big - 1;
  a(1, 1) = big;
  auto s = smith_normal_form(a);
  expect_valid_smith(a, s);
  EXPECT_EQ(s.D(0, 0), 1);
  EXPECT_EQ(s.D(1, 1), 1);  // det = big^2 - (big^2 - 1) = 1
}

TEST(Cokernel, Examples) {
  // (p,q,n) = (1,0,2): the column (n q, -n p) in Z^2.
  IntMatrix a{{0}, {-2}};
  auto g = cokernel(a);
  EXPECT_EQ(g.free_rank(), 1u);
  ASSERT_EQ(g.torsion().size(), 1u);
  EXPECT_EQ(g.torsion()[0], 2);
  EXPECT_EQ(g.to_string(), "Z + Z_2");

  EXPECT_TRUE(cokernel(IntMatrix::identity(4)).is_trivial());
  EXPECT_EQ(cokernel(IntMatrix(2, 0)), FGAbelianGroup::free(2));
}

TEST(Cokernel, InvariantUnderUnimodularChange) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_matrix(rng, dim(rng), dim(rng), 5);
    auto p = random_unimodular(rng, a.rows());
    auto q = random_unimodular(rng, a.cols());
    EXPECT_EQ(cokernel(p * a * q), cokernel(a));
  }
}

TEST(KernelBasis, Examples) {
  auto k1 = kernel_basis(IntMatrix{{1, 0}});
  ASSERT_EQ(k1.cols(), 1u);
  EXPECT_EQ(abs(k1(0, 0)), 0);
  EXPECT_EQ(abs(k1(1, 0)), 1);

  auto k2 = kernel_basis(IntMatrix{{2, 3}});
  ASSERT_EQ(k2.cols(), 1u);
  EXPECT_TRUE((k2(0, 0) == 3 && k2(1, 0) == -2) || (k2(0, 0) == -3 && k2(1, 0) == 2));

  EXPECT_EQ(kernel_basis(IntMatrix{{2, 1}, {1, 1}}).cols(), 0u);
}

TEST(KernelBasis, RandomPrimitive) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_matrix(rng, dim(rng), dim(rng), 5);
    auto k = kernel_basis(a);
    EXPECT_EQ(k.cols(), a.cols() - rank(a));
    if (k.cols() == 0) continue;
    EXPECT_TRUE((a * k).is_zero());
    for (auto& d : smith_normal_form(k).diagonal()) EXPECT_EQ(d, 1);
  }
}

TEST(ImageBasis, SpansSameLattice) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_matrix(rng, dim(rng), dim(rng), 5);
    auto b = image_basis(a);
    EXPECT_EQ(b.cols(), rank(a));
    EXPECT_EQ(cokernel(b), cokernel(a));
    EXPECT_EQ(cokernel(hconcat(b, a)), cokernel(b));
  }
}

TEST(Surjectivity, Examples) {
  auto z2 = FGAbelianGroup::cyclic(2);
  EXPECT_TRUE(is_surjective_onto(IntMatrix{{1}}, z2));
  EXPECT_FALSE(is_surjective_onto(IntMatrix{{2}}, z2));

  auto z3 = FGAbelianGroup::cyclic(3);
  for (long long p : {1, 3}) {
    IntMatrix col{{2 * p}};
    EXPECT_EQ(is_surjective_onto(col, z3), p % 3 != 0);
  }
  EXPECT_THROW(is_surjective_onto(IntMatrix{{1}, {0}}, z2), DimensionMismatch);
}

TEST(FGAbelianGroup, NormalForm) {
  auto g = FGAbelianGroup::from_cyclic(1, {6, 4, 1});
  EXPECT_EQ(g.free_rank(), 1u);
  ASSERT_EQ(g.torsion().size(), 2u);
  EXPECT_EQ(g.torsion()[0], 2);
  EXPECT_EQ(g.torsion()[1], 12);
  EXPECT_FALSE(g.order().has_value());
  EXPECT_EQ(*FGAbelianGroup::cyclic(5).order(), 5);
  EXPECT_TRUE(FGAbelianGroup::cyclic(1).is_trivial());
  EXPECT_EQ(FGAbelianGroup::from_cyclic(0, {2, 3}), FGAbelianGroup::cyclic(6));
}
