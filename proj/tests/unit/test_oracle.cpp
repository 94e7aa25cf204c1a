#include <numbers>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "cohom1/classify.hpp"
#include "cohom1/oracle/euler_recipe.hpp"
#include "cohom1/oracle/isotropy.hpp"
#include "cohom1/oracle/loop_lift.hpp"
#include "cohom1/oracle/quaternion.hpp"

using namespace cohom1;
using namespace cohom1::oracle;

namespace {

Eigen::Matrix3d rotation_about_x(double t) {
  Eigen::Matrix3d r;
  r << 1, 0, 0, 0, std::cos(t), -std::sin(t), 0, std::sin(t), std::cos(t);
  return r;
}

}  // namespace

TEST(EulerRecipe, FamilyPresentations) {
  // Pullback of the fiber generator for N6B (1,0,1) is (nq, -np, -1) = (0, -1, -1).
  const auto wp = presentation_from_weights({0, 1});
  ASSERT_EQ(wp.pullback_map.cols(), 1u);
  const auto col = wp.pullback_map.col(0);
  EXPECT_TRUE((col == std::vector<BigInt>{0, -1, -1}) || (col == std::vector<BigInt>{0, 1, 1}));
  EXPECT_EQ(euler_from_weights(wp), (EulerClass{{0, -1}}));

  const auto f = presentation_from_weights({2});
  EXPECT_EQ(euler_from_weights(f), (EulerClass{{2}}));
}

TEST(EulerRecipe, ZeroPullbackAndMalformed) {
  WeightPresentation zero{3, 2, IntMatrix(3, 1), IntMatrix{{1, 0, 0}, {0, 1, 0}}};
  EXPECT_TRUE(euler_from_weights(zero).is_zero());
  WeightPresentation bad{3, 2, IntMatrix(2, 1), IntMatrix{{1, 0, 0}, {0, 1, 0}}};
  EXPECT_THROW(euler_from_weights(bad), MalformedPresentation);
  WeightPresentation rank2{2, 2, IntMatrix::identity(2), IntMatrix::identity(2)};
  EXPECT_THROW(euler_from_weights(rank2), MalformedPresentation);
}

TEST(EulerRecipe, AgreesWithClosedForm) {
  for (long long p = -8; p <= 8; ++p)
    for (long long q = -8; q <= 8; ++q)
      for (long long n = 1; n <= 8; ++n) {
        if (std::gcd(p, q) != 1) continue;
        const auto f = make_family(FamilyTag::N6B, {{"p", p}, {"q", q}, {"n", n}});
        const auto w = nonprimitivity_data(f).structure_hom_weights;
        EXPECT_EQ(euler_from_weights(presentation_from_weights(w)), euler_class(f));
      }
  for (long long n = 1; n <= 20; ++n) {
    const auto f = make_family(FamilyTag::N6F, {{"n", n}});
    EXPECT_EQ(euler_from_weights(presentation_from_weights(nonprimitivity_data(f).structure_hom_weights)),
              euler_class(f));
  }
}

TEST(Quaternion, ProductTable) {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  EXPECT_LT(distance(i * j, k), 1e-15);
  EXPECT_LT(distance(j * i, -k), 1e-15);
  EXPECT_LT(distance(i * i, {-1, 0, 0, 0}), 1e-15);
  EXPECT_THROW(so3_cover({2, 0, 0, 0}), NormalizationError);
}

TEST(So3Cover, Examples) {
  EXPECT_TRUE(so3_cover({1, 0, 0, 0}).isApprox(Eigen::Matrix3d::Identity(), 1e-14));
  // q = i: j -> i j (-i) = -j, k -> -k, i fixed: rotation by pi about the i axis.
  const auto r = so3_cover({0, 1, 0, 0});
  EXPECT_TRUE(r.isApprox(rotation_about_x(std::numbers::pi), 1e-14));
  // e^{i t/2} covers the rotation by t.
  EXPECT_TRUE(so3_cover(Quaternion::exp_i(0.35)).isApprox(rotation_about_x(0.7), 1e-14));
}

TEST(So3Cover, HomomorphismAndKernel) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_unit(rng), b = random_unit(rng);
    const auto ra = so3_cover(a);
    EXPECT_LT((so3_cover(unit_mul(a, b)) - ra * so3_cover(b)).norm(), 1e-10);
    EXPECT_LT((ra.transpose() * ra - Eigen::Matrix3d::Identity()).norm(), 1e-10);
    EXPECT_NEAR(ra.determinant(), 1, 1e-10);
    EXPECT_LT((so3_cover(-a) - ra).norm(), 1e-14);
    const auto l = so3_lift(ra);
    EXPECT_LT(std::min(distance(l, a), distance(l, -a)), 1e-9);
  }
}

TEST(So4Cover, LiftRoundTrip) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_unit(rng), q = random_unit(rng);
    const auto m = so4_cover(p, q);
    EXPECT_LT((m.transpose() * m - Eigen::Matrix4d::Identity()).norm(), 1e-10);
    EXPECT_NEAR(m.determinant(), 1, 1e-10);
    auto [lp, lq] = so4_lift(m);
    const double same = distance(lp, p) + distance(lq, q), flipped = distance(lp, -p) + distance(lq, -q);
    EXPECT_LT(std::min(same, flipped), 1e-8);
  }
}

TEST(LoopLift, Examples) {
  EXPECT_EQ(lift_loop_parity(sampled_block_loop(LoopSpec::so(3, {1}))), 1);
  EXPECT_EQ(lift_loop_parity(sampled_block_loop(LoopSpec::so(3, {2}))), 0);
  for (long long p = 0; p <= 5; ++p) EXPECT_EQ(lift_loop_parity(sampled_block_loop(LoopSpec::so(4, {-p, p}))), 0);
  EXPECT_EQ(lift_loop_parity(sampled_block_loop(LoopSpec::so(4, {1, 0}))), 1);
}

TEST(LoopLift, AgreesWithLoopClass) {
  for (long long a = -10; a <= 10; ++a) {
    for (auto spec : {LoopSpec::so(5, {a}), LoopSpec::so(4, {a, 3}), LoopSpec::so(4, {-a, a})}) {
      const auto cls = loop_class(spec);
      EXPECT_EQ(lift_loop_parity(sampled_block_loop(spec)), static_cast<int>(cls.coords[0])) << a;
    }
  }
}

TEST(LoopLift, RefinesAndGivesUp) {
  // A fast loop needs more than the initial 256 samples.
  EXPECT_EQ(lift_loop_parity(sampled_block_loop(LoopSpec::so(3, {301}))), 1);
  LiftPolicy tight{4, 8, 0.5};
  EXPECT_THROW(lift_loop_parity(sampled_block_loop(LoopSpec::so(3, {301})), tight), LiftAmbiguous);
}

TEST(Isotropy, GenericAndSingular) {
  const ActionParams id{};
  auto reps = isotropy_scan(id, 200, 7);
  int principal = 0;
  for (const auto& r : reps) {
    EXPECT_LE(r.orbit_dimension, 5);
    EXPECT_EQ(r.orbit_dimension + r.isotropy_dimension, 5);
    principal += r.orbit_dimension == 5;
  }
  EXPECT_GE(principal, 190);

  auto arc = transverse_scan(id, 64);
  auto runs = singular_runs(arc);
  ASSERT_EQ(runs.size(), 2u);
  EXPECT_EQ(runs.front().first, 0u);
  EXPECT_EQ(runs.back().second, arc.size() - 1);
  for (const auto& r : arc)
    if (r.orbit_dimension == 4) {
      EXPECT_GE(r.residual / std::max(r.first_dropped, 1e-300), 1e6);
    }
}

TEST(Isotropy, RecoversDiagramSlopes) {
  const std::vector<ActionParams> cases = {
      {0, 0, 1, 0, 0, 1, 1, 1}, {1, 2, 1, 1, -1, 2, 2, 3}, {-2, 1, 2, -1, 1, 1, 1, 1}};
  for (const auto& a : cases) {
    auto arc = transverse_scan(a, 32);
    auto vm = isotropy_slope(arc.front()), vp = isotropy_slope(arc.back());
    ASSERT_TRUE(vm && vp);
    auto expect = [&](long long b, long long c) {
      std::vector<long long> v{a.r * b + a.s * c, b, c};
      auto it = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
      if (*it < 0)
        for (auto& x : v) x = -x;
      return v;
    };
    EXPECT_EQ(*vm, expect(a.b_minus, a.c_minus));
    EXPECT_EQ(*vp, expect(a.b_plus, a.c_plus));
  }
}
