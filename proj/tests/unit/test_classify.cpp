#include <numeric>

#include <gtest/gtest.h>

#include "cohom1/classify.hpp"

using namespace cohom1;

namespace {

FamilyInstance fam(FamilyTag t, std::initializer_list<std::pair<const char*, long long>> kv) { return make_family(t, kv); }
FamilyInstance n6b(long long p, long long q, long long n) {
  return fam(FamilyTag::N6B, {{"p", p}, {"q", q}, {"n", n}});
}

}  // namespace

TEST(EulerClass, ClosedFormExamples) {
  EXPECT_EQ(euler_class(n6b(1, 0, 1)), (EulerClass{{0, -1}}));
  EXPECT_EQ(euler_class(n6b(2, 3, 5)), (EulerClass{{15, -10}}));
  EXPECT_EQ(euler_class(n6b(2, 3, 5)).to_string(), "±(15,−10)");
  EXPECT_EQ(euler_class(fam(FamilyTag::N6F, {{"n", 4}})), (EulerClass{{4}}));
  EXPECT_EQ(euler_class(fam(FamilyTag::N6F, {{"n", 4}})).to_string(), "±4");
  EXPECT_THROW(euler_class(fam(FamilyTag::N6C, {{"n", 1}})), WrongFamily);
}

TEST(EulerClass, EqualityUpToSign) {
  EXPECT_EQ((EulerClass{{3, -2}}), (EulerClass{{-3, 2}}));
  EXPECT_NE((EulerClass{{3, -2}}), (EulerClass{{3, 2}}));
  EXPECT_EQ((EulerClass{{0, 0}}).to_string(), "0");
}

TEST(EulerClass, NonzeroWithContentN) {
  for (long long p = -8; p <= 8; ++p)
    for (long long q = -8; q <= 8; ++q)
      for (long long n = 1; n <= 8; ++n) {
        if (std::gcd(p, q) != 1) continue;
        const auto e = euler_class(n6b(p, q, n));
        EXPECT_FALSE(e.is_zero());
        EXPECT_EQ(gcd(e.coordinates[0], e.coordinates[1]), n);
      }
}

TEST(PrincipalBundle, Examples) {
  EXPECT_TRUE(principal_bundle_pi1(fam(FamilyTag::N6C, {{"n", 3}})).is_trivial());
  EXPECT_EQ(principal_bundle_pi1(fam(FamilyTag::N6C, {{"n", 2}})), FGAbelianGroup::cyclic(2));
  for (long long p = -5; p <= 5; ++p)
    EXPECT_EQ(principal_bundle_pi1(fam(FamilyTag::N6E, {{"p", p}})), FGAbelianGroup::cyclic(2));
  EXPECT_EQ(principal_bundle_pi1(fam(FamilyTag::N6D, {{"p", 3}})), FGAbelianGroup::cyclic(3));
  EXPECT_TRUE(principal_bundle_pi1(fam(FamilyTag::N6D, {{"p", 1}})).is_trivial());
  EXPECT_THROW(principal_bundle_pi1(n6b(1, 0, 1)), WrongFamily);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(fam(FamilyTag::N6C, {{"n", 1}})).kind, VerdictKind::NontrivialS4BundleOverS2);
  EXPECT_EQ(classify(fam(FamilyTag::N6E, {{"p", 7}})).kind, VerdictKind::S4xS2);
  const auto d = classify(fam(FamilyTag::N6D, {{"p", 3}}));
  EXPECT_EQ(d.kind, VerdictKind::CP2BundleOverS2);
  EXPECT_EQ(d.trivial, true);
  EXPECT_EQ(d.to_string(), "CP2BundleOverS2(trivial=true)");
  EXPECT_EQ(classify(n6b(2, 3, 5)).to_string(), "S2BundleOverS2xS2(e=±(15,−10))");
  EXPECT_EQ(classify(fam(FamilyTag::N6F, {{"n", 2}})).to_string(), "S2BundleOverCP2(e=±2)");
  const auto a = classify(make_family(FamilyTag::N6A, {{"r", 0},
                                                        {"s", 0},
                                                        {"b_minus", 1},
                                                        {"c_minus", 0},
                                                        {"b_plus", 0},
                                                        {"c_plus", 1},
                                                        {"m_minus", 1},
                                                        {"m_plus", 1}}));
  EXPECT_EQ(a.pretty(), "M ≅ S³×S³");
}

TEST(Classify, RefusesInvalid) {
  try {
    classify(n6b(2, 4, 1));
    FAIL() << "expected InvalidFamily";
  } catch (const InvalidFamily& e) {
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_EQ(e.violations()[0], "gcd(p,q)=1");
  }
}

TEST(Classify, ResidueRules) {
  for (long long n = 1; n <= 20; ++n) {
    const auto k = classify(fam(FamilyTag::N6C, {{"n", n}})).kind;
    EXPECT_EQ(k, n % 2 ? VerdictKind::NontrivialS4BundleOverS2 : VerdictKind::S4xS2) << n;
    EXPECT_EQ(k, classify(fam(FamilyTag::N6C, {{"n", n + 2}})).kind);
  }
  for (long long p = -20; p <= 20; ++p) {
    EXPECT_EQ(*classify(fam(FamilyTag::N6D, {{"p", p}})).trivial, p % 3 == 0) << p;
    EXPECT_EQ(classify(fam(FamilyTag::N6D, {{"p", p}})), classify(fam(FamilyTag::N6D, {{"p", p + 3}})));
    EXPECT_EQ(classify(fam(FamilyTag::N6E, {{"p", p}})).kind, VerdictKind::S4xS2);
  }
}

TEST(NonPrimitivity, LContainsDiagram) {
  std::vector<FamilyInstance> fs = {n6b(2, 3, 5), fam(FamilyTag::N6C, {{"n", 3}}), fam(FamilyTag::N6D, {{"p", -2}}),
                                    fam(FamilyTag::N6E, {{"p", 4}}), fam(FamilyTag::N6F, {{"n", 3}})};
  for (const auto& f : fs) {
    const auto d = build_diagram(f);
    const auto np = nonprimitivity_data(f);
    EXPECT_TRUE(contains(np.L, d.Kminus)) << to_string(f.tag);
    EXPECT_TRUE(contains(np.L, d.Kplus)) << to_string(f.tag);
    EXPECT_TRUE(contains(np.L, d.H)) << to_string(f.tag);
  }
  const auto b = nonprimitivity_data(n6b(2, 3, 5));
  EXPECT_EQ(b.base, "S²×S²");
  EXPECT_EQ(b.fiber, "S²");
  EXPECT_EQ(b.structure_hom_weights, (std::vector<BigInt>{-15, 10}));
  EXPECT_EQ(nonprimitivity_data(fam(FamilyTag::N6C, {{"n", 3}})).fiber, "S⁴");
  EXPECT_EQ(nonprimitivity_data(fam(FamilyTag::N6F, {{"n", 3}})).base, "ℂP²");
}
