#include <gtest/gtest.h>

#include <algorithm>

#include "behrend/errors.hpp"
#include "behrend/expr.hpp"
#include "behrend/newton.hpp"
#include "behrend/normal_factor.hpp"
#include "behrend/oracle.hpp"

using namespace behrend;

namespace {

MonomialIdeal I(const char* text) { return monomial_ideal(evaluate(text)); }

}  // namespace

TEST(NormalFactor, FactorizationExample) {
  MonomialIdeal J = I("(x^6, x^4 y, x^2 y^2, x y^3, y^5)");
  auto fs = factor_normal(J);
  EXPECT_EQ(fs, (std::vector<NabFactor>{{1, 2, 1}, {1, 1, 1}, {2, 1, 2}}));
  EXPECT_EQ(to_string(fs), "n(1,2) * n(1,1) * n(2,1)^2");
  EXPECT_EQ(reconstruct(fs), J);
}

TEST(NormalFactor, NabIsClosureOfPurePowers) {
  EXPECT_EQ(to_string(n_ab(2, 3)), "(x^2, x y^2, y^3)");
  EXPECT_EQ(n_ab(1, 1), MonomialIdeal::maximal());
  EXPECT_THROW(n_ab(0, 2), DomainError);
}

TEST(NormalFactor, PowerOfNab) {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      if (gcd(Int(a), Int(b)) != 1) continue;
      for (int d = 1; d <= 5; ++d) EXPECT_EQ(power(n_ab(a, b), d), n_ab(d * a, d * b));
    }
}

TEST(NormalFactor, ReconstructionAndUniqueness) {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    MonomialIdeal N = integral_closure(random_ideal(rng, 8));
    if (N.is_unit()) continue;
    auto fs = factor_normal(N);
    EXPECT_EQ(reconstruct(fs), N) << to_string(N);
    EXPECT_EQ(factor_normal(reconstruct(fs)), fs);
  }
}

TEST(NormalFactor, NonNormalInputRejected) {
  EXPECT_THROW(factor_normal(I("(x^2, y^3)")), DomainError);
}

TEST(NormalFactor, FanOfN23) {
  Fan F = fan_of(n_ab(2, 3));
  EXPECT_EQ(F.rays, (std::vector<LatticeVector>{{1, 0}, {3, 2}, {0, 1}}));
  ASSERT_EQ(F.cones.size(), 2u);
  EXPECT_EQ(F.cones[0].index, 2);
  EXPECT_EQ(F.cones[0].label, "A_1");
  EXPECT_EQ(F.cones[1].index, 3);
}

TEST(NormalFactor, FanOfProductIsUnionOfRays) {
  Fan A = fan_of(n_ab(2, 3)), B = fan_of(n_ab(1, 1));
  Fan AB = fan_of(product(n_ab(2, 3), n_ab(1, 1)));
  EXPECT_EQ(AB.rays, (std::vector<LatticeVector>{{1, 0}, {3, 2}, {1, 1}, {0, 1}}));
  for (const auto& r : A.rays) EXPECT_NE(std::find(AB.rays.begin(), AB.rays.end(), r), AB.rays.end());
  for (const auto& r : B.rays) EXPECT_NE(std::find(AB.rays.begin(), AB.rays.end(), r), AB.rays.end());
}

TEST(NormalFactor, SmoothConesForMaximalIdeal) {
  Fan F = fan_of(MonomialIdeal::maximal());
  for (const auto& c : F.cones) EXPECT_EQ(c.label, "smooth");
}

TEST(NormalFactor, ComponentCount) {
  auto c = component_count(power(MonomialIdeal::maximal(), 4));
  EXPECT_EQ(c.t, 1u);
  EXPECT_TRUE(c.exact);
  c = component_count(I("(x^6, x^4 y, x^2 y^2, x y^3, y^5)"));
  EXPECT_EQ(c.t, 3u);
  EXPECT_TRUE(c.exact);
  c = component_count(I("(x^2, y^2)"));
  EXPECT_EQ(c.t, 1u);
  EXPECT_FALSE(c.exact);
  EXPECT_THROW(component_count(MonomialIdeal::unit()), DomainError);
}
