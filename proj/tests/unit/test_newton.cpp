#include <gtest/gtest.h>

#include "behrend/errors.hpp"
#include "behrend/expr.hpp"
#include "behrend/newton.hpp"
#include "behrend/oracle.hpp"

using namespace behrend;

namespace {

MonomialIdeal I(const char* text) { return monomial_ideal(evaluate(text)); }

}  // namespace

TEST(Newton, PolygonOfSplitStaircase) {
  NewtonPolygon P = newton_polygon(I("(x y, x^4, y^3)"));
  ASSERT_EQ(P.edges.size(), 2u);
  EXPECT_EQ(P.vertices, (std::vector<Exponent>{{4, 0}, {1, 1}, {0, 3}}));
  EXPECT_EQ(P.edges[0].inward_ray, (LatticeVector{1, 3}));
  EXPECT_EQ(P.edges[1].inward_ray, (LatticeVector{2, 1}));
  EXPECT_EQ(P.edges[0].support(), 4);
  EXPECT_EQ(P.edges[1].support(), 3);
}

TEST(Newton, CollinearGeneratorsAreNotVertices) {
  NewtonPolygon P = newton_polygon(I("(x^4, x^2 y, y^2)"));
  ASSERT_EQ(P.edges.size(), 1u);
  EXPECT_EQ(P.edges[0].lattice_length, 2);
  EXPECT_EQ(P.edges[0].primitive_step, (LatticeVector{-2, 1}));
}

TEST(Newton, ClosureExamples) {
  EXPECT_EQ(integral_closure(I("(x^2, y^2)")), power(MonomialIdeal::maximal(), 2));
  EXPECT_EQ(to_string(integral_closure(I("(x^2, y^3)"))), "(x^2, x y^2, y^3)");
  EXPECT_EQ(integral_closure(I("(x^5, y^5)")), power(MonomialIdeal::maximal(), 5));
}

TEST(Newton, ClosureAgreesWithDefinition) {
  EXPECT_EQ(integral_closure_oracle(I("(x^2, y^2)"), 2), power(MonomialIdeal::maximal(), 2));
  EXPECT_EQ(to_string(integral_closure_oracle(I("(x^2, y^3)"), 3)), "(x^2, x y^2, y^3)");
  // x^4 y needs p = 5 for (x^5, y^5)
  EXPECT_FALSE(integral_closure_oracle(I("(x^5, y^5)"), 4).contains({4, 1}));
  EXPECT_EQ(integral_closure_oracle(I("(x^5, y^5)"), 5), power(MonomialIdeal::maximal(), 5));
}

TEST(Newton, ClosureIsIdempotentAndContainsI) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    MonomialIdeal J = random_ideal(rng, 8);
    MonomialIdeal N = integral_closure(J);
    EXPECT_EQ(integral_closure(N), N);
    EXPECT_TRUE(is_normal(N));
    for (const auto& g : J.generators()) EXPECT_TRUE(N.contains(g));
  }
}

TEST(Newton, PickLengthMatchesColength) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    MonomialIdeal N = integral_closure(random_ideal(rng, 8));
    EXPECT_EQ(pick_length(N), colength(N)) << to_string(N);
  }
  EXPECT_THROW(pick_length(I("(x^2, y^2)")), DomainError);
}

TEST(Newton, StaircaseConditions) {
  EXPECT_TRUE(satisfies_staircase_conditions(I("(x^2, x y^2, y^3)")));
  EXPECT_TRUE(satisfies_staircase_conditions(I("(x^6, x^4 y, x^2 y^2, x y^3, y^5)")));
  EXPECT_TRUE(is_normal(I("(x y, x^4, y^3)")));
  EXPECT_FALSE(is_normal(I("(x^2, y^3)")));
}
