#include <gtest/gtest.h>

#include "behrend/errors.hpp"
#include "behrend/expr.hpp"
#include "behrend/ideal.hpp"
#include "behrend/oracle.hpp"

using namespace behrend;

namespace {

MonomialIdeal I(const char* text) { return monomial_ideal(evaluate(text)); }

// brute force: count monomials in the box that are not in I
Int count_standard_monomials(const MonomialIdeal& J) {
  Int n = 0;
  for (Int a = 0; a < J.x_power(); ++a)
    for (Int b = 0; b < J.y_power(); ++b)
      if (!J.contains({a, b})) ++n;
  return n;
}

}  // namespace

TEST(Ideal, MinimalGeneratorsDropRedundant) {
  MonomialIdeal J = minimal_generators({{2, 0}, {1, 1}, {2, 1}, {0, 3}, {1, 3}});
  EXPECT_EQ(to_string(J), "(x^2, x y, y^3)");
  EXPECT_TRUE(J.is_minimal());
}

TEST(Ideal, ToStringOrdersByDecreasingX) {
  EXPECT_EQ(to_string(I("(y^3, x y^2, x^2)")), "(x^2, x y^2, y^3)");
  EXPECT_EQ(to_string(MonomialIdeal::unit()), "(1)");
}

TEST(Ideal, ColengthOfSeventeenBoxStaircase) {
  MonomialIdeal J = I("(x^7, x^3 y, x^2 y^3, x y^4, y^6)");
  EXPECT_EQ(colength(J), 17);
  FerrersDiagram F = ferrers(J);
  EXPECT_EQ(F.column_heights, (std::vector<Int>{6, 4, 3, 1, 1, 1, 1}));
  EXPECT_EQ(F.size(), 17);
}

TEST(Ideal, FerrersRoundTrip) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    MonomialIdeal J = random_ideal(rng, 8);
    if (J.is_unit()) continue;
    EXPECT_EQ(ideal_of(ferrers(J)), minimal_generators(J));
  }
}

TEST(Ideal, ColengthMatchesBruteForce) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    MonomialIdeal J = random_ideal(rng, 8);
    EXPECT_EQ(colength(J), count_standard_monomials(J)) << to_string(J);
  }
}

TEST(Ideal, MaximalPowers) {
  for (int d = 1; d <= 20; ++d)
    EXPECT_EQ(colength(power(MonomialIdeal::maximal(), d)), d * (d + 1) / 2);
  EXPECT_TRUE(power(MonomialIdeal::maximal(), 0).is_unit());
}

TEST(Ideal, ProductIsCommutativeAndAdditiveOnPowers) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    MonomialIdeal A = random_ideal(rng, 5), B = random_ideal(rng, 5);
    EXPECT_EQ(product(A, B), product(B, A));
    EXPECT_EQ(power(A, 3), product(A, product(A, A)));
  }
}

TEST(Ideal, RejectsInfiniteColength) {
  EXPECT_THROW(colength(MonomialIdeal({{2, 0}, {1, 1}})), DomainError);
  EXPECT_THROW(require_fat_point(MonomialIdeal::unit()), DomainError);
  EXPECT_THROW(MonomialIdeal({{-1, 2}}), DomainError);
  EXPECT_THROW(MonomialIdeal(std::vector<Exponent>{}), DomainError);
}

TEST(Ideal, HugeExponentsStayExact) {
  Int big("100000000000000000000");
  MonomialIdeal J = MonomialIdeal::pure_powers(big, 1);
  EXPECT_EQ(colength(J), big);
  EXPECT_THROW(ferrers(J), DomainError);
}
