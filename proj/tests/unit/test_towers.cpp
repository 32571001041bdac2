#include <gtest/gtest.h>

#include <algorithm>

#include "behrend/errors.hpp"
#include "behrend/expr.hpp"
#include "behrend/ideal.hpp"
#include "behrend/nu.hpp"
#include "behrend/oracle.hpp"
#include "behrend/towers.hpp"

using namespace behrend;

namespace {

std::vector<Int> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

Tower K(Branch b, int h) { return complete_tower(b, {}, h); }

Polynomial mono(std::size_t degree, int c = 1) {
  Polynomial g(degree + 1, Rational(0));
  g[degree] = c;
  return g;
}

Int pyr(int s) { return Int(s) * (s + 1) * (2 * s + 1) / 6; }

std::vector<long> self_ints(const DynkinDiagram& D) {
  std::vector<long> out;
  for (const auto& n : D.nodes) out.push_back(n.self_intersection);
  return out;
}

std::vector<TowerFactor> factors(const char* text) {
  return std::get<FactorProduct>(evaluate(text)).factors();
}

}  // namespace

TEST(Towers, Validation) {
  Tower T = make_tower(Branch::X, {}, ints({1, 2, 3}));
  EXPECT_TRUE(T.is_complete());
  EXPECT_TRUE(T.is_monomial());
  EXPECT_EQ(tower_ideal(make_tower(Branch::X, {}, ints({4}))), MonomialIdeal({{1, 0}, {0, 4}}));

  auto kind_of = [](auto f) {
    try {
      f();
    } catch (const TowerError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no TowerError";
    return TowerError::Kind::EmptyExponents;
  };
  EXPECT_EQ(kind_of([] { make_tower(Branch::X, mono(3), ints({2})); }),
            TowerError::Kind::TangentDegree);
  EXPECT_EQ(kind_of([] { make_tower(Branch::X, {}, {}); }), TowerError::Kind::EmptyExponents);
  EXPECT_EQ(kind_of([] { make_tower(Branch::X, {}, ints({2, 2})); }),
            TowerError::Kind::NotIncreasing);
  EXPECT_EQ(kind_of([] { make_tower(Branch::X, {}, ints({0, 1})); }),
            TowerError::Kind::NonPositiveExponent);
  EXPECT_EQ(kind_of([] { make_tower(Branch::X, Polynomial{Rational(1)}, ints({2})); }),
            TowerError::Kind::ConstantTangent);
}

TEST(Towers, MonomialIdeals) {
  EXPECT_EQ(to_string(tower_ideal(K(Branch::X, 3))), "(x^3, x^2 y, x y^3, y^6)");
  EXPECT_EQ(to_string(tower_ideal(make_tower(Branch::X, {}, ints({1, 3})))), "(x^2, x y, y^4)");
  EXPECT_THROW(tower_ideal(make_tower(Branch::X, mono(1), ints({2}))), UnsupportedError);
}

TEST(Towers, LengthAndNu) {
  EXPECT_EQ(tower_length(K(Branch::X, 3)), 10);
  EXPECT_EQ(tower_nu(K(Branch::X, 3)), 14);
  Tower T = make_tower(Branch::X, {}, ints({1, 3}));
  EXPECT_EQ(tower_length(T), 5);
  EXPECT_EQ(tower_nu(T), 6);
  for (int n = 1; n <= 9; ++n) {
    Tower C = make_tower(Branch::Y, {}, ints({n}));
    EXPECT_EQ(tower_length(C), n);
    EXPECT_EQ(tower_nu(C), n);
  }
  for (int s = 1; s <= 12; ++s) {
    EXPECT_EQ(tower_nu(K(Branch::X, s)), pyr(s));
    EXPECT_EQ(tower_length(K(Branch::X, s)), binomial(s + 2, 3));
  }
}

TEST(Towers, MonomialTowersAgreeWithStaircase) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    Tower T = random_monomial_tower(rng, 7);
    MonomialIdeal J = tower_ideal(T);
    EXPECT_EQ(tower_length(T), colength(J)) << to_string(T);
    EXPECT_EQ(tower_nu(T), nu_monomial(J).nu) << to_string(T);
  }
}

TEST(Towers, TwoTowerClosedForms) {
  EXPECT_EQ(two_tower_nu(K(Branch::X, 1), K(Branch::Y, 1)), 2);
  for (int h = 1; h <= 8; ++h)
    EXPECT_EQ(two_tower_nu(K(Branch::X, h), K(Branch::Y, h)), 2 * pyr(h) + 2 * h * h - 2 * h);
  // same branch, distinct tangent lines: d = 1
  EXPECT_EQ(two_tower_nu(K(Branch::X, 2), complete_tower(Branch::X, mono(1), 3)), 26);

  EXPECT_EQ(two_tower_length(K(Branch::X, 1), K(Branch::Y, 1)), 3);
  EXPECT_EQ(two_tower_length(K(Branch::X, 2), K(Branch::Y, 2)), 12);
  EXPECT_EQ(two_tower_length(K(Branch::X, 3), K(Branch::Y, 3)), 29);
  EXPECT_EQ(two_tower_length(K(Branch::X, 2), K(Branch::Y, 1)), 7);
  for (int h = 1; h <= 8; ++h)
    EXPECT_EQ(two_tower_length(K(Branch::X, h), K(Branch::Y, h)),
              h * (h + 1) * (h + 2) / 3 + h * h);
  EXPECT_THROW(two_tower_nu(make_tower(Branch::X, {}, ints({2})), K(Branch::Y, 2)),
               UnsupportedError);
}

TEST(Towers, SharedLevelsBeyondOne) {
  // (x,y)(x,y^2) * (x,y)(x,y^2)(x,y^3) shares two levels; the monomial
  // staircase fixes the value at 22
  Tower A = K(Branch::X, 2), B = K(Branch::X, 3);
  EXPECT_EQ(shared_levels(A, B), 2);
  MonomialIdeal J = product(tower_ideal(A), tower_ideal(B));
  EXPECT_EQ(nu_monomial(J).nu, 22);
  EXPECT_EQ(two_tower_nu(A, B), 22);

  for (int h1 = 1; h1 <= 8; ++h1)
    for (int h2 = 1; h2 <= 8; ++h2)
      for (int d = 1; d < std::min(h1, h2); ++d) {
        Tower P = K(Branch::X, h1), Q = complete_tower(Branch::X, mono(d), h2);
        ASSERT_EQ(shared_levels(P, Q), d);
        EXPECT_EQ(two_tower_nu(P, Q), product_nu(make_tower_product({P, Q})).nu)
            << h1 << " " << h2 << " " << d;
      }
}

TEST(Towers, EquivalenceClasses) {
  TowerProduct cross = make_tower_product({K(Branch::X, 3), K(Branch::Y, 3)});
  EXPECT_EQ(equivalence_classes(cross, 1).classes.size(), 1u);
  EXPECT_EQ(equivalence_classes(cross, 2).classes.size(), 2u);

  TowerProduct same = make_tower_product({K(Branch::X, 4), complete_tower(Branch::X, mono(2), 4)});
  EXPECT_EQ(equivalence_classes(same, 2).classes.size(), 1u);
  EXPECT_EQ(equivalence_classes(same, 3).classes.size(), 2u);

  TowerProduct uneven = make_tower_product({K(Branch::X, 2), K(Branch::Y, 4)});
  auto c = equivalence_classes(uneven, 3);
  EXPECT_EQ(c.classes.size(), 1u);
  EXPECT_EQ(c.excess.size(), 1u);

  TowerProduct single = make_tower_product({K(Branch::Y, 5)});
  for (int r = 1; r <= 5; ++r) EXPECT_EQ(equivalence_classes(single, r).classes.size(), 1u);
  EXPECT_THROW(equivalence_classes(make_tower_product({make_tower(Branch::X, {}, ints({2}))}), 1),
               UnsupportedError);
}

TEST(Towers, SingleTowerChain) {
  for (int s = 1; s <= 6; ++s) {
    DynkinDiagram D = build_dynkin(make_tower_product({K(Branch::X, s)}));
    ASSERT_EQ(D.nodes.size(), static_cast<std::size_t>(s));
    std::vector<long> expected(s, -2);
    expected.back() = -1;
    EXPECT_EQ(self_ints(D), expected);
    EXPECT_EQ(D.edges().size(), static_cast<std::size_t>(s - 1));
    // contribution of the level-i factor at the level-j node is min(i, j)
    for (std::size_t f = 0; f < D.factors.size(); ++f)
      for (std::size_t n = 0; n < D.nodes.size(); ++n)
        EXPECT_EQ(contribution(D, f, n),
                  std::min(D.factors[f].exponent, Int(D.nodes[n].level)));
  }
}

TEST(Towers, CrossPairDiagram) {
  DynkinDiagram D = build_dynkin(make_tower_product({K(Branch::X, 3), K(Branch::Y, 2)}));
  EXPECT_EQ(D.nodes.size(), 4u);
  EXPECT_EQ(D.nodes[0].level, 1u);
  EXPECT_EQ(D.nodes[0].self_intersection, -3);
  EXPECT_EQ(D.nu(), two_tower_nu(K(Branch::X, 3), K(Branch::Y, 2)));
  // factors of one tower contribute 1 on the other chain
  for (std::size_t f = 0; f < D.factors.size(); ++f)
    for (std::size_t n = 1; n < D.nodes.size(); ++n)
      if (D.nodes[n].branch != D.factors[f].branch) EXPECT_EQ(contribution(D, f, n), 1);
}

TEST(Towers, SameBranchFork) {
  for (int d = 1; d <= 3; ++d) {
    Tower P = K(Branch::X, 5), Q = complete_tower(Branch::X, mono(d), 5);
    DynkinDiagram D = build_dynkin(make_tower_product({P, Q}));
    EXPECT_EQ(D.nodes.size(), static_cast<std::size_t>(10 - d));
    std::size_t fork = D.node_at(Branch::X, {}, d);
    EXPECT_EQ(D.nodes[fork].children.size(), 2u);
    // at d = 1 the fork is the root: two edges, minus one more
    EXPECT_EQ(D.nodes[fork].self_intersection, -3);
  }
}

TEST(Towers, FiveNodeShape) {
  auto fs = factors("m * tower(x; g = 0; exps = [2]) * tower(y; g = 0; exps = [2])"
                    " * tower(x; g = y; exps = [2]) * tower(x; g = y; exps = [3])");
  DynkinDiagram D = build_dynkin(fs);
  ASSERT_EQ(D.nodes.size(), 5u);
  EXPECT_EQ(D.nodes[0].self_intersection, -4);
  EXPECT_EQ(D.nodes[0].children.size(), 3u);
  std::vector<long> level2;
  std::size_t leaves3 = 0;
  for (const auto& n : D.nodes) {
    if (n.level == 2) level2.push_back(n.self_intersection);
    if (n.level == 3) {
      ++leaves3;
      EXPECT_EQ(n.self_intersection, -1);
      EXPECT_TRUE(n.children.empty());
    }
  }
  std::sort(level2.begin(), level2.end());
  EXPECT_EQ(level2, (std::vector<long>{-2, -1, -1}));
  EXPECT_EQ(leaves3, 1u);
  EXPECT_EQ(factors_nu(fs).nu, valuation_nu(fs));
}

TEST(Towers, MaximalFactorContributesOne) {
  auto fs = factors("m * tower(x; g = 0; exps = [1, 2, 3])");
  DynkinDiagram D = build_dynkin(fs);
  for (std::size_t n = 0; n < D.nodes.size(); ++n) EXPECT_EQ(contribution(D, 0, n), 1);
}

TEST(Towers, ProductNu) {
  EXPECT_EQ(product_nu(make_tower_product({K(Branch::X, 4)})).nu, 30);
  for (int h = 1; h <= 6; ++h)
    EXPECT_EQ(product_nu(make_tower_product({K(Branch::X, h), K(Branch::Y, h)})).nu,
              2 * pyr(h) + 2 * h * h - 2 * h);
}

TEST(Towers, NoncompleteProducts) {
  // (x, y^2) * (x^3, y)
  TowerProduct J = make_tower_product(
      {make_tower(Branch::X, {}, ints({2})), make_tower(Branch::Y, {}, ints({3}))});
  ProductSummary S = noncomplete_product_nu(J);
  EXPECT_EQ(S.nu, 7);
  std::vector<Int> mult;
  for (const auto& n : S.diagram.nodes) mult.push_back(n.multiplicity);
  std::sort(mult.begin(), mult.end());
  EXPECT_EQ(mult, ints({2, 3, 3, 4}));
  std::size_t survivors = 0;
  for (const auto& n : S.diagram.nodes) survivors += n.surviving;
  EXPECT_EQ(survivors, 2u);

  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(noncomplete_product_nu(make_tower_product({make_tower(Branch::X, {}, ints({n}))})).nu,
              n);
}

TEST(Towers, DualEngineOnRandomProducts) {
  Rng rng(41);
  for (int i = 0; i < 150; ++i) {
    std::vector<Tower> ts;
    const auto count = rng.uniform(1, 3);
    for (std::uint64_t k = 0; k < count; ++k) ts.push_back(random_monomial_tower(rng, 7));
    try {
      TowerProduct P = make_tower_product(ts);
      EXPECT_EQ(noncomplete_product_nu(P).nu, nu_monomial(expand(P)).nu) << to_string(P);
    } catch (const UnsupportedError&) {
      // overlapping exponents on one curve
    }
  }
}

TEST(Towers, TimesMaximalPower) {
  Tower T = make_tower(Branch::X, {}, ints({2}));
  EXPECT_EQ(tower_times_m_power(T, 1), std::make_pair(Int(4), Int(5)));
  EXPECT_EQ(tower_times_m_power(T, 0), std::make_pair(tower_length(T), tower_nu(T)));
  Tower U = make_tower(Branch::X, {}, ints({2, 3}));
  MonomialIdeal J = product(tower_ideal(U), power(MonomialIdeal::maximal(), 2));
  EXPECT_EQ(tower_times_m_power(U, 2), std::make_pair(colength(J), nu_monomial(J).nu));
  EXPECT_THROW(tower_times_m_power(K(Branch::X, 2), 1), DomainError);
}

TEST(Towers, CrossBranchTangentCanonicalized) {
  // y = x + x^2 is the same curve as x = y - y^2 + ...
  Polynomial gx = {Rational(0), Rational(-1), Rational(-1)};  // y - x - x^2
  Polynomial gy = {Rational(0), Rational(-1), Rational(1)};   // x - y + y^2
  Tower A = complete_tower(Branch::Y, gx, 3), B = complete_tower(Branch::X, gy, 3);
  EXPECT_EQ(shared_levels(A, B), 3);
}

TEST(Towers, RepeatedFactorsRejectedInProducts) {
  EXPECT_THROW(make_tower_product({K(Branch::X, 2), K(Branch::X, 3)}), UnsupportedError);
  TowerProduct P = make_tower_product(
      {make_tower(Branch::X, {}, ints({1})), make_tower(Branch::X, {}, ints({3}))});
  ASSERT_EQ(P.towers.size(), 1u);
  EXPECT_EQ(P.towers[0].exponents, ints({1, 3}));
}

TEST(Towers, Labels) {
  EXPECT_EQ(factor_label(Branch::X, {}, 1), "m");
  EXPECT_EQ(factor_label(Branch::X, {}, 3), "(x, y^3)");
  EXPECT_EQ(factor_label(Branch::Y, {}, 2), "(x^2, y)");
  EXPECT_EQ(factor_label(Branch::X, mono(1), 2), "(x + y) + m^2");
  EXPECT_EQ(to_string(make_tower(Branch::X, {Rational(0), Rational(0), Rational(1, 2)}, ints({3}))),
            "tower(x; g = 1/2*y^2; exps = [3])");
}
