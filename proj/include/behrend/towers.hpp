#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "behrend/arith.hpp"
#include "behrend/ideal.hpp"

namespace behrend {

enum class Branch { X, Y };

// Dense coefficients of g: index k holds the coefficient of t^k. Index 0 is
// always zero; trailing zeros are trimmed, so the zero polynomial is empty.
using Polynomial = std::vector<Rational>;

void trim(Polynomial& g);
Polynomial truncate(const Polynomial& g, std::size_t degree_bound);
// Lowest degree with a nonzero coefficient; nullopt for g = 0.
std::optional<std::size_t> order(const Polynomial& g);
// "1/2*y^2 - y^3"; "0" for the zero polynomial.
std::string polynomial_string(const Polynomial& g, char var);

// Factor of the form (x + g(y)) + m^k (branch X) or (y + g(x)) + m^k.
struct Tower {
  Branch branch = Branch::X;
  Polynomial tangent;
  std::vector<Int> exponents;

  const Int& height() const { return exponents.back(); }
  std::size_t size() const { return exponents.size(); }
  bool is_complete() const;
  bool is_monomial() const { return tangent.empty(); }
  friend bool operator==(const Tower&, const Tower&) = default;
};

Tower make_tower(Branch branch, Polynomial tangent, std::vector<Int> exponents);
Tower complete_tower(Branch branch, Polynomial tangent, const Int& height);
MonomialIdeal tower_ideal(const Tower& T);
Int tower_length(const Tower& T);
Int tower_nu(const Tower& T);

// Number of levels on which the infinitely near chains of two complete towers
// agree (1 when their tangent lines differ), capped at the smaller height.
Int shared_levels(const Tower& K1, const Tower& K2);
Int two_tower_nu(const Tower& K1, const Tower& K2);
Int two_tower_length(const Tower& K1, const Tower& K2);

struct TowerProduct {
  std::vector<Tower> towers;
  bool is_complete() const;
  bool is_monomial() const;
};

// Merges towers on the same curve whose exponent sets are disjoint; rejects
// overlapping ones.
TowerProduct make_tower_product(std::vector<Tower> towers);
MonomialIdeal expand(const TowerProduct& ts);

struct TowerClasses {
  std::vector<std::vector<std::size_t>> classes;  // tower indices
  std::vector<std::size_t> excess;                // towers of height < r
};

TowerClasses equivalence_classes(const TowerProduct& ts, const Int& r);

// One factor (branch, g) + m^k taken `count` times. `tower` records the
// originating tower when the factor comes from a TowerProduct.
struct TowerFactor {
  Branch branch = Branch::X;
  Polynomial tangent;
  Int exponent;
  Int count = 1;
  std::optional<std::size_t> tower;
};

std::vector<TowerFactor> factors_of(const TowerProduct& ts);
MonomialIdeal expand(const std::vector<TowerFactor>& factors);

struct DynkinNode {
  std::size_t level = 1;
  Branch branch = Branch::X;
  Polynomial key;  // tangent of the chain, degrees below level
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  long self_intersection = 0;
  Int multiplicity;
  bool surviving = false;
  std::vector<std::size_t> factors;  // factors whose home is this node
};

struct DynkinDiagram {
  std::vector<TowerFactor> factors;
  std::vector<std::size_t> home;  // node of each factor
  std::vector<DynkinNode> nodes;  // node 0 is the root

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  bool is_ancestor(std::size_t a, std::size_t b) const;  // a is b or above b
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t node_at(Branch branch, const Polynomial& tangent, std::size_t level) const;
  Int nu() const;  // sum of multiplicities over surviving nodes
};

// Generalized construction from raw factors.
DynkinDiagram build_dynkin(std::vector<TowerFactor> factors);
// Complete towers only.
DynkinDiagram build_dynkin(const TowerProduct& ts);

Int contribution(const DynkinDiagram& D, std::size_t factor, std::size_t node);

struct ProductSummary {
  Int nu;
  DynkinDiagram diagram;
};

ProductSummary product_nu(const TowerProduct& ts);
ProductSummary noncomplete_product_nu(const TowerProduct& ts);
ProductSummary factors_nu(std::vector<TowerFactor> factors);

// (length, nu) of K * m^n for a monomial tower with i_1 > 1.
std::pair<Int, Int> tower_times_m_power(const Tower& T, const Int& n);

// Node ideal label: "m", "(x, y^3)", "(x + y) + m^2".
std::string factor_label(Branch branch, const Polynomial& tangent, const Int& k);
// "tower(x; g = 1/2*y^2; exps = [2, 5])"
std::string to_string(const Tower& T);
std::string to_string(const TowerProduct& ts);

}  // namespace behrend
