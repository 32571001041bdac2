#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "behrend/arith.hpp"
#include "behrend/errors.hpp"
#include "behrend/ideal.hpp"
#include "behrend/towers.hpp"

namespace behrend {

struct IdealExpr {
  enum class Kind { List, Maximal, Nab, TowerLiteral, Product, Power };
  Kind kind = Kind::List;
  std::size_t position = 0;
  std::vector<Exponent> generators;  // List
  Int a, b;                          // Nab
  Tower tower;                       // TowerLiteral
  std::vector<IdealExpr> operands;   // Product (two), Power (one)
  Int exponent;                      // Power
};

// expr := term ('*' term)* ; term := atom ('^' INT)* ;
// atom := 'm' | 'n(' INT ',' INT ')' | tower(...) | '(' monomials ')' | '(' expr ')'
IdealExpr parse(std::string_view text);

// Source text with a caret under the error position.
std::string caret_diagnostic(std::string_view text, const ParseError& e);

// A product of towers, each raised to a power.
struct TowerPart {
  Tower tower;
  Int power = 1;
  friend bool operator==(const TowerPart&, const TowerPart&) = default;
};

struct FactorProduct {
  std::vector<TowerPart> parts;
  bool is_monomial() const;
  std::vector<TowerFactor> factors() const;
  friend bool operator==(const FactorProduct&, const FactorProduct&) = default;
};

using Value = std::variant<MonomialIdeal, FactorProduct>;

// Generator lists of the form (x, y^k) or (x^k, y) and the alias m become
// monomial towers so that they can be multiplied with other towers.
Value elaborate(const IdealExpr& e);
Value evaluate(std::string_view text);

// Monomial model of a value; throws UnsupportedError for non-monomial towers.
MonomialIdeal monomial_ideal(const Value& v);

std::string to_string(const Value& v);
std::string to_string(const FactorProduct& p);

}  // namespace behrend
