#pragma once

#include <compare>
#include <string>
#include <vector>

#include "behrend/arith.hpp"

namespace behrend {

// Exponent (a, b) of the monomial x^a y^b.
struct Exponent {
  Int a;
  Int b;

  bool divides(const Exponent& o) const { return a <= o.a && b <= o.b; }
  friend Exponent operator+(const Exponent& p, const Exponent& q) {
    return {p.a + q.a, p.b + q.b};
  }
  friend bool operator==(const Exponent& p, const Exponent& q) {
    return p.a == q.a && p.b == q.b;
  }
  friend std::strong_ordering operator<=>(const Exponent& p, const Exponent& q) {
    if (p.a != q.a) return p.a < q.a ? std::strong_ordering::less : std::strong_ordering::greater;
    if (p.b != q.b) return p.b < q.b ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

class MonomialIdeal {
 public:
  // Stores the generators sorted by (a, b) with duplicates removed. Throws
  // DomainError on an empty list or a negative exponent.
  explicit MonomialIdeal(std::vector<Exponent> generators);

  static MonomialIdeal unit();
  static MonomialIdeal maximal();
  static MonomialIdeal pure_powers(const Int& a, const Int& b);

  const std::vector<Exponent>& generators() const { return gens_; }
  bool is_minimal() const { return minimal_; }
  bool is_unit() const;
  bool has_finite_colength() const;
  bool contains(const Exponent& e) const;

  // Largest pure powers: x^{a0} and y^{b0} among the generators.
  // Only meaningful for finite colength.
  Int x_power() const;
  Int y_power() const;

  friend bool operator==(const MonomialIdeal& I, const MonomialIdeal& J) {
    return I.gens_ == J.gens_;
  }

 private:
  std::vector<Exponent> gens_;
  bool minimal_ = false;
};

struct FerrersDiagram {
  std::vector<Int> column_heights;
  Int size() const;
  friend bool operator==(const FerrersDiagram&, const FerrersDiagram&) = default;
};

MonomialIdeal minimal_generators(std::vector<Exponent> gens);
MonomialIdeal minimal_generators(const MonomialIdeal& I);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, const Int& d);
bool contains(const MonomialIdeal& I, const Exponent& e);

Int colength(const MonomialIdeal& I);
FerrersDiagram ferrers(const MonomialIdeal& I);
MonomialIdeal ideal_of(const FerrersDiagram& F);

// Throws DomainError unless I is a proper ideal of finite colength.
void require_fat_point(const MonomialIdeal& I);
void require_finite_colength(const MonomialIdeal& I);

// Monomial in the expression syntax: 1, x, x^2 y^3.
std::string monomial_string(const Exponent& e);
// Canonical text form (x^2, x y^2, y^3), generators by decreasing a.
std::string to_string(const MonomialIdeal& I);

}  // namespace behrend
