#pragma once

#include <vector>

#include "behrend/arith.hpp"
#include "behrend/ideal.hpp"

namespace behrend {

struct LatticeVector {
  Int x;
  Int y;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

// <ray, p>
Int pairing(const LatticeVector& ray, const Exponent& p);

struct Edge {
  Exponent start;  // the endpoint with larger a
  Exponent end;
  LatticeVector primitive_step;  // (-alpha, beta)
  Int lattice_length;
  LatticeVector inward_ray;  // (beta, alpha)

  const Int& alpha() const { return inward_ray.y; }
  const Int& beta() const { return inward_ray.x; }
  Int support() const { return pairing(inward_ray, start); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct NewtonPolygon {
  // strictly decreasing a, strictly increasing b; from (a0, 0) to (0, b0)
  std::vector<Exponent> vertices;
  std::vector<Edge> edges;
};

NewtonPolygon newton_polygon(const MonomialIdeal& I);

MonomialIdeal integral_closure(const MonomialIdeal& I);
MonomialIdeal closure_power(const MonomialIdeal& I, const Int& i);
bool is_normal(const MonomialIdeal& I);

// Definitional closure by powers: x^m is kept when (x^m)^p lies in I^p for
// some p <= p_max. Only the bounding box [0, a0] x [0, b0] is searched.
MonomialIdeal integral_closure_oracle(const MonomialIdeal& I, unsigned p_max);

Int pick_length(const MonomialIdeal& I);

// Staircase conditions satisfied by the minimal generators of a normal ideal.
bool satisfies_staircase_conditions(const MonomialIdeal& I);

}  // namespace behrend
