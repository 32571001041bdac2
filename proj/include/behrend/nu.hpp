#pragma once

#include <vector>

#include "behrend/arith.hpp"
#include "behrend/ideal.hpp"
#include "behrend/newton.hpp"

namespace behrend {

struct ComponentRecord {
  Edge edge;
  Int e;  // order of the pulled-back ideal along the component
  Int d;  // degree of the normalization component over its image
  Int contribution;
};

struct BehrendReport {
  Int nu;
  Int length;
  std::vector<ComponentRecord> components;  // Newton polygon order
  bool normal = false;
};

Int edge_multiplicity(const MonomialIdeal& I, const Edge& edge);
Int edge_degree(const MonomialIdeal& I, const Edge& edge);
BehrendReport nu_monomial(const MonomialIdeal& I);
Int nu_power_rule(const MonomialIdeal& I, const Int& d);
Int nu_lci(const Int& a, const Int& b);

}  // namespace behrend
