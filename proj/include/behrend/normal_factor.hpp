#pragma once

#include <span>
#include <string>
#include <vector>

#include "behrend/arith.hpp"
#include "behrend/ideal.hpp"
#include "behrend/newton.hpp"

namespace behrend {

// n_ab(alpha, beta)^delta
struct NabFactor {
  Int alpha;
  Int beta;
  Int delta;
  friend bool operator==(const NabFactor&, const NabFactor&) = default;
};

struct Cone {
  LatticeVector first;
  LatticeVector second;
  Int index;          // |det(first, second)|
  std::string label;  // "smooth", "A_k" or "index d"
};

struct Fan {
  std::vector<LatticeVector> rays;  // from e1 to e2
  std::vector<Cone> cones;
};

struct ComponentCount {
  std::size_t t;
  bool exact;
};

// Integral closure of (x^alpha, y^beta).
MonomialIdeal n_ab(const Int& alpha, const Int& beta);

// One factor per edge of the Newton polygon, ordered by increasing alpha/beta
// (the fan order, from e1 towards e2).
std::vector<NabFactor> factor_normal(const MonomialIdeal& I);
MonomialIdeal reconstruct(std::span<const NabFactor> factors);

Cone make_cone(const LatticeVector& u, const LatticeVector& v);
Fan fan_from_rays(std::vector<LatticeVector> interior_rays);
Fan fan_of(const MonomialIdeal& I);
ComponentCount component_count(const MonomialIdeal& I);

// n(1,2) * n(1,1) * n(2,1)^2
std::string to_string(std::span<const NabFactor> factors);

}  // namespace behrend
