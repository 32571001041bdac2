#include "behrend/normal_factor.hpp"

#include <algorithm>

#include "behrend/errors.hpp"

namespace behrend {

namespace {

void require_normal(const MonomialIdeal& I, const char* what) {
  require_fat_point(I);
  if (!is_normal(I))
    throw DomainError(std::string(what) + " needs a normal ideal; " + to_string(I) +
                      " is not normal (normalize it first)");
}

Int det(const LatticeVector& u, const LatticeVector& v) { return u.x * v.y - u.y * v.x; }

}  // namespace

MonomialIdeal n_ab(const Int& alpha, const Int& beta) {
  if (alpha <= 0 || beta <= 0) throw DomainError("n(a,b) needs positive a and b");
  return integral_closure(MonomialIdeal::pure_powers(alpha, beta));
}

std::vector<NabFactor> factor_normal(const MonomialIdeal& I) {
  require_normal(I, "factor");
  NewtonPolygon P = newton_polygon(I);
  std::vector<NabFactor> factors;
  for (auto it = P.edges.rbegin(); it != P.edges.rend(); ++it)
    factors.push_back({it->alpha(), it->beta(), it->lattice_length});
  return factors;
}

MonomialIdeal reconstruct(std::span<const NabFactor> factors) {
  MonomialIdeal I = MonomialIdeal::unit();
  for (const auto& f : factors) I = product(I, power(n_ab(f.alpha, f.beta), f.delta));
  return I;
}

Cone make_cone(const LatticeVector& u, const LatticeVector& v) {
  Cone c{u, v, abs(det(u, v)), ""};
  if (c.index == 0) throw DomainError("degenerate cone");
  if (c.index == 1) {
    c.label = "smooth";
  } else if ((v.y - u.y) % c.index == 0 && (u.x - v.x) % c.index == 0) {
    // a primitive linear form takes the value 1 on both rays
    c.label = "A_" + to_string(c.index - 1);
  } else {
    c.label = "index " + to_string(c.index);
  }
  return c;
}

Fan fan_from_rays(std::vector<LatticeVector> interior_rays) {
  // increasing slope y/x, all rays in the open first quadrant
  std::sort(interior_rays.begin(), interior_rays.end(),
            [](const LatticeVector& u, const LatticeVector& v) { return det(u, v) > 0; });
  interior_rays.erase(std::unique(interior_rays.begin(), interior_rays.end()),
                      interior_rays.end());
  Fan F;
  F.rays.push_back({1, 0});
  for (auto& r : interior_rays) F.rays.push_back(std::move(r));
  F.rays.push_back({0, 1});
  for (std::size_t k = 0; k + 1 < F.rays.size(); ++k)
    F.cones.push_back(make_cone(F.rays[k], F.rays[k + 1]));
  return F;
}

Fan fan_of(const MonomialIdeal& I) {
  std::vector<LatticeVector> rays;
  for (const auto& f : factor_normal(I)) rays.push_back({f.beta, f.alpha});
  return fan_from_rays(std::move(rays));
}

ComponentCount component_count(const MonomialIdeal& I) {
  require_fat_point(I);
  return {newton_polygon(I).edges.size(), is_normal(I)};
}

std::string to_string(std::span<const NabFactor> factors) {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " * ";
    s += "n(" + to_string(f.alpha) + "," + to_string(f.beta) + ")";
    if (f.delta != 1) s += "^" + to_string(f.delta);
  }
  return s.empty() ? "(1)" : s;
}

}  // namespace behrend
