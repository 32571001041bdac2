#include "behrend/nu.hpp"

#include <algorithm>

#include "behrend/errors.hpp"

namespace behrend {

namespace {

void require_own_edge(const MonomialIdeal& I, const Edge& edge) {
  require_fat_point(I);
  const auto edges = newton_polygon(I).edges;
  if (std::find(edges.begin(), edges.end(), edge) == edges.end())
    throw DomainError("edge is not on the Newton polygon of " + to_string(I));
}

Int multiplicity_along(const MonomialIdeal& I, const LatticeVector& ray) {
  const auto g = minimal_generators(I).generators();
  Int e = pairing(ray, g.front());
  for (const auto& p : g) e = std::min(e, pairing(ray, p));
  return e;
}

Int degree_along(const MonomialIdeal& I, const Edge& edge, const Int& e) {
  // positions, in primitive steps from the start vertex, of the generators
  // lying on the edge
  Int d = 0;
  const auto g = minimal_generators(I).generators();
  for (const auto& p : g) {
    if (pairing(edge.inward_ray, p) != e) continue;
    d = gcd(d, (edge.start.a - p.a) / edge.alpha());
  }
  return d;
}

}  // namespace

Int edge_multiplicity(const MonomialIdeal& I, const Edge& edge) {
  require_own_edge(I, edge);
  return multiplicity_along(I, edge.inward_ray);
}

Int edge_degree(const MonomialIdeal& I, const Edge& edge) {
  require_own_edge(I, edge);
  return degree_along(I, edge, multiplicity_along(I, edge.inward_ray));
}

BehrendReport nu_monomial(const MonomialIdeal& I) {
  require_fat_point(I);
  BehrendReport report;
  report.nu = 0;
  for (const auto& edge : newton_polygon(I).edges) {
    ComponentRecord c{edge, multiplicity_along(I, edge.inward_ray), 0, 0};
    c.d = degree_along(I, edge, c.e);
    c.contribution = c.d * c.e;
    report.nu += c.contribution;
    report.components.push_back(std::move(c));
  }
  report.length = colength(I);
  report.normal = is_normal(I);
  return report;
}

Int nu_power_rule(const MonomialIdeal& I, const Int& d) {
  if (d <= 0) throw DomainError("the power rule needs a positive exponent");
  return d * nu_monomial(I).nu;
}

Int nu_lci(const Int& a, const Int& b) {
  if (a <= 0 || b <= 0) throw DomainError("(x^a, y^b) needs positive a and b");
  return a * b;
}

}  // namespace behrend
