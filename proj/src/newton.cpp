#include "behrend/newton.hpp"

#include <algorithm>

#include "behrend/errors.hpp"

namespace behrend {

namespace {

Int cross(const Exponent& o, const Exponent& p, const Exponent& q) {
  return (p.a - o.a) * (q.b - o.b) - (p.b - o.b) * (q.a - o.a);
}

// minimal generators ordered by decreasing a
std::vector<Exponent> descending_generators(const MonomialIdeal& I) {
  auto g = minimal_generators(I).generators();
  std::reverse(g.begin(), g.end());
  return g;
}

}  // namespace

Int pairing(const LatticeVector& ray, const Exponent& p) { return ray.x * p.a + ray.y * p.b; }

NewtonPolygon newton_polygon(const MonomialIdeal& I) {
  require_finite_colength(I);
  NewtonPolygon P;
  for (const auto& p : descending_generators(I)) {
    while (P.vertices.size() >= 2 &&
           cross(P.vertices[P.vertices.size() - 2], P.vertices.back(), p) >= 0) {
      P.vertices.pop_back();
    }
    P.vertices.push_back(p);
  }
  for (std::size_t k = 0; k + 1 < P.vertices.size(); ++k) {
    Edge e;
    e.start = P.vertices[k];
    e.end = P.vertices[k + 1];
    Int da = e.start.a - e.end.a;
    Int db = e.end.b - e.start.b;
    e.lattice_length = gcd(da, db);
    Int alpha = da / e.lattice_length;
    Int beta = db / e.lattice_length;
    e.primitive_step = {-alpha, beta};
    e.inward_ray = {beta, alpha};
    P.edges.push_back(std::move(e));
  }
  return P;
}

MonomialIdeal closure_power(const MonomialIdeal& I, const Int& i) {
  if (i < 0) throw DomainError("negative power of an ideal");
  if (i == 0) return MonomialIdeal::unit();
  NewtonPolygon P = newton_polygon(I);
  if (P.edges.empty()) return MonomialIdeal::unit();  // I = (1)

  std::vector<Exponent> gens;
  // edges run from large a to small a; walk the columns of i*Q from the
  // y-axis outwards, so take the edges in reverse
  for (auto it = P.edges.rbegin(); it != P.edges.rend(); ++it) {
    const Edge& e = *it;
    Int level = i * e.support();
    Int lo = i * e.end.a;
    Int hi = i * e.start.a;
    std::size_t width = to_index(hi - lo, "closure column range");
    for (std::size_t k = 0; k < width; ++k) {
      Int c = lo + k;
      Int b = ceil_div(level - e.beta() * c, e.alpha());
      if (b < 0) b = 0;
      gens.push_back({c, b});
    }
  }
  gens.push_back({i * P.vertices.front().a, 0});
  return minimal_generators(std::move(gens));
}

MonomialIdeal integral_closure(const MonomialIdeal& I) { return closure_power(I, 1); }

bool is_normal(const MonomialIdeal& I) {
  require_finite_colength(I);
  return integral_closure(I) == minimal_generators(I);
}

MonomialIdeal integral_closure_oracle(const MonomialIdeal& I, unsigned p_max) {
  require_finite_colength(I);
  if (p_max == 0) throw DomainError("p_max must be positive");
  MonomialIdeal J = minimal_generators(I);
  std::vector<MonomialIdeal> powers{J};
  for (unsigned p = 2; p <= p_max; ++p) powers.push_back(product(powers.back(), J));

  std::size_t a0 = to_index(J.x_power(), "oracle box width");
  std::size_t b0 = to_index(J.y_power(), "oracle box height");
  std::vector<Exponent> gens;
  for (std::size_t c = 0; c <= a0; ++c) {
    for (std::size_t b = 0; b <= b0; ++b) {
      bool member = false;
      for (unsigned p = 1; p <= p_max && !member; ++p) {
        member = powers[p - 1].contains({Int(c) * p, Int(b) * p});
      }
      if (member) {
        gens.push_back({Int(c), Int(b)});
        break;
      }
    }
  }
  return minimal_generators(std::move(gens));
}

Int pick_length(const MonomialIdeal& I) {
  if (!is_normal(I))
    throw DomainError("pick_length needs a normal ideal; use colength for " + to_string(I));
  NewtonPolygon P = newton_polygon(I);
  Int twice = P.vertices.front().a + P.vertices.back().b;
  for (const auto& e : P.edges) {
    twice += e.start.a * e.end.b - e.start.b * e.end.a - e.lattice_length;
  }
  return twice / 2;
}

bool satisfies_staircase_conditions(const MonomialIdeal& I) {
  require_finite_colength(I);
  // generator i is x^{a_i} y^{b_{n-i}}, with a decreasing in i
  auto g = descending_generators(I);
  const std::size_t n = g.size() - 1;
  std::vector<Int> a(n + 1), b(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    a[i] = g[i].a;
    b[n - i] = g[i].b;
  }
  auto half_up = [](const Int& u, const Int& v) { return ceil_div(u + v, 2); };
  for (std::size_t k = 0; k <= n; ++k) {
    bool ok = true;
    for (std::size_t j = k; j <= n && ok; ++j) ok = a[j] == Int(n - j);
    for (std::size_t j = n - k; j <= n && ok; ++j) ok = b[j] == Int(n - j);
    for (std::size_t i = 1; i + k + 1 <= n && ok; ++i)
      ok = b[i] <= half_up(b[i - 1], b[i + 1]);
    for (std::size_t i = 1; i + 1 <= k && ok; ++i)
      ok = a[i] <= half_up(a[i - 1], a[i + 1]);
    if (ok) return true;
  }
  return false;
}

}  // namespace behrend
