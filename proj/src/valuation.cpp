#include <map>
#include <optional>

#include "behrend/errors.hpp"
#include "behrend/oracle.hpp"

namespace behrend {

namespace {

// coefficient of x^i y^j keyed by (i, j)
using Bivariate = std::map<std::pair<std::size_t, std::size_t>, Rational>;

Polynomial times(const Polynomial& p, const Polynomial& q) {
  if (p.empty() || q.empty()) return {};
  Polynomial r(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

// A divisorial valuation: in the coordinates u = (branch variable) + g(other),
// other, it is monomial with v(u) = weight and v(other) = 1.
struct Valuation {
  Branch branch;
  Polynomial g;
  std::size_t weight;

  Int operator()(Bivariate F) const {
    if (branch == Branch::Y) {
      Bivariate swapped;
      for (auto& [e, c] : F) swapped[{e.second, e.first}] = c;
      F = std::move(swapped);
    }
    // substitute x = u - g(y)
    Polynomial minus_g = g;
    for (auto& c : minus_g) c = -c;
    std::vector<Polynomial> powers{Polynomial{Rational(1)}};
    Bivariate G;  // coefficient of u^p y^q keyed by (p, q)
    for (const auto& [e, c] : F) {
      const auto [a, b] = e;
      while (powers.size() <= a) powers.push_back(times(powers.back(), minus_g));
      Int binom = 1;
      for (std::size_t p = 0; p <= a; ++p) {
        // C(a, p) u^p (-g)^{a-p} y^b
        const Polynomial& h = powers[a - p];
        for (std::size_t q = 0; q < h.size(); ++q)
          if (h[q] != 0) G[{p, q + b}] += c * Rational(binom) * h[q];
        binom = binom * (a - p) / (p + 1);
      }
    }
    std::optional<Int> best;
    for (const auto& [e, c] : G) {
      if (c == 0) continue;
      Int v = Int(e.first) * weight + e.second;
      if (!best || v < *best) best = v;
    }
    if (!best) throw DomainError("valuation of the zero polynomial");
    return *best;
  }
};

// The curve equation (branch variable) + g(other), in x, y.
Bivariate curve_equation(Branch branch, const Polynomial& g) {
  Bivariate F;
  if (branch == Branch::X) {
    F[{1, 0}] += 1;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j] != 0) F[{0, j}] += g[j];
  } else {
    F[{0, 1}] += 1;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j] != 0) F[{j, 0}] += g[j];
  }
  return F;
}

Int factor_value(const Valuation& v, const TowerFactor& f, std::size_t k) {
  Int best = v(curve_equation(f.branch, truncate(f.tangent, k)));
  for (std::size_t a = 0; a <= k; ++a) {
    Bivariate mono;
    mono[{a, k - a}] = 1;
    Int w = v(mono);
    if (w < best) best = w;
  }
  return best;
}

}  // namespace

Int valuation_nu(const std::vector<TowerFactor>& factors) {
  if (factors.empty()) throw DomainError("a tower product needs at least one factor");
  std::vector<Valuation> rees;
  for (const auto& f : factors) {
    const std::size_t k = to_index(f.exponent, "factor exponent");
    if (k == 0) throw DomainError("factor exponents must be positive");
    Polynomial g = truncate(f.tangent, k);
    Bivariate curve = curve_equation(f.branch, g);
    bool seen = false;
    for (std::size_t i = 0; i < rees.size() && !seen; ++i) {
      // same divisor iff the two curves share the first k infinitely near points
      seen = rees[i].weight == k && rees[i](curve) >= Int(k);
    }
    if (!seen) rees.push_back({f.branch, g, k});
  }
  Int nu = 0;
  for (const auto& v : rees) {
    for (const auto& f : factors) {
      nu += f.count * factor_value(v, f, to_index(f.exponent, "factor exponent"));
    }
  }
  return nu;
}

}  // namespace behrend
