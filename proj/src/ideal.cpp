#include "behrend/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "behrend/errors.hpp"

namespace behrend {

MonomialIdeal::MonomialIdeal(std::vector<Exponent> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty()) throw DomainError("an ideal needs at least one generator");
  for (const auto& g : gens_) {
    if (g.a < 0 || g.b < 0) throw DomainError("exponents must be nonnegative");
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  // sorted by a ascending: minimal iff b strictly decreases
  minimal_ = true;
  for (std::size_t i = 1; i < gens_.size(); ++i) {
    if (gens_[i].b >= gens_[i - 1].b) {
      minimal_ = false;
      break;
    }
  }
}

MonomialIdeal MonomialIdeal::unit() { return MonomialIdeal({{0, 0}}); }

MonomialIdeal MonomialIdeal::maximal() { return MonomialIdeal({{1, 0}, {0, 1}}); }

MonomialIdeal MonomialIdeal::pure_powers(const Int& a, const Int& b) {
  return MonomialIdeal({{a, 0}, {0, b}});
}

bool MonomialIdeal::is_unit() const { return contains({0, 0}); }

bool MonomialIdeal::has_finite_colength() const {
  bool xs = false, ys = false;
  for (const auto& g : gens_) {
    if (g.b == 0) xs = true;
    if (g.a == 0) ys = true;
  }
  return xs && ys;
}

bool MonomialIdeal::contains(const Exponent& e) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Exponent& g) { return g.divides(e); });
}

Int MonomialIdeal::x_power() const {
  Int best = -1;
  for (const auto& g : gens_)
    if (g.b == 0 && (best < 0 || g.a < best)) best = g.a;
  return best;
}

Int MonomialIdeal::y_power() const {
  Int best = -1;
  for (const auto& g : gens_)
    if (g.a == 0 && (best < 0 || g.b < best)) best = g.b;
  return best;
}

Int FerrersDiagram::size() const {
  Int s = 0;
  for (const auto& h : column_heights) s += h;
  return s;
}

MonomialIdeal minimal_generators(std::vector<Exponent> gens) {
  if (gens.empty()) throw DomainError("an ideal needs at least one generator");
  std::sort(gens.begin(), gens.end());
  std::vector<Exponent> kept;
  for (auto& g : gens) {
    // the first generator of each a-value has the smallest b
    if (kept.empty() || g.b < kept.back().b) kept.push_back(std::move(g));
  }
  return MonomialIdeal(std::move(kept));
}

MonomialIdeal minimal_generators(const MonomialIdeal& I) {
  if (I.is_minimal()) return I;
  return minimal_generators(I.generators());
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  const auto P = minimal_generators(I).generators();
  const auto Q = minimal_generators(J).generators();
  std::vector<Exponent> sums;
  sums.reserve(P.size() * Q.size());
  for (const auto& p : P)
    for (const auto& q : Q) sums.push_back(p + q);
  return minimal_generators(std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& I, const Int& d) {
  if (d < 0) throw DomainError("negative power of an ideal");
  MonomialIdeal result = MonomialIdeal::unit();
  MonomialIdeal base = minimal_generators(I);
  Int e = d;
  while (e > 0) {
    if (e % 2 == 1) result = product(result, base);
    e /= 2;
    if (e > 0) base = product(base, base);
  }
  return result;
}

bool contains(const MonomialIdeal& I, const Exponent& e) { return I.contains(e); }

void require_finite_colength(const MonomialIdeal& I) {
  if (!I.has_finite_colength())
    throw DomainError("ideal " + to_string(I) +
                      " does not have finite colength (needs pure powers of x and y)");
}

void require_fat_point(const MonomialIdeal& I) {
  require_finite_colength(I);
  if (I.is_unit()) throw DomainError("the unit ideal defines the empty scheme");
}

Int colength(const MonomialIdeal& I) {
  require_finite_colength(I);
  const auto g = minimal_generators(I).generators();
  // g is sorted by a ascending with b strictly decreasing; the columns
  // a_i <= k < a_{i+1} all have height b_i
  Int total = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) total += (g[i + 1].a - g[i].a) * g[i].b;
  return total;
}

FerrersDiagram ferrers(const MonomialIdeal& I) {
  require_finite_colength(I);
  const auto g = minimal_generators(I).generators();
  FerrersDiagram F;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    std::size_t width = to_index(g[i + 1].a - g[i].a, "Ferrers diagram width");
    for (std::size_t k = 0; k < width; ++k) F.column_heights.push_back(g[i].b);
  }
  return F;
}

MonomialIdeal ideal_of(const FerrersDiagram& F) {
  std::vector<Exponent> gens;
  Int previous = -1;
  for (std::size_t k = 0; k < F.column_heights.size(); ++k) {
    const Int& h = F.column_heights[k];
    if (h < 0 || (previous >= 0 && h > previous))
      throw DomainError("Ferrers column heights must be nonnegative and weakly decreasing");
    if (previous < 0 || h < previous) gens.push_back({Int(k), h});
    previous = h;
  }
  if (previous != 0) gens.push_back({Int(F.column_heights.size()), 0});
  return MonomialIdeal(std::move(gens));
}

std::string monomial_string(const Exponent& e) {
  std::ostringstream out;
  auto factor = [&](char var, const Int& k) {
    if (k == 0) return;
    if (out.tellp() > 0) out << ' ';
    out << var;
    if (k != 1) out << '^' << k;
  };
  factor('x', e.a);
  factor('y', e.b);
  if (out.tellp() == 0) return "1";
  return out.str();
}

std::string to_string(const MonomialIdeal& I) {
  std::string s = "(";
  const auto& g = I.generators();
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    if (it != g.rbegin()) s += ", ";
    s += monomial_string(*it);
  }
  return s + ")";
}

}  // namespace behrend
