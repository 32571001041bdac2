#include "behrend/towers.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "behrend/errors.hpp"

namespace behrend {

// ---------------------------------------------------------------------------
// polynomials

void trim(Polynomial& g) {
  while (!g.empty() && g.back() == 0) g.pop_back();
}

Polynomial truncate(const Polynomial& g, std::size_t degree_bound) {
  Polynomial h(g.begin(), g.begin() + std::min(g.size(), degree_bound));
  trim(h);
  return h;
}

namespace {

// truncate with a bound that may exceed any machine index
Polynomial truncate_below(const Polynomial& g, const Int& bound) {
  if (bound >= Int(g.size())) return g;
  return truncate(g, bound.convert_to<std::size_t>());
}

}  // namespace

std::optional<std::size_t> order(const Polynomial& g) {
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g[k] != 0) return k;
  return std::nullopt;
}

std::string polynomial_string(const Polynomial& g, char var) {
  std::string s;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] == 0) continue;
    Rational c = g[k];
    bool negative = c < 0;
    if (negative) c = -c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    std::string mono;
    if (k > 0) {
      mono = std::string(1, var);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (k == 0) {
      s += to_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += to_string(c) + "*" + mono;
    }
  }
  return s.empty() ? "0" : s;
}

namespace {

Polynomial multiply(const Polynomial& p, const Polynomial& q, std::size_t degree_bound) {
  Polynomial r(std::min(degree_bound, p.size() + q.size()), Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size() && i + j < r.size(); ++j) r[i + j] += p[i] * q[j];
  }
  trim(r);
  return r;
}

struct Curve {
  Branch branch;
  Polynomial g;  // degrees below the precision
  friend bool operator==(const Curve&, const Curve&) = default;
};

// Normal form of the curve (branch, g) modulo m^precision. A y-branch curve
// y + g(x) whose tangent line is not x = 0 is rewritten as x + h(y) by
// inverting the series; the ideals (y + g(x)) + m^k and (x + h(y)) + m^k agree.
Curve canonical(Branch branch, const Polynomial& g, std::size_t precision) {
  if (branch == Branch::X || g.size() < 2 || g[1] == 0) return {branch, truncate(g, precision)};
  // solve y + g(x) = 0 for x = phi(y) by fixed point iteration; each round
  // fixes one more coefficient
  const Rational b = g[1];
  Polynomial phi;
  for (std::size_t round = 0; round < precision; ++round) {
    Polynomial next(std::max<std::size_t>(2, precision), Rational(0));
    next[1] = 1;
    Polynomial power = phi;
    for (std::size_t j = 2; j < g.size() && j < precision; ++j) {
      power = multiply(power, phi, precision);
      for (std::size_t k = 0; k < power.size(); ++k) next[k] += g[j] * power[k];
    }
    for (auto& c : next) c = -c / b;
    next = truncate(next, precision);
    if (next == phi) break;
    phi = std::move(next);
  }
  for (auto& c : phi) c = -c;
  return {Branch::X, phi};
}

bool key_less(const Polynomial& p, const Polynomial& q) {
  return std::lexicographical_compare(p.begin(), p.end(), q.begin(), q.end());
}

struct NodeKey {
  std::size_t level;
  Branch branch;
  Polynomial key;
  bool operator<(const NodeKey& o) const {
    if (level != o.level) return level < o.level;
    if (branch != o.branch) return branch < o.branch;
    return key_less(key, o.key);
  }
};

NodeKey node_key(const Curve& c, std::size_t level) {
  if (level == 1) return {1, Branch::X, {}};
  return {level, c.branch, truncate(c.g, level)};
}

void validate_tangent(const Polynomial& g) {
  if (!g.empty() && g[0] != 0)
    throw TowerError(TowerError::Kind::ConstantTangent, "tangent g must vanish at the origin");
}

void require_complete(const TowerProduct& ts, const char* what) {
  if (!ts.is_complete())
    throw UnsupportedError(std::string(what) +
                           " needs complete towers; use the non-complete reduction instead");
}

}  // namespace

// ---------------------------------------------------------------------------
// single towers

bool Tower::is_complete() const {
  for (std::size_t k = 0; k < exponents.size(); ++k)
    if (exponents[k] != Int(k + 1)) return false;
  return true;
}

Tower make_tower(Branch branch, Polynomial tangent, std::vector<Int> exponents) {
  if (exponents.empty())
    throw TowerError(TowerError::Kind::EmptyExponents, "a tower needs at least one exponent");
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] <= 0)
      throw TowerError(TowerError::Kind::NonPositiveExponent, "tower exponents must be positive");
    if (k > 0 && exponents[k] <= exponents[k - 1])
      throw TowerError(TowerError::Kind::NotIncreasing,
                       "tower exponents must be strictly increasing");
  }
  trim(tangent);
  validate_tangent(tangent);
  if (!tangent.empty() && Int(tangent.size() - 1) >= exponents.back())
    throw TowerError(TowerError::Kind::TangentDegree,
                     "deg g = " + std::to_string(tangent.size() - 1) +
                         " must be below the height " + to_string(exponents.back()));
  return Tower{branch, std::move(tangent), std::move(exponents)};
}

Tower complete_tower(Branch branch, Polynomial tangent, const Int& height) {
  std::vector<Int> exps;
  for (Int k = 1; k <= height; ++k) exps.push_back(k);
  return make_tower(branch, std::move(tangent), std::move(exps));
}

MonomialIdeal tower_ideal(const Tower& T) {
  if (!T.is_monomial())
    throw UnsupportedError("tower_ideal needs a monomial tower; " + to_string(T) +
                           " has the same invariants as its monomial model");
  const Int s = T.size();
  std::vector<Exponent> gens;
  Int partial = 0;
  gens.push_back({s, 0});
  for (std::size_t k = 0; k < T.exponents.size(); ++k) {
    partial += T.exponents[k];
    gens.push_back({s - Int(k + 1), partial});
  }
  if (T.branch == Branch::Y)
    for (auto& g : gens) std::swap(g.a, g.b);
  return MonomialIdeal(std::move(gens));
}

Int tower_length(const Tower& T) {
  Int total = 0, partial = 0;
  for (const auto& i : T.exponents) {
    partial += i;
    total += partial;
  }
  return total;
}

Int tower_nu(const Tower& T) {
  Int nu = tower_length(T);
  const std::size_t s = T.size();
  for (std::size_t j = 0; j + 1 < s; ++j) nu += T.exponents[j] * Int(s - 1 - j);
  return nu;
}

Int shared_levels(const Tower& K1, const Tower& K2) {
  const Int m = std::min(K1.height(), K2.height());
  const std::size_t precision = to_index(m, "tower height");
  Curve c1 = canonical(K1.branch, K1.tangent, precision);
  Curve c2 = canonical(K2.branch, K2.tangent, precision);
  if (c1.branch != c2.branch) return 1;
  for (std::size_t j = 1; j < precision; ++j) {
    Rational a = j < c1.g.size() ? c1.g[j] : Rational(0);
    Rational b = j < c2.g.size() ? c2.g[j] : Rational(0);
    if (a != b) return Int(j);
  }
  return m;
}

Int two_tower_nu(const Tower& K1, const Tower& K2) {
  if (!K1.is_complete() || !K2.is_complete())
    throw UnsupportedError("two_tower_nu needs complete towers; use noncomplete_product_nu");
  const Int d = shared_levels(K1, K2);
  const Int h1 = K1.height(), h2 = K2.height();
  // equal chains give the same ideal twice
  if (d == h1 && d == h2) return 2 * tower_nu(K1);
  // Level-j factors of one tower meet the other chain at level min(j, d);
  // summed over the private nodes of the other tower.
  Int extra = d * (2 * h1 * h2 - d * (h1 + h2)) - d * (d - 1) * (h1 + h2 - 2 * d) / 2;
  return tower_nu(K1) + tower_nu(K2) + extra;
}

Int two_tower_length(const Tower& K1, const Tower& K2) {
  if (!K1.is_complete() || !K2.is_complete())
    throw UnsupportedError("two_tower_length needs complete towers");
  if (shared_levels(K1, K2) != 1)
    throw UnsupportedError("two_tower_length needs towers with distinct tangent lines");
  return tower_length(K1) + tower_length(K2) + K1.height() * K2.height();
}

// ---------------------------------------------------------------------------
// products

bool TowerProduct::is_complete() const {
  return std::all_of(towers.begin(), towers.end(), [](const Tower& t) { return t.is_complete(); });
}

bool TowerProduct::is_monomial() const {
  return std::all_of(towers.begin(), towers.end(), [](const Tower& t) { return t.is_monomial(); });
}

TowerProduct make_tower_product(std::vector<Tower> towers) {
  if (towers.empty()) throw DomainError("a tower product needs at least one tower");
  TowerProduct ts;
  for (auto& t : towers) {
    auto same = std::find_if(ts.towers.begin(), ts.towers.end(), [&](const Tower& u) {
      return u.branch == t.branch && u.tangent == t.tangent;
    });
    if (same == ts.towers.end()) {
      ts.towers.push_back(std::move(t));
      continue;
    }
    std::vector<Int> merged;
    std::set_union(same->exponents.begin(), same->exponents.end(), t.exponents.begin(),
                   t.exponents.end(), std::back_inserter(merged));
    if (merged.size() != same->exponents.size() + t.exponents.size())
      throw UnsupportedError("towers " + to_string(*same) + " and " + to_string(t) +
                             " repeat a factor; write repeated factors as a power");
    same->exponents = std::move(merged);
  }
  return ts;
}

MonomialIdeal expand(const TowerProduct& ts) {
  MonomialIdeal I = MonomialIdeal::unit();
  for (const auto& t : ts.towers) I = product(I, tower_ideal(t));
  return I;
}

TowerClasses equivalence_classes(const TowerProduct& ts, const Int& r) {
  require_complete(ts, "equivalence_classes");
  Int h = 0;
  for (const auto& t : ts.towers) h = std::max(h, t.height());
  if (r < 1 || r > h) throw DomainError("level r must lie between 1 and the largest height");
  const std::size_t level = to_index(r, "level");

  TowerClasses out;
  std::map<NodeKey, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < ts.towers.size(); ++i) {
    const Tower& t = ts.towers[i];
    if (t.height() < r) {
      out.excess.push_back(i);
      continue;
    }
    classes[node_key(canonical(t.branch, t.tangent, level), level)].push_back(i);
  }
  for (auto& [key, members] : classes) out.classes.push_back(std::move(members));

  // Pairwise check of the relation against the partition: two towers are
  // related when they agree modulo m^r after putting both in normal form.
  auto related = [&](const Tower& s, const Tower& t) {
    if (level == 1) return true;
    return canonical(s.branch, s.tangent, level) == canonical(t.branch, t.tangent, level);
  };
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    for (std::size_t d = 0; d < out.classes.size(); ++d) {
      for (auto i : out.classes[c]) {
        for (auto j : out.classes[d]) {
          if (related(ts.towers[i], ts.towers[j]) != (c == d))
            throw DomainError("tangent classes at level " + to_string(r) + " are not transitive");
        }
      }
    }
  }
  return out;
}

std::vector<TowerFactor> factors_of(const TowerProduct& ts) {
  std::vector<TowerFactor> out;
  for (std::size_t i = 0; i < ts.towers.size(); ++i) {
    const Tower& t = ts.towers[i];
    for (const auto& k : t.exponents) out.push_back({t.branch, t.tangent, k, 1, i});
  }
  return out;
}

MonomialIdeal expand(const std::vector<TowerFactor>& factors) {
  MonomialIdeal I = MonomialIdeal::unit();
  for (const auto& f : factors) {
    if (!truncate_below(f.tangent, f.exponent).empty()) throw UnsupportedError("only monomial factors expand to a monomial ideal");
    MonomialIdeal J = f.branch == Branch::X ? MonomialIdeal::pure_powers(1, f.exponent)
                                            : MonomialIdeal::pure_powers(f.exponent, 1);
    I = product(I, power(J, f.count));
  }
  return I;
}

// ---------------------------------------------------------------------------
// Dynkin diagrams

std::vector<std::pair<std::size_t, std::size_t>> DynkinDiagram::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].parent) out.emplace_back(*nodes[i].parent, i);
  return out;
}

bool DynkinDiagram::is_ancestor(std::size_t a, std::size_t b) const {
  while (nodes[b].level > nodes[a].level) b = *nodes[b].parent;
  return a == b;
}

std::size_t DynkinDiagram::meet(std::size_t a, std::size_t b) const {
  while (nodes[a].level > nodes[b].level) a = *nodes[a].parent;
  while (nodes[b].level > nodes[a].level) b = *nodes[b].parent;
  while (a != b) {
    a = *nodes[a].parent;
    b = *nodes[b].parent;
  }
  return a;
}

std::size_t DynkinDiagram::node_at(Branch branch, const Polynomial& tangent,
                                   std::size_t level) const {
  NodeKey want = node_key(canonical(branch, tangent, level), level);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (n.level == want.level && (level == 1 || (n.branch == want.branch && n.key == want.key)))
      return i;
  }
  throw DomainError("no node of the diagram at level " + std::to_string(level));
}

Int DynkinDiagram::nu() const {
  Int total = 0;
  for (const auto& n : nodes)
    if (n.surviving) total += n.multiplicity;
  return total;
}

DynkinDiagram build_dynkin(std::vector<TowerFactor> factors) {
  if (factors.empty()) throw DomainError("a tower product needs at least one factor");
  DynkinDiagram D;
  std::map<NodeKey, std::size_t> index;
  std::vector<NodeKey> homes;
  for (auto& f : factors) {
    trim(f.tangent);
    validate_tangent(f.tangent);
    if (f.exponent < 1) throw DomainError("factor exponents must be positive");
    if (f.count < 1) throw DomainError("factor multiplicities must be positive");
    const std::size_t k = to_index(f.exponent, "factor exponent");
    Curve c = canonical(f.branch, f.tangent, k);
    for (std::size_t r = 1; r <= k; ++r) index.emplace(node_key(c, r), 0);
    homes.push_back(node_key(c, k));
  }
  // map order is (level, branch, key); the root comes first
  for (auto& [key, id] : index) {
    id = D.nodes.size();
    DynkinNode n;
    n.level = key.level;
    n.branch = key.branch;
    n.key = key.key;
    if (key.level > 1) {
      NodeKey up{key.level - 1, key.branch, truncate(key.key, key.level - 1)};
      if (up.level == 1) up = {1, Branch::X, {}};
      n.parent = index.at(up);
      D.nodes[*n.parent].children.push_back(id);
    }
    D.nodes.push_back(std::move(n));
  }
  for (auto& n : D.nodes) {
    long degree = static_cast<long>(n.children.size()) + (n.parent ? 1 : 0);
    n.self_intersection = n.level == 1 ? -degree - 1 : -degree;
  }
  D.factors = std::move(factors);
  for (std::size_t i = 0; i < homes.size(); ++i) {
    std::size_t node = index.at(homes[i]);
    D.home.push_back(node);
    D.nodes[node].factors.push_back(i);
    D.nodes[node].surviving = true;
  }
  for (std::size_t v = 0; v < D.nodes.size(); ++v) {
    Int m = 0;
    for (std::size_t i = 0; i < D.factors.size(); ++i) m += D.factors[i].count * contribution(D, i, v);
    D.nodes[v].multiplicity = m;
  }
  return D;
}

DynkinDiagram build_dynkin(const TowerProduct& ts) {
  require_complete(ts, "build_dynkin");
  return build_dynkin(factors_of(ts));
}

Int contribution(const DynkinDiagram& D, std::size_t factor, std::size_t node) {
  if (factor >= D.factors.size() || node >= D.nodes.size())
    throw DomainError("factor or node is not part of the diagram");
  // the level of the deepest common ancestor of the node and the factor's home
  return Int(D.nodes[D.meet(node, D.home[factor])].level);
}

ProductSummary factors_nu(std::vector<TowerFactor> factors) {
  DynkinDiagram D = build_dynkin(std::move(factors));
  Int nu = D.nu();
  return {nu, std::move(D)};
}

ProductSummary noncomplete_product_nu(const TowerProduct& ts) {
  return factors_nu(factors_of(ts));
}

ProductSummary product_nu(const TowerProduct& ts) {
  require_complete(ts, "product_nu");
  ProductSummary s = factors_nu(factors_of(ts));
  Int closed = -1;
  if (ts.towers.size() == 1) closed = tower_nu(ts.towers[0]);
  if (ts.towers.size() == 2 && shared_levels(ts.towers[0], ts.towers[1]) <
      std::max(ts.towers[0].height(), ts.towers[1].height()))
    closed = two_tower_nu(ts.towers[0], ts.towers[1]);
  if (closed >= 0 && closed != s.nu)
    throw std::logic_error("diagram value " + to_string(s.nu) + " disagrees with closed form " +
                           to_string(closed) + " for " + to_string(ts));
  return s;
}

std::pair<Int, Int> tower_times_m_power(const Tower& T, const Int& n) {
  if (!T.is_monomial()) throw UnsupportedError("tower_times_m_power needs a monomial tower");
  if (T.exponents.front() == 1) throw DomainError("tower_times_m_power needs i_1 > 1");
  if (n < 0) throw DomainError("negative power of m");
  const Int s = T.size();
  if (n == 0) return {tower_length(T), tower_nu(T)};
  return {tower_length(T) + (n * (n + 1) + 2 * n * s) / 2, tower_nu(T) + s * n + n + s};
}

std::string factor_label(Branch branch, const Polynomial& tangent, const Int& k) {
  if (k == 1) return "m";
  const char var = branch == Branch::X ? 'x' : 'y';
  const char other = branch == Branch::X ? 'y' : 'x';
  Polynomial g = truncate_below(tangent, k);
  if (g.empty()) {
    std::string p = std::string(1, other) + (k == 1 ? "" : "^" + to_string(k));
    return branch == Branch::X ? "(x, " + p + ")" : "(" + p + ", y)";
  }
  std::string g_text = polynomial_string(g, other);
  std::string sum = g_text[0] == '-' ? std::string(1, var) + " - " + g_text.substr(1)
                                     : std::string(1, var) + " + " + g_text;
  return "(" + sum + ") + m^" + to_string(k);
}

std::string to_string(const Tower& T) {
  std::ostringstream out;
  out << "tower(" << (T.branch == Branch::X ? 'x' : 'y') << "; g = "
      << polynomial_string(T.tangent, T.branch == Branch::X ? 'y' : 'x') << "; exps = [";
  for (std::size_t k = 0; k < T.exponents.size(); ++k) out << (k ? ", " : "") << T.exponents[k];
  out << "])";
  return out.str();
}

std::string to_string(const TowerProduct& ts) {
  std::string s;
  for (const auto& t : ts.towers) s += (s.empty() ? "" : " * ") + to_string(t);
  return s;
}

}  // namespace behrend
