#include "behrend/oracle.hpp"

#include <algorithm>
#include <functional>

#include "behrend/errors.hpp"
#include "behrend/newton.hpp"
#include "behrend/normal_factor.hpp"
#include "behrend/nu.hpp"

namespace behrend {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

Bounds bounds_preset(std::string_view name) {
  Bounds b;
  if (name == "default") return b;
  if (name == "quick") {
    b.preset = "quick";
    b.monomial_products = 60;
    b.valuation_products = 30;
    b.power_rule = 30;
    b.closure = 30;
    b.pick = 30;
    b.random_towers = 30;
    b.complete_height = 6;
    b.cross_height = 4;
    b.pair_height = 4;
    b.hope = 5;
    b.nab = 6;
    b.staircase_box = 5;
    return b;
  }
  if (name == "full") {
    b.preset = "full";
    b.monomial_products = 2000;
    b.valuation_products = 600;
    b.power_rule = 600;
    b.closure = 600;
    b.pick = 600;
    b.random_towers = 600;
    return b;
  }
  throw DomainError("unknown bounds preset '" + std::string(name) + "' (quick, default, full)");
}

MonomialIdeal random_ideal(Rng& rng, unsigned box) {
  std::vector<Exponent> gens;
  gens.push_back({Int(rng.uniform(1, box)), 0});
  gens.push_back({0, Int(rng.uniform(1, box))});
  const auto extra = rng.uniform(0, 4);
  for (std::uint64_t i = 0; i < extra; ++i)
    gens.push_back({Int(rng.uniform(1, box)), Int(rng.uniform(1, box))});
  return minimal_generators(std::move(gens));
}

namespace {

std::vector<Int> random_exponents(Rng& rng, unsigned max_exponent) {
  std::vector<Int> exps;
  for (unsigned k = 1; k <= max_exponent; ++k)
    if (rng.uniform(0, 2) == 0) exps.push_back(k);
  if (exps.empty()) exps.push_back(Int(rng.uniform(1, max_exponent)));
  return exps;
}

}  // namespace

Tower random_monomial_tower(Rng& rng, unsigned max_exponent) {
  Branch b = rng.coin() ? Branch::X : Branch::Y;
  return make_tower(b, {}, random_exponents(rng, max_exponent));
}

Tower random_tower(Rng& rng, unsigned max_exponent) {
  Branch b = rng.coin() ? Branch::X : Branch::Y;
  std::vector<Int> exps = random_exponents(rng, max_exponent);
  const std::size_t h = exps.back().convert_to<std::size_t>();
  Polynomial g(std::min<std::size_t>(h, 4), Rational(0));
  for (std::size_t k = 1; k < g.size(); ++k) {
    // small coefficients so that distinct towers often share a few levels
    auto c = static_cast<long>(rng.uniform(0, 4)) - 2;
    if (rng.uniform(0, 3) == 0) c = 0;
    g[k] = Rational(c, k == 2 && rng.coin() ? 2 : 1);
  }
  return make_tower(b, std::move(g), std::move(exps));
}

namespace {

struct Recorder {
  std::vector<CheckResult>& out;

  void equal(const std::string& name, const std::string& instance, const Int& expected,
             const Int& actual) {
    out.push_back({name, instance, to_string(expected), to_string(actual),
                   expected == actual ? CheckStatus::Pass : CheckStatus::Fail});
  }
  void equal(const std::string& name, const std::string& instance, const std::string& expected,
             const std::string& actual) {
    out.push_back({name, instance, expected, actual,
                   expected == actual ? CheckStatus::Pass : CheckStatus::Fail});
  }
  // Runs a check and turns an unexpected exception into a failure.
  void guarded(const std::string& name, const std::string& instance,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out.push_back({name, instance, "no error", e.what(), CheckStatus::Fail});
    }
  }
};

std::string pair_text(const Int& a, const Int& b) {
  return "(" + to_string(a) + ", " + to_string(b) + ")";
}

bool subset(const MonomialIdeal& J, const MonomialIdeal& K) {
  const auto& g = J.generators();
  return std::all_of(g.begin(), g.end(), [&](const Exponent& e) { return K.contains(e); });
}

}  // namespace

std::vector<CheckResult> check_length_forms(const Bounds& bounds, std::uint64_t seed) {
  std::vector<CheckResult> out;
  Recorder rec{out};
  Rng rng(seed ^ 0x6c656e677468ULL);

  for (unsigned d = 1; d <= 20; ++d) {
    MonomialIdeal I = power(MonomialIdeal::maximal(), d);
    rec.equal("length.maximal_power", "m^" + std::to_string(d), Int(d) * (d + 1) / 2, colength(I));
  }
  for (unsigned s = 1; s <= bounds.complete_height; ++s) {
    for (Branch b : {Branch::X, Branch::Y}) {
      Tower K = complete_tower(b, {}, s);
      rec.equal("length.complete_tower", to_string(K), binomial(Int(s + 2), 3), tower_length(K));
      rec.equal("length.complete_tower_staircase", to_string(K), tower_length(K),
                colength(tower_ideal(K)));
    }
  }
  for (unsigned i = 0; i < bounds.random_towers; ++i) {
    Tower T = random_monomial_tower(rng, 7);
    rec.equal("length.tower_staircase", to_string(T), tower_length(T), colength(tower_ideal(T)));
  }
  for (unsigned hx = 1; hx <= bounds.cross_height; ++hx) {
    for (unsigned hy = 1; hy <= bounds.cross_height; ++hy) {
      Tower Kx = complete_tower(Branch::X, {}, hx), Ky = complete_tower(Branch::Y, {}, hy);
      std::string inst = to_string(Kx) + " * " + to_string(Ky);
      Int closed = two_tower_length(Kx, Ky);
      rec.equal("length.cross_pair", inst, closed,
                colength(product(tower_ideal(Kx), tower_ideal(Ky))));
      if (hx == hy) {
        Int h = hx;
        rec.equal("length.cross_pair_equal_heights", inst, h * (h + 1) * (h + 2) / 3 + h * h,
                  closed);
      }
    }
  }
  for (unsigned i = 0; i < bounds.random_towers / 4; ++i) {
    Tower T = random_monomial_tower(rng, 6);
    if (T.exponents.front() == 1) continue;
    Int n = rng.uniform(0, 4);
    MonomialIdeal I = product(tower_ideal(T), power(MonomialIdeal::maximal(), n));
    rec.equal("length.tower_times_m", to_string(T) + " * m^" + to_string(n),
              tower_times_m_power(T, n).first, colength(I));
  }
  for (unsigned i = 0; i < bounds.pick; ++i) {
    MonomialIdeal I = integral_closure(random_ideal(rng, 8));
    rec.guarded("length.pick", to_string(I),
                [&] { rec.equal("length.pick", to_string(I), colength(I), pick_length(I)); });
  }
  return out;
}

std::vector<CheckResult> check_nu_cross(const Bounds& bounds, std::uint64_t seed) {
  std::vector<CheckResult> out;
  Recorder rec{out};
  Rng rng(seed ^ 0x6e75ULL);

  for (unsigned i = 0; i < bounds.monomial_products; ++i) {
    std::vector<Tower> ts;
    const auto count = rng.uniform(1, 3);
    for (std::uint64_t k = 0; k < count; ++k) ts.push_back(random_monomial_tower(rng, 7));
    std::vector<TowerFactor> factors;
    std::string inst;
    for (std::size_t k = 0; k < ts.size(); ++k) {
      inst += (k ? " * " : "") + to_string(ts[k]);
      for (const auto& e : ts[k].exponents) factors.push_back({ts[k].branch, {}, e, 1, k});
    }
    rec.guarded("nu.dual_engine", inst, [&] {
      Int expected = nu_monomial(expand(factors)).nu;
      Int actual;
      try {
        actual = noncomplete_product_nu(make_tower_product(ts)).nu;
      } catch (const UnsupportedError&) {
        actual = factors_nu(factors).nu;  // repeated factors: raw factor path
      }
      rec.equal("nu.dual_engine", inst, expected, actual);
    });
  }

  for (unsigned i = 0; i < bounds.valuation_products; ++i) {
    std::vector<TowerFactor> factors;
    std::string inst;
    const auto count = rng.uniform(1, 3);
    for (std::uint64_t k = 0; k < count; ++k) {
      Tower T = random_tower(rng, 5);
      inst += (k ? " * " : "") + to_string(T);
      for (const auto& e : T.exponents) factors.push_back({T.branch, T.tangent, e, 1, k});
    }
    rec.guarded("nu.valuation_engine", inst, [&] {
      rec.equal("nu.valuation_engine", inst, valuation_nu(factors), factors_nu(factors).nu);
    });
  }

  for (unsigned i = 0; i < bounds.power_rule; ++i) {
    MonomialIdeal I = random_ideal(rng, 8);
    Int d = rng.uniform(2, 4);
    rec.equal("nu.power_rule", to_string(I) + "^" + to_string(d), nu_power_rule(I, d),
              nu_monomial(power(I, d)).nu);
  }

  for (unsigned h = 1; h <= bounds.hope; ++h) {
    for (unsigned k = 1; k <= bounds.hope; ++k) {
      MonomialIdeal I = product(MonomialIdeal::pure_powers(h, h), MonomialIdeal::pure_powers(k, k));
      rec.equal("nu.equal_degree_pair", pair_text(h, k), gcd(h, k) * (h + k), nu_monomial(I).nu);
    }
  }
  for (unsigned s = 1; s <= bounds.hope; ++s) {
    MonomialIdeal I = MonomialIdeal::unit();
    for (unsigned k = 1; k <= s; ++k) I = product(I, MonomialIdeal::pure_powers(k, k));
    rec.equal("nu.chain", "s = " + std::to_string(s), binomial(Int(s + 1), 2), nu_monomial(I).nu);
  }
  for (unsigned a = 1; a <= bounds.nab; ++a) {
    for (unsigned b = 1; b <= bounds.nab; ++b) {
      MonomialIdeal N = n_ab(a, b);
      BehrendReport r = nu_monomial(N);
      rec.equal("nu.normal_atom", "n" + pair_text(a, b), Int(a * b) / gcd(a, b), r.nu);
      rec.equal("length.normal_atom", "n" + pair_text(a, b),
                (Int(a * b) + a + b - gcd(a, b)) / 2, pick_length(N));
      rec.equal("nu.lci", pair_text(a, b), nu_lci(a, b),
                nu_monomial(MonomialIdeal::pure_powers(a, b)).nu);
    }
  }
  for (unsigned s = 1; s <= bounds.complete_height; ++s) {
    Tower K = complete_tower(Branch::X, {}, s);
    rec.equal("nu.complete_tower", to_string(K), Int(s) * (s + 1) * (2 * s + 1) / 6, tower_nu(K));
    rec.equal("nu.complete_tower_engine", to_string(K), tower_nu(K),
              product_nu(make_tower_product({K})).nu);
  }
  for (unsigned i = 0; i < bounds.random_towers; ++i) {
    Tower T = random_monomial_tower(rng, 7);
    Int min_sum = 0;
    for (const auto& p : T.exponents)
      for (const auto& q : T.exponents) min_sum += std::min(p, q);
    rec.equal("nu.tower_min_sum", to_string(T), min_sum, tower_nu(T));
    rec.equal("nu.tower_monomial", to_string(T), tower_nu(T), nu_monomial(tower_ideal(T)).nu);
  }
  for (unsigned i = 0; i < bounds.random_towers / 4; ++i) {
    Tower T = random_monomial_tower(rng, 6);
    if (T.exponents.front() == 1) continue;
    Int n = rng.uniform(0, 4);
    MonomialIdeal I = product(tower_ideal(T), power(MonomialIdeal::maximal(), n));
    rec.equal("nu.tower_times_m", to_string(T) + " * m^" + to_string(n),
              tower_times_m_power(T, n).second, nu_monomial(I).nu);
  }

  // two complete towers: every height pair, cross-branch and every shared depth
  for (unsigned h1 = 1; h1 <= bounds.pair_height; ++h1) {
    for (unsigned h2 = 1; h2 <= bounds.pair_height; ++h2) {
      std::vector<std::pair<Tower, Tower>> pairs;
      pairs.emplace_back(complete_tower(Branch::X, {}, h1), complete_tower(Branch::Y, {}, h2));
      for (unsigned d = 1; d <= std::min(h1, h2); ++d) {
        if (d == h1 && d == h2) continue;  // identical towers
        Polynomial g(d + 1, Rational(0));
        g[d] = 1;  // o(g - 0) = d, capped by the heights
        if (d < h2)
          pairs.emplace_back(complete_tower(Branch::X, {}, h1), complete_tower(Branch::X, g, h2));
        else
          pairs.emplace_back(complete_tower(Branch::X, g, h1), complete_tower(Branch::X, {}, h2));
      }
      for (const auto& [K1, K2] : pairs) {
        std::string inst = to_string(K1) + " * " + to_string(K2);
        rec.guarded("nu.two_tower_closed_form", inst, [&] {
          TowerProduct ts = make_tower_product({K1, K2});
          Int closed = two_tower_nu(K1, K2);
          rec.equal("nu.two_tower_closed_form", inst, closed, product_nu(ts).nu);
          rec.equal("nu.two_tower_valuation", inst, closed, valuation_nu(factors_of(ts)));
        });
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_closure(const Bounds& bounds, std::uint64_t seed, unsigned p_max) {
  std::vector<CheckResult> out;
  Recorder rec{out};
  Rng rng(seed ^ 0x636c6fULL);

  auto compare = [&](const MonomialIdeal& I, unsigned p) {
    MonomialIdeal closure = integral_closure(I);
    MonomialIdeal oracle = integral_closure_oracle(I, p);
    CheckStatus status = CheckStatus::Pass;
    if (!subset(oracle, closure)) {
      status = CheckStatus::Fail;
    } else if (!(oracle == closure)) {
      status = CheckStatus::Inconclusive;  // needs p beyond p_max
    }
    out.push_back({"closure.definitional", to_string(I) + " p_max=" + std::to_string(p),
                   to_string(closure), to_string(oracle), status});
  };

  compare(MonomialIdeal::pure_powers(2, 2), 4);
  compare(MonomialIdeal::pure_powers(2, 3), 4);
  compare(MonomialIdeal::pure_powers(5, 5), 4);
  for (unsigned i = 0; i < bounds.closure; ++i) compare(random_ideal(rng, 8), p_max);

  for (unsigned i = 0; i < bounds.closure / 2; ++i) {
    MonomialIdeal N = integral_closure(random_ideal(rng, 8));
    rec.equal("closure.normal_fixed", to_string(N), to_string(N), to_string(integral_closure(N)));
  }

  // every staircase inside the box; the conditions must hold whenever the
  // polygon test says normal
  const unsigned box = bounds.staircase_box;
  std::size_t normal_count = 0, checked = 0;
  std::vector<std::string> violations;
  std::vector<unsigned> heights;
  std::function<void(unsigned)> sweep = [&](unsigned cap) {
    if (heights.size() == box || (!heights.empty() && heights.back() == 0)) {
      FerrersDiagram F;
      for (unsigned h : heights) F.column_heights.push_back(h);
      MonomialIdeal I = ideal_of(F);
      if (I.is_unit()) return;
      ++checked;
      if (is_normal(I)) {
        ++normal_count;
        if (!satisfies_staircase_conditions(I)) violations.push_back(to_string(I));
      }
      return;
    }
    for (unsigned h = 0; h <= cap; ++h) {
      heights.push_back(h);
      sweep(h);
      heights.pop_back();
    }
  };
  sweep(box);
  out.push_back({"normal.staircase_conditions",
                 "all staircases with generators <= (" + std::to_string(box) + "," +
                     std::to_string(box) + ")",
                 "0 violations",
                 std::to_string(violations.size()) + " violations among " +
                     std::to_string(normal_count) + " normal of " + std::to_string(checked),
                 violations.empty() ? CheckStatus::Pass : CheckStatus::Fail});
  for (const auto& v : violations)
    out.push_back({"normal.staircase_conditions", v, "conditions hold", "violated",
                   CheckStatus::Fail});
  return out;
}

VerifyReport verify_all(const Bounds& bounds, std::uint64_t seed) {
  VerifyReport report;
  report.seed = seed;
  report.bounds = bounds;
  for (auto* part : {&check_length_forms, &check_nu_cross}) {
    auto rs = part(bounds, seed);
    report.results.insert(report.results.end(), rs.begin(), rs.end());
  }
  auto rs = check_closure(bounds, seed, bounds.p_max);
  report.results.insert(report.results.end(), rs.begin(), rs.end());
  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return std::tie(a.name, a.instance) < std::tie(b.name, b.instance);
                   });
  for (const auto& r : report.results) {
    switch (r.status) {
      case CheckStatus::Pass: ++report.passed; break;
      case CheckStatus::Fail: ++report.failed; break;
      case CheckStatus::Inconclusive: ++report.inconclusive; break;
    }
  }
  return report;
}

}  // namespace behrend
