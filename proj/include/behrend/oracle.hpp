#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "behrend/arith.hpp"
#include "behrend/ideal.hpp"
#include "behrend/towers.hpp"

namespace behrend {

enum class CheckStatus { Pass, Fail, Inconclusive };

struct CheckResult {
  std::string name;
  std::string instance;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Pass;
};

const char* status_name(CheckStatus s);

struct Bounds {
  std::string preset = "default";
  unsigned monomial_products = 500;   // random monomial tower products
  unsigned valuation_products = 200;  // random non-monomial tower products
  unsigned power_rule = 200;
  unsigned closure = 200;
  unsigned pick = 200;
  unsigned random_towers = 200;
  unsigned p_max = 8;
  unsigned complete_height = 12;
  unsigned cross_height = 8;
  unsigned pair_height = 8;
  unsigned hope = 10;
  unsigned nab = 12;
  unsigned staircase_box = 10;  // exhaustive normality sweep
};

// "quick", "default" or "full"; throws DomainError otherwise.
Bounds bounds_preset(std::string_view name);

// Deterministic across platforms: std::mt19937_64 with a plain modular draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + engine_() % (hi - lo + 1);
  }
  bool coin() { return engine_() & 1; }

 private:
  std::mt19937_64 engine_;
};

MonomialIdeal random_ideal(Rng& rng, unsigned box);
Tower random_monomial_tower(Rng& rng, unsigned max_exponent);
Tower random_tower(Rng& rng, unsigned max_exponent);

// nu of a product of factors (branch, g) + m^k as the sum, over the distinct
// divisorial valuations v_{C,k} attached to the factors, of v(product). Each
// v_{C,k} is monomial in curve coordinates (x + g(y), y) with weights (k, 1).
Int valuation_nu(const std::vector<TowerFactor>& factors);

std::vector<CheckResult> check_length_forms(const Bounds& bounds, std::uint64_t seed);
std::vector<CheckResult> check_nu_cross(const Bounds& bounds, std::uint64_t seed);
std::vector<CheckResult> check_closure(const Bounds& bounds, std::uint64_t seed, unsigned p_max);

struct VerifyReport {
  std::uint64_t seed = 0;
  Bounds bounds;
  std::vector<CheckResult> results;  // sorted by (name, instance)
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
};

VerifyReport verify_all(const Bounds& bounds, std::uint64_t seed);

}  // namespace behrend
