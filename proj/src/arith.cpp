#include "behrend/arith.hpp"

#include <limits>

#include "behrend/errors.hpp"

namespace behrend {

Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int floor_div(const Int& n, const Int& d) {
  Int q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) --q;
  return q;
}

Int ceil_div(const Int& n, const Int& d) {
  Int q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& v) {
  auto num = boost::multiprecision::numerator(v);
  auto den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::size_t to_index(const Int& v, std::string_view what) {
  if (v < 0 || v > Int(std::numeric_limits<std::size_t>::max() / 4)) {
    throw DomainError(std::string(what) + " " + v.str() + " is too large to enumerate");
  }
  return v.convert_to<std::size_t>();
}

Int binomial(const Int& n, unsigned k) {
  if (n < 0 || Int(k) > n) return 0;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace behrend
