#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

namespace behrend {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

Int gcd(const Int& a, const Int& b);
Int abs(const Int& a);

// floor and ceiling of n/d for d > 0
Int floor_div(const Int& n, const Int& d);
Int ceil_div(const Int& n, const Int& d);

std::string to_string(const Int& v);
std::string to_string(const Rational& v);

// Converts a value that must be enumerated (box widths, diagram levels) to a
// machine index; throws DomainError if it does not fit.
std::size_t to_index(const Int& v, std::string_view what);

Int binomial(const Int& n, unsigned k);

}  // namespace behrend
