#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace forge {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

bool is_prime(const Int& n);

// Smallest prime p with lo < p < hi. The open interval and the
// smallest-prime rule are both part of the contract; throws ParamError
// when the interval contains no prime.
Int find_prime_in_range(const Int& lo, const Int& hi);

} // namespace forge
