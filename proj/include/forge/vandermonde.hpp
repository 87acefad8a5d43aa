#pragma once

#include "forge/int_matrix.hpp"

namespace forge {

// (a, b) reduced Vandermonde matrix: (a-1) x b with entry
// i^(j-1) mod a at 1-indexed (i, j). Requires a prime and a > b >= 1;
// every subset of at most b rows is linearly independent over Z.
IntMatrix reduced_vandermonde(const Int& a, std::size_t b);

} // namespace forge
