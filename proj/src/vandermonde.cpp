#include "forge/vandermonde.hpp"

#include "forge/caps.hpp"

namespace forge {

IntMatrix reduced_vandermonde(const Int& a, std::size_t b) {
    require(b >= 1, "reduced_vandermonde: b must be >= 1");
    require(a > Int(b), "reduced_vandermonde: need a > b");
    require(is_prime(a), "reduced_vandermonde: a must be prime");
    require_cap((a - 1) * b <= Int(Caps::current().matrix_entries),
                "reduced_vandermonde: matrix exceeds entry cap");
    const std::size_t rows = static_cast<std::size_t>(a - 1);
    IntMatrix v(rows, b);
    for (std::size_t i = 1; i <= rows; ++i) {
        Int pw = 1;
        for (std::size_t j = 1; j <= b; ++j) {
            v.at(i - 1, j - 1) = pw;
            pw = (pw * i) % a;
        }
    }
    return v;
}

} // namespace forge
