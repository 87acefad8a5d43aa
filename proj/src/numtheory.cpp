#include "forge/numtheory.hpp"

#include "forge/caps.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>

namespace forge {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs (standard base set).
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return is_prime_u64(static_cast<std::uint64_t>(n));
    // Beyond 64 bits: 64 rounds of Miller-Rabin. Error probability is
    // below 4^-64, far past anything this artifact instantiates.
    return boost::multiprecision::miller_rabin_test(n, 64);
}

Int find_prime_in_range(const Int& lo, const Int& hi) {
    require(lo >= 1, "find_prime_in_range: lo must be >= 1");
    require(hi > lo, "find_prime_in_range: need hi > lo");
    for (Int p = lo + 1; p < hi; ++p) {
        if (is_prime(p)) return p;
    }
    throw ParamError("find_prime_in_range: no prime in open interval (" +
                     lo.str() + ", " + hi.str() + ")");
}

} // namespace forge
