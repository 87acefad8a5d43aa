#include "forge/caps.hpp"

#include <cstdlib>

namespace forge {

CapMode cap_mode_from_env() {
    const char* env = std::getenv("FORGE_CAP_MODE");
    if (!env) return CapMode::Default;
    std::string v(env);
    if (v == "tiny") return CapMode::Tiny;
    if (v == "max") return CapMode::Max;
    return CapMode::Default;
}

Caps Caps::with_mode(CapMode m) {
    switch (m) {
        case CapMode::Tiny:
            return Caps{12, 10'000, 1u << 20, 1'000'000, 10'000, 100'000};
        case CapMode::Max:
            return Caps{26, 100'000'000, 1u << 28, 40'000'000'000ull,
                        50'000'000, 500'000'000};
        case CapMode::Default:
        default:
            return Caps{20, 1'000'000, 1u << 26, 2'000'000'000ull,
                        2'000'000, 20'000'000};
    }
}

const Caps& Caps::current() {
    static const Caps caps = Caps::with_mode(cap_mode_from_env());
    return caps;
}

} // namespace forge
