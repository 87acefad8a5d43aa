#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace forge {

// Parameter violations (bad prime range, non-dividing t, ...).
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exhaustive oracle was asked to enumerate past its hard cap.
// Oracles fail loudly instead of silently truncating.
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection-sampling generators that ran out of tries.
struct GenError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CapMode { Tiny, Default, Max };

// Enumeration budgets. Scaled by FORGE_CAP_MODE={tiny,default,max}.
struct Caps {
    std::uint64_t subset_vertices;   // max N for 2^N vertex-subset sweeps
    std::uint64_t edge_combinations; // max C(M,h) for edge-subset sweeps
    std::uint64_t matrix_entries;    // max rows*cols for constructed matrices
    std::uint64_t grid_points;       // max points in coefficient-grid sweeps
    std::uint64_t walk_count;        // max number of expander walks
    std::uint64_t message_count;     // max |F|^M for distance brute force

    static Caps with_mode(CapMode m);
    // Reads FORGE_CAP_MODE once; later changes to the env are ignored.
    static const Caps& current();
};

CapMode cap_mode_from_env();

inline void require(bool ok, const std::string& what) {
    if (!ok) throw ParamError(what);
}

inline void require_cap(bool ok, const std::string& what) {
    if (!ok) throw SizeCapError(what);
}

} // namespace forge
