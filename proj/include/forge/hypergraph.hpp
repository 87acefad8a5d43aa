#pragma once

#include "forge/int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace forge {

// Multiply-xor stream (splitmix64). Generators promise byte-identical
// instances per seed, so the PRNG is pinned here rather than delegated
// to the standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Arity-d hypergraph on vertices [1, N]; edges are sorted vertex lists
// and may repeat as a multiset.
struct Hypergraph {
    std::size_t n_vertices = 0;
    std::size_t arity = 0;
    std::vector<std::vector<std::size_t>> edges; // each sorted, d distinct ids

    std::size_t edge_count() const { return edges.size(); }
    void validate() const;
};

struct QRDHParams {
    Rat r;     // completeness shrink factor, >= 1
    Rat alpha; // completeness density, in [0, 1]
    Rat beta;  // soundness slack, in [0, 1]

    void validate() const;
};

IntMatrix indicator_matrix(const Hypergraph& h);

// Number of edges fully inside the vertex subset (bitmask over [1, N],
// bit i-1 for vertex i).
std::size_t contained_edges(const Hypergraph& h, std::uint64_t vertex_mask);
std::size_t contained_edges(const Hypergraph& h,
                            const std::vector<std::size_t>& vertices);

struct Case2Result {
    bool holds = false;
    // Worst subset: maximizes contained - bound (exceeding subsets only
    // when !holds), ties broken by smaller mask. Deterministic under any
    // partitioning of the sweep.
    std::uint64_t witness_mask = 0;
    Rat witness_margin = 0; // contained - bound at the witness
};

// Exhaustive check of: every V' contains at most (|V'|/N)^d M + beta M
// edges. 2^N sweep; N above the cap is a size error. max_vertices = 0
// means the current cap-mode default.
Case2Result qrdh_case2_holds(const Hypergraph& h, const Rat& beta,
                             std::uint64_t max_vertices = 0);

// Minimum number of vertices touched by any h_edges-subset of edges.
// max_combinations = 0 means the current cap-mode default.
std::size_t min_touched_vertices(const Hypergraph& h, std::size_t h_edges,
                                 std::uint64_t max_combinations = 0);

// factor >= 1 copies of every edge, copies adjacent to their original.
Hypergraph duplicate_edges(const Hypergraph& h, std::size_t factor);

struct PlantedInstance {
    Hypergraph hypergraph;
    std::vector<std::size_t> planted_vertices; // |.| <= N/r
    std::vector<std::size_t> planted_edge_ids; // rows fully inside the plant
};

// Case-1 instance with an explicit certificate: >= ceil(alpha (1/r)^(d-1) M)
// edges planted inside <= N/r vertices, remaining edges drawn at random.
PlantedInstance gen_planted(std::size_t n, std::size_t m, std::size_t d,
                            const Rat& r, const Rat& alpha,
                            std::uint64_t seed);

struct ExpandingInstance {
    Hypergraph hypergraph;
    std::size_t tries_used = 0; // verified draws until the certificate held
};

// Rejection-samples random arity-d hypergraphs until qrdh_case2_holds
// certifies the draw; the result is certified, not merely probable.
ExpandingInstance gen_expanding(std::size_t n, std::size_t m, std::size_t d,
                                const Rat& beta, std::uint64_t seed,
                                std::size_t max_tries);

} // namespace forge
