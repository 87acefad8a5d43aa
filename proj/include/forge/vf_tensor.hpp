#pragma once

#include "forge/int_matrix.hpp"

#include <optional>
#include <vector>

namespace forge {

// Set of q-tuples with coordinates in [1, base], stored as sorted
// lexicographic ranks (coordinate 1 most significant).
struct TupleSet {
    std::size_t q = 1;
    std::size_t base = 1;
    std::vector<std::uint64_t> members; // sorted, unique

    bool contains(std::uint64_t rank) const;
    void insert(std::uint64_t rank);
    std::size_t size() const { return members.size(); }
};

std::uint64_t tuple_rank(const std::vector<std::size_t>& tuple,
                         std::size_t base);
std::vector<std::size_t> tuple_unrank(std::uint64_t rank, std::size_t q,
                                      std::size_t base);

// One slice set S: designated coordinate `axis` (1-based) varies over
// [1, M], the other q-1 coordinates are pinned to `fixed` in order.
struct SliceId {
    std::size_t axis = 1;
    std::vector<std::size_t> fixed;
};

struct VFTensorResult {
    IntMatrix A;  // M^q x (q M^q / t)
    IntMatrix Q;  // M^q x N^q, the q-fold Kronecker power of P
    std::size_t t = 1;
    std::size_t q = 1;
    std::size_t source_rows = 1; // M
    std::size_t source_cols = 1; // N
    Int prime_a;                 // M^q < a < 3 M^q
    std::vector<SliceId> slice_family; // q M^(q-1) sets, axis-major order

    std::size_t block_width() const { return source_rows / t; }
};

// The (t,q)-VF tensor product of a 0/1 matrix P. Vandermonde rows are
// assigned to tuples in lexicographic rank order; blocks follow the
// slice_family order (axis ascending, fixed coordinates ascending).
VFTensorResult vf_tensor(const IntMatrix& p, std::size_t t, std::size_t q,
                         std::uint64_t max_entries = 0);

// (t,q)-legality: every axis line meets the set in 0 or >= M/t tuples.
bool is_legal(const TupleSet& edge_tuples, std::size_t t, std::size_t m);

// N^(q)_P(E'): union over members of the per-coordinate neighborhood
// products. Result is a TupleSet over base N.
TupleSet neighborhood(const IntMatrix& p, const TupleSet& edge_tuples);

enum class SliceKind { W, X, Y, Z };

// W/Y pin coordinate 1 (fixed has one value); X/Z pin coordinates 2..q
// (fixed has q-1 values). W/X slice vertex-tuple sets, Y/Z edge-tuple
// sets; the arithmetic is identical, the kind is kept for call sites.
TupleSet slice(const TupleSet& s, SliceKind kind,
               const std::vector<std::size_t>& fixed);

struct KernelLegalityReport {
    bool ok = true;
    std::uint64_t vectors_checked = 0;
    std::optional<std::vector<Int>> violating_x; // support was not legal
};

// Checks the kernel side of the legality lemma on a spanning set: every
// integer combination of left_kernel_basis(A) with coefficients in
// [-multiplicity, multiplicity] must have (t,q)-legal support. Sound but
// not complete for the full integer kernel; see the grid check below
// for the exhaustive small-instance companion.
KernelLegalityReport kernel_supports_legal(const VFTensorResult& vf,
                                           int multiplicity = 1,
                                           std::uint64_t max_combos = 0);

struct GridLegalityReport {
    bool ok = true;
    std::uint64_t vectors_checked = 0;
    std::uint64_t illegal_supports_seen = 0;
    std::optional<std::vector<Int>> violating_x; // x A == 0 on illegal support
};

// Exhaustive sweep of x in [-coeff_bound, coeff_bound]^(M^q): every x
// whose support is illegal must satisfy x A != 0.
GridLegalityReport check_illegal_supports_nonzero(const VFTensorResult& vf,
                                                  int coeff_bound,
                                                  std::uint64_t max_grid = 0);

struct ExpansionReport {
    bool ok = true;
    std::uint64_t legal_sets = 0; // number of legal subsets enumerated
    std::size_t worst_size = 0;   // (|E'|, |N(E')|) with the tightest slack
    std::size_t worst_nbr = 0;
    Rat worst_slack = 0; // RHS - LHS at the worst pair; negative iff !ok
    std::optional<TupleSet> counterexample;
};

// Exhaustively enumerates every (t,q)-legal subset E' of [M]^q and
// checks |E'| (1 - beta t)^q <= M^q (|N(E')| / N^q)^d exactly. P must be
// a 0/1 indicator with constant row weight d, case-2 certified at beta
// by the caller. jobs = 0 picks hardware concurrency.
ExpansionReport verify_legal_expansion(const IntMatrix& p, std::size_t t,
                                       std::size_t q, const Rat& beta,
                                       unsigned jobs = 0);

} // namespace forge
