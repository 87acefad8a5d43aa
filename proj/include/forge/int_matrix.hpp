#pragma once

#include "forge/numtheory.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace forge {

// Dense matrix of exact signed integers, row major. Every operation is
// exact; nothing here ever rounds.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    const std::vector<Int>& entries() const { return e_; }

    bool operator==(const IntMatrix& o) const = default;

    bool is_zero_one() const;

    // Row submatrix, rows listed in the given order.
    IntMatrix rows_subset(const std::vector<std::size_t>& idx) const;

    // Narrow to int64 when every entry fits; nullopt otherwise. Fast
    // paths in the enumeration oracles go through this.
    std::optional<std::vector<std::int64_t>> to_i64() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// Kronecker product; row (i,i') and column (j,j') pairs in
// lexicographic order. Throws SizeCapError past max_entries.
IntMatrix matrix_tensor(const IntMatrix& a, const IntMatrix& b,
                        std::uint64_t max_entries);
IntMatrix matrix_tensor(const IntMatrix& a, const IntMatrix& b);

// k-fold Kronecker power.
IntMatrix tensor_amplify(const IntMatrix& b, std::size_t k,
                         std::uint64_t max_entries);
IntMatrix tensor_amplify(const IntMatrix& b, std::size_t k);

IntMatrix hconcat(const std::vector<const IntMatrix*>& parts);
IntMatrix hconcat_copies(const IntMatrix& m, std::size_t copies,
                         std::uint64_t max_entries);

std::vector<Int> row_vector_times(const std::vector<Int>& x,
                                  const IntMatrix& m);

// Basis of { x : x M = 0 } over the rationals, scaled to primitive
// integer vectors (content 1, first nonzero entry positive), ordered by
// ascending free-row index. Empty when the rows are independent.
std::vector<std::vector<Int>> left_kernel_basis(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Exact determinant (Bareiss), square matrices only.
Int determinant(const IntMatrix& m);

} // namespace forge
