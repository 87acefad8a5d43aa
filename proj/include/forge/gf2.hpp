#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace forge {

// F_{2^lambda} with a fixed irreducible modulus. Elements are bit
// strings of polynomial coefficients, packed little endian into a
// uint64, so lambda <= 64. Comparing fields compares (lambda, modulus).
class BinaryField {
public:
    // Validates irreducibility of the modulus (must have degree lambda).
    BinaryField(unsigned lambda, std::uint64_t irreducible);

    unsigned lambda() const { return lambda_; }
    std::uint64_t irreducible() const { return irred_full_; }
    // Field size as a count; 0 means 2^64.
    std::uint64_t size_or_zero() const {
        return lambda_ == 64 ? 0 : (std::uint64_t{1} << lambda_);
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

    bool operator==(const BinaryField& o) const = default;

private:
    unsigned lambda_;
    std::uint64_t irred_full_; // includes the degree-lambda bit (0 when lambda=64)
    std::uint64_t irred_low_;  // modulus minus x^lambda
    std::uint64_t mask_;
};

bool gf2_poly_irreducible(std::uint64_t poly, unsigned degree);

// Field with the lexicographically smallest irreducible modulus of
// degree lambda (nonzero constant term; degree 1 uses x+1). lambda must
// be a power of two.
BinaryField build_field(unsigned lambda);

// Same modulus rule without the power-of-two gate, for fields like F_8
// that only appear in oracles.
BinaryField build_field_any_degree(unsigned lambda);

struct FieldElement {
    BinaryField field;
    std::uint64_t bits = 0;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const = default;
};

class FieldMatrix {
public:
    FieldMatrix(BinaryField field, std::size_t rows, std::size_t cols);

    const BinaryField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t& at(std::size_t i, std::size_t j) {
        return e_[i * cols_ + j];
    }
    std::uint64_t at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }
    const std::vector<std::uint64_t>& entries() const { return e_; }

    bool operator==(const FieldMatrix& o) const = default;

private:
    BinaryField field_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> e_;
};

// Vandermonde over the field: column j is tied to the j-th nonzero
// element in ascending bit-string order, entry (i,j) = c(j)^i with
// 1-indexed i. Requires rows < |F| and cols < |F|.
FieldMatrix field_vandermonde(std::size_t rows, std::size_t cols,
                              const BinaryField& field);

// Subfield embedding: the source generator maps to the smallest
// bit-string root of the source modulus inside the target field.
// Requires source lambda | target lambda. Preserves minimum distance.
FieldMatrix field_cast(const FieldMatrix& g, const BinaryField& target);

std::uint64_t field_mv_weight(const FieldMatrix& g,
                              const std::vector<std::uint64_t>& x);

FieldMatrix field_tensor(const FieldMatrix& a, const FieldMatrix& b,
                         std::uint64_t max_entries);

FieldMatrix field_hconcat(const std::vector<const FieldMatrix*>& parts);

std::size_t field_rank(const FieldMatrix& g);

} // namespace forge
