#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lsdc/field.hpp"

namespace lsdc {

/// Dense vector over GF(q).
class FqVector {
public:
    FqVector(Field f, std::size_t n) : f_(f), e_(n, 0) {}
    FqVector(Field f, std::vector<std::uint32_t> entries);

    /// Builds from arbitrary signed integers, reducing mod q.
    static FqVector from_ints(Field f, const std::vector<std::int64_t>& v);

    const Field& field() const { return f_; }
    std::size_t size() const { return e_.size(); }

    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    std::uint32_t at(std::size_t i) const;

    const std::vector<std::uint32_t>& data() const { return e_; }

    /// Number of nonzero entries.
    unsigned weight() const;
    /// 0-based indices of nonzero entries, ascending.
    std::vector<std::size_t> support() const;
    bool is_zero() const { return weight() == 0; }

    bool operator==(const FqVector& o) const {
        return f_ == o.f_ && e_ == o.e_;
    }
    bool operator!=(const FqVector& o) const { return !(*this == o); }

private:
    Field f_;
    std::vector<std::uint32_t> e_;
};

/// Dense row-major matrix over GF(q).
class FqMatrix {
public:
    FqMatrix(Field f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    /// Builds from signed integer rows (reduced mod q).  All rows must
    /// have equal length; throws ShapeError otherwise.
    static FqMatrix from_rows(Field f,
                              const std::vector<std::vector<std::int64_t>>& rows);
    static FqMatrix identity(Field f, std::size_t n);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const {
        return e_[r * cols_ + c];
    }
    std::uint32_t& operator()(std::size_t r, std::size_t c) {
        return e_[r * cols_ + c];
    }
    std::uint32_t at(std::size_t r, std::size_t c) const;

    FqVector row(std::size_t r) const;
    FqVector col(std::size_t c) const;
    void set_row(std::size_t r, const FqVector& v);

    /// Total number of nonzero entries.
    unsigned weight() const;
    std::vector<unsigned> row_weights() const;
    std::vector<unsigned> col_weights() const;

    FqMatrix transpose() const;

    bool operator==(const FqMatrix& o) const {
        return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const FqMatrix& o) const { return !(*this == o); }

private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> e_;
};

/// A*B; throws ShapeError on inner-dimension mismatch, FieldError on
/// differing fields.
FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b);
/// A*v as a column vector.
FqVector mat_vec(const FqMatrix& a, const FqVector& v);

/// Stacks blocks side by side / on top of each other.
FqMatrix hstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix vstack(const FqMatrix& a, const FqMatrix& b);

/// Reduced row echelon form, computed with deterministic first-nonzero
/// pivoting (scan columns left to right, take the topmost usable row).
struct Rref {
    FqMatrix mat;
    std::vector<std::size_t> pivots; // pivot column per pivot row
    std::size_t rank;
};
Rref row_reduce(const FqMatrix& a);
std::size_t rank(const FqMatrix& a);

/// One solution of A x = b with all free variables set to zero, or
/// nullopt when the system is inconsistent (no solution is a value
/// here, not an error).
std::optional<FqVector> solve_particular(const FqMatrix& a, const FqVector& b);

/// Basis of {x : A x = 0}, ordered by ascending free column; the basis
/// vector for free column f has a 1 at position f.
std::vector<FqVector> nullspace_basis(const FqMatrix& a);

/// q^n if it fits the guard, else throws ResourceLimit.  Used before
/// any full-space enumeration.
std::uint64_t space_size(const Field& f, std::size_t n, std::uint64_t limit);

/// Base-q packing of a vector into an integer, entry 0 as the most
/// significant digit — numeric order on packed values is lexicographic
/// order on vectors.  Caller guards the range via space_size().
std::uint64_t pack_index(const FqVector& v);
FqVector unpack_index(const Field& f, std::size_t n, std::uint64_t idx);

/// Seeded uniform-ish random matrix (raw engine output mod q, so the
/// stream is identical across platforms; the tiny bias is irrelevant
/// for test fixtures and demo inputs).
FqMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                       std::uint64_t seed);

} // namespace lsdc
