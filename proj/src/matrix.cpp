#include "lsdc/matrix.hpp"

#include <random>
#include <string>

namespace lsdc {

FqVector::FqVector(Field f, std::vector<std::uint32_t> entries)
    : f_(f), e_(std::move(entries)) {
    for (auto v : e_)
        if (v >= f_.q())
            throw DomainError("vector entry " + std::to_string(v) +
                              " out of range for GF(" + std::to_string(f_.q()) + ")");
}

FqVector FqVector::from_ints(Field f, const std::vector<std::int64_t>& v) {
    FqVector r(f, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.from_int(v[i]);
    return r;
}

std::uint32_t FqVector::at(std::size_t i) const {
    if (i >= e_.size()) throw ShapeError("vector index out of range");
    return e_[i];
}

unsigned FqVector::weight() const {
    unsigned w = 0;
    for (auto v : e_) w += (v != 0);
    return w;
}

std::vector<std::size_t> FqVector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0) s.push_back(i);
    return s;
}

FqMatrix FqMatrix::from_rows(Field f,
                             const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    for (const auto& row : rows)
        if (row.size() != c) throw ShapeError("ragged rows in matrix literal");
    FqMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
    return m;
}

FqMatrix FqMatrix::identity(Field f, std::size_t n) {
    FqMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::uint32_t FqMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
    return (*this)(r, c);
}

FqVector FqMatrix::row(std::size_t r) const {
    FqVector v(f_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(r, j);
    return v;
}

FqVector FqMatrix::col(std::size_t c) const {
    FqVector v(f_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

void FqMatrix::set_row(std::size_t r, const FqVector& v) {
    if (v.size() != cols_) throw ShapeError("row length mismatch");
    if (v.field() != f_) throw FieldError("row over a different field");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = v[j];
}

unsigned FqMatrix::weight() const {
    unsigned w = 0;
    for (auto v : e_) w += (v != 0);
    return w;
}

std::vector<unsigned> FqMatrix::row_weights() const {
    std::vector<unsigned> w(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) w[i] += ((*this)(i, j) != 0);
    return w;
}

std::vector<unsigned> FqMatrix::col_weights() const {
    std::vector<unsigned> w(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) w[j] += ((*this)(i, j) != 0);
    return w;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b) {
    if (a.field() != b.field()) throw FieldError("matrix product across fields");
    if (a.cols() != b.rows())
        throw ShapeError("matrix product shape mismatch: " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " * " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    const Field& f = a.field();
    FqMatrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint32_t aik = a(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
        }
    return c;
}

FqVector mat_vec(const FqMatrix& a, const FqVector& v) {
    if (a.field() != v.field()) throw FieldError("matrix-vector product across fields");
    if (a.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
    const Field& f = a.field();
    FqVector r(f, a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < a.cols(); ++k)
            acc = f.add(acc, f.mul(a(i, k), v[k]));
        r[i] = acc;
    }
    return r;
}

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b) {
    if (a.field() != b.field()) throw FieldError("hstack across fields");
    if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
    FqMatrix m(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

FqMatrix vstack(const FqMatrix& a, const FqMatrix& b) {
    if (a.field() != b.field()) throw FieldError("vstack across fields");
    if (a.cols() != b.cols()) throw ShapeError("vstack column mismatch");
    FqMatrix m(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

Rref row_reduce(const FqMatrix& a) {
    const Field& f = a.field();
    FqMatrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0; // next pivot row
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        // first nonzero entry at or below pr
        std::size_t sel = m.rows();
        for (std::size_t r = pr; r < m.rows(); ++r)
            if (m(r, c) != 0) { sel = r; break; }
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(pr, j), m(sel, j));
        std::uint32_t piv_inv = f.inv(m(pr, c));
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(pr, j) = f.mul(m(pr, j), piv_inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr) continue;
            std::uint32_t v = m(r, c);
            if (!v) continue;
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(r, j) = f.sub(m(r, j), f.mul(v, m(pr, j)));
        }
        pivots.push_back(c);
        ++pr;
    }
    return Rref{std::move(m), std::move(pivots), pr};
}

std::size_t rank(const FqMatrix& a) { return row_reduce(a).rank; }

std::optional<FqVector> solve_particular(const FqMatrix& a, const FqVector& b) {
    if (a.field() != b.field()) throw FieldError("solve across fields");
    if (a.rows() != b.size()) throw ShapeError("solve shape mismatch");
    FqMatrix aug = hstack(a, FqMatrix(a.field(), a.rows(), 1));
    for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
    Rref r = row_reduce(aug);
    // pivot in the augmented column == inconsistent system
    for (auto p : r.pivots)
        if (p == a.cols()) return std::nullopt;
    FqVector x(a.field(), a.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        x[r.pivots[i]] = r.mat(i, a.cols());
    return x;
}

std::vector<FqVector> nullspace_basis(const FqMatrix& a) {
    const Field& f = a.field();
    Rref r = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<FqVector> basis;
    for (std::size_t fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        FqVector v(f, a.cols());
        v[fc] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = f.neg(r.mat(i, fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::uint64_t space_size(const Field& f, std::size_t n, std::uint64_t limit) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (s > limit / f.q())
            throw ResourceLimit("q^n exceeds limit " + std::to_string(limit) +
                                " (q=" + std::to_string(f.q()) +
                                ", n=" + std::to_string(n) + ")");
        s *= f.q();
    }
    if (s > limit)
        throw ResourceLimit("q^n exceeds limit " + std::to_string(limit));
    return s;
}

std::uint64_t pack_index(const FqVector& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        idx = idx * v.field().q() + v[i];
    return idx;
}

FqVector unpack_index(const Field& f, std::size_t n, std::uint64_t idx) {
    FqVector v(f, n);
    for (std::size_t i = n; i-- > 0;) {
        v[i] = static_cast<std::uint32_t>(idx % f.q());
        idx /= f.q();
    }
    return v;
}

FqMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                       std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    FqMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = static_cast<std::uint32_t>(eng() % f.q());
    return m;
}

} // namespace lsdc
