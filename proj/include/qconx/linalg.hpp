#pragma once

// Dense matrices and subspaces of GF(p^2)^n under the Hermitian form
// <x, y> = sum_i x_i * conj(y_i).

#include <cstddef>
#include <span>
#include <vector>

#include "qconx/field.hpp"

namespace qconx {

using Vector = std::vector<FieldElement>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Every row must have `cols` entries.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;
    std::vector<Vector> row_vectors() const;

    void append_row(std::span<const FieldElement> values);
    void swap_rows(std::size_t r1, std::size_t r2);
    /// Stacks `other` below this; column counts must match.
    Matrix stacked(const Matrix& other) const;
    Matrix conjugated(const Field& f) const;
    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

struct Echelon {
    Matrix reduced;  ///< RREF with zero rows removed
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Field& f, Matrix m);
std::size_t rank(const Field& f, const Matrix& m);
/// Rows form a basis of {y : m * y^T = 0}.
Matrix kernel(const Field& f, const Matrix& m);

FieldElement dot(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y);
/// sum_i x_i * conj(y_i); conjugates the second argument.
FieldElement hermitian_ip(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y);
/// Hermitian norm <x, x>, an element of GF(p).
FieldElement hermitian_norm(const Field& f, std::span<const FieldElement> x);

Vector scaled(const Field& f, std::span<const FieldElement> x, FieldElement c);
/// x + c*y
Vector axpy(const Field& f, std::span<const FieldElement> x, FieldElement c, std::span<const FieldElement> y);
std::size_t hamming_weight(std::span<const FieldElement> x);

/// Linear code stored by the RREF of its generator matrix, so equal row
/// spaces compare equal.
class LinearCode {
public:
    LinearCode() = default;
    /// Row space of `generators`; the rows need not be independent.
    LinearCode(const Field& f, const Matrix& generators);

    static LinearCode zero(std::size_t n);
    static LinearCode full(const Field& f, std::size_t n);

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return gen_.rows(); }
    bool is_zero() const { return gen_.rows() == 0; }
    const Matrix& generator() const { return gen_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Field& f, std::span<const FieldElement> v) const;
    /// Coordinates of v in the RREF basis; only meaningful when contains(v).
    Vector coordinates(std::span<const FieldElement> v) const;

    friend bool operator==(const LinearCode& x, const LinearCode& y) { return x.n_ == y.n_ && x.gen_ == y.gen_; }

private:
    std::size_t n_ = 0;
    Matrix gen_;
    std::vector<std::size_t> pivots_;
};

LinearCode hermitian_dual(const Field& f, const LinearCode& c);
/// Euclidean dual; its generator is a parity-check matrix of c.
LinearCode euclidean_dual(const Field& f, const LinearCode& c);
LinearCode sum_code(const Field& f, const LinearCode& a, const LinearCode& b);
/// (a^h + b^h)^h, so the Hermitian convention lives in one place.
LinearCode intersect_code(const Field& f, const LinearCode& a, const LinearCode& b);
/// c intersected with its Hermitian dual.
LinearCode hull(const Field& f, const LinearCode& c);
bool is_subcode(const Field& f, const LinearCode& inner, const LinearCode& outer);

}  // namespace qconx
