#include "qconx/linalg.hpp"

#include <stdexcept>
#include <string>

namespace qconx {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same_length(rows[r].size(), cols, "Matrix::from_rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Vector Matrix::row_vector(std::size_t r) const {
    auto view = row(r);
    return {view.begin(), view.end()};
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
}

void Matrix::append_row(std::span<const FieldElement> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    require_same_length(values.size(), cols_, "Matrix::append_row");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void Matrix::swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    std::swap_ranges(row(r1).begin(), row(r1).end(), row(r2).begin());
}

Matrix Matrix::stacked(const Matrix& other) const {
    require_same_length(cols_, other.cols_, "Matrix::stacked");
    Matrix out = *this;
    out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
    out.rows_ += other.rows_;
    return out;
}

Matrix Matrix::conjugated(const Field& f) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = f.conjugate(x);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

Echelon rref(const Field& f, Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot_row = lead;
        while (pivot_row < m.rows() && m(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        m.swap_rows(lead, pivot_row);

        const FieldElement scale = f.inv(m(lead, col));
        for (auto& x : m.row(lead)) x = f.mul(x, scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, col).is_zero()) continue;
            const FieldElement factor = f.neg(m(r, col));
            auto target = m.row(r);
            auto source = m.row(lead);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!source[c].is_zero()) target[c] = f.mul_add(factor, source[c], target[c]);
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    Matrix reduced(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) std::copy(m.row(r).begin(), m.row(r).end(), reduced.row(r).begin());
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank(); }

Matrix kernel(const Field& f, const Matrix& m) {
    const Echelon e = rref(f, m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;

    Matrix out(n - e.rank(), n);
    std::size_t out_row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        auto v = out.row(out_row++);
        v[free] = f.one();
        for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    }
    return out;
}

FieldElement dot(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y) {
    require_same_length(x.size(), y.size(), "dot");
    FieldElement acc{};
    for (std::size_t i = 0; i < x.size(); ++i) acc = f.mul_add(x[i], y[i], acc);
    return acc;
}

FieldElement hermitian_ip(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y) {
    require_same_length(x.size(), y.size(), "hermitian_ip");
    FieldElement acc{};
    for (std::size_t i = 0; i < x.size(); ++i) acc = f.mul_add(x[i], f.conjugate(y[i]), acc);
    return acc;
}

FieldElement hermitian_norm(const Field& f, std::span<const FieldElement> x) {
    FieldElement acc{};
    for (auto xi : x) acc = f.add(acc, f.norm(xi));
    return acc;
}

Vector scaled(const Field& f, std::span<const FieldElement> x, FieldElement c) {
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(x[i], c);
    return out;
}

Vector axpy(const Field& f, std::span<const FieldElement> x, FieldElement c, std::span<const FieldElement> y) {
    require_same_length(x.size(), y.size(), "axpy");
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul_add(c, y[i], x[i]);
    return out;
}

std::size_t hamming_weight(std::span<const FieldElement> x) {
    std::size_t w = 0;
    for (auto v : x) w += v.is_zero() ? 0 : 1;
    return w;
}

LinearCode::LinearCode(const Field& f, const Matrix& generators) : n_(generators.cols()) {
    Echelon e = rref(f, generators);
    gen_ = std::move(e.reduced);
    pivots_ = std::move(e.pivots);
    if (gen_.rows() == 0) gen_ = Matrix(0, n_);
}

LinearCode LinearCode::zero(std::size_t n) {
    LinearCode c;
    c.n_ = n;
    c.gen_ = Matrix(0, n);
    return c;
}

LinearCode LinearCode::full(const Field& f, std::size_t n) {
    Matrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = f.one();
    return LinearCode(f, id);
}

bool LinearCode::contains(const Field& f, std::span<const FieldElement> v) const {
    require_same_length(v.size(), n_, "LinearCode::contains");
    Vector residual(v.begin(), v.end());
    for (std::size_t r = 0; r < gen_.rows(); ++r) {
        const FieldElement c = residual[pivots_[r]];
        if (c.is_zero()) continue;
        const FieldElement factor = f.neg(c);
        auto row = gen_.row(r);
        for (std::size_t j = 0; j < n_; ++j) {
            if (!row[j].is_zero()) residual[j] = f.mul_add(factor, row[j], residual[j]);
        }
    }
    return hamming_weight(residual) == 0;
}

Vector LinearCode::coordinates(std::span<const FieldElement> v) const {
    Vector out(gen_.rows());
    for (std::size_t r = 0; r < gen_.rows(); ++r) out[r] = v[pivots_[r]];
    return out;
}

LinearCode hermitian_dual(const Field& f, const LinearCode& c) {
    if (c.is_zero()) return LinearCode::full(f, c.length());
    return LinearCode(f, kernel(f, c.generator().conjugated(f)));
}

LinearCode euclidean_dual(const Field& f, const LinearCode& c) {
    if (c.is_zero()) return LinearCode::full(f, c.length());
    return LinearCode(f, kernel(f, c.generator()));
}

LinearCode sum_code(const Field& f, const LinearCode& a, const LinearCode& b) {
    require_same_length(a.length(), b.length(), "sum_code");
    return LinearCode(f, a.generator().stacked(b.generator()));
}

LinearCode intersect_code(const Field& f, const LinearCode& a, const LinearCode& b) {
    require_same_length(a.length(), b.length(), "intersect_code");
    return hermitian_dual(f, sum_code(f, hermitian_dual(f, a), hermitian_dual(f, b)));
}

LinearCode hull(const Field& f, const LinearCode& c) { return intersect_code(f, c, hermitian_dual(f, c)); }

bool is_subcode(const Field& f, const LinearCode& inner, const LinearCode& outer) {
    require_same_length(inner.length(), outer.length(), "is_subcode");
    for (std::size_t r = 0; r < inner.dimension(); ++r) {
        if (!outer.contains(f, inner.generator().row(r))) return false;
    }
    return true;
}

}  // namespace qconx
