#pragma once

// Random codes and small oracles shared by the tests.

#include <cstdint>
#include <random>

#include "qconx/field.hpp"
#include "qconx/linalg.hpp"

namespace qconx::testing {

inline FieldElement random_element(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
    return f.element(d(rng));
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(f, rng);
    return m;
}

/// Nonzero random code of length n and dimension between 1 and n.
inline LinearCode random_code(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
    for (;;) {
        LinearCode c(f, random_matrix(f, k, n, rng));
        if (!c.is_zero()) return c;
    }
}

/// Gram matrix (<x_i, x_j>) under the Hermitian form.
inline Matrix hermitian_gram(const Field& f, const Matrix& m) {
    Matrix g(m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) g(i, j) = hermitian_ip(f, m.row(i), m.row(j));
    return g;
}

inline bool is_identity(const Field& f, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != (i == j ? f.one() : f.zero())) return false;
    return true;
}

}  // namespace qconx::testing
