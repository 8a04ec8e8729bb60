#pragma once

// Cyclic codes over GF(p^2): generator-polynomial form, Hermitian duals,
// the length-3p^s family, and defining sets for the simple-root case.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "qconx/field.hpp"
#include "qconx/linalg.hpp"
#include "qconx/polyring.hpp"

namespace qconx {

class CyclicCode {
public:
    /// Throws std::invalid_argument unless g is nonzero and divides x^n - 1.
    /// The stored generator is made monic.
    CyclicCode(const Field& f, std::size_t n, const Polynomial& g);

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return n_ - static_cast<std::size_t>(g_.degree()); }
    const Polynomial& generator() const { return g_; }
    /// h = (x^n - 1) / g.
    Polynomial check_polynomial(const Field& f) const;

    /// Rows x^i g(x) for 0 <= i < dimension().
    Matrix generator_matrix() const;
    /// Rows are shifts of the reversed check polynomial (Euclidean parity checks).
    Matrix parity_check_matrix(const Field& f) const;
    LinearCode to_linear(const Field& f) const;
    bool contains(const Field& f, const Polynomial& word) const;

    friend bool operator==(const CyclicCode&, const CyclicCode&) = default;

private:
    std::size_t n_;
    Polynomial g_;
};

/// Generator monic(h^perp) with h = (x^n - 1)/g.
CyclicCode hermitian_dual_cyclic(const Field& f, const CyclicCode& c);
/// Cyclic code generated by gcd of the generators.
CyclicCode sum_cyclic(const Field& f, const CyclicCode& a, const CyclicCode& b);
/// Cyclic code generated by lcm of the generators.
CyclicCode intersect_cyclic(const Field& f, const CyclicCode& a, const CyclicCode& b);

/// Multiplicities of (x-1), (x-w), (x-w^2) in a generator of length 3p^s.
struct Exponents3 {
    std::size_t i = 0;  ///< on (x - 1)
    std::size_t j = 0;  ///< on (x - w)
    std::size_t k = 0;  ///< on (x - w^2)

    std::size_t total() const { return i + j + k; }
    friend auto operator<=>(const Exponents3&, const Exponents3&) = default;
};

/// <(x-1)^i (x-w)^j (x-w^2)^k> of length 3p^s; needs p > 3, each exponent <= p^s.
CyclicCode repeated_root_code(const Field& f, std::size_t s, Exponents3 e);
/// Recovers the exponents of a length-3p^s code by repeated division.
Exponents3 exponents_of(const Field& f, const CyclicCode& c, std::size_t s);

/// Exponents of the Hermitian dual in the order (1, w, w^2). For p = 2 mod 3
/// they are (p^s-i, p^s-j, p^s-k); for p = 1 mod 3 the map r -> r^(-p) swaps
/// w and w^2, giving (p^s-i, p^s-k, p^s-j).
Exponents3 dual_exponents_3ps(std::uint32_t p, std::size_t s, Exponents3 e);

/// Minimum distance of <(x-1)^i (x-w)^j (x-w^2)^k> of length 3p^s from the
/// repeated-root distance formula: min over 0 <= t < p^s of P_t * d_t, where
/// P_t is the product of (digit + 1) over the base-p digits of t and d_t is
/// 1 + #{exponents > t} (the length-3 code with those roots; skipped when all
/// three exceed t). Throws std::invalid_argument on the zero code.
std::size_t distance_3ps(std::uint32_t p, std::size_t s, Exponents3 e);

/// |C| = p^(2 * dim C) for a length-3p^s code given by its generator.
boost::multiprecision::cpp_int codeword_count(const Field& f, const CyclicCode& c, std::size_t s);

/// Sorted subset of Z_n. Coset closure is checked where required.
struct DefiningSet {
    std::size_t n = 0;
    std::vector<std::size_t> elements;

    DefiningSet() = default;
    DefiningSet(std::size_t n, std::vector<std::size_t> elements);
    bool contains(std::size_t x) const;
    std::size_t size() const { return elements.size(); }
    friend bool operator==(const DefiningSet&, const DefiningSet&) = default;
};

/// {a q^j mod n} with q = p^2; needs gcd(n, p) = 1.
std::vector<std::size_t> cyclotomic_coset(const Field& f, std::size_t a, std::size_t n);
/// All p^2-cyclotomic cosets mod n ordered by smallest member.
std::vector<std::vector<std::size_t>> cyclotomic_cosets(const Field& f, std::size_t n);
bool is_coset_closed(const Field& f, const DefiningSet& z);
/// {-p s mod n : s in z}
DefiningSet neg_p_set(const Field& f, const DefiningSet& z);
DefiningSet set_intersection(const DefiningSet& a, const DefiningSet& b);
DefiningSet set_difference(const DefiningSet& a, const DefiningSet& b);
DefiningSet set_complement(const DefiningSet& a);

struct HullDims {
    std::size_t e = 0;         ///< |Z intersect -pZ| = dim C^h - dim hull
    std::size_t hull_dim = 0;  ///< |Z| - e
};
HullDims hull_dim_from_defining_set(const Field& f, const DefiningSet& z);

/// g = prod_{k in Z} (x - beta^k) with beta the canonical primitive n-th root.
/// Throws std::invalid_argument if Z is not coset-closed or gcd(n, p) != 1.
CyclicCode from_defining_set(const Field& f, const DefiningSet& z);

}  // namespace qconx
