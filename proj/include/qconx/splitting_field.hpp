#pragma once

// GF(Q^m) as GF(Q)[y]/(mod(y)) over Q = p^2, used to reach primitive n-th
// roots of unity when ord_n(Q) > 1.

#include <cstdint>
#include <vector>

#include "qconx/field.hpp"
#include "qconx/polyring.hpp"

namespace qconx {

/// Coordinates c_0 + c_1 y + ... + c_{m-1} y^{m-1}.
using ExtElement = std::vector<FieldElement>;

class SplittingField {
public:
    /// Degree-m extension with the smallest irreducible monic modulus in
    /// the enumeration order of `nth_element`. Throws if Q^m - 1 overflows.
    SplittingField(const Field& base, std::size_t m);

    /// Splitting field of x^n - 1, i.e. degree ord_n(p^2); needs gcd(n, p) = 1.
    static SplittingField for_length(const Field& base, std::size_t n);

    const Field& base() const { return base_; }
    std::size_t degree() const { return m_; }
    const Polynomial& modulus() const { return modulus_; }
    std::uint64_t group_order() const { return group_order_; }
    /// Canonical primitive element: the first element in enumeration order
    /// passing the order test. Equals base().gamma() when m = 1.
    const ExtElement& primitive() const { return alpha_; }

    ExtElement zero() const { return ExtElement(m_); }
    ExtElement one() const;
    ExtElement embed(FieldElement c) const;
    bool in_base(const ExtElement& x) const;
    FieldElement to_base(const ExtElement& x) const;

    ExtElement add(const ExtElement& x, const ExtElement& y) const;
    ExtElement sub(const ExtElement& x, const ExtElement& y) const;
    ExtElement mul(const ExtElement& x, const ExtElement& y) const;
    ExtElement pow(ExtElement x, std::uint64_t e) const;
    bool is_primitive(const ExtElement& x) const;

    /// Element of exact order d = alpha^((Q^m - 1)/d).
    ExtElement element_of_order(std::uint64_t d) const;

    /// The t-th element when coordinates are read as base-Q digits with
    /// c_{m-1} most significant and each digit in Field::index order.
    ExtElement nth_element(std::uint64_t t) const;

private:
    Field base_;
    std::size_t m_;
    Polynomial modulus_;
    std::uint64_t group_order_;
    std::vector<std::uint64_t> order_primes_;
    ExtElement alpha_;
};

/// Orbit of a under multiplication by q modulo n, ascending.
std::vector<std::size_t> q_coset(std::uint64_t q, std::size_t a, std::size_t n);

/// Multiplicative order of q modulo n (n > 1, gcd(q, n) = 1); 1 for n = 1.
std::size_t multiplicative_order_mod(std::uint64_t q, std::uint64_t n);

/// Primitive n-th root beta = alpha^((Q^m-1)/n) with its splitting field.
struct RootsOfUnity {
    SplittingField field;
    ExtElement beta;
    std::size_t n;

    static RootsOfUnity for_length(const Field& f, std::size_t n);
    ExtElement power(std::size_t k) const { return field.pow(beta, k % n); }
    /// prod_{k in exponents} (x - beta^k), verified to lie in GF(p^2)[x].
    /// Throws std::invalid_argument if some coefficient leaves GF(p^2).
    Polynomial product_of_linear(const std::vector<std::size_t>& exponents) const;
};

/// Rabin irreducibility test over GF(p^2).
bool is_irreducible(const Field& f, const Polynomial& a);

}  // namespace qconx
