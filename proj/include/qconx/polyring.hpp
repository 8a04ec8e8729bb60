#pragma once

// Dense univariate polynomials over GF(p^2), the conjugate / reciprocal
// calculus used for Hermitian duals of cyclic codes, and factorizations of
// x^n - 1.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qconx/field.hpp"

namespace qconx {

/// Coefficients lowest degree first with no trailing zeros; the zero
/// polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<FieldElement> coeffs);

    static Polynomial constant(FieldElement c);
    static Polynomial monomial(FieldElement c, std::size_t degree);
    /// x - root
    static Polynomial linear(const Field& f, FieldElement root);
    static Polynomial xn_minus_one(const Field& f, std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElement{}; }
    FieldElement leading() const { return coeffs_.empty() ? FieldElement{} : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == FieldElement{1, 0}; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<FieldElement> coeffs_;
};

Polynomial add(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial sub(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial scale(const Field& f, const Polynomial& a, FieldElement c);
Polynomial mul(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial pow(const Field& f, const Polynomial& a, std::size_t e);
/// Quotient and remainder with deg r < deg b; throws std::domain_error if b = 0.
std::pair<Polynomial, Polynomial> divmod(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial mod(const Field& f, const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws std::invalid_argument if b does not divide a.
Polynomial exact_div(const Field& f, const Polynomial& a, const Polynomial& b);
bool divides(const Field& f, const Polynomial& b, const Polynomial& a);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial monic(const Field& f, const Polynomial& a);
FieldElement eval(const Field& f, const Polynomial& a, FieldElement x);
/// a mod (x^n - 1) as a length-n coefficient vector.
std::vector<FieldElement> reduce_cyclic(const Field& f, const Polynomial& a, std::size_t n);

/// Coefficient-wise conjugation.
Polynomial conj_poly(const Field& f, const Polynomial& a);
/// x^deg(a) * a(1/x): reverses the coefficients. Throws on a = 0.
Polynomial reciprocal(const Polynomial& a);
/// conj_poly(reciprocal(a)).
Polynomial herm_reciprocal(const Field& f, const Polynomial& a);

struct Factor {
    Polynomial factor;
    std::size_t multiplicity = 1;
};

struct Factorization {
    std::vector<Factor> factors;
    Polynomial expand(const Field& f) const;
};

/// x^n - 1 with gcd(n, p) = 1: one irreducible factor per p^2-cyclotomic
/// coset, in order of the smallest coset member.
Factorization factor_xn_minus_1_simple(const Field& f, std::size_t n);

/// x^(3p^s) - 1 = (x-1)^(p^s) (x-w)^(p^s) (x-w^2)^(p^s), w = element of order 3.
/// Requires p > 3 and s >= 1.
Factorization factor_x3ps_minus_1(const Field& f, std::size_t s);

std::size_t int_pow(std::size_t base, std::size_t e);

/// Coefficients as text, e.g. "x^3 + (4)". Highest degree first.
std::string to_string(const Field& f, const Polynomial& a);

/// Parses products such as "(x-1)^2*(x-w)^1(x-w2)^0". Roots may be 1, w
/// (element of order 3), w2 (its square) or any field literal accepted by
/// Field::parse; "(x+c)" means root -c.
Polynomial parse_factored(const Field& f, std::string_view text);
/// Inverse of parse_factored for products of (x - root) factors.
std::string to_factored_string(const Field& f, const Factorization& fz);

}  // namespace qconx
