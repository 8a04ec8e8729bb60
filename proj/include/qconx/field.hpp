#pragma once

// Arithmetic in GF(p) and GF(p^2) = GF(p)[u]/(u^2 - delta).
//
// Elements are stored in the u-basis as a + b*u with 0 <= a, b < p and delta
// the smallest quadratic non-residue mod p. Conjugation x -> x^p is then the
// sign flip (a, b) -> (a, -b).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qconx {

struct FieldElement {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    constexpr bool is_zero() const { return a == 0 && b == 0; }
    constexpr bool in_base_field() const { return b == 0; }

    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// Parameters of GF(p^2) plus the arithmetic on its elements.
///
/// Immutable once built; every member function is const and re-entrant.
class Field {
public:
    /// Throws std::invalid_argument unless p is an odd prime below 2^16.
    explicit Field(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::uint32_t order() const { return p_ * p_; }
    std::uint32_t delta() const { return delta_; }
    /// Lexicographically smallest (a, b) generating GF(p^2)*.
    FieldElement gamma() const { return gamma_; }
    /// gamma^((p^2-1)/4); squares to -1.
    FieldElement sqrt_minus_one() const { return sqrt_minus_one_; }

    FieldElement zero() const { return {}; }
    FieldElement one() const { return {1, 0}; }
    FieldElement u() const { return {0, 1}; }
    FieldElement make(std::int64_t a, std::int64_t b = 0) const;

    FieldElement add(FieldElement x, FieldElement y) const {
        return {add_mod(x.a, y.a), add_mod(x.b, y.b)};
    }
    FieldElement sub(FieldElement x, FieldElement y) const {
        return {sub_mod(x.a, y.a), sub_mod(x.b, y.b)};
    }
    FieldElement neg(FieldElement x) const { return {neg_mod(x.a), neg_mod(x.b)}; }
    FieldElement mul(FieldElement x, FieldElement y) const {
        const std::uint64_t p = p_;
        const std::uint64_t bb = (std::uint64_t{x.b} * y.b) % p;
        return {static_cast<std::uint32_t>((std::uint64_t{x.a} * y.a + delta_ * bb) % p),
                static_cast<std::uint32_t>((std::uint64_t{x.a} * y.b + std::uint64_t{x.b} * y.a) % p)};
    }
    /// x*y + z, the inner-loop primitive for elimination.
    FieldElement mul_add(FieldElement x, FieldElement y, FieldElement z) const {
        return add(mul(x, y), z);
    }
    /// Throws std::domain_error on zero.
    FieldElement inv(FieldElement x) const;
    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
    FieldElement pow(FieldElement x, std::uint64_t e) const;

    FieldElement conjugate(FieldElement x) const { return {x.a, neg_mod(x.b)}; }
    /// x^(p+1) = x * conj(x); always lies in GF(p).
    FieldElement norm(FieldElement x) const;
    /// x + conj(x) = 2a; always lies in GF(p).
    FieldElement trace(FieldElement x) const { return {add_mod(x.a, x.a), 0}; }

    /// Some lambda with lambda^(p+1) = a, found by a discrete log base
    /// gamma^(p+1) in GF(p)*. Throws std::domain_error unless a is a nonzero
    /// element of GF(p).
    FieldElement norm_preimage(FieldElement a) const;

    /// gamma^((p^2-1)/d); throws std::invalid_argument unless d | p^2-1.
    FieldElement element_of_order(std::uint64_t d) const;
    std::uint64_t multiplicative_order(FieldElement x) const;
    bool is_primitive(FieldElement x) const;

    /// Dense index a*p + b, matching the lexicographic (a, b) order.
    std::uint32_t index(FieldElement x) const { return x.a * p_ + x.b; }
    FieldElement element(std::uint32_t index) const { return {index / p_, index % p_}; }

    /// "a+b*u" form; base-field elements print as just "a".
    std::string to_string(FieldElement x) const;
    /// Accepts "a", "b*u", "u", "a+b*u", "a-b*u" with optional spaces.
    FieldElement parse(std::string_view text) const;

    /// Distinct primes dividing p^2 - 1, ascending.
    const std::vector<std::uint64_t>& group_order_primes() const { return order_primes_; }

    friend bool operator==(const Field& x, const Field& y) { return x.p_ == y.p_; }

private:
    std::uint32_t add_mod(std::uint32_t x, std::uint32_t y) const {
        const std::uint32_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub_mod(std::uint32_t x, std::uint32_t y) const { return x >= y ? x - y : x + p_ - y; }
    std::uint32_t neg_mod(std::uint32_t x) const { return x == 0 ? 0 : p_ - x; }

    std::uint32_t p_;
    std::uint64_t delta_;
    FieldElement gamma_;
    FieldElement sqrt_minus_one_;
    std::vector<std::uint64_t> order_primes_;
};

/// Builds GF(p^2); same as constructing Field directly.
Field make_field(std::uint32_t p);

bool is_prime(std::uint64_t n);
/// Distinct prime factors, ascending. Trial division plus Pollard rho.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// a^e mod m without overflow for any 64-bit m.
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace qconx
