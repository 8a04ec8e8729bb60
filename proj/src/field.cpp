#include "qconx/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace qconx {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic witness set for all 64-bit n.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) { return miller_rabin(n); }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d < 1000 && d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Field::Field(std::uint32_t p) : p_(p) {
    if (p == 2) throw std::invalid_argument("GF(p^2) via u^2 = delta needs an odd prime; p = 2 is unsupported");
    if (p >= (1u << 16)) throw std::invalid_argument("p must be below 65536");
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");

    delta_ = 2;
    while (pow_mod(delta_, (p - 1) / 2, p) != p - 1) ++delta_;

    order_primes_ = prime_factors(std::uint64_t{p} * p - 1);

    gamma_ = {};
    for (std::uint32_t idx = 1; idx < order(); ++idx) {
        const FieldElement x = element(idx);
        if (is_primitive(x)) {
            gamma_ = x;
            break;
        }
    }
    sqrt_minus_one_ = pow(gamma_, (std::uint64_t{p} * p - 1) / 4);
}

Field make_field(std::uint32_t p) { return Field(p); }

FieldElement Field::make(std::int64_t a, std::int64_t b) const {
    const std::int64_t p = p_;
    return {static_cast<std::uint32_t>(((a % p) + p) % p), static_cast<std::uint32_t>(((b % p) + p) % p)};
}

FieldElement Field::norm(FieldElement x) const {
    const std::uint64_t p = p_;
    const std::uint64_t aa = std::uint64_t{x.a} * x.a % p;
    const std::uint64_t bb = delta_ * (std::uint64_t{x.b} * x.b % p) % p;
    return {static_cast<std::uint32_t>((aa + p - bb) % p), 0};
}

FieldElement Field::inv(FieldElement x) const {
    if (x.is_zero()) throw std::domain_error("inverse of zero in GF(p^2)");
    const std::uint32_t n = norm(x).a;
    const auto n_inv = static_cast<std::uint32_t>(pow_mod(n, p_ - 2, p_));
    return mul(conjugate(x), {n_inv, 0});
}

FieldElement Field::pow(FieldElement x, std::uint64_t e) const {
    FieldElement result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, x);
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

bool Field::is_primitive(FieldElement x) const {
    if (x.is_zero()) return false;
    const std::uint64_t n = std::uint64_t{p_} * p_ - 1;
    if (pow(x, n) != one()) return false;
    return std::all_of(order_primes_.begin(), order_primes_.end(),
                       [&](std::uint64_t q) { return pow(x, n / q) != one(); });
}

std::uint64_t Field::multiplicative_order(FieldElement x) const {
    if (x.is_zero()) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t ord = std::uint64_t{p_} * p_ - 1;
    for (std::uint64_t q : order_primes_) {
        while (ord % q == 0 && pow(x, ord / q) == one()) ord /= q;
    }
    return ord;
}

FieldElement Field::element_of_order(std::uint64_t d) const {
    const std::uint64_t n = std::uint64_t{p_} * p_ - 1;
    if (d == 0 || n % d != 0) {
        throw std::invalid_argument("no element of order " + std::to_string(d) + " in GF(" +
                                    std::to_string(order()) + ")");
    }
    return pow(gamma_, n / d);
}

FieldElement Field::norm_preimage(FieldElement a) const {
    if (!a.in_base_field() || a.is_zero()) {
        throw std::domain_error("norm_preimage needs a nonzero element of GF(p), got " + to_string(a));
    }
    // Baby-step giant-step in the cyclic group GF(p)* generated by g = gamma^(p+1).
    const FieldElement g = norm(gamma_);
    const std::uint64_t group = p_ - 1;
    const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(group))));
    std::unordered_map<std::uint32_t, std::uint64_t> baby;
    FieldElement cur = one();
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(cur.a, j);
        cur = mul(cur, g);
    }
    const FieldElement giant = inv(pow(g, m));
    FieldElement target = a;
    for (std::uint64_t i = 0; i <= m; ++i) {
        if (auto it = baby.find(target.a); it != baby.end()) {
            const std::uint64_t t = (i * m + it->second) % group;
            return pow(gamma_, t);
        }
        target = mul(target, giant);
    }
    throw std::logic_error("discrete log failed; gamma^(p+1) does not generate GF(p)*");
}

std::string Field::to_string(FieldElement x) const {
    if (x.b == 0) return std::to_string(x.a);
    std::string bpart = x.b == 1 ? "u" : std::to_string(x.b) + "*u";
    if (x.a == 0) return bpart;
    return std::to_string(x.a) + "+" + bpart;
}

FieldElement Field::parse(std::string_view text) const {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty field element");

    FieldElement result{};
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("malformed field element '" + std::string(text) + "'");
        }
        first = false;
        std::int64_t coeff = 1;
        bool have_digits = false;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos > start) {
            coeff = std::stoll(s.substr(start, pos - start));
            have_digits = true;
        }
        bool is_u = false;
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            if (pos >= s.size() || s[pos] != 'u') {
                throw std::invalid_argument("malformed field element '" + std::string(text) + "'");
            }
        }
        if (pos < s.size() && s[pos] == 'u') {
            is_u = true;
            ++pos;
        }
        if (!have_digits && !is_u) throw std::invalid_argument("malformed field element '" + std::string(text) + "'");
        if (negative) coeff = -coeff;
        const FieldElement term = is_u ? make(0, coeff) : make(coeff, 0);
        result = add(result, term);
    }
    return result;
}

}  // namespace qconx
