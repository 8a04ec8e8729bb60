#include "qconx/splitting_field.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qconx {

namespace {

Polynomial x_poly(const Field& f) { return Polynomial::monomial(f.one(), 1); }

Polynomial powmod(const Field& f, Polynomial base, std::uint64_t e, const Polynomial& m) {
    Polynomial result = Polynomial::constant(f.one());
    base = mod(f, base, m);
    while (e > 0) {
        if (e & 1) result = mod(f, mul(f, result, base), m);
        e >>= 1;
        if (e > 0) base = mod(f, mul(f, base, base), m);
    }
    return result;
}

}  // namespace

bool is_irreducible(const Field& f, const Polynomial& a) {
    const long deg = a.degree();
    if (deg < 1) return false;
    if (deg == 1) return true;
    const Polynomial g = monic(f, a);
    const std::uint64_t q = f.order();
    const auto m = static_cast<std::uint64_t>(deg);

    // x^(q^j) mod g for j = 0..m
    std::vector<Polynomial> frob{mod(f, x_poly(f), g)};
    for (std::uint64_t j = 1; j <= m; ++j) frob.push_back(powmod(f, frob.back(), q, g));
    if (sub(f, frob[m], frob[0]).is_zero() == false) return false;
    for (std::uint64_t r : prime_factors(m)) {
        const Polynomial h = sub(f, frob[m / r], frob[0]);
        if (gcd(f, h, g).degree() != 0) return false;
    }
    return true;
}

std::vector<std::size_t> q_coset(std::uint64_t q, std::size_t a, std::size_t n) {
    std::vector<std::size_t> out;
    std::size_t x = a % n;
    do {
        out.push_back(x);
        x = static_cast<std::size_t>((static_cast<unsigned __int128>(x) * q) % n);
    } while (x != a % n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t multiplicative_order_mod(std::uint64_t q, std::uint64_t n) {
    if (n == 1) return 1;
    if (std::gcd(q, n) != 1) throw std::invalid_argument("q is not a unit modulo n");
    std::size_t m = 1;
    std::uint64_t x = q % n;
    while (x != 1) {
        x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * q) % n);
        ++m;
    }
    return m;
}

SplittingField::SplittingField(const Field& base, std::size_t m) : base_(base), m_(m) {
    if (m == 0) throw std::invalid_argument("extension degree must be positive");
    const std::uint64_t q = base.order();
    unsigned __int128 size = 1;
    for (std::size_t i = 0; i < m; ++i) {
        size *= q;
        if (size > (static_cast<unsigned __int128>(1) << 62)) {
            throw std::invalid_argument("splitting field GF(" + std::to_string(q) + "^" + std::to_string(m) +
                                        ") is too large");
        }
    }
    group_order_ = static_cast<std::uint64_t>(size) - 1;
    order_primes_ = prime_factors(group_order_);

    if (m == 1) {
        modulus_ = Polynomial::monomial(base.one(), 1);
        alpha_ = {base.gamma()};
        return;
    }
    for (std::uint64_t t = 0;; ++t) {
        ExtElement low = nth_element(t);
        low.push_back(base.one());
        Polynomial candidate(low);
        if (is_irreducible(base, candidate)) {
            modulus_ = std::move(candidate);
            break;
        }
    }
    for (std::uint64_t t = 1;; ++t) {
        ExtElement x = nth_element(t);
        if (is_primitive(x)) {
            alpha_ = std::move(x);
            break;
        }
    }
}

SplittingField SplittingField::for_length(const Field& base, std::size_t n) {
    if (n == 0 || n % base.p() == 0) {
        throw std::invalid_argument("splitting field of x^n - 1 needs gcd(n, p) = 1; n = " + std::to_string(n));
    }
    return SplittingField(base, multiplicative_order_mod(base.order(), n));
}

ExtElement SplittingField::nth_element(std::uint64_t t) const {
    ExtElement out(m_);
    const std::uint64_t q = base_.order();
    for (std::size_t i = 0; i < m_; ++i) {
        out[i] = base_.element(static_cast<std::uint32_t>(t % q));
        t /= q;
    }
    return out;
}

ExtElement SplittingField::one() const { return embed(base_.one()); }

ExtElement SplittingField::embed(FieldElement c) const {
    ExtElement out(m_);
    out[0] = c;
    return out;
}

bool SplittingField::in_base(const ExtElement& x) const {
    return std::all_of(x.begin() + 1, x.end(), [](FieldElement c) { return c.is_zero(); });
}

FieldElement SplittingField::to_base(const ExtElement& x) const {
    if (!in_base(x)) throw std::invalid_argument("element does not lie in GF(p^2)");
    return x[0];
}

ExtElement SplittingField::add(const ExtElement& x, const ExtElement& y) const {
    ExtElement out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i] = base_.add(x[i], y[i]);
    return out;
}

ExtElement SplittingField::sub(const ExtElement& x, const ExtElement& y) const {
    ExtElement out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i] = base_.sub(x[i], y[i]);
    return out;
}

ExtElement SplittingField::mul(const ExtElement& x, const ExtElement& y) const {
    if (m_ == 1) return {base_.mul(x[0], y[0])};
    std::vector<FieldElement> prod(2 * m_ - 1);
    for (std::size_t i = 0; i < m_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < m_; ++j) prod[i + j] = base_.mul_add(x[i], y[j], prod[i + j]);
    }
    // modulus is monic of degree m: y^m = -sum_{k<m} c_k y^k
    const auto& mc = modulus_.coeffs();
    for (std::size_t d = prod.size(); d-- > m_;) {
        const FieldElement top = prod[d];
        if (top.is_zero()) continue;
        const FieldElement neg_top = base_.neg(top);
        for (std::size_t k = 0; k < m_; ++k) prod[d - m_ + k] = base_.mul_add(neg_top, mc[k], prod[d - m_ + k]);
        prod[d] = {};
    }
    prod.resize(m_);
    return prod;
}

ExtElement SplittingField::pow(ExtElement x, std::uint64_t e) const {
    ExtElement result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, x);
        e >>= 1;
        if (e > 0) x = mul(x, x);
    }
    return result;
}

bool SplittingField::is_primitive(const ExtElement& x) const {
    if (std::all_of(x.begin(), x.end(), [](FieldElement c) { return c.is_zero(); })) return false;
    if (pow(x, group_order_) != one()) return false;
    return std::all_of(order_primes_.begin(), order_primes_.end(),
                       [&](std::uint64_t r) { return pow(x, group_order_ / r) != one(); });
}

ExtElement SplittingField::element_of_order(std::uint64_t d) const {
    if (d == 0 || group_order_ % d != 0) {
        throw std::invalid_argument("no element of order " + std::to_string(d) + " in the splitting field");
    }
    return pow(alpha_, group_order_ / d);
}

RootsOfUnity RootsOfUnity::for_length(const Field& f, std::size_t n) {
    SplittingField sf = SplittingField::for_length(f, n);
    ExtElement beta = sf.element_of_order(n);
    return {std::move(sf), std::move(beta), n};
}

Polynomial RootsOfUnity::product_of_linear(const std::vector<std::size_t>& exponents) const {
    std::vector<ExtElement> acc{field.one()};
    for (std::size_t k : exponents) {
        const ExtElement neg_root = field.sub(field.zero(), power(k));
        std::vector<ExtElement> next(acc.size() + 1, field.zero());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = field.add(next[i + 1], acc[i]);
            next[i] = field.add(next[i], field.mul(acc[i], neg_root));
        }
        acc = std::move(next);
    }
    std::vector<FieldElement> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& c : acc) {
        if (!field.in_base(c)) {
            throw std::invalid_argument("product of (x - beta^k) has coefficients outside GF(p^2); "
                                        "the exponent set is not a union of cyclotomic cosets");
        }
        coeffs.push_back(c[0]);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace qconx
