#include "qconx/polyring.hpp"

#include <cassert>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "qconx/splitting_field.hpp"

namespace qconx {

Polynomial::Polynomial(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(FieldElement c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(FieldElement c, std::size_t degree) {
    std::vector<FieldElement> coeffs(degree + 1);
    coeffs[degree] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear(const Field& f, FieldElement root) { return Polynomial({f.neg(root), f.one()}); }

Polynomial Polynomial::xn_minus_one(const Field& f, std::size_t n) {
    std::vector<FieldElement> coeffs(n + 1);
    coeffs[0] = f.neg(f.one());
    coeffs[n] = f.add(coeffs[n], f.one());
    return Polynomial(std::move(coeffs));
}

Polynomial add(const Field& f, const Polynomial& a, const Polynomial& b) {
    std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Polynomial(std::move(out));
}

Polynomial sub(const Field& f, const Polynomial& a, const Polynomial& b) {
    std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return Polynomial(std::move(out));
}

Polynomial scale(const Field& f, const Polynomial& a, FieldElement c) {
    std::vector<FieldElement> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(a.coeffs()[i], c);
    return Polynomial(std::move(out));
}

Polynomial mul(const Field& f, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<FieldElement> out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = f.mul_add(x[i], y[j], out[i + j]);
    }
    return Polynomial(std::move(out));
}

Polynomial pow(const Field& f, const Polynomial& a, std::size_t e) {
    Polynomial result = Polynomial::constant(f.one());
    Polynomial base = a;
    while (e > 0) {
        if (e & 1) result = mul(f, result, base);
        e >>= 1;
        if (e > 0) base = mul(f, base, base);
    }
    return result;
}

std::pair<Polynomial, Polynomial> divmod(const Field& f, const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<FieldElement> rem = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const FieldElement lead_inv = f.inv(d.back());
    std::vector<FieldElement> quot(rem.size() - db);
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        const FieldElement c = f.mul(rem[i], lead_inv);
        quot[i - db] = c;
        const FieldElement neg_c = f.neg(c);
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.mul_add(neg_c, d[j], rem[i - db + j]);
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial mod(const Field& f, const Polynomial& a, const Polynomial& b) { return divmod(f, a, b).second; }

Polynomial exact_div(const Field& f, const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(f, a, b);
    if (!r.is_zero()) throw std::invalid_argument("polynomial does not divide exactly");
    return q;
}

bool divides(const Field& f, const Polynomial& b, const Polynomial& a) { return mod(f, a, b).is_zero(); }

Polynomial monic(const Field& f, const Polynomial& a) {
    if (a.is_zero()) return a;
    return scale(f, a, f.inv(a.leading()));
}

Polynomial gcd(const Field& f, const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = mod(f, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(f, x);
}

FieldElement eval(const Field& f, const Polynomial& a, FieldElement x) {
    FieldElement acc{};
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.mul_add(acc, x, a.coeffs()[i]);
    return acc;
}

std::vector<FieldElement> reduce_cyclic(const Field& f, const Polynomial& a, std::size_t n) {
    std::vector<FieldElement> out(n);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i % n] = f.add(out[i % n], a.coeffs()[i]);
    return out;
}

Polynomial conj_poly(const Field& f, const Polynomial& a) {
    std::vector<FieldElement> out(a.coeffs());
    for (auto& c : out) c = f.conjugate(c);
    return Polynomial(std::move(out));
}

Polynomial reciprocal(const Polynomial& a) {
    if (a.is_zero()) throw std::invalid_argument("reciprocal of the zero polynomial");
    assert(!a.coeffs().front().is_zero() && "reciprocal of a polynomial with a(0) = 0 drops x-factors");
    std::vector<FieldElement> out(a.coeffs().rbegin(), a.coeffs().rend());
    return Polynomial(std::move(out));
}

Polynomial herm_reciprocal(const Field& f, const Polynomial& a) { return conj_poly(f, reciprocal(a)); }

Polynomial Factorization::expand(const Field& f) const {
    Polynomial out = Polynomial::constant(f.one());
    for (const auto& [factor, mult] : factors) out = mul(f, out, pow(f, factor, mult));
    return out;
}

std::size_t int_pow(std::size_t base, std::size_t e) {
    std::size_t out = 1;
    while (e-- > 0) out *= base;
    return out;
}

Factorization factor_xn_minus_1_simple(const Field& f, std::size_t n) {
    if (n == 0) throw std::invalid_argument("length must be positive");
    if (n % f.p() == 0) {
        throw std::invalid_argument("factor_xn_minus_1_simple needs gcd(n, p) = 1; n = " + std::to_string(n) +
                                    ", p = " + std::to_string(f.p()));
    }
    const RootsOfUnity roots = RootsOfUnity::for_length(f, n);
    const std::uint64_t q = f.order();
    Factorization out;
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        auto coset = q_coset(q, a, n);
        for (auto c : coset) seen[c] = true;
        out.factors.push_back({roots.product_of_linear(coset), 1});
    }
    return out;
}

Factorization factor_x3ps_minus_1(const Field& f, std::size_t s) {
    if (f.p() <= 3) throw std::invalid_argument("factor_x3ps_minus_1 needs p > 3");
    if (s == 0) throw std::invalid_argument("factor_x3ps_minus_1 needs s >= 1");
    const FieldElement w = f.element_of_order(3);
    const std::size_t mult = int_pow(f.p(), s);
    return {{{Polynomial::linear(f, f.one()), mult},
             {Polynomial::linear(f, w), mult},
             {Polynomial::linear(f, f.mul(w, w)), mult}}};
}

std::string to_string(const Field& f, const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        const FieldElement c = a.coeffs()[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = f.to_string(c);
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c != f.one()) out += cs + "*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

namespace {

bool has_cube_root_of_unity(const Field& f) { return (std::uint64_t{f.order()} - 1) % 3 == 0; }

FieldElement parse_root(const Field& f, const std::string& token) {
    if (token == "w" || token == "w1") return f.element_of_order(3);
    if (token == "w2" || token == "w^2") {
        const FieldElement w = f.element_of_order(3);
        return f.mul(w, w);
    }
    return f.parse(token);
}

std::string root_name(const Field& f, FieldElement r) {
    if (r == f.one()) return "1";
    if (has_cube_root_of_unity(f)) {
        const FieldElement w = f.element_of_order(3);
        if (r == w) return "w";
        if (r == f.mul(w, w)) return "w2";
    }
    return f.to_string(r);
}

}  // namespace

Polynomial parse_factored(const Field& f, std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    Polynomial out = Polynomial::constant(f.one());
    if (s.empty() || s == "1") return out;

    auto fail = [&](const std::string& why) {
        return std::invalid_argument("cannot parse factored polynomial '" + std::string(text) + "': " + why);
    };
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == '*') {
            ++pos;
            continue;
        }
        if (s[pos] != '(') throw fail("expected '('");
        const std::size_t close = s.find(')', pos);
        if (close == std::string::npos) throw fail("unbalanced parenthesis");
        const std::string inner = s.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        if (inner.size() < 3 || inner[0] != 'x' || (inner[1] != '-' && inner[1] != '+')) {
            throw fail("factor must look like (x-r) or (x+r)");
        }
        FieldElement root = parse_root(f, inner.substr(2));
        if (inner[1] == '+') root = f.neg(root);

        std::size_t exponent = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            const std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw fail("missing exponent");
            exponent = std::stoul(s.substr(start, pos - start));
        }
        out = mul(f, out, pow(f, Polynomial::linear(f, root), exponent));
    }
    return out;
}

std::string to_factored_string(const Field& f, const Factorization& fz) {
    std::string out;
    for (const auto& [factor, mult] : fz.factors) {
        if (!out.empty()) out += "*";
        if (factor.degree() == 1 && factor.is_monic()) {
            out += "(x-" + root_name(f, f.neg(factor.coeff(0))) + ")";
        } else {
            out += "(" + to_string(f, factor) + ")";
        }
        out += "^" + std::to_string(mult);
    }
    return out.empty() ? "1" : out;
}

}  // namespace qconx
