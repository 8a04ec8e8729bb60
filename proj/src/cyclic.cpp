#include "qconx/cyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qconx/splitting_field.hpp"

namespace qconx {

CyclicCode::CyclicCode(const Field& f, std::size_t n, const Polynomial& g) : n_(n) {
    if (n == 0) throw std::invalid_argument("cyclic code length must be positive");
    if (g.is_zero()) throw std::invalid_argument("generator polynomial must be nonzero");
    if (!divides(f, g, Polynomial::xn_minus_one(f, n))) {
        throw std::invalid_argument("generator " + to_string(f, g) + " does not divide x^" + std::to_string(n) +
                                    " - 1");
    }
    g_ = monic(f, g);
}

Polynomial CyclicCode::check_polynomial(const Field& f) const {
    return exact_div(f, Polynomial::xn_minus_one(f, n_), g_);
}

Matrix CyclicCode::generator_matrix() const {
    const std::size_t k = dimension();
    Matrix m(k, n_);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < g_.coeffs().size(); ++j) m(r, r + j) = g_.coeffs()[j];
    }
    return m;
}

Matrix CyclicCode::parity_check_matrix(const Field& f) const {
    const Polynomial h = check_polynomial(f);
    const std::size_t k = dimension();
    const std::size_t r = n_ - k;
    Matrix m(r, n_);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j <= k; ++j) m(i, i + j) = h.coeff(k - j);
    }
    return m;
}

LinearCode CyclicCode::to_linear(const Field& f) const {
    if (dimension() == 0) return LinearCode::zero(n_);
    return LinearCode(f, generator_matrix());
}

bool CyclicCode::contains(const Field& f, const Polynomial& word) const {
    return mod(f, Polynomial(reduce_cyclic(f, word, n_)), g_).is_zero();
}

CyclicCode hermitian_dual_cyclic(const Field& f, const CyclicCode& c) {
    return CyclicCode(f, c.length(), herm_reciprocal(f, c.check_polynomial(f)));
}

CyclicCode sum_cyclic(const Field& f, const CyclicCode& a, const CyclicCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("sum_cyclic: length mismatch");
    return CyclicCode(f, a.length(), gcd(f, a.generator(), b.generator()));
}

CyclicCode intersect_cyclic(const Field& f, const CyclicCode& a, const CyclicCode& b) {
    if (a.length() != b.length()) throw std::invalid_argument("intersect_cyclic: length mismatch");
    const Polynomial g = gcd(f, a.generator(), b.generator());
    return CyclicCode(f, a.length(), exact_div(f, mul(f, a.generator(), b.generator()), g));
}

namespace {

void require_3ps_family(std::uint32_t p, std::size_t s) {
    if (p <= 3) throw std::invalid_argument("length-3p^s family needs p > 3");
    if (s == 0) throw std::invalid_argument("length-3p^s family needs s >= 1");
}

}  // namespace

CyclicCode repeated_root_code(const Field& f, std::size_t s, Exponents3 e) {
    require_3ps_family(f.p(), s);
    const std::size_t ps = int_pow(f.p(), s);
    if (e.i > ps || e.j > ps || e.k > ps) {
        throw std::invalid_argument("exponents must lie in [0, p^s] = [0, " + std::to_string(ps) + "]");
    }
    const FieldElement w = f.element_of_order(3);
    Polynomial g = pow(f, Polynomial::linear(f, f.one()), e.i);
    g = mul(f, g, pow(f, Polynomial::linear(f, w), e.j));
    g = mul(f, g, pow(f, Polynomial::linear(f, f.mul(w, w)), e.k));
    return CyclicCode(f, 3 * ps, g);
}

Exponents3 exponents_of(const Field& f, const CyclicCode& c, std::size_t s) {
    require_3ps_family(f.p(), s);
    if (c.length() != 3 * int_pow(f.p(), s)) throw std::invalid_argument("code length is not 3p^s");
    const FieldElement w = f.element_of_order(3);
    Polynomial rest = c.generator();
    auto strip = [&](FieldElement root) {
        const Polynomial lin = Polynomial::linear(f, root);
        std::size_t count = 0;
        for (;;) {
            auto [q, r] = divmod(f, rest, lin);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++count;
        }
        return count;
    };
    Exponents3 out;
    out.i = strip(f.one());
    out.j = strip(w);
    out.k = strip(f.mul(w, w));
    return out;
}

Exponents3 dual_exponents_3ps(std::uint32_t p, std::size_t s, Exponents3 e) {
    require_3ps_family(p, s);
    const std::size_t ps = int_pow(p, s);
    if (e.i > ps || e.j > ps || e.k > ps) {
        throw std::invalid_argument("exponents must lie in [0, p^s] = [0, " + std::to_string(ps) + "]");
    }
    // Roots of h^perp are r^(-p) for roots r of h; w^(-p) = w^2 exactly when p = 1 mod 3.
    if (p % 3 == 1) return {ps - e.i, ps - e.k, ps - e.j};
    return {ps - e.i, ps - e.j, ps - e.k};
}

std::size_t distance_3ps(std::uint32_t p, std::size_t s, Exponents3 e) {
    require_3ps_family(p, s);
    const std::size_t ps = int_pow(p, s);
    if (e.i > ps || e.j > ps || e.k > ps) {
        throw std::invalid_argument("exponents must lie in [0, p^s] = [0, " + std::to_string(ps) + "]");
    }
    if (e.i == ps && e.j == ps && e.k == ps) throw std::invalid_argument("the zero code has no minimum distance");
    std::size_t best = SIZE_MAX;
    for (std::size_t t = 0; t < ps; ++t) {
        const std::size_t above = (e.i > t) + (e.j > t) + (e.k > t);
        if (above == 3) continue;
        std::size_t weight = 1;
        for (std::size_t x = t; x > 0; x /= p) weight *= x % p + 1;
        best = std::min(best, weight * (above + 1));
    }
    return best;
}

boost::multiprecision::cpp_int codeword_count(const Field& f, const CyclicCode& c, std::size_t s) {
    const Exponents3 e = exponents_of(f, c, s);
    const std::size_t n = c.length();
    boost::multiprecision::cpp_int out = 1;
    for (std::size_t t = 0; t < 2 * (n - e.total()); ++t) out *= f.p();
    return out;
}

DefiningSet::DefiningSet(std::size_t n_, std::vector<std::size_t> elems) : n(n_), elements(std::move(elems)) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!elements.empty() && elements.back() >= n) {
        throw std::invalid_argument("defining set element " + std::to_string(elements.back()) + " is not below n = " +
                                    std::to_string(n));
    }
}

bool DefiningSet::contains(std::size_t x) const { return std::binary_search(elements.begin(), elements.end(), x); }

namespace {

void require_simple_root(const Field& f, std::size_t n) {
    if (n == 0 || n % f.p() == 0) {
        throw std::invalid_argument("defining sets need gcd(n, p) = 1; n = " + std::to_string(n) +
                                    ", p = " + std::to_string(f.p()));
    }
}

}  // namespace

std::vector<std::size_t> cyclotomic_coset(const Field& f, std::size_t a, std::size_t n) {
    require_simple_root(f, n);
    return q_coset(f.order(), a, n);
}

std::vector<std::vector<std::size_t>> cyclotomic_cosets(const Field& f, std::size_t n) {
    require_simple_root(f, n);
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        out.push_back(q_coset(f.order(), a, n));
        for (auto x : out.back()) seen[x] = true;
    }
    return out;
}

bool is_coset_closed(const Field& f, const DefiningSet& z) {
    const std::uint64_t q = f.order();
    return std::all_of(z.elements.begin(), z.elements.end(),
                       [&](std::size_t x) { return z.contains(static_cast<std::size_t>((x * q) % z.n)); });
}

DefiningSet neg_p_set(const Field& f, const DefiningSet& z) {
    std::vector<std::size_t> out;
    out.reserve(z.size());
    const std::size_t pm = f.p() % z.n;
    for (auto x : z.elements) out.push_back((z.n - (x * pm) % z.n) % z.n);
    return {z.n, std::move(out)};
}

DefiningSet set_intersection(const DefiningSet& a, const DefiningSet& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                          std::back_inserter(out));
    return {a.n, std::move(out)};
}

DefiningSet set_difference(const DefiningSet& a, const DefiningSet& b) {
    std::vector<std::size_t> out;
    std::set_difference(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(out));
    return {a.n, std::move(out)};
}

DefiningSet set_complement(const DefiningSet& a) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < a.n; ++x) {
        if (!a.contains(x)) out.push_back(x);
    }
    return {a.n, std::move(out)};
}

HullDims hull_dim_from_defining_set(const Field& f, const DefiningSet& z) {
    const std::size_t e = set_intersection(z, neg_p_set(f, z)).size();
    return {e, z.size() - e};
}

CyclicCode from_defining_set(const Field& f, const DefiningSet& z) {
    require_simple_root(f, z.n);
    if (!is_coset_closed(f, z)) throw std::invalid_argument("defining set is not a union of cyclotomic cosets");
    const RootsOfUnity roots = RootsOfUnity::for_length(f, z.n);
    return CyclicCode(f, z.n, roots.product_of_linear(z.elements));
}

}  // namespace qconx
