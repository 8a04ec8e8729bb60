#include "qconx/constructx.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qconx/splitting_field.hpp"

namespace qconx {

namespace {

// Sweep z = c*x + y over c in GF(p^2) for a vector of norm k.
std::optional<Vector> sweep_pair(const Field& f, const Vector& x, const Vector& y, FieldElement k, bool nonzero) {
    for (std::uint32_t idx = 0; idx < f.order(); ++idx) {
        Vector z = axpy(f, y, f.element(idx), x);
        if (hermitian_norm(f, z) != k) continue;
        if (nonzero && hamming_weight(z) == 0) continue;
        return z;
    }
    return std::nullopt;
}

// Rows of `candidates` that extend `base` to a basis of their joint span.
Matrix extend_basis(const Field& f, const Matrix& base, const Matrix& candidates) {
    Matrix acc = base;
    Matrix added(0, candidates.cols());
    std::size_t r = rank(f, acc);
    for (std::size_t i = 0; i < candidates.rows(); ++i) {
        Matrix trial = acc;
        trial.append_row(candidates.row(i));
        const std::size_t tr = rank(f, trial);
        if (tr > r) {
            acc = std::move(trial);
            added.append_row(candidates.row(i));
            r = tr;
        }
    }
    return added;
}

Matrix empty_rows(std::size_t cols) { return Matrix(0, cols); }

}  // namespace

Vector find_norm_k_vector(const Field& f, std::span<const Vector> basis, FieldElement k) {
    if (!k.in_base_field()) throw std::invalid_argument("a Hermitian norm lies in GF(p)");
    if (basis.empty()) {
        if (k.is_zero()) return {};
        throw std::invalid_argument("cannot find a vector of nonzero norm in the zero space");
    }
    const std::size_t len = basis.front().size();

    if (k.is_zero()) {
        for (const auto& v : basis) {
            if (hamming_weight(v) != 0 && hermitian_norm(f, v).is_zero()) return v;
        }
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                if (auto z = sweep_pair(f, basis[i], basis[j], k, true)) return *z;
        return Vector(len);
    }

    for (const auto& v : basis) {
        const FieldElement nv = hermitian_norm(f, v);
        if (nv.is_zero()) continue;
        return scaled(f, v, f.norm_preimage(f.div(k, nv)));
    }
    // Every basis vector is isotropic; use a non-orthogonal pair.
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (hermitian_ip(f, basis[i], basis[j]).is_zero()) continue;
            if (auto z = sweep_pair(f, basis[i], basis[j], k, true)) return *z;
            throw std::logic_error("norm sweep over a non-orthogonal pair found no vector of norm " + f.to_string(k));
        }
    throw std::invalid_argument("span is totally isotropic: no vector of norm " + f.to_string(k));
}

OrthonormalCompletion orthonormal_complete(const Field& f, const LinearCode& d) {
    const std::size_t n = d.length();
    OrthonormalCompletion out;
    out.hull_basis = hull(f, d).generator();
    if (out.hull_basis.rows() == 0) out.hull_basis = empty_rows(n);
    out.orthonormal = empty_rows(n);

    // rest spans a complement of hull + span(B), orthogonal to span(B).
    std::vector<Vector> rest = extend_basis(f, out.hull_basis, d.generator()).row_vectors();
    while (!rest.empty()) {
        Vector z;
        try {
            z = find_norm_k_vector(f, rest, f.one());
        } catch (const std::invalid_argument& ex) {
            throw std::logic_error(std::string("orthonormal completion: ") + ex.what());
        }
        out.orthonormal.append_row(z);
        // r -> r - <r, z> z kills the z direction and leaves the rest orthogonal to z.
        Matrix projected(0, n);
        for (const auto& r : rest) projected.append_row(axpy(f, r, f.neg(hermitian_ip(f, r, z)), z));
        rest = rref(f, projected).reduced.row_vectors();
    }
    return out;
}

FieldElement extension_constant(const Field& f) {
    const FieldElement minus_one = f.neg(f.one());
    const FieldElement i = f.sqrt_minus_one();
    if (f.norm(i) == minus_one) return i;
    return f.norm_preimage(minus_one);
}

Vector b_vector(const Field& f, std::size_t n, FieldElement root) {
    Vector out(n);
    FieldElement power = f.one();
    for (std::size_t i = n; i-- > 0;) {
        out[i] = power;
        power = f.mul(power, root);
    }
    return out;
}

namespace {

ConstructionResult assemble(const Field& f, const LinearCode& c, const Matrix& hull_basis, const Matrix& b_rows,
                            const ConstructionOptions& opt) {
    const std::size_t n = c.length();
    ConstructionResult r;
    r.n = n;
    r.k = c.dimension();
    r.s = hull_basis.rows();
    r.e = b_rows.rows();
    r.hull_basis = hull_basis;
    r.extension = b_rows;
    r.complement = extend_basis(f, hull_basis, c.generator());
    r.extension_constant = extension_constant(f);

    const std::size_t len = n + r.e;
    r.G = Matrix(0, len);
    auto push = [&](std::span<const FieldElement> head, std::optional<std::size_t> tail) {
        Vector row(len);
        std::copy(head.begin(), head.end(), row.begin());
        if (tail) row[n + *tail] = r.extension_constant;
        r.G.append_row(row);
    };
    for (std::size_t i = 0; i < r.hull_basis.rows(); ++i) push(r.hull_basis.row(i), std::nullopt);
    for (std::size_t i = 0; i < r.complement.rows(); ++i) push(r.complement.row(i), std::nullopt);
    for (std::size_t i = 0; i < r.e; ++i) push(r.extension.row(i), i);
    r.E = LinearCode(f, r.G);

    // S rows: [M | 0] and [B | c·I].
    std::vector<std::size_t> s_rows;
    for (std::size_t i = 0; i < r.s; ++i) s_rows.push_back(i);
    for (std::size_t i = 0; i < r.e; ++i) s_rows.push_back(r.s + r.complement.rows() + i);
    for (std::size_t a : s_rows) {
        RowCheck rc;
        rc.row = a;
        rc.self_ip = hermitian_ip(f, r.G.row(a), r.G.row(a));
        for (std::size_t b : s_rows) {
            if (b != a && !hermitian_ip(f, r.G.row(a), r.G.row(b)).is_zero()) rc.orthogonal = false;
        }
        r.witness.push_back(rc);
    }
    if (opt.verify) {
        for (const auto& rc : r.witness) {
            if (!rc.self_ip.is_zero() || !rc.orthogonal) {
                throw std::logic_error("row " + std::to_string(rc.row) + " of the extended generator is not " +
                                       "Hermitian self-orthogonal (norm " + f.to_string(rc.self_ip) + ")");
            }
        }
        const std::string failure = check_construction(f, c, r);
        if (!failure.empty()) throw std::logic_error(failure);
    }
    r.params.N = len;
    r.params.K = 2 * static_cast<long>(r.E.dimension()) - static_cast<long>(len);
    r.params.p = f.p();
    return r;
}

void certify_e(const Field& f, ConstructionResult& r, const ConstructionOptions& opt) {
    if (!opt.compute_exact) return;
    DistanceOptions d = opt.distance;
    d.cyclic = false;
    d.weight_cap = 0;
    r.wt_e = min_weight(f, r.E, d);
    if (r.wt_e->is_exact()) r.params.d_exact = r.wt_e->value;
}

void apply_lower_bound(ConstructionResult& r) {
    std::size_t d = r.wt_c->lower_bound;
    if (r.wt_sum) d = std::min(d, r.wt_sum->lower_bound + 1);
    r.params.d_lower = d;
}

}  // namespace

std::string check_construction(const Field& f, const LinearCode& c, const ConstructionResult& r) {
    const std::size_t n = c.length();
    if (r.E.length() != n + r.e) return "length of E is " + std::to_string(r.E.length()) + ", expected n+e";
    if (r.E.dimension() != c.dimension() + r.e) {
        return "dim E = " + std::to_string(r.E.dimension()) + ", expected k+e = " +
               std::to_string(c.dimension() + r.e);
    }
    if (!is_subcode(f, hermitian_dual(f, r.E), r.E)) return "E^perp_h is not contained in E";
    const LinearCode dual = hermitian_dual(f, c);
    for (std::size_t i = 0; i < r.extension.rows(); ++i) {
        if (!dual.contains(f, r.extension.row(i))) return "extension row " + std::to_string(i) + " is not in C^perp_h";
        for (std::size_t j = 0; j < r.extension.rows(); ++j) {
            const FieldElement ip = hermitian_ip(f, r.extension.row(i), r.extension.row(j));
            if (ip != (i == j ? f.one() : f.zero())) {
                return "Gram matrix of B differs from the identity at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")";
            }
        }
    }
    if (rank(f, r.hull_basis.stacked(r.extension)) != dual.dimension()) return "M and B do not span C^perp_h";
    return {};
}

ConstructionResult construction_x(const Field& f, const LinearCode& c, const ConstructionOptions& opt) {
    if (c.is_zero()) throw std::invalid_argument("Construction X needs a nonzero code");
    const LinearCode dual = hermitian_dual(f, c);
    const OrthonormalCompletion oc = orthonormal_complete(f, dual);
    ConstructionResult r = assemble(f, c, oc.hull_basis, oc.orthonormal, opt);
    r.source = "linear";
    if (opt.compute_distances) {
        r.wt_c = min_weight(f, c, opt.distance);
        if (r.e > 0) r.wt_sum = min_weight(f, sum_code(f, c, dual), opt.distance);
        apply_lower_bound(r);
    }
    certify_e(f, r, opt);
    return r;
}

ConstructionResult construction_x(const Field& f, const CyclicCode& c, const ConstructionOptions& opt) {
    if (c.dimension() == 0) throw std::invalid_argument("Construction X needs a nonzero code");
    const LinearCode lin = c.to_linear(f);
    const LinearCode dual = hermitian_dual(f, lin);
    const OrthonormalCompletion oc = orthonormal_complete(f, dual);
    ConstructionResult r = assemble(f, lin, oc.hull_basis, oc.orthonormal, opt);
    r.source = "cyclic";
    r.generator = c.generator();
    if (opt.compute_distances) {
        r.wt_c = min_weight(f, c, opt.distance);
        if (r.e > 0) r.wt_sum = min_weight(f, sum_cyclic(f, c, hermitian_dual_cyclic(f, c)), opt.distance);
        apply_lower_bound(r);
    }
    certify_e(f, r, opt);
    return r;
}

ConstructionResult construction_x_cyclic(const Field& f, const DefiningSet& z, const ConstructionOptions& opt) {
    const std::size_t n = z.n;
    const std::size_t q1 = static_cast<std::size_t>(f.order()) - 1;
    if (n % q1 != 0) {
        throw std::invalid_argument("defining-set construction needs p^2-1 = " + std::to_string(q1) +
                                    " to divide n = " + std::to_string(n));
    }
    const std::size_t l = n / q1;
    const CyclicCode c = from_defining_set(f, z);
    if (c.dimension() == 0) throw std::invalid_argument("Construction X needs a nonzero code");
    const DefiningSet shared = set_intersection(z, neg_p_set(f, z));
    for (std::size_t x : shared.elements) {
        if (x % l != 0) {
            throw std::invalid_argument("element " + std::to_string(x) + " of Z ∩ -pZ is not in T = {t·" +
                                        std::to_string(l) + "}");
        }
        if ((x * (f.p() + 1)) % n != 0) {
            throw std::invalid_argument("element " + std::to_string(x) + " of Z ∩ -pZ has t = " +
                                        std::to_string(x / l) + " not divisible by p-1; its b_t is isotropic");
        }
    }

    const RootsOfUnity roots = RootsOfUnity::for_length(f, n);
    Matrix b_rows(0, n);
    for (std::size_t x : shared.elements) {
        const FieldElement root = roots.field.to_base(roots.power(x));
        Vector b = b_vector(f, n, root);
        const FieldElement raw = hermitian_norm(f, b);
        if (raw.is_zero()) throw std::logic_error("b_t for element " + std::to_string(x) + " is isotropic");
        b_rows.append_row(scaled(f, b, f.norm_preimage(f.inv(raw))));
    }

    const LinearCode lin = c.to_linear(f);
    Matrix m = hull(f, lin).generator();
    if (m.rows() == 0) m = Matrix(0, n);
    ConstructionResult r = assemble(f, lin, m, b_rows, opt);
    r.source = "defining_set";
    r.generator = c.generator();
    r.defining_set = z;
    r.extension_roots = shared.elements;

    if (opt.compute_distances) {
        r.wt_c = min_weight(f, c, opt.distance);
        std::size_t d = r.wt_c->lower_bound;
        if (r.e > 0) {
            for (std::size_t u : shared.elements) {
                std::vector<std::size_t> rest;
                for (std::size_t x : z.elements)
                    if (x != u) rest.push_back(x);
                const DistanceReport rep = min_weight(f, from_defining_set(f, DefiningSet(n, rest)), opt.distance);
                if (!r.wt_cu || rep.lower_bound < r.wt_cu->lower_bound) r.wt_cu = rep;
            }
            r.wt_sum = min_weight(f, sum_cyclic(f, c, hermitian_dual_cyclic(f, c)), opt.distance);
            d = std::min({d, r.wt_cu->lower_bound + 1, r.wt_sum->lower_bound + 2});
        }
        r.params.d_lower = d;
    }
    certify_e(f, r, opt);
    return r;
}

std::size_t construction_lower_bound(const Field& f, const LinearCode& c, const DistanceOptions& opt) {
    if (c.is_zero()) throw std::invalid_argument("distance bound of the zero code is undefined");
    const LinearCode dual = hermitian_dual(f, c);
    const std::size_t wc = min_weight(f, c, opt).lower_bound;
    if (is_subcode(f, dual, c)) return wc;
    return std::min(wc, min_weight(f, sum_code(f, c, dual), opt).lower_bound + 1);
}

}  // namespace qconx
