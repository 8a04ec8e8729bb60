#include "qconx/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace qconx {

Json to_json(FieldElement x) { return Json::array({x.a, x.b}); }

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row_vector(r)));
    return out;
}

Json to_json(const Polynomial& g) { return to_json(g.coeffs()); }

Json to_json(const DistanceReport& r) {
    Json out;
    out["value"] = r.value;
    out["lower_bound"] = r.lower_bound;
    out["kind"] = to_string(r.kind);
    out["method"] = to_string(r.method);
    out["work"] = r.work;
    out["witness"] = to_json(r.witness);
    return out;
}

Json to_json(const QuantumCodeParams& q) {
    Json out;
    out["N"] = q.N;
    out["K"] = q.K;
    out["d_lower"] = q.d_lower;
    out["d_exact"] = q.d_exact ? Json(*q.d_exact) : Json(nullptr);
    out["p"] = q.p;
    out["field_size"] = q.p * q.p;
    return out;
}

Json to_json(const Field& f, const ConstructionResult& r) {
    Json out;
    out["source"] = r.source;
    out["p"] = f.p();
    out["n"] = r.n;
    out["k"] = r.k;
    out["hull_dim"] = r.s;
    out["e"] = r.e;
    if (r.generator) {
        out["generator_polynomial"] = to_json(*r.generator);
        out["generator_text"] = to_string(f, *r.generator);
    }
    if (r.defining_set) out["defining_set"] = r.defining_set->elements;
    if (r.source == "defining_set") out["extension_roots"] = r.extension_roots;
    out["extension_constant"] = to_json(r.extension_constant);
    out["params"] = to_json(r.params);
    out["M"] = to_json(r.hull_basis);
    out["A"] = to_json(r.complement);
    out["B"] = to_json(r.extension);
    out["G"] = to_json(r.G);
    out["E"] = to_json(r.E.generator());
    Json rows = Json::array();
    for (const auto& w : r.witness) {
        rows.push_back({{"row", w.row}, {"self_ip", to_json(w.self_ip)}, {"orthogonal", w.orthogonal}});
    }
    out["witness"] = rows;
    Json d;
    if (r.wt_c) d["wt_c"] = to_json(*r.wt_c);
    if (r.wt_sum) d["wt_sum"] = to_json(*r.wt_sum);
    if (r.wt_cu) d["wt_cu"] = to_json(*r.wt_cu);
    if (r.wt_e) d["wt_e"] = to_json(*r.wt_e);
    out["distances"] = d.is_null() ? Json::object() : d;
    Json notes = Json::array();
    if (r.e > 0) {
        const long k = static_cast<long>(r.k), n = static_cast<long>(r.n), e = static_cast<long>(r.e);
        notes.push_back("K = 2k+e-n = " + std::to_string(2 * k + e - n) + " from dim E; 2k-n would give " +
                        std::to_string(2 * k - n));
    }
    out["notes"] = notes;
    return out;
}

Json to_json(const ScanRecord& r) {
    Json out;
    out["p"] = r.p;
    out["s"] = r.s;
    out["n"] = r.n;
    out["exponents"] = {r.exps.i, r.exps.j, r.exps.k};
    out["k"] = r.k;
    out["hull_dim"] = r.hull_dim;
    out["e"] = r.e;
    out["N"] = r.N;
    out["K"] = r.K;
    out["d"] = r.d();
    out["d_lower"] = r.d_lower;
    out["d_exact"] = r.d_exact ? Json(*r.d_exact) : Json(nullptr);
    out["d_upper"] = r.d_upper ? Json(*r.d_upper) : Json(nullptr);
    out["wt_c"] = r.wt_c;
    out["wt_sum"] = r.wt_sum ? Json(*r.wt_sum) : Json(nullptr);
    out["mode"] = r.bound_only ? "bound-only" : "certified";
    return out;
}

Json to_json(const ScanSummary& s) {
    Json out;
    out["triples_examined"] = s.triples_examined;
    out["zero_codes_skipped"] = s.zero_codes_skipped;
    out["non_positive_K"] = s.non_positive_k;
    out["over_max_e"] = s.over_max_e;
    out["constructions"] = s.constructions;
    out["distance_work"] = s.distance_work;
    out["seconds"] = s.seconds;
    return out;
}

Json to_json(const RowComparison& c) {
    Json out;
    out["target"] = {{"N", c.target.N}, {"K", c.target.K}, {"d", c.target.d}, {"p", c.target.p}, {"s", c.target.s}};
    out["status"] = to_string(c.status);
    out["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
    out["note"] = c.note;
    return out;
}

Json field_info_json(const Field& f) {
    Json out;
    out["p"] = f.p();
    out["field_size"] = f.order();
    out["delta"] = f.delta();
    out["gamma"] = to_json(f.gamma());
    out["gamma_text"] = f.to_string(f.gamma());
    out["sqrt_minus_one"] = to_json(f.sqrt_minus_one());
    out["sqrt_minus_one_text"] = f.to_string(f.sqrt_minus_one());
    out["sqrt_minus_one_norm"] = f.norm(f.sqrt_minus_one()).a;
    const FieldElement c = extension_constant(f);
    out["extension_constant"] = to_json(c);
    out["extension_constant_text"] = f.to_string(c);
    if ((f.order() - 1) % 3 == 0) {
        const FieldElement w = f.element_of_order(3);
        out["omega"] = to_json(w);
        out["omega_text"] = f.to_string(w);
        out["omega_in_base_field"] = w.in_base_field();
    }
    out["conventions"] = {
        "elements are a+b*u with u^2 = delta, delta the smallest non-residue mod p",
        "conjugation is a+b*u -> a-b*u",
        "gamma is the lexicographically smallest (a,b) of order p^2-1",
        "sqrt_minus_one = gamma^((p^2-1)/4); omega = gamma^((p^2-1)/3)",
        "the Construction X extension constant c satisfies c^(p+1) = -1",
        "defining sets are relative to beta = alpha^((p^(2m)-1)/n), alpha the first primitive element of "
        "GF(p^(2m)) in enumeration order (alpha = gamma when m = 1)",
    };
    return out;
}

FieldElement element_from_json(const Field& f, const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw std::invalid_argument("field element must be [a, b], got " + j.dump());
    }
    const long a = j[0].get<long>(), b = j[1].get<long>();
    if (a < 0 || b < 0 || a >= static_cast<long>(f.p()) || b >= static_cast<long>(f.p())) {
        throw std::invalid_argument("field element " + j.dump() + " is outside GF(" + std::to_string(f.order()) + ")");
    }
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
}

Vector vector_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of field elements");
    Vector out;
    for (const auto& x : j) out.push_back(element_from_json(f, x));
    return out;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t cols) {
    if (!j.is_array()) throw std::invalid_argument("expected a matrix (array of rows)");
    Matrix out(0, cols);
    for (const auto& row : j) {
        Vector v = vector_from_json(f, row);
        if (v.size() != cols) throw std::invalid_argument("matrix row has " + std::to_string(v.size()) +
                                                         " entries, expected " + std::to_string(cols));
        out.append_row(v);
    }
    return out;
}

Polynomial polynomial_from_json(const Field& f, const Json& j) { return Polynomial(vector_from_json(f, j)); }

ScanRecord scan_record_from_json(const Json& j) {
    ScanRecord r;
    try {
        r.p = j.at("p").get<std::uint32_t>();
        r.s = j.at("s").get<std::size_t>();
        r.n = j.at("n").get<std::size_t>();
        const auto& x = j.at("exponents");
        r.exps = {x.at(0).get<std::size_t>(), x.at(1).get<std::size_t>(), x.at(2).get<std::size_t>()};
        r.k = j.at("k").get<std::size_t>();
        r.hull_dim = j.at("hull_dim").get<std::size_t>();
        r.e = j.at("e").get<std::size_t>();
        r.N = j.at("N").get<std::size_t>();
        r.K = j.at("K").get<long>();
        r.d_lower = j.at("d_lower").get<std::size_t>();
        if (!j.at("d_exact").is_null()) r.d_exact = j.at("d_exact").get<std::size_t>();
        if (!j.at("d_upper").is_null()) r.d_upper = j.at("d_upper").get<std::size_t>();
        r.wt_c = j.at("wt_c").get<std::size_t>();
        if (!j.at("wt_sum").is_null()) r.wt_sum = j.at("wt_sum").get<std::size_t>();
        r.bound_only = j.at("mode").get<std::string>() == "bound-only";
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("malformed scan record: ") + ex.what());
    }
    return r;
}

std::string scan_csv_header() { return "p,s,n,i,j,k,dim,hull_dim,e,N,K,d,d_lower,d_exact,d_upper,mode"; }

std::string to_csv(const ScanRecord& r) {
    std::ostringstream os;
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
    os << r.p << ',' << r.s << ',' << r.n << ',' << r.exps.i << ',' << r.exps.j << ',' << r.exps.k << ',' << r.k
       << ',' << r.hull_dim << ',' << r.e << ',' << r.N << ',' << r.K << ',' << r.d() << ',' << r.d_lower << ','
       << opt(r.d_exact) << ',' << opt(r.d_upper) << ',' << (r.bound_only ? "bound-only" : "certified");
    return os.str();
}

}  // namespace qconx
