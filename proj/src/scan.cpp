#include "qconx/scan.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qconx/constructx.hpp"

namespace qconx {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

Exponents3 componentwise(Exponents3 a, Exponents3 b, bool take_max) {
    auto pick = [&](std::size_t x, std::size_t y) { return take_max ? std::max(x, y) : std::min(x, y); };
    return {pick(a.i, b.i), pick(a.j, b.j), pick(a.k, b.k)};
}

// Scaling x -> w x and reversal permute the roots 1, w, w^2 without changing
// weights, so distances depend only on the sorted exponents.
Exponents3 sorted(Exponents3 e) {
    std::size_t v[3] = {e.i, e.j, e.k};
    std::sort(v, v + 3);
    return {v[0], v[1], v[2]};
}

bool dominates(Exponents3 x, Exponents3 y) { return x.i >= y.i && x.j >= y.j && x.k >= y.k; }

std::string exps_text(Exponents3 e) {
    return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.k) + ")";
}

// Closed-form distances of the whole family in O(1) per triple.
class DistanceTable {
public:
    DistanceTable(std::uint32_t p, std::size_t s) : ps_(int_pow(p, s)), range_min_((ps_ + 1) * (ps_ + 1), kInf) {
        std::vector<std::size_t> weight(ps_);
        for (std::size_t t = 0; t < ps_; ++t) {
            std::size_t w = 1;
            for (std::size_t x = t; x > 0; x /= p) w *= x % p + 1;
            weight[t] = w;
        }
        for (std::size_t lo = 0; lo <= ps_; ++lo) {
            std::size_t m = kInf;
            for (std::size_t hi = lo; hi <= ps_; ++hi) {
                range_min_[lo * (ps_ + 1) + hi] = m;
                if (hi < ps_) m = std::min(m, weight[hi]);
            }
        }
    }

    std::size_t operator()(Exponents3 e) const {
        std::size_t v[3] = {e.i, e.j, e.k};
        std::sort(v, v + 3);
        const std::size_t a = rmin(v[0], v[1]), b = rmin(v[1], v[2]), c = rmin(v[2], ps_);
        return std::min({a == kInf ? kInf : 3 * a, b == kInf ? kInf : 2 * b, c});
    }

private:
    std::size_t rmin(std::size_t lo, std::size_t hi) const { return range_min_[lo * (ps_ + 1) + hi]; }
    std::size_t ps_;
    std::vector<std::size_t> range_min_;
};

void validate(const ScanOptions& opt) {
    if (opt.p <= 3) throw std::invalid_argument("scan needs a prime p > 3");
    if (opt.s == 0) throw std::invalid_argument("scan needs s >= 1");
    const std::size_t n = 3 * int_pow(opt.p, opt.s);
    if (!opt.bound_only && n > kExactScanMaxLength) {
        throw std::invalid_argument("length " + std::to_string(n) + " exceeds " +
                                    std::to_string(kExactScanMaxLength) +
                                    " for certified distances; use bound-only mode");
    }
}

class Scanner {
public:
    Scanner(const Field& f, const ScanOptions& opt) : f_(f), opt_(opt), table_(opt.p, opt.s) {}

    ScanRecord base_record(Exponents3 x, const ClosedForm& cf) const {
        ScanRecord r;
        r.p = opt_.p;
        r.s = opt_.s;
        r.n = cf.n;
        r.exps = x;
        r.k = cf.k;
        r.e = cf.e;
        r.hull_dim = cf.hull_dim;
        r.N = cf.n + cf.e;
        r.K = cf.K;
        r.bound_only = opt_.bound_only;
        return r;
    }

    // Construction X on the matrix side, cross-checked against the closed form.
    void construct_and_check(Exponents3 x, const ClosedForm& cf, bool certify_e, ScanRecord* rec) {
        const CyclicCode c = repeated_root_code(f_, opt_.s, x);
        ConstructionOptions o;
        o.compute_distances = false;
        o.compute_exact = certify_e;
        o.distance = opt_.distance;
        const ConstructionResult r = construction_x(f_, c, o);
        ++summary.constructions;
        if (r.k != cf.k || r.s != cf.hull_dim || r.e != cf.e) {
            throw std::logic_error("closed-form dimensions disagree with Construction X at " + exps_text(x) +
                                   ": k,s,e = " + std::to_string(r.k) + "," + std::to_string(r.s) + "," +
                                   std::to_string(r.e) + " vs " + std::to_string(cf.k) + "," +
                                   std::to_string(cf.hull_dim) + "," + std::to_string(cf.e));
        }
        if (rec && r.wt_e) {
            summary.distance_work += r.wt_e->work;
            if (r.params.d_exact) {
                if (*r.params.d_exact < rec->d_lower) {
                    throw std::logic_error("minimum weight of E below the certified bound at " + exps_text(x));
                }
                rec->d_exact = r.params.d_exact;
            }
        }
    }

    const DistanceReport& certified(Exponents3 x) {
        x = sorted(x);
        auto it = cache_.find(x);
        if (it != cache_.end()) return it->second;
        DistanceOptions d = opt_.distance;
        d.weight_cap = 0;
        DistanceReport rep = min_weight(f_, repeated_root_code(f_, opt_.s, x), d);
        summary.distance_work += rep.work;
        if (rep.is_exact() && rep.value != table_(x)) {
            throw std::logic_error("support search and the closed form disagree at " + exps_text(x) + ": " +
                                   std::to_string(rep.value) + " vs " + std::to_string(table_(x)));
        }
        return cache_.emplace(x, std::move(rep)).first->second;
    }

    DistanceReport bounded(Exponents3 x, std::size_t cap) {
        x = sorted(x);
        if (auto it = bounded_cache_.find(x); it != bounded_cache_.end()) {
            const DistanceReport& hit = it->second.first;
            if (hit.is_exact() || it->second.second >= cap) return hit;
        }
        // A subcode of a code with no word of weight <= cap has none either.
        for (const Exponents3& y : clean_) {
            if (dominates(x, y)) {
                DistanceReport rep;
                rep.lower_bound = kBoundWeightCap + 1;
                rep.value = table_(x);
                rep.method = DistanceMethod::split_support_search;
                return rep;
            }
        }
        DistanceOptions d = opt_.distance;
        d.weight_cap = cap;
        d.sampling_rounds = 0;
        DistanceReport rep = min_weight(f_, repeated_root_code(f_, opt_.s, x), d);
        summary.distance_work += rep.work;
        const std::size_t closed = table_(x);
        if (rep.lower_bound > closed || (rep.is_exact() && rep.value != closed)) {
            throw std::logic_error("bounded search contradicts the closed form at " + exps_text(x));
        }
        if (!rep.is_exact() && cap >= kBoundWeightCap) clean_.push_back(x);
        bounded_cache_[x] = {rep, cap};
        return rep;
    }

    void fill_exact(ScanRecord& r, const ClosedForm& cf) {
        const DistanceReport& wc = certified(r.exps);
        r.wt_c = wc.lower_bound;
        r.d_lower = wc.lower_bound;
        if (cf.e > 0) {
            const DistanceReport& ws = certified(cf.sum);
            r.wt_sum = ws.lower_bound;
            r.d_lower = std::min(r.d_lower, ws.lower_bound + 1);
        }
    }

    void fill_bounds(ScanRecord& r, const ClosedForm& cf) {
        std::size_t cap_c = kBoundWeightCap;
        std::size_t d = kInf;
        if (cf.e > 0) {
            const DistanceReport ws = bounded(cf.sum, kBoundWeightCap - 1);
            r.wt_sum = ws.lower_bound;
            d = ws.lower_bound + 1;
            // Weights of C at or above wt(C + C^⊥h) + 1 cannot lower the bound.
            cap_c = std::min(cap_c, ws.lower_bound);
        }
        const DistanceReport wc = bounded(r.exps, cap_c);
        r.wt_c = wc.lower_bound;
        r.d_lower = std::min(d, wc.lower_bound);
    }

    std::size_t closed_bound(const ClosedForm& cf, Exponents3 x) const {
        std::size_t d = table_(x);
        if (cf.e > 0) d = std::min(d, table_(cf.sum) + 1);
        return d;
    }

    ScanSummary summary;

private:
    const Field& f_;
    const ScanOptions& opt_;
    DistanceTable table_;
    std::map<Exponents3, DistanceReport> cache_;
    std::map<Exponents3, std::pair<DistanceReport, std::size_t>> bounded_cache_;
    std::vector<Exponents3> clean_;
};

}  // namespace

ClosedForm closed_form_3ps(std::uint32_t p, std::size_t s, Exponents3 e) {
    ClosedForm cf;
    const std::size_t ps = int_pow(p, s);
    cf.n = 3 * ps;
    cf.dual = dual_exponents_3ps(p, s, e);
    cf.hull = componentwise(e, cf.dual, true);
    cf.sum = componentwise(e, cf.dual, false);
    cf.k = cf.n - e.total();
    cf.hull_dim = cf.n - cf.hull.total();
    cf.e = cf.n - cf.k - cf.hull_dim;
    cf.K = 2 * static_cast<long>(cf.k) + static_cast<long>(cf.e) - static_cast<long>(cf.n);
    return cf;
}

ScanResult run_scan(const Field& f, const ScanOptions& opt) {
    validate(opt);
    if (f.p() != opt.p) throw std::invalid_argument("field and scan prime differ");
    const auto start = std::chrono::steady_clock::now();
    const std::size_t ps = int_pow(opt.p, opt.s);
    Scanner scanner(f, opt);

    struct Best {
        ScanRecord rec;
        std::size_t key;  // d_lower (exact mode) or closed-form bound (bound-only)
    };
    std::map<std::pair<std::size_t, long>, Best> best;

    for (std::size_t i = 0; i <= ps; ++i)
        for (std::size_t j = 0; j <= ps; ++j)
            for (std::size_t k = 0; k <= ps; ++k) {
                ++scanner.summary.triples_examined;
                const Exponents3 x{i, j, k};
                if (i == ps && j == ps && k == ps) {
                    ++scanner.summary.zero_codes_skipped;
                    continue;
                }
                const ClosedForm cf = closed_form_3ps(opt.p, opt.s, x);
                if (!opt.bound_only) scanner.construct_and_check(x, cf, false, nullptr);
                if (cf.K <= 0) {
                    ++scanner.summary.non_positive_k;
                    continue;
                }
                if (opt.max_e && cf.e > *opt.max_e) {
                    ++scanner.summary.over_max_e;
                    continue;
                }
                ScanRecord rec = scanner.base_record(x, cf);
                std::size_t key;
                if (opt.bound_only) {
                    key = scanner.closed_bound(cf, x);
                    rec.d_upper = key;
                } else {
                    scanner.fill_exact(rec, cf);
                    key = rec.d_lower;
                }
                auto [it, inserted] = best.try_emplace({rec.N, rec.K}, Best{rec, key});
                if (!inserted && key > it->second.key) it->second = Best{rec, key};
            }

    ScanResult out;
    for (auto& [nk, b] : best) {
        ScanRecord rec = b.rec;
        const ClosedForm cf = closed_form_3ps(opt.p, opt.s, rec.exps);
        if (opt.bound_only) {
            scanner.fill_bounds(rec, cf);
        } else if (opt.certify_e) {
            scanner.construct_and_check(rec.exps, cf, true, &rec);
        }
        out.records.push_back(std::move(rec));
    }
    out.summary = scanner.summary;
    out.summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

ScanRecord scan_record(const Field& f, const ScanOptions& opt, Exponents3 x) {
    validate(opt);
    const ClosedForm cf = closed_form_3ps(opt.p, opt.s, x);
    if (x.total() == 3 * int_pow(opt.p, opt.s)) throw std::invalid_argument("the zero code has no record");
    Scanner scanner(f, opt);
    ScanRecord rec = scanner.base_record(x, cf);
    if (opt.bound_only) {
        rec.d_upper = scanner.closed_bound(cf, x);
        scanner.fill_bounds(rec, cf);
    } else {
        scanner.fill_exact(rec, cf);
        scanner.construct_and_check(x, cf, opt.certify_e, &rec);
    }
    return rec;
}

const std::vector<TargetRow>& reference_rows() {
    static const std::vector<TargetRow> rows = {
        {15, 9, 2, 5, 1},      {15, 7, 3, 5, 1},      {16, 6, 4, 5, 1},     {75, 69, 2, 5, 2},
        {75, 59, 3, 5, 2},     {75, 49, 4, 5, 2},     {82, 26, 5, 5, 2},    {375, 369, 2, 5, 3},
        {375, 319, 3, 5, 3},   {375, 269, 4, 5, 3},   {21, 15, 2, 7, 1},    {21, 13, 3, 7, 1},
        {21, 11, 4, 7, 1},     {21, 7, 5, 7, 1},      {22, 8, 5, 7, 1},     {21, 5, 6, 7, 1},
        {23, 1, 7, 7, 1},      {147, 141, 2, 7, 2},   {147, 127, 3, 7, 2},  {147, 113, 4, 7, 2},
        {147, 85, 5, 7, 2},    {147, 71, 6, 7, 2},
    };
    return rows;
}

std::string to_string(MatchStatus status) {
    switch (status) {
        case MatchStatus::reproduced: return "reproduced";
        case MatchStatus::beaten: return "beaten";
        case MatchStatus::bound_consistent: return "bound-consistent";
        case MatchStatus::not_reproduced: return "not reproduced";
    }
    return "unknown";
}

RowComparison compare_row(const TargetRow& t, const std::vector<ScanRecord>& records) {
    RowComparison out;
    out.target = t;
    const ScanRecord* better = nullptr;
    for (const auto& r : records) {
        if (r.p != t.p) continue;
        if (r.N > t.N || r.K < t.K || r.d() < t.d) continue;
        if (r.N == t.N && r.K == t.K && r.d() == t.d) {
            out.status = MatchStatus::reproduced;
            out.witness = r;
            return out;
        }
        auto rank_of = [](const ScanRecord& x) { return std::tuple(x.N, x.K, -static_cast<long>(x.d())); };
        if (!better || rank_of(r) < rank_of(*better)) better = &r;
    }
    if (better) {
        out.status = MatchStatus::beaten;
        out.witness = *better;
        out.note = "found [[" + std::to_string(better->N) + "," + std::to_string(better->K) + "," +
                   std::to_string(better->d()) + "]]";
        return out;
    }
    for (const auto& r : records) {
        if (r.p != t.p || r.N != t.N || r.K != t.K) continue;
        if (r.d_upper && r.d_lower <= t.d && t.d <= *r.d_upper) {
            out.status = MatchStatus::bound_consistent;
            out.witness = r;
            out.note = "d in [" + std::to_string(r.d_lower) + "," + std::to_string(*r.d_upper) + "]";
            return out;
        }
        out.witness = r;
        out.note = "same (N,K) has d " +
                   (r.d_upper ? "in [" + std::to_string(r.d_lower) + "," + std::to_string(*r.d_upper) + "]"
                              : std::to_string(r.d()));
    }
    if (!out.witness) out.note = "no record with this (N,K)";
    return out;
}

}  // namespace qconx
