#include "qconx/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace qconx {

std::string to_string(DistanceKind kind) { return kind == DistanceKind::exact ? "exact" : "bounded"; }

std::string to_string(DistanceMethod method) {
    switch (method) {
        case DistanceMethod::enumeration: return "enumeration";
        case DistanceMethod::support_search: return "support_search";
        case DistanceMethod::split_support_search: return "split_support_search";
        case DistanceMethod::information_set: return "information_set";
    }
    return "unknown";
}

namespace {

bool is_zero_span(std::span<const FieldElement> v) {
    return std::all_of(v.begin(), v.end(), [](FieldElement x) { return x.is_zero(); });
}

// Kernel vector of the columns `support` of h, spread back to length n.
Vector dependency_witness(const Field& f, const Matrix& h, const std::vector<std::size_t>& support) {
    Matrix sub(h.rows(), support.size());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t j = 0; j < support.size(); ++j) sub(r, j) = h(r, support[j]);
    const Matrix ker = kernel(f, sub);
    if (ker.rows() == 0) throw std::logic_error("support search reported a dependency that does not exist");
    // Prefer the kernel vector with full support (the minimal dependency).
    std::size_t best = 0, best_w = 0;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        const std::size_t w = hamming_weight(ker.row(r));
        if (w > best_w) best = r, best_w = w;
    }
    Vector out(h.cols());
    for (std::size_t j = 0; j < support.size(); ++j) out[support[j]] = ker(best, j);
    return out;
}

class SupportSearch {
public:
    SupportSearch(const Field& f, const Matrix& h, std::size_t w, bool anchored, std::uint64_t budget,
                  std::uint64_t& work)
        : f_(f), h_(h), n_(h.cols()), r_(h.rows()), w_(w), anchored_(anchored), budget_(budget), work_(work) {
        levels_.assign(w, std::vector<FieldElement>(n_ * r_));
        for (std::size_t c = 0; c < n_; ++c)
            for (std::size_t i = 0; i < r_; ++i) levels_[0][c * r_ + i] = h(i, c);
        chosen_.resize(w);
    }

    WeightSearch run() {
        WeightSearch out;
        if (w_ == 0 || w_ > n_) return out;
        dfs(0, 0);
        out.complete = complete_;
        out.witness = std::move(witness_);
        return out;
    }

private:
    // Returns true to stop (found or out of budget).
    bool dfs(std::size_t depth, std::size_t start) {
        const bool last = depth + 1 == w_;
        std::size_t end = n_ - (w_ - depth - 1);
        if (anchored_ && depth == 0) end = std::min<std::size_t>(end, 1);
        auto& cur = levels_[depth];
        for (std::size_t c = start; c < end; ++c) {
            if (work_ >= budget_) {
                complete_ = false;
                return true;
            }
            ++work_;
            std::span<const FieldElement> rc(cur.data() + c * r_, r_);
            if (is_zero_span(rc)) {
                std::vector<std::size_t> support(chosen_.begin(), chosen_.begin() + depth);
                support.push_back(c);
                witness_ = dependency_witness(f_, h_, support);
                return true;
            }
            if (last) continue;

            std::size_t piv = 0;
            while (rc[piv].is_zero()) ++piv;
            const FieldElement inv = f_.inv(rc[piv]);
            basis_.assign(rc.begin(), rc.end());
            for (auto& x : basis_) x = f_.mul(x, inv);

            auto& next = levels_[depth + 1];
            const std::uint64_t reductions = n_ - c - 1;
            if (work_ + reductions > budget_) {
                complete_ = false;
                return true;
            }
            work_ += reductions;
            for (std::size_t d = c + 1; d < n_; ++d) {
                const FieldElement* src = cur.data() + d * r_;
                FieldElement* dst = next.data() + d * r_;
                const FieldElement coef = src[piv];
                if (coef.is_zero()) {
                    std::copy(src, src + r_, dst);
                    continue;
                }
                const FieldElement neg = f_.neg(coef);
                for (std::size_t i = 0; i < r_; ++i) dst[i] = f_.mul_add(neg, basis_[i], src[i]);
            }
            chosen_[depth] = c;
            if (dfs(depth + 1, c + 1)) return true;
        }
        return false;
    }

    const Field& f_;
    const Matrix& h_;
    std::size_t n_, r_, w_;
    bool anchored_;
    std::uint64_t budget_;
    std::uint64_t& work_;
    std::vector<std::vector<FieldElement>> levels_;
    std::vector<std::size_t> chosen_;
    std::vector<FieldElement> basis_;
    bool complete_ = true;
    Vector witness_;
};

// ---- split (meet-in-the-middle) search for w <= 4 ------------------------

// GF(q) arithmetic on dense indices through lookup tables.
class IndexField {
public:
    explicit IndexField(const Field& f) : q_(f.order()), add_(q_ * q_), mul_(q_ * q_), inv_(q_), neg_(q_) {
        for (std::uint32_t x = 0; x < q_; ++x) {
            const FieldElement fx = f.element(x);
            neg_[x] = static_cast<std::uint16_t>(f.index(f.neg(fx)));
            inv_[x] = x == 0 ? 0 : static_cast<std::uint16_t>(f.index(f.inv(fx)));
            for (std::uint32_t y = 0; y < q_; ++y) {
                const FieldElement fy = f.element(y);
                add_[x * q_ + y] = static_cast<std::uint16_t>(f.index(f.add(fx, fy)));
                mul_[x * q_ + y] = static_cast<std::uint16_t>(f.index(f.mul(fx, fy)));
            }
        }
    }
    std::uint32_t order() const { return q_; }
    std::uint16_t add(std::uint16_t x, std::uint16_t y) const { return add_[x * q_ + y]; }
    std::uint16_t mul(std::uint16_t x, std::uint16_t y) const { return mul_[x * q_ + y]; }
    std::uint16_t inv(std::uint16_t x) const { return inv_[x]; }

private:
    std::uint32_t q_;
    std::vector<std::uint16_t> add_, mul_, inv_, neg_;
};

// Random GF(q)-linear projection of the parity-check columns onto at most 64
// bits, with projectively normalized keys (first nonzero entry scaled to 1).
class Fingerprinter {
public:
    Fingerprinter(const Field& f, const IndexField& ix, const Matrix& h, std::uint64_t seed) : ix_(ix) {
        const std::uint32_t q = ix.order();
        while ((1u << bits_) < q) ++bits_;
        const std::size_t r = h.rows(), n = h.cols();
        len_ = std::min<std::size_t>(r, 64 / bits_);
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        Matrix proj(len_, r);
        for (std::size_t i = 0; i < len_; ++i)
            for (std::size_t j = 0; j < r; ++j) proj(i, j) = len_ == r ? (i == j ? f.one() : f.zero()) : f.element(pick(rng));
        cols_.assign(n * len_, 0);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t i = 0; i < len_; ++i) {
                FieldElement acc{};
                for (std::size_t j = 0; j < r; ++j) acc = f.mul_add(proj(i, j), h(j, c), acc);
                cols_[c * len_ + i] = static_cast<std::uint16_t>(f.index(acc));
            }
    }

    const std::uint16_t* column(std::size_t c) const { return cols_.data() + c * len_; }

    /// Key of x + lambda*y; 0 when the combination projects to zero.
    std::uint64_t key(const std::uint16_t* x, std::uint16_t lambda, const std::uint16_t* y) const {
        std::uint16_t buf[64];
        std::size_t piv = len_;
        for (std::size_t i = 0; i < len_; ++i) {
            buf[i] = ix_.add(x[i], ix_.mul(lambda, y[i]));
            if (piv == len_ && buf[i] != 0) piv = i;
        }
        if (piv == len_) return 0;
        const std::uint16_t inv = ix_.inv(buf[piv]);
        std::uint64_t k = 0;
        for (std::size_t i = piv; i < len_; ++i) k = (k << bits_) | ix_.mul(buf[i], inv);
        return (k * 0x100000001b3ULL) ^ (piv + 1);
    }

private:
    const IndexField& ix_;
    unsigned bits_ = 1;
    std::size_t len_ = 0;
    std::vector<std::uint16_t> cols_;
};

// Sorted left half with a bitset prefilter.
class KeyIndex {
public:
    struct Entry {
        std::uint64_t key;
        std::uint32_t a;
        std::uint16_t lambda;
    };

    void add(std::uint64_t key, std::uint32_t a, std::uint16_t lambda) { entries_.push_back({key, a, lambda}); }
    void finish() {
        std::sort(entries_.begin(), entries_.end(), [](const Entry& x, const Entry& y) { return x.key < y.key; });
        filter_.assign(kFilterWords, 0);
        for (const auto& e : entries_) filter_[slot(e.key) >> 6] |= 1ULL << (slot(e.key) & 63);
    }
    std::span<const Entry> find(std::uint64_t key) const {
        const std::uint64_t s = slot(key);
        if (!(filter_[s >> 6] >> (s & 63) & 1)) return {};
        auto lo = std::lower_bound(entries_.begin(), entries_.end(), key,
                                   [](const Entry& e, std::uint64_t k) { return e.key < k; });
        auto hi = lo;
        while (hi != entries_.end() && hi->key == key) ++hi;
        return {lo, hi};
    }

private:
    static constexpr std::size_t kFilterBits = 1u << 22;
    static constexpr std::size_t kFilterWords = kFilterBits / 64;
    static std::uint64_t slot(std::uint64_t key) { return (key * 0x9e3779b97f4a7c15ULL) >> 42; }
    std::vector<Entry> entries_;
    std::vector<std::uint64_t> filter_;
};

// Scalar t with x + t*y == 0 exactly, if any.
std::optional<FieldElement> cancel_scalar(const Field& f, std::span<const FieldElement> x,
                                          std::span<const FieldElement> y) {
    std::size_t piv = 0;
    while (piv < y.size() && y[piv].is_zero()) ++piv;
    if (piv == y.size()) return std::nullopt;
    const FieldElement t = f.neg(f.div(x[piv], y[piv]));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (f.mul_add(t, y[i], x[i]) != FieldElement{}) return std::nullopt;
    }
    return t;
}

Vector column_of(const Matrix& h, std::size_t c) {
    Vector out(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) out[i] = h(i, c);
    return out;
}

}  // namespace

WeightSearch search_weight(const Field& f, const Matrix& parity_check, std::size_t w, bool anchored,
                           std::uint64_t budget, std::uint64_t& work) {
    return SupportSearch(f, parity_check, w, anchored, budget, work).run();
}

bool split_search_supported(const Field& f) { return f.order() <= kSplitSearchMaxOrder; }

WeightSearch search_weight_split(const Field& f, const Matrix& h, std::size_t w, std::uint64_t seed,
                                 std::uint64_t& work) {
    if (w == 0 || w > 4) throw std::invalid_argument("split support search handles weights 1..4");
    if (!split_search_supported(f)) throw std::invalid_argument("split support search needs p^2 <= 2048");
    WeightSearch out;
    const std::size_t n = h.cols();
    if (w > n) return out;
    const std::uint32_t q = f.order();
    std::vector<Vector> cols(n);
    for (std::size_t c = 0; c < n; ++c) cols[c] = column_of(h, c);

    auto emit = [&](std::vector<std::pair<std::size_t, FieldElement>> terms) {
        out.witness.assign(n, FieldElement{});
        for (auto [pos, val] : terms) out.witness[pos] = val;
    };

    if (w == 1) {
        ++work;
        if (is_zero_span(cols[0])) emit({{0, f.one()}});
        return out;
    }
    if (w == 2) {
        for (std::size_t a = 1; a < n; ++a) {
            ++work;
            if (auto t = cancel_scalar(f, cols[0], cols[a])) {
                emit({{0, f.one()}, {a, *t}});
                return out;
            }
        }
        return out;
    }

    const IndexField ix(f);
    const Fingerprinter fp(f, ix, h, seed);
    const std::vector<std::uint16_t> zero_fp(64, 0);

    // Left half: h_0 + lambda h_a for a >= 1. Zero keys cannot be matched by
    // hashing and are checked exactly against every right-hand side.
    KeyIndex left;
    std::vector<std::pair<std::uint32_t, std::uint16_t>> left_zero;
    for (std::size_t a = 1; a < n; ++a) {
        for (std::uint16_t li = 1; li < q; ++li) {
            ++work;
            const std::uint64_t key = fp.key(fp.column(0), li, fp.column(a));
            if (key == 0) {
                left_zero.emplace_back(static_cast<std::uint32_t>(a), li);
            } else {
                left.add(key, static_cast<std::uint32_t>(a), li);
            }
        }
    }
    left.finish();

    // h_0 + lambda h_a + mu*(right) = 0 for some mu, verified on full columns.
    Vector full;
    auto try_match = [&](std::size_t a, std::uint16_t li, const Vector& right,
                         std::vector<std::pair<std::size_t, FieldElement>> right_terms) -> bool {
        const FieldElement lambda = f.element(li);
        full = axpy(f, cols[0], lambda, cols[a]);
        auto mu = cancel_scalar(f, full, right);
        if (!mu) return false;
        std::vector<std::pair<std::size_t, FieldElement>> terms{{0, f.one()}, {a, lambda}};
        for (auto [pos, coef] : right_terms) terms.emplace_back(pos, f.mul(*mu, coef));
        emit(std::move(terms));
        return true;
    };
    // Right-hand side with key `key`; a ranges below `b`.
    auto match_right = [&](std::uint64_t key, std::size_t b, const auto& make_right, const auto& right_terms) -> bool {
        std::optional<Vector> right;
        auto check = [&](std::size_t a, std::uint16_t li) {
            if (a >= b) return false;
            if (!right) right = make_right();
            return try_match(a, li, *right, right_terms);
        };
        if (key == 0) {
            for (std::size_t a = 1; a < b; ++a)
                for (std::uint16_t li = 1; li < q; ++li)
                    if (check(a, li)) return true;
            return false;
        }
        for (const auto& e : left.find(key))
            if (check(e.a, e.lambda)) return true;
        for (auto [a, li] : left_zero)
            if (check(a, li)) return true;
        return false;
    };

    if (w == 3) {
        for (std::size_t b = 2; b < n; ++b) {
            ++work;
            const std::uint64_t key = fp.key(fp.column(b), 0, zero_fp.data());
            const std::vector<std::pair<std::size_t, FieldElement>> terms{{b, f.one()}};
            if (match_right(key, b, [&] { return cols[b]; }, terms)) return out;
        }
        return out;
    }

    // w == 4: support {0, a, b, c} with a < b < c; right half h_b + rho h_c.
    for (std::size_t b = 2; b + 1 < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
            for (std::uint16_t ri = 1; ri < q; ++ri) {
                ++work;
                const std::uint64_t key = fp.key(fp.column(b), ri, fp.column(c));
                if (key != 0 && left_zero.empty() && left.find(key).empty()) continue;
                const FieldElement rho = f.element(ri);
                const std::vector<std::pair<std::size_t, FieldElement>> terms{{b, f.one()}, {c, rho}};
                if (match_right(key, b, [&] { return axpy(f, cols[b], rho, cols[c]); }, terms)) return out;
            }
        }
    }
    return out;
}

namespace {

long double binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    long double out = 1;
    for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

long double projective_messages(std::uint32_t q, std::size_t k) {
    return (std::pow(static_cast<long double>(q), static_cast<long double>(k)) - 1) / (q - 1);
}

// Lightest codeword over every projective message, incremental in odometer order.
DistanceReport enumerate(const Field& f, const LinearCode& c) {
    const Matrix& g = c.generator();
    const std::size_t k = g.rows(), n = g.cols();
    const std::uint32_t q = f.order();
    DistanceReport rep;
    rep.method = DistanceMethod::enumeration;
    rep.kind = DistanceKind::exact;
    rep.value = n + 1;
    for (std::size_t lead = 0; lead < k; ++lead) {
        Vector word = g.row_vector(lead);
        std::vector<std::uint32_t> digits(k - lead - 1, 0);
        for (;;) {
            ++rep.work;
            const std::size_t w = hamming_weight(word);
            if (w < rep.value) {
                rep.value = w;
                rep.witness = word;
            }
            // odometer step over rows lead+1..k-1
            std::size_t t = 0;
            while (t < digits.size()) {
                const FieldElement old = f.element(digits[t]);
                digits[t] = (digits[t] + 1) % q;
                const FieldElement delta = f.sub(f.element(digits[t]), old);
                auto row = g.row(lead + 1 + t);
                for (std::size_t j = 0; j < n; ++j) {
                    if (!row[j].is_zero()) word[j] = f.mul_add(delta, row[j], word[j]);
                }
                if (digits[t] != 0) break;
                ++t;
            }
            if (t == digits.size()) break;
        }
    }
    rep.lower_bound = rep.value;
    return rep;
}

// Systematic rows of random column permutations; an upper bound only.
void sample_information_sets(const Field& f, const LinearCode& c, std::size_t rounds, std::uint64_t seed,
                             DistanceReport& rep) {
    const std::size_t n = c.length();
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t round = 0; round < rounds; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix permuted(c.dimension(), n);
        for (std::size_t r = 0; r < c.dimension(); ++r)
            for (std::size_t j = 0; j < n; ++j) permuted(r, j) = c.generator()(r, perm[j]);
        const Echelon e = rref(f, permuted);
        for (std::size_t r = 0; r < e.rank(); ++r) {
            ++rep.work;
            const std::size_t w = hamming_weight(e.reduced.row(r));
            if (w < rep.value) {
                rep.value = w;
                rep.witness.assign(n, FieldElement{});
                for (std::size_t j = 0; j < n; ++j) rep.witness[perm[j]] = e.reduced(r, j);
                rep.method = DistanceMethod::information_set;
            }
        }
    }
}

struct SearchPlan {
    std::size_t n = 0, k = 0;
    /// Needed only for enumeration and sampling.
    const LinearCode* code = nullptr;
    Matrix parity_check;
    bool anchored = false;
    bool split_low_weights = false;
};

DistanceReport run_plan(const Field& f, const SearchPlan& plan, const DistanceOptions& opt) {
    const std::size_t n = plan.n, k = plan.k, r = n - k;
    const std::uint32_t q = f.order();

    const long double enum_cost = projective_messages(q, k);
    const std::size_t anchor = plan.anchored ? 1 : 0;
    const std::size_t last_w = opt.weight_cap == 0 ? r + 1 : std::min(opt.weight_cap, r + 1);
    auto level_cost = [&](std::size_t w) { return binom(n - anchor, w - anchor) + binom(n - anchor, w - 1 - anchor) * n; };
    long double support_cost = 0;
    for (std::size_t w = 1; w <= last_w; ++w) support_cost += level_cost(w);

    const bool can_enumerate =
        plan.code && opt.weight_cap == 0 && enum_cost <= static_cast<long double>(opt.budget);
    if (can_enumerate && enum_cost <= support_cost) return enumerate(f, *plan.code);

    DistanceReport rep;
    rep.method = plan.split_low_weights ? DistanceMethod::split_support_search : DistanceMethod::support_search;
    rep.value = n + 1;
    for (std::size_t w = 1; w <= last_w; ++w) {
        const long double remaining = static_cast<long double>(opt.budget) - static_cast<long double>(rep.work);
        if (can_enumerate && enum_cost <= remaining && enum_cost < level_cost(w)) {
            DistanceReport e = enumerate(f, *plan.code);
            e.work += rep.work;
            return e;
        }
        WeightSearch ws;
        if (plan.split_low_weights && w <= 4) {
            ws = search_weight_split(f, plan.parity_check, w, opt.seed, rep.work);
        } else {
            ws = search_weight(f, plan.parity_check, w, plan.anchored, opt.budget, rep.work);
        }
        if (!ws.witness.empty()) {
            rep.value = hamming_weight(ws.witness);
            rep.lower_bound = rep.value;
            rep.witness = std::move(ws.witness);
            rep.kind = DistanceKind::exact;
            return rep;
        }
        if (!ws.complete) break;
        rep.lower_bound = w + 1;
    }
    if (plan.code) sample_information_sets(f, *plan.code, opt.sampling_rounds, opt.seed, rep);
    if (rep.value <= rep.lower_bound) {
        rep.lower_bound = rep.value;
        rep.kind = DistanceKind::exact;
    }
    return rep;
}

}  // namespace

DistanceReport min_weight(const Field& f, const LinearCode& c, const DistanceOptions& options) {
    if (c.is_zero()) throw std::invalid_argument("minimum weight of the zero code is undefined");
    SearchPlan plan;
    plan.n = c.length();
    plan.k = c.dimension();
    plan.code = &c;
    plan.parity_check = euclidean_dual(f, c).generator();
    if (c.dimension() == c.length()) plan.parity_check = Matrix(0, c.length());
    plan.anchored = options.cyclic;
    return run_plan(f, plan, options);
}

DistanceReport min_weight(const Field& f, const CyclicCode& c, DistanceOptions options) {
    if (c.dimension() == 0) throw std::invalid_argument("minimum weight of the zero code is undefined");
    // The linear form is only needed to enumerate or sample.
    const bool need_linear = options.weight_cap == 0 || options.sampling_rounds > 0;
    const LinearCode lin = need_linear ? c.to_linear(f) : LinearCode::zero(c.length());
    SearchPlan plan;
    plan.n = c.length();
    plan.k = c.dimension();
    plan.code = need_linear ? &lin : nullptr;
    plan.parity_check = c.parity_check_matrix(f);
    plan.anchored = true;
    plan.split_low_weights = options.weight_cap != 0 && options.weight_cap <= 4 && split_search_supported(f);
    options.cyclic = true;

    // The generator itself is a codeword; seed the upper bound with it.
    DistanceReport rep = run_plan(f, plan, options);
    if (!rep.is_exact()) {
        const auto& g = c.generator().coeffs();
        const std::size_t wg = hamming_weight(g);
        if (wg < rep.value) {
            rep.value = wg;
            rep.witness.assign(c.length(), FieldElement{});
            std::copy(g.begin(), g.end(), rep.witness.begin());
        }
        if (rep.value <= rep.lower_bound) {
            rep.lower_bound = rep.value;
            rep.kind = DistanceKind::exact;
        }
    }
    return rep;
}

DistanceReport enumerate_min_weight(const Field& f, const LinearCode& c) {
    if (c.is_zero()) throw std::invalid_argument("minimum weight of the zero code is undefined");
    return enumerate(f, c);
}

BelowResult has_codeword_below(const Field& f, const LinearCode& c, std::size_t w, std::uint64_t budget) {
    BelowResult out;
    if (c.is_zero()) return out;
    Matrix h = euclidean_dual(f, c).generator();
    if (c.dimension() == c.length()) h = Matrix(0, c.length());
    for (std::size_t v = 1; v < w && v <= c.length(); ++v) {
        WeightSearch ws = search_weight(f, h, v, false, budget, out.work);
        if (!ws.witness.empty()) {
            out.found = true;
            out.witness = std::move(ws.witness);
            return out;
        }
        if (!ws.complete) {
            out.complete = false;
            return out;
        }
    }
    return out;
}

}  // namespace qconx
