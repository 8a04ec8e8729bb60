#pragma once

// Exhaustive scans of the length-3p^s family <(x-1)^i (x-w)^j (x-w^2)^k>
// through Construction X, and the comparison against reference parameters.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qconx/cyclic.hpp"
#include "qconx/distance.hpp"
#include "qconx/field.hpp"

namespace qconx {

/// Longest length scanned with certified distances unless bound-only is set.
inline constexpr std::size_t kExactScanMaxLength = 33;
/// Bound-only mode certifies lower bounds by searching weights up to this.
inline constexpr std::size_t kBoundWeightCap = 4;

struct ScanOptions {
    std::uint32_t p = 5;
    std::size_t s = 1;
    bool bound_only = false;
    std::optional<std::size_t> max_e;
    DistanceOptions distance;
    /// Certify the minimum weight of E for every emitted record (exact mode).
    bool certify_e = true;
};

struct ScanRecord {
    std::uint32_t p = 0;
    std::size_t s = 0, n = 0;
    Exponents3 exps;
    std::size_t k = 0, e = 0, hull_dim = 0;
    std::size_t N = 0;
    long K = 0;
    bool bound_only = false;
    /// Certified: min(wt(C), wt(C + C^⊥h) + 1) is at least this.
    std::size_t d_lower = 1;
    /// Certified minimum weight of E (exact mode).
    std::optional<std::size_t> d_exact;
    /// Bound-only mode: closed-form value of min(wt(C), wt(C + C^⊥h) + 1).
    std::optional<std::size_t> d_upper;
    std::size_t wt_c = 0;
    std::optional<std::size_t> wt_sum;

    /// Best distance claim backed by a certificate.
    std::size_t d() const { return d_exact ? std::max(*d_exact, d_lower) : d_lower; }
};

struct ScanSummary {
    std::uint64_t triples_examined = 0;
    std::uint64_t zero_codes_skipped = 0;
    std::uint64_t non_positive_k = 0;
    std::uint64_t over_max_e = 0;
    std::uint64_t constructions = 0;
    std::uint64_t distance_work = 0;
    double seconds = 0;
};

struct ScanResult {
    std::vector<ScanRecord> records;  ///< best d per (N, K), sorted by (N, K)
    ScanSummary summary;
};

/// Dimensions and e from the exponents alone: k = n - (i+j+k), the hull has
/// exponents max(e, dual(e)), the sum code min(e, dual(e)).
struct ClosedForm {
    std::size_t n = 0, k = 0, hull_dim = 0, e = 0;
    long K = 0;
    Exponents3 dual, hull, sum;
};
ClosedForm closed_form_3ps(std::uint32_t p, std::size_t s, Exponents3 e);

/// Throws std::invalid_argument for p <= 3, s = 0, or an exact scan longer
/// than kExactScanMaxLength; std::logic_error when a cross-check fails.
ScanResult run_scan(const Field& f, const ScanOptions& opt);

/// Rebuilds one scan record from its exponents with the same options.
ScanRecord scan_record(const Field& f, const ScanOptions& opt, Exponents3 exps);

struct TargetRow {
    std::size_t N = 0;
    long K = 0;
    std::size_t d = 0;
    std::uint32_t p = 0;
    std::size_t s = 0;  ///< family 3p^s the row comes from
};

/// Reference rows, grouped by field.
const std::vector<TargetRow>& reference_rows();

enum class MatchStatus { reproduced, beaten, bound_consistent, not_reproduced };
std::string to_string(MatchStatus status);

struct RowComparison {
    TargetRow target;
    MatchStatus status = MatchStatus::not_reproduced;
    std::optional<ScanRecord> witness;
    std::string note;
};

/// "At least as good" means N <= N*, K >= K*, d >= d* with d certified.
/// Bound-only records of the same (N, K) with d_lower <= d* <= d_upper count as
/// bound-consistent when nothing certified matches.
RowComparison compare_row(const TargetRow& target, const std::vector<ScanRecord>& records);

}  // namespace qconx
