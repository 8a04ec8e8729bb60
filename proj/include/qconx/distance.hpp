#pragma once

// Minimum-weight computation for linear codes over GF(p^2).
//
// Three engines, chosen per code:
//  - message enumeration over GF(q)^k up to scalars (exact),
//  - support search: for w = 1, 2, ... test every w-subset of parity-check
//    columns for a dependency (certifies "no codeword lighter than w"),
//  - random information sets, which only ever give an upper bound.
// Cyclic codes may anchor supports at coordinate 0; for low weights on long
// cyclic codes a meet-in-the-middle split of the support is used instead.

#include <cstddef>
#include <cstdint>
#include <string>

#include "qconx/cyclic.hpp"
#include "qconx/field.hpp"
#include "qconx/linalg.hpp"

namespace qconx {

enum class DistanceKind { exact, bounded };
enum class DistanceMethod { enumeration, support_search, split_support_search, information_set };

std::string to_string(DistanceKind kind);
std::string to_string(DistanceMethod method);

struct DistanceReport {
    /// Exact minimum distance when kind == exact, else the lightest codeword found.
    std::size_t value = 0;
    /// Certified: no nonzero codeword has weight below this.
    std::size_t lower_bound = 1;
    DistanceKind kind = DistanceKind::bounded;
    DistanceMethod method = DistanceMethod::support_search;
    /// Codewords enumerated plus parity-check columns reduced.
    std::uint64_t work = 0;
    /// A codeword of weight `value`; empty if none was found.
    Vector witness;

    bool is_exact() const { return kind == DistanceKind::exact; }
};

struct DistanceOptions {
    std::uint64_t budget = 10'000'000;
    std::uint64_t seed = 0;
    /// Code is invariant under cyclic shifts, so supports can contain 0.
    bool cyclic = false;
    /// 0 searches to completion; otherwise stop certifying after this weight.
    std::size_t weight_cap = 0;
    /// Random information sets tried when certification stops early.
    std::size_t sampling_rounds = 64;
};

/// Throws std::invalid_argument on the zero code.
DistanceReport min_weight(const Field& f, const LinearCode& c, const DistanceOptions& options = {});
/// Uses the check polynomial for the parity checks and anchors supports at 0.
DistanceReport min_weight(const Field& f, const CyclicCode& c, DistanceOptions options = {});

/// Exhaustive oracle over all (q^k - 1)/(q - 1) projective messages; no budget.
DistanceReport enumerate_min_weight(const Field& f, const LinearCode& c);

struct BelowResult {
    bool found = false;
    bool complete = true;  ///< false when the budget ran out first
    Vector witness;
    std::uint64_t work = 0;
};

/// Is there a nonzero codeword of weight < w? Support search over weights 1..w-1.
BelowResult has_codeword_below(const Field& f, const LinearCode& c, std::size_t w,
                               std::uint64_t budget = UINT64_MAX);

/// Support search on an explicit parity-check matrix (rows are checks).
/// Looks for a nonzero vector of weight exactly w in its kernel, assuming
/// none lighter exists; with `anchored` only supports containing column 0
/// are tried. Returns an empty vector if there is none. `work` is charged
/// per column reduction and the search stops (complete = false) once it
/// would exceed `budget`.
struct WeightSearch {
    bool complete = true;
    Vector witness;
};
WeightSearch search_weight(const Field& f, const Matrix& parity_check, std::size_t w, bool anchored,
                           std::uint64_t budget, std::uint64_t& work);

/// Largest field order the split search handles (lookup tables are q^2 entries).
inline constexpr std::uint32_t kSplitSearchMaxOrder = 2048;
bool split_search_supported(const Field& f);

/// Meet-in-the-middle variant for w <= 4, anchored at column 0. Candidates
/// come from hashed random projections and are verified exactly, so the
/// answer is exact. Must be called with increasing w (assumes nothing lighter).
WeightSearch search_weight_split(const Field& f, const Matrix& parity_check, std::size_t w, std::uint64_t seed,
                                 std::uint64_t& work);

}  // namespace qconx
