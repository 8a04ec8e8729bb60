#include <gtest/gtest.h>

#include "qconx/cyclic.hpp"
#include "qconx/distance.hpp"
#include "support.hpp"

using namespace qconx;
using qconx::testing::random_code;

TEST(Distance, Trivial) {
    const Field f(5);
    EXPECT_EQ(min_weight(f, LinearCode::full(f, 6)).value, 1u);
    EXPECT_THROW(min_weight(f, LinearCode::zero(6)), std::invalid_argument);
    // <(x^n - 1)/(x - 1)> is the span of the all-ones word.
    const CyclicCode ones(f, 15, repeated_root_code(f, 1, {4, 5, 5}).generator());
    const auto r = min_weight(f, ones);
    EXPECT_TRUE(r.is_exact());
    EXPECT_EQ(r.value, 15u);
}

TEST(Distance, WitnessHasReportedWeight) {
    const Field f(7);
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
        const LinearCode c = random_code(f, 12, 5, rng);
        const auto r = min_weight(f, c);
        ASSERT_TRUE(r.is_exact());
        EXPECT_EQ(hamming_weight(r.witness), r.value);
        EXPECT_TRUE(c.contains(f, r.witness));
        EXPECT_EQ(r.lower_bound, r.value);
    }
}

TEST(Distance, SupportSearchMatchesEnumeration) {
    const Field f(5);
    std::mt19937_64 rng(22);
    for (int t = 0; t < 15; ++t) {
        const LinearCode c = random_code(f, 10, 3, rng);
        DistanceOptions opt;
        opt.budget = 0;  // forces the support search path
        opt.sampling_rounds = 0;
        const auto oracle = enumerate_min_weight(f, c);
        std::uint64_t work = 0;
        const Matrix h = euclidean_dual(f, c).generator();
        std::size_t w = 1;
        for (;; ++w) {
            const auto s = search_weight(f, h, w, false, UINT64_MAX, work);
            ASSERT_TRUE(s.complete);
            if (!s.witness.empty()) break;
        }
        EXPECT_EQ(w, oracle.value);
    }
}

TEST(Distance, HasCodewordBelow) {
    const Field f(5);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        const LinearCode c = random_code(f, 10, 3, rng);
        const std::size_t d = enumerate_min_weight(f, c).value;
        EXPECT_FALSE(has_codeword_below(f, c, 1).found);
        const auto at = has_codeword_below(f, c, d);
        EXPECT_FALSE(at.found);
        EXPECT_TRUE(at.complete);
        const auto above = has_codeword_below(f, c, d + 1);
        EXPECT_TRUE(above.found);
        EXPECT_EQ(hamming_weight(above.witness), d);
        EXPECT_TRUE(has_codeword_below(f, c, 11).found);
    }
}

TEST(Distance, BudgetExhaustionGivesBounds) {
    const Field f(7);
    const CyclicCode c = repeated_root_code(f, 2, {20, 30, 25});
    DistanceOptions opt;
    opt.budget = 2000;
    const auto r = min_weight(f, c, opt);
    EXPECT_LE(r.lower_bound, distance_3ps(7, 2, {20, 30, 25}));
    EXPECT_GE(r.value, distance_3ps(7, 2, {20, 30, 25}));
}

TEST(Distance, CyclicAnchoringAgreesWithPlain) {
    const Field f(5);
    for (Exponents3 e : {Exponents3{1, 1, 3}, Exponents3{0, 2, 2}, Exponents3{3, 1, 0}}) {
        const CyclicCode c = repeated_root_code(f, 1, e);
        EXPECT_EQ(min_weight(f, c).value, min_weight(f, c.to_linear(f)).value);
    }
}

TEST(Distance, SplitSearchFindsLowWeights) {
    const Field f(5);
    for (Exponents3 e : {Exponents3{1, 0, 0}, Exponents3{1, 1, 0}, Exponents3{2, 1, 0}, Exponents3{2, 2, 0}}) {
        const CyclicCode c = repeated_root_code(f, 2, e);
        const std::size_t d = distance_3ps(5, 2, e);
        ASSERT_LE(d, 4u);
        const Matrix h = c.parity_check_matrix(f);
        std::uint64_t work = 0;
        for (std::size_t w = 1; w <= d; ++w) {
            const auto s = search_weight_split(f, h, w, 0, work);
            EXPECT_TRUE(s.complete);
            EXPECT_EQ(s.witness.empty(), w < d) << "w=" << w;
            if (!s.witness.empty()) {
                EXPECT_EQ(hamming_weight(s.witness), d);
                EXPECT_TRUE(c.to_linear(f).contains(f, s.witness));
            }
        }
    }
}

TEST(Distance, DeterministicForSeed) {
    const Field f(7);
    const CyclicCode c = repeated_root_code(f, 2, {10, 3, 40});
    DistanceOptions opt;
    opt.budget = 5000;
    opt.seed = 9;
    const auto a = min_weight(f, c, opt), b = min_weight(f, c, opt);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.work, b.work);
}
