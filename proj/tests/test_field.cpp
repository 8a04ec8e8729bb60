#include <gtest/gtest.h>

#include <map>

#include "qconx/field.hpp"

using namespace qconx;

TEST(Field, RejectsNonPrimes) {
    EXPECT_THROW(Field(4), std::invalid_argument);
    EXPECT_THROW(Field(2), std::invalid_argument);
    EXPECT_THROW(Field(1), std::invalid_argument);
    EXPECT_NO_THROW(Field(3));
}

TEST(Field, DeltaIsSmallestNonResidue) {
    EXPECT_EQ(Field(5).delta(), 2u);
    EXPECT_EQ(Field(7).delta(), 3u);
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u}) {
        const Field f(p);
        EXPECT_EQ(pow_mod(f.delta(), (p - 1) / 2, p), p - 1) << "p=" << p;
    }
}

TEST(Field, GammaIsPrimitiveAndLexSmallest) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        const Field f(p);
        EXPECT_EQ(f.multiplicative_order(f.gamma()), f.order() - 1);
        for (std::uint32_t i = 1; i < f.index(f.gamma()); ++i) EXPECT_FALSE(f.is_primitive(f.element(i)));
    }
}

TEST(Field, SqrtMinusOne) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const Field f(p);
        const auto s = f.sqrt_minus_one();
        EXPECT_EQ(f.mul(s, s), f.neg(f.one())) << "p=" << p;
        EXPECT_EQ(s, f.pow(f.gamma(), (f.order() - 1) / 4));
    }
    EXPECT_TRUE(Field(5).sqrt_minus_one().in_base_field());
    EXPECT_EQ(Field(5).sqrt_minus_one(), (FieldElement{3, 0}));
    EXPECT_FALSE(Field(7).sqrt_minus_one().in_base_field());
}

TEST(Field, AxiomsExhaustiveGF25) {
    const Field f(5);
    for (std::uint32_t i = 0; i < f.order(); ++i) {
        const auto x = f.element(i);
        EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
        if (!x.is_zero()) {
            EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
        }
        for (std::uint32_t j = 0; j < f.order(); j += 3) {
            const auto y = f.element(j);
            EXPECT_EQ(f.mul(x, y), f.mul(y, x));
            for (std::uint32_t k = 0; k < f.order(); k += 7) {
                const auto z = f.element(k);
                EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
            }
        }
    }
    EXPECT_THROW(f.inv(f.zero()), std::domain_error);
}

TEST(Field, ConjugateIsFrobenius) {
    for (std::uint32_t p : {5u, 7u}) {
        const Field f(p);
        for (std::uint32_t i = 0; i < f.order(); ++i) {
            const auto x = f.element(i);
            EXPECT_EQ(f.conjugate(x), f.pow(x, p));
            EXPECT_EQ(f.conjugate(f.conjugate(x)), x);
        }
    }
    const Field f(5);
    EXPECT_EQ(f.conjugate(f.u()), (FieldElement{0, 4}));
    EXPECT_EQ(f.conjugate(f.make(3)), f.make(3));
}

TEST(Field, NormAndTrace) {
    const Field f(5);
    EXPECT_EQ(f.norm(f.one()), f.one());
    EXPECT_EQ(f.norm(f.zero()), f.zero());
    std::map<std::uint32_t, int> counts;
    for (std::uint32_t i = 1; i < f.order(); ++i) {
        const auto n = f.norm(f.element(i));
        ASSERT_TRUE(n.in_base_field());
        EXPECT_EQ(n, f.pow(f.element(i), 6));
        ++counts[n.a];
    }
    EXPECT_EQ(counts, (std::map<std::uint32_t, int>{{1, 6}, {2, 6}, {3, 6}, {4, 6}}));
    EXPECT_EQ(f.trace(f.zero()), f.zero());
    EXPECT_EQ(f.trace(f.u()), f.zero());
    EXPECT_EQ(f.trace(f.one()), f.make(2));
}

TEST(Field, NormPreimage) {
    EXPECT_EQ(Field(5).norm_preimage(Field(5).one()), Field(5).one());
    for (std::uint32_t p : {5u, 7u, 11u}) {
        const Field f(p);
        for (std::uint32_t a = 1; a < p; ++a) {
            const auto l = f.norm_preimage(f.make(a));
            EXPECT_EQ(f.pow(l, p + 1), f.make(a)) << "p=" << p << " a=" << a;
        }
        EXPECT_THROW(f.norm_preimage(f.zero()), std::domain_error);
        EXPECT_THROW(f.norm_preimage(f.u()), std::domain_error);
    }
}

TEST(Field, ElementOfOrder) {
    EXPECT_EQ(Field(5).element_of_order(1), Field(5).one());
    for (std::uint32_t p : {5u, 7u}) {
        const Field f(p);
        const auto w = f.element_of_order(3);
        EXPECT_NE(w, f.one());
        EXPECT_EQ(f.pow(w, 3), f.one());
        EXPECT_EQ(f.multiplicative_order(w), 3u);
    }
    // 3 | p - 1 for p = 7, so the cube root of unity already lies in GF(7).
    EXPECT_TRUE(Field(7).element_of_order(3).in_base_field());
    EXPECT_FALSE(Field(5).element_of_order(3).in_base_field());
    EXPECT_THROW(Field(5).element_of_order(5), std::invalid_argument);
}

TEST(Field, TextRoundTrip) {
    const Field f(7);
    for (std::uint32_t i = 0; i < f.order(); ++i) EXPECT_EQ(f.parse(f.to_string(f.element(i))), f.element(i));
    EXPECT_EQ(f.parse("u"), f.u());
    EXPECT_EQ(f.parse("2 - 3*u"), f.make(2, -3));
    EXPECT_THROW(f.parse("2+q"), std::invalid_argument);
}
