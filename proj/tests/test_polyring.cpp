#include <gtest/gtest.h>

#include "qconx/polyring.hpp"
#include "qconx/splitting_field.hpp"
#include "support.hpp"

using namespace qconx;
using qconx::testing::random_element;

namespace {

Polynomial random_poly(const Field& f, std::size_t degree, std::mt19937_64& rng) {
    Vector c(degree + 1);
    for (auto& x : c) x = random_element(f, rng);
    if (c.back().is_zero()) c.back() = f.one();
    return Polynomial(c);
}

Polynomial x_minus(const Field& f, FieldElement r) { return Polynomial::linear(f, r); }

}  // namespace

TEST(Polyring, ZeroIsEmpty) {
    const Field f(5);
    EXPECT_TRUE(Polynomial(Vector{f.zero(), f.zero()}).is_zero());
    EXPECT_EQ(Polynomial(Vector{f.one(), f.zero()}).coeffs().size(), 1u);
}

TEST(Polyring, DivmodIdentity) {
    const Field f(7);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const Polynomial a = random_poly(f, 3 + t % 9, rng), b = random_poly(f, 1 + t % 4, rng);
        const auto [q, r] = divmod(f, a, b);
        EXPECT_TRUE(r.is_zero() || r.degree() < b.degree());
        EXPECT_EQ(add(f, mul(f, q, b), r), a);
    }
    EXPECT_THROW(divmod(f, random_poly(f, 2, rng), Polynomial()), std::domain_error);
}

TEST(Polyring, Gcd) {
    const Field f(5);
    std::mt19937_64 rng(12);
    const Polynomial a = random_poly(f, 4, rng);
    EXPECT_EQ(gcd(f, a, Polynomial()), monic(f, a));
    const Polynomial g = x_minus(f, f.make(2, 1));
    const Polynomial x = mul(f, g, x_minus(f, f.one())), y = mul(f, g, x_minus(f, f.make(3)));
    EXPECT_EQ(gcd(f, x, y), g);
    EXPECT_TRUE(mod(f, Polynomial::xn_minus_one(f, 12), x_minus(f, f.one())).is_zero());
}

TEST(Polyring, ConjugationAndReciprocal) {
    const Field f(5);
    std::mt19937_64 rng(13);
    const Polynomial base(Vector{f.make(1), f.make(3), f.make(2)});
    EXPECT_EQ(conj_poly(f, base), base);
    for (int t = 0; t < 20; ++t) {
        const Polynomial a = random_poly(f, 1 + t % 6, rng), b = random_poly(f, 1 + t % 5, rng);
        EXPECT_EQ(conj_poly(f, conj_poly(f, a)), a);
        EXPECT_EQ(conj_poly(f, mul(f, a, b)), mul(f, conj_poly(f, a), conj_poly(f, b)));
        EXPECT_EQ(herm_reciprocal(f, mul(f, a, b)), mul(f, herm_reciprocal(f, a), herm_reciprocal(f, b)));
        if (!a.coeffs().front().is_zero()) {
            EXPECT_EQ(reciprocal(reciprocal(a)), a);
        }
    }
}

TEST(Polyring, ReciprocalOfRootFactors) {
    for (std::uint32_t p : {5u, 7u}) {
        const Field f(p);
        const auto w = f.element_of_order(3);
        const Polynomial x1 = x_minus(f, f.one());
        EXPECT_EQ(reciprocal(x1), scale(f, x1, f.neg(f.one())));
        EXPECT_EQ(herm_reciprocal(f, x1), scale(f, x1, f.neg(f.one())));
        EXPECT_EQ(reciprocal(x_minus(f, w)), scale(f, x_minus(f, f.mul(w, w)), f.neg(w)));
        const Polynomial xn = Polynomial::xn_minus_one(f, 9);
        EXPECT_EQ(herm_reciprocal(f, xn), scale(f, xn, f.neg(f.one())));
    }
}

TEST(Polyring, FactorSimple) {
    const Field f(5);
    const auto fz = factor_xn_minus_1_simple(f, 24);
    ASSERT_EQ(fz.factors.size(), 24u);
    for (std::size_t a = 0; a < 24; ++a) {
        EXPECT_EQ(fz.factors[a].factor, x_minus(f, f.pow(f.gamma(), a)));
    }
    EXPECT_EQ(fz.expand(f), Polynomial::xn_minus_one(f, 24));

    const auto three = factor_xn_minus_1_simple(f, 3);
    const auto w = f.element_of_order(3);
    ASSERT_EQ(three.factors.size(), 3u);
    EXPECT_EQ(three.expand(f), mul(f, mul(f, x_minus(f, f.one()), x_minus(f, w)), x_minus(f, f.mul(w, w))));

    // ord_13(25) = 2: six quadratic factors plus x - 1.
    const auto thirteen = factor_xn_minus_1_simple(f, 13);
    EXPECT_EQ(thirteen.expand(f), Polynomial::xn_minus_one(f, 13));
    for (const auto& fac : thirteen.factors) {
        EXPECT_TRUE(is_irreducible(f, fac.factor));
        EXPECT_EQ(fac.factor.leading(), f.one());
    }
}

TEST(Polyring, FactorRepeatedRoot) {
    for (auto [p, s] : {std::pair{5u, 1u}, {5u, 2u}, {7u, 1u}, {11u, 1u}}) {
        const Field f(p);
        const auto fz = factor_x3ps_minus_1(f, s);
        ASSERT_EQ(fz.factors.size(), 3u);
        for (const auto& fac : fz.factors) EXPECT_EQ(fac.multiplicity, int_pow(p, s));
        EXPECT_EQ(fz.expand(f), Polynomial::xn_minus_one(f, 3 * int_pow(p, s)));
    }
    EXPECT_THROW(factor_x3ps_minus_1(Field(3), 1), std::invalid_argument);
}

TEST(Polyring, ParseFactored) {
    const Field f(7);
    const auto w = f.element_of_order(3);
    const Polynomial g = parse_factored(f, "(x-1)^2*(x-w)^1(x-w2)^0");
    EXPECT_EQ(g, mul(f, pow(f, x_minus(f, f.one()), 2), x_minus(f, w)));
    EXPECT_EQ(parse_factored(f, "(x+2)"), x_minus(f, f.make(-2)));
    EXPECT_EQ(parse_factored(f, to_factored_string(f, factor_x3ps_minus_1(f, 1))), Polynomial::xn_minus_one(f, 21));
    EXPECT_THROW(parse_factored(f, "(x-1"), std::invalid_argument);
    EXPECT_THROW(parse_factored(f, "(y-1)"), std::invalid_argument);
}

TEST(SplittingField, Degree2Extension) {
    const Field f(5);
    const SplittingField k = SplittingField::for_length(f, 13);
    EXPECT_EQ(k.degree(), 2u);
    EXPECT_EQ(k.group_order(), 624u);
    EXPECT_TRUE(k.is_primitive(k.primitive()));
    EXPECT_TRUE(is_irreducible(f, k.modulus()));
    const auto b = k.element_of_order(13);
    EXPECT_EQ(k.pow(b, 13), k.one());
    EXPECT_NE(k.pow(b, 1), k.one());
}

TEST(SplittingField, DegreeOneUsesGamma) {
    const Field f(7);
    const SplittingField k = SplittingField::for_length(f, 48);
    EXPECT_EQ(k.degree(), 1u);
    EXPECT_EQ(k.to_base(k.primitive()), f.gamma());
}

TEST(SplittingField, Cosets) {
    EXPECT_EQ(q_coset(25, 1, 13), (std::vector<std::size_t>{1, 12}));
    EXPECT_EQ(q_coset(25, 0, 13), (std::vector<std::size_t>{0}));
    EXPECT_EQ(q_coset(25, 5, 24), (std::vector<std::size_t>{5}));
    EXPECT_EQ(multiplicative_order_mod(25, 13), 2u);
    EXPECT_EQ(multiplicative_order_mod(49, 1), 1u);
}

TEST(SplittingField, ProductOfLinearOverCoset) {
    const Field f(5);
    const auto roots = RootsOfUnity::for_length(f, 13);
    const Polynomial g = roots.product_of_linear({1, 12});
    EXPECT_EQ(g.degree(), 2);
    EXPECT_TRUE(divides(f, g, Polynomial::xn_minus_one(f, 13)));
    EXPECT_THROW(roots.product_of_linear({1}), std::invalid_argument);
}
