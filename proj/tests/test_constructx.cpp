#include <gtest/gtest.h>

#include "qconx/constructx.hpp"
#include "support.hpp"

using namespace qconx;
using qconx::testing::hermitian_gram;
using qconx::testing::is_identity;
using qconx::testing::random_code;

namespace {

bool dual_inside(const Field& f, const LinearCode& e) { return is_subcode(f, hermitian_dual(f, e), e); }

}  // namespace

TEST(ConstructX, ExtensionConstantHasNormMinusOne) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const Field f(p);
        EXPECT_EQ(f.norm(extension_constant(f)), f.neg(f.one())) << "p=" << p;
    }
    // p = 1 mod 4: i itself works.
    EXPECT_EQ(extension_constant(Field(5)), Field(5).sqrt_minus_one());
}

TEST(ConstructX, FindNormKVector) {
    const Field f(5);
    const std::vector<Vector> unit{{f.one(), f.zero()}};
    EXPECT_EQ(find_norm_k_vector(f, unit, f.one()), unit[0]);

    const std::vector<Vector> span{{f.one(), f.zero()}, {f.u(), f.one()}};
    for (std::uint32_t k = 0; k < 5; ++k) {
        const Vector z = find_norm_k_vector(f, span, f.make(k));
        EXPECT_EQ(hermitian_norm(f, z), f.make(k));
        EXPECT_TRUE(LinearCode(f, Matrix::from_rows(span, 2)).contains(f, z));
    }
    const Vector iso = find_norm_k_vector(f, span, f.zero());
    EXPECT_GT(hamming_weight(iso), 0u);

    // (1, 2) spans a totally isotropic line.
    const std::vector<Vector> isotropic{{f.one(), f.make(2)}};
    EXPECT_THROW(find_norm_k_vector(f, isotropic, f.one()), std::invalid_argument);
}

TEST(ConstructX, OrthonormalCompletion) {
    const Field f(5);
    const LinearCode iso(f, Matrix::from_rows({{f.one(), f.make(2)}}, 2));
    EXPECT_EQ(orthonormal_complete(f, iso).orthonormal.rows(), 0u);

    const auto full = orthonormal_complete(f, LinearCode::full(f, 2));
    EXPECT_EQ(full.orthonormal.rows(), 2u);
    EXPECT_TRUE(is_identity(f, hermitian_gram(f, full.orthonormal)));

    std::mt19937_64 rng(31);
    int hull_one = 0;
    for (int t = 0; t < 200 && hull_one < 3; ++t) {
        const LinearCode d = random_code(f, 8, 4, rng);
        if (hull(f, d).dimension() != 1) continue;
        ++hull_one;
        const auto oc = orthonormal_complete(f, d);
        EXPECT_EQ(oc.orthonormal.rows(), 3u);
        EXPECT_TRUE(is_identity(f, hermitian_gram(f, oc.orthonormal)));
        EXPECT_EQ(rank(f, oc.hull_basis.stacked(oc.orthonormal)), 4u);
    }
    EXPECT_EQ(hull_one, 3);
}

TEST(ConstructX, SelfOrthogonalDualGivesPlainConstruction) {
    const Field f(5);
    // <(x-1)^1 (x-w)^1 (x-w^2)^3> contains its Hermitian dual iff e = 0.
    const CyclicCode c = repeated_root_code(f, 1, {0, 2, 2});
    const auto r = construction_x(f, c);
    EXPECT_EQ(r.e, 0u);
    EXPECT_EQ(r.params.N, 15u);
    EXPECT_EQ(r.E, c.to_linear(f));
    EXPECT_EQ(r.params.K, 7);
    EXPECT_EQ(r.params.d_lower, 3u);
}

TEST(ConstructX, ExtendedCodeWithE1) {
    const Field f(5);
    ConstructionOptions opt;
    opt.compute_exact = true;
    const auto r = construction_x(f, repeated_root_code(f, 1, {1, 1, 3}), opt);
    EXPECT_EQ(r.e, 1u);
    EXPECT_EQ(r.params.N, 16u);
    EXPECT_EQ(r.params.K, 6);
    EXPECT_EQ(r.params.d_lower, 4u);
    ASSERT_TRUE(r.params.d_exact);
    EXPECT_GE(*r.params.d_exact, r.params.d_lower);
    EXPECT_TRUE(dual_inside(f, r.E));
    EXPECT_EQ(r.E.dimension(), r.k + r.e);
    EXPECT_EQ(check_construction(f, r.E.length() == 16 ? repeated_root_code(f, 1, {1, 1, 3}).to_linear(f)
                                                        : LinearCode(), r),
              "");
}

TEST(ConstructX, RandomCodesAreSound) {
    std::mt19937_64 rng(32);
    for (std::uint32_t p : {5u, 7u}) {
        const Field f(p);
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = 4 + t % 5, k = 1 + t % (n - 1);
            const LinearCode c = random_code(f, n, k, rng);
            const auto r = construction_x(f, c);
            EXPECT_TRUE(dual_inside(f, r.E));
            EXPECT_EQ(r.E.length(), n + r.e);
            EXPECT_EQ(r.E.dimension(), c.dimension() + r.e);
            EXPECT_EQ(r.params.K, 2 * static_cast<long>(r.E.dimension()) - static_cast<long>(n + r.e));
            EXPECT_EQ(check_construction(f, c, r), "");
        }
    }
}

TEST(ConstructX, CheckConstructionCatchesTampering) {
    const Field f(7);
    const LinearCode c = repeated_root_code(f, 1, {4, 1, 2}).to_linear(f);
    auto r = construction_x(f, c);
    ASSERT_GT(r.e, 0u);
    r.extension(0, 0) = f.add(r.extension(0, 0), f.one());
    EXPECT_NE(check_construction(f, c, r), "");
}

TEST(ConstructX, RejectsZeroCode) {
    const Field f(5);
    EXPECT_THROW(construction_x(f, LinearCode::zero(5)), std::invalid_argument);
}

TEST(ConstructX, BVectorIsQuotient) {
    const Field f(5);
    const auto root = f.pow(f.gamma(), 4);
    const Vector b = b_vector(f, 24, root);
    const Polynomial prod = mul(f, Polynomial(b), Polynomial::linear(f, root));
    EXPECT_EQ(prod, Polynomial::xn_minus_one(f, 24));
}

TEST(ConstructX, DefiningSetVariant) {
    const Field f(5);
    // Multiples of 4 are fixed by s -> -5s mod 24, so each gives an extension row.
    const DefiningSet z(24, {0, 4, 8, 20});
    const auto r = construction_x_cyclic(f, z);
    EXPECT_EQ(r.e, hull_dim_from_defining_set(f, z).e);
    EXPECT_EQ(r.extension_roots.size(), r.e);
    EXPECT_TRUE(dual_inside(f, r.E));
    EXPECT_TRUE(is_identity(f, hermitian_gram(f, r.extension)));
    EXPECT_EQ(check_construction(f, from_defining_set(f, z).to_linear(f), r), "");
}

TEST(ConstructX, DefiningSetRejectsNonFixedRoots) {
    const Field f(5);
    // 1 and 19 = -5 mod 24 pair up but are not fixed by s -> -ps, so the
    // b_t rows are not orthonormal.
    const Vector b1 = b_vector(f, 24, f.gamma()), b19 = b_vector(f, 24, f.pow(f.gamma(), 19));
    EXPECT_NE(hermitian_ip(f, b1, b19), f.zero());
    EXPECT_THROW(construction_x_cyclic(f, DefiningSet(24, {1, 19})), std::invalid_argument);
}

TEST(ConstructX, BoundBelowExactDistance) {
    const Field f(7);
    for (Exponents3 e : {Exponents3{4, 1, 2}, Exponents3{3, 2, 6}, Exponents3{1, 2, 5}}) {
        ConstructionOptions opt;
        opt.compute_exact = true;
        const auto r = construction_x(f, repeated_root_code(f, 1, e), opt);
        ASSERT_TRUE(r.params.d_exact);
        EXPECT_GE(*r.params.d_exact, r.params.d_lower);
        EXPECT_EQ(r.params.d_lower, construction_lower_bound(f, repeated_root_code(f, 1, e).to_linear(f)));
    }
}
