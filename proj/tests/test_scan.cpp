#include <gtest/gtest.h>

#include <set>

#include "qconx/constructx.hpp"
#include "qconx/scan.hpp"

using namespace qconx;

TEST(Scan, ClosedFormMatchesConstruction) {
    for (std::uint32_t p : {5u, 7u}) {
        const Field f(p);
        for (Exponents3 e : {Exponents3{1, 1, 3}, Exponents3{4, 1, 2}, Exponents3{0, 0, 1}, Exponents3{2, 3, 5}}) {
            if (e.i > p || e.j > p || e.k > p) continue;
            const ClosedForm cf = closed_form_3ps(p, 1, e);
            ConstructionOptions opt;
            opt.compute_distances = false;
            const auto r = construction_x(f, repeated_root_code(f, 1, e), opt);
            EXPECT_EQ(cf.k, r.k);
            EXPECT_EQ(cf.hull_dim, r.s);
            EXPECT_EQ(cf.e, r.e);
            EXPECT_EQ(cf.K, r.params.K);
        }
    }
}

TEST(Scan, SmallScanIsCertifiedAndDeterministic) {
    const Field f(5);
    ScanOptions opt;
    opt.p = 5;
    const ScanResult a = run_scan(f, opt);
    EXPECT_EQ(a.summary.triples_examined, 216u);
    EXPECT_EQ(a.summary.zero_codes_skipped, 1u);
    std::set<std::pair<std::size_t, long>> keys;
    for (const auto& r : a.records) {
        EXPECT_TRUE(keys.insert({r.N, r.K}).second) << "duplicate (N,K)";
        EXPECT_GT(r.K, 0);
        ASSERT_TRUE(r.d_exact);
        EXPECT_GE(*r.d_exact, r.d_lower);
        EXPECT_EQ(r.N, r.n + r.e);
    }
    const ScanResult b = run_scan(f, opt);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].exps, b.records[i].exps);
        EXPECT_EQ(a.records[i].d_exact, b.records[i].d_exact);
    }
}

TEST(Scan, RecordsRebuildFromExponents) {
    const Field f(5);
    ScanOptions opt;
    opt.p = 5;
    for (const auto& r : run_scan(f, opt).records) {
        const ScanRecord again = scan_record(f, opt, r.exps);
        EXPECT_EQ(again.N, r.N);
        EXPECT_EQ(again.K, r.K);
        EXPECT_EQ(again.d_lower, r.d_lower);
        EXPECT_EQ(again.d_exact, r.d_exact);
    }
}

TEST(Scan, MaxEFilters) {
    const Field f(5);
    ScanOptions opt;
    opt.p = 5;
    opt.max_e = 0;
    const ScanResult r = run_scan(f, opt);
    EXPECT_GT(r.summary.over_max_e, 0u);
    for (const auto& rec : r.records) EXPECT_EQ(rec.e, 0u);
}

TEST(Scan, RejectsBadArguments) {
    ScanOptions opt;
    opt.p = 3;
    EXPECT_THROW(run_scan(Field(3), opt), std::invalid_argument);
    opt.p = 5;
    opt.s = 2;
    EXPECT_THROW(run_scan(Field(5), opt), std::invalid_argument);
}

TEST(Scan, CompareRowStatuses) {
    ScanRecord r;
    r.p = 5;
    r.s = 1;
    r.n = 15;
    r.N = 15;
    r.K = 9;
    r.d_lower = 3;
    r.d_exact = 3;
    const TargetRow exact{15, 9, 3, 5, 1}, weaker{15, 9, 2, 5, 1}, missing{15, 11, 3, 5, 1};
    EXPECT_EQ(compare_row(exact, {r}).status, MatchStatus::reproduced);
    EXPECT_EQ(compare_row(weaker, {r}).status, MatchStatus::beaten);
    EXPECT_EQ(compare_row(missing, {r}).status, MatchStatus::not_reproduced);

    ScanRecord b = r;
    b.bound_only = true;
    b.d_exact.reset();
    b.d_lower = 2;
    b.d_upper = 4;
    EXPECT_EQ(compare_row(exact, {b}).status, MatchStatus::bound_consistent);
    EXPECT_EQ(to_string(MatchStatus::bound_consistent), "bound-consistent");
}

TEST(Scan, BoundOnlyLength75) {
    const Field f(5);
    ScanOptions opt;
    opt.p = 5;
    opt.s = 2;
    opt.bound_only = true;
    const ScanResult res = run_scan(f, opt);
    EXPECT_EQ(res.summary.triples_examined, 26u * 26u * 26u);
    for (const auto& r : res.records) {
        ASSERT_TRUE(r.d_upper);
        EXPECT_LE(r.d_lower, *r.d_upper);
    }
    for (const auto& t : reference_rows()) {
        if (t.p != 5 || t.s != 2) continue;
        const auto c = compare_row(t, res.records);
        EXPECT_NE(c.status, MatchStatus::not_reproduced) << t.N << "," << t.K << "," << t.d;
    }
}
