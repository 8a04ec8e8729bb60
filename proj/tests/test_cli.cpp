#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qconx/cli.hpp"
#include "qconx/json_io.hpp"

using namespace qconx;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "qconx");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("qconx_test_" + name)).string();
}

}  // namespace

TEST(Json, ElementRoundTrip) {
    const Field f(7);
    for (std::uint32_t i = 0; i < f.order(); ++i) EXPECT_EQ(element_from_json(f, to_json(f.element(i))), f.element(i));
    EXPECT_THROW(element_from_json(f, Json::array({7, 0})), std::invalid_argument);
    EXPECT_THROW(element_from_json(f, Json::array({1})), std::invalid_argument);
}

TEST(Json, ScanRecordRoundTrip) {
    ScanRecord r;
    r.p = 7;
    r.s = 2;
    r.n = 147;
    r.exps = {1, 2, 3};
    r.N = 150;
    r.K = 12;
    r.d_lower = 3;
    r.d_upper = 5;
    r.bound_only = true;
    const ScanRecord back = scan_record_from_json(to_json(r));
    EXPECT_EQ(to_json(back), to_json(r));
    EXPECT_THROW(scan_record_from_json(Json::object()), std::invalid_argument);
}

TEST(Cli, FieldInfo) {
    const CliRun r = run({"field-info", "--p", "5"});
    ASSERT_EQ(r.code, cli::kExitOk);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["delta"], 2);
    EXPECT_EQ(j["omega_in_base_field"], false);
    EXPECT_EQ(Json::parse(run({"field-info", "--p", "7"}).out)["omega_in_base_field"], true);
    EXPECT_EQ(run({"field-info", "--p", "4"}).code, cli::kExitUsage);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"construct"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"construct", "--p", "5", "--i", "9"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"construct", "--p", "5", "--i", "5", "--j", "5", "--k", "5"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"scan", "--p", "5", "--s", "2"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"verify", temp_path("does_not_exist")}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, ConstructVerifyAndTamper) {
    const CliRun r = run({"construct", "--p", "5", "--i", "1", "--j", "1", "--k", "3", "--exact"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["params"]["N"], 16);
    EXPECT_EQ(doc["params"]["K"], 6);
    EXPECT_EQ(doc["e"], 1);
    EXPECT_EQ(cli::verify_construction_text(r.out, 10'000'000), "");

    const std::string path = temp_path("construct.json");
    std::ofstream(path) << r.out;
    EXPECT_EQ(run({"verify", path}).code, cli::kExitOk);

    Json bad = doc;
    bad["G"][0][0] = Json::array({4, 4});
    EXPECT_NE(cli::verify_construction_text(bad.dump(), 10'000'000), "");
    std::ofstream(path) << bad.dump();
    EXPECT_EQ(run({"verify", path}).code, cli::kExitInvariant);

    bad = doc;
    bad["params"]["d_exact"] = 5;
    EXPECT_NE(cli::verify_construction_text(bad.dump(), 10'000'000), "");
    bad = doc;
    bad["B"][0][3] = Json::array({1, 1});
    EXPECT_NE(cli::verify_construction_text(bad.dump(), 10'000'000), "");
    std::remove(path.c_str());
}

TEST(Cli, ConstructFromDefiningSetAndGenerator) {
    const CliRun d = run({"construct", "--p", "5", "--n", "24", "--defset", "0,4,20", "--verify"});
    ASSERT_EQ(d.code, cli::kExitOk) << d.err;
    EXPECT_EQ(Json::parse(d.out)["source"], "defining_set");
    EXPECT_EQ(cli::verify_construction_text(d.out, 10'000'000), "");

    const CliRun g = run({"construct", "--p", "7", "--n", "21", "--gen", "(x-1)^4(x-w)^1(x-w2)^2", "--verify"});
    ASSERT_EQ(g.code, cli::kExitOk) << g.err;
    EXPECT_EQ(Json::parse(g.out)["params"]["N"], 22);
    EXPECT_EQ(run({"construct", "--p", "5", "--defset", "0"}).code, cli::kExitUsage);
}

TEST(Cli, ScanFormatsAndVerify) {
    const CliRun j = run({"scan", "--p", "5"});
    ASSERT_EQ(j.code, cli::kExitOk);
    EXPECT_EQ(j.out, run({"scan", "--p", "5"}).out);
    EXPECT_EQ(cli::verify_scan_text(j.out, 10'000'000), "");
    const CliRun c = run({"scan", "--p", "5", "--format", "csv"});
    EXPECT_EQ(c.out.substr(0, c.out.find('\n')), scan_csv_header());

    std::string tampered = j.out;
    const auto pos = tampered.find("\"d_lower\":");
    tampered[pos + 10] = tampered[pos + 10] == '9' ? '8' : '9';
    EXPECT_NE(cli::verify_scan_text(tampered, 10'000'000), "");
    EXPECT_NE(cli::verify_scan_text("", 10'000'000), "");
}

TEST(Cli, TableFromScanFile) {
    const std::string path = temp_path("scan.jsonl");
    ASSERT_EQ(run({"scan", "--p", "5", "--out", path}).code, cli::kExitOk);
    const CliRun t = run({"table", "--in", path, "--format", "json"});
    ASSERT_EQ(t.code, cli::kExitOk) << t.err;
    const Json rows = Json::parse(t.out);
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& r : rows) EXPECT_NE(r["status"], "not reproduced");
    std::remove(path.c_str());
}
