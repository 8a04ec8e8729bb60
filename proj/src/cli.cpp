#include "qconx/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qconx/constructx.hpp"
#include "qconx/json_io.hpp"
#include "qconx/scan.hpp"

namespace qconx::cli {

namespace {

struct Common {
    std::string format = "json";
    std::string out_file;
    std::uint64_t budget = DistanceOptions{}.budget;
    std::uint64_t seed = 0;
};

struct ConstructArgs {
    std::uint32_t p = 0;
    std::size_t s = 1;
    std::size_t i = 0, j = 0, k = 0;
    std::string gen, defset;
    std::size_t n = 0;
    bool exact = false;
    bool verify = false;
};

class InvariantFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + item + "'");
        }
        if (v < 0 || item.find_first_not_of(" \t", pos) != std::string::npos) {
            throw std::invalid_argument("not a non-negative integer: '" + item + "'");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

DistanceOptions distance_options(const Common& c) {
    DistanceOptions d;
    d.budget = c.budget;
    d.seed = c.seed;
    return d;
}

// Builds the construction described by an "input" object.
ConstructionResult construct_from_input(const Json& input, const ConstructionOptions& opt) {
    const Field f(input.at("p").get<std::uint32_t>());
    const std::string kind = input.at("kind").get<std::string>();
    if (kind == "exponents") {
        const Exponents3 e{input.at("i").get<std::size_t>(), input.at("j").get<std::size_t>(),
                           input.at("k").get<std::size_t>()};
        return construction_x(f, repeated_root_code(f, input.at("s").get<std::size_t>(), e), opt);
    }
    const std::size_t n = input.at("n").get<std::size_t>();
    if (kind == "generator") {
        return construction_x(f, CyclicCode(f, n, parse_factored(f, input.at("gen").get<std::string>())), opt);
    }
    if (kind == "defining_set") {
        const DefiningSet z(n, input.at("elements").get<std::vector<std::size_t>>());
        if (n % (f.order() - 1) == 0) return construction_x_cyclic(f, z, opt);
        return construction_x(f, from_defining_set(f, z), opt);
    }
    throw std::invalid_argument("unknown input kind '" + kind + "'");
}

Json input_json(const ConstructArgs& a) {
    Json in;
    in["p"] = a.p;
    if (!a.defset.empty()) {
        if (a.n == 0) throw std::invalid_argument("--defset needs --n");
        in["kind"] = "defining_set";
        in["n"] = a.n;
        in["elements"] = parse_list(a.defset);
    } else if (!a.gen.empty()) {
        if (a.n == 0) throw std::invalid_argument("--gen needs --n");
        in["kind"] = "generator";
        in["n"] = a.n;
        in["gen"] = a.gen;
    } else {
        in["kind"] = "exponents";
        in["s"] = a.s;
        in["i"] = a.i;
        in["j"] = a.j;
        in["k"] = a.k;
    }
    return in;
}

std::string params_text(const Json& params) {
    return "[[" + params.at("N").dump() + "," + params.at("K").dump() + "," + params.at("d_lower").dump() + "]]";
}

// Structural checks on the matrices in a construction document, then a re-run
// of the pipeline from its input with the parameters compared.
std::string verify_construction_json(const Json& doc, std::uint64_t budget) {
    const Field f(doc.at("p").get<std::uint32_t>());
    const std::size_t n = doc.at("n").get<std::size_t>();
    const std::size_t e = doc.at("e").get<std::size_t>();
    const Polynomial g = polynomial_from_json(f, doc.at("generator_polynomial"));
    const LinearCode c = CyclicCode(f, n, g).to_linear(f);

    ConstructionResult r;
    r.n = n;
    r.e = e;
    r.hull_basis = matrix_from_json(f, doc.at("M"), n);
    r.complement = matrix_from_json(f, doc.at("A"), n);
    r.extension = matrix_from_json(f, doc.at("B"), n);
    r.extension_constant = element_from_json(f, doc.at("extension_constant"));
    r.G = matrix_from_json(f, doc.at("G"), n + e);
    r.E = LinearCode(f, r.G);

    if (r.extension.rows() != e) return "B has " + std::to_string(r.extension.rows()) + " rows, expected e";
    if (f.norm(r.extension_constant) != f.neg(f.one())) return "extension constant does not have norm -1";
    if (r.G.rows() != r.hull_basis.rows() + r.complement.rows() + e) return "G does not have |M|+|A|+|B| rows";
    for (std::size_t row = 0; row < r.G.rows(); ++row) {
        const std::size_t mrows = r.hull_basis.rows() + r.complement.rows();
        for (std::size_t col = 0; col < n + e; ++col) {
            FieldElement expect;
            if (col < n) {
                expect = row < r.hull_basis.rows() ? r.hull_basis(row, col)
                         : row < mrows             ? r.complement(row - r.hull_basis.rows(), col)
                                                   : r.extension(row - mrows, col);
            } else if (row >= mrows && col - n == row - mrows) {
                expect = r.extension_constant;
            }
            if (r.G(row, col) != expect) {
                return "G entry (" + std::to_string(row) + "," + std::to_string(col) + ") does not match [M|0; A|0; B|cI]";
            }
        }
    }
    if (LinearCode(f, r.hull_basis.stacked(r.complement)) != c) return "rows of M and A do not span C";
    if (!is_subcode(f, LinearCode(f, r.hull_basis), hull(f, c))) return "M is not inside the hull of C";
    for (std::size_t row = 0; row < r.G.rows(); ++row) {
        const bool s_row = row < r.hull_basis.rows() || row >= r.hull_basis.rows() + r.complement.rows();
        if (s_row && !hermitian_norm(f, r.G.row(row)).is_zero()) {
            return "row " + std::to_string(row) + " of G is not self-orthogonal";
        }
    }
    if (std::string failure = check_construction(f, c, r); !failure.empty()) return failure;

    const Json& claimed = doc.at("params");
    if (claimed.at("N").get<std::size_t>() != n + e) return "claimed N differs from n+e";
    const long K = 2 * static_cast<long>(r.E.dimension()) - static_cast<long>(n + e);
    if (claimed.at("K").get<long>() != K) return "claimed K differs from 2 dim E - N = " + std::to_string(K);

    ConstructionOptions opt;
    opt.distance.budget = budget;
    opt.compute_exact = !claimed.at("d_exact").is_null();
    const ConstructionResult again = construct_from_input(doc.at("input"), opt);
    if (again.E != r.E) return "re-running the input gives a different E";
    if (again.params.d_lower != claimed.at("d_lower").get<std::size_t>()) {
        return "claimed d_lower " + claimed.at("d_lower").dump() + " differs from recomputed " +
               std::to_string(again.params.d_lower);
    }
    if (opt.compute_exact) {
        if (!again.params.d_exact) return "d_exact claim could not be re-certified within the budget";
        if (*again.params.d_exact != claimed.at("d_exact").get<std::size_t>()) {
            return "claimed d_exact " + claimed.at("d_exact").dump() + " differs from recomputed " +
                   std::to_string(*again.params.d_exact);
        }
    }
    return {};
}

std::string verify_record(const ScanRecord& claimed, std::uint64_t budget) {
    ScanOptions opt;
    opt.p = claimed.p;
    opt.s = claimed.s;
    opt.bound_only = claimed.bound_only;
    opt.distance.budget = budget;
    opt.certify_e = claimed.d_exact.has_value();
    const Field f(claimed.p);
    const ScanRecord r = scan_record(f, opt, claimed.exps);
    auto differ = [](const char* what, auto a, auto b) {
        std::ostringstream os;
        os << what << " claimed " << a << ", recomputed " << b;
        return os.str();
    };
    if (r.N != claimed.N) return differ("N", claimed.N, r.N);
    if (r.K != claimed.K) return differ("K", claimed.K, r.K);
    if (r.e != claimed.e) return differ("e", claimed.e, r.e);
    if (r.k != claimed.k) return differ("k", claimed.k, r.k);
    if (r.d_lower != claimed.d_lower) return differ("d_lower", claimed.d_lower, r.d_lower);
    auto opt_text = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("null"); };
    if (r.d_exact != claimed.d_exact) return differ("d_exact", opt_text(claimed.d_exact), opt_text(r.d_exact));
    if (r.d_upper != claimed.d_upper) return differ("d_upper", opt_text(claimed.d_upper), opt_text(r.d_upper));
    return {};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot write '" + path + "'");
        }
        os_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (c.format == a) return;
    throw std::invalid_argument("format '" + c.format + "' is not supported by this command");
}

int cmd_field_info(std::uint32_t p, const Common& c, std::ostream& out) {
    require_format(c, {"json", "text"});
    const Field f(p);
    const Json info = field_info_json(f);
    Output o(c.out_file, out);
    if (c.format == "json") {
        o.stream() << info.dump(2) << "\n";
        return kExitOk;
    }
    o.stream() << "GF(" << f.order() << ") = GF(" << p << ")[u]/(u^2 - " << f.delta() << ")\n";
    o.stream() << "delta            " << f.delta() << "\n";
    o.stream() << "gamma            " << f.to_string(f.gamma()) << "\n";
    o.stream() << "sqrt(-1)         " << f.to_string(f.sqrt_minus_one()) << "  (norm "
               << f.norm(f.sqrt_minus_one()).a << ")\n";
    o.stream() << "extension const  " << info["extension_constant_text"].get<std::string>() << "\n";
    if (info.contains("omega_text")) o.stream() << "omega            " << info["omega_text"].get<std::string>() << "\n";
    for (const auto& line : info["conventions"]) o.stream() << "  - " << line.get<std::string>() << "\n";
    return kExitOk;
}

int cmd_construct(const ConstructArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
    require_format(c, {"json"});
    const Json input = input_json(a);
    ConstructionOptions opt;
    opt.compute_exact = a.exact;
    opt.distance = distance_options(c);
    const ConstructionResult r = construct_from_input(input, opt);
    const Field f(a.p);
    Json doc = to_json(f, r);
    doc["input"] = input;
    if (a.verify) {
        const std::string failure = verify_construction_json(doc, c.budget);
        if (!failure.empty()) throw InvariantFailure(failure);
        err << "verified " << params_text(doc["params"]) << "\n";
    }
    Output o(c.out_file, out);
    o.stream() << doc.dump(2) << "\n";
    return kExitOk;
}

ScanResult do_scan(std::uint32_t p, std::size_t s, bool bound_only, std::optional<std::size_t> max_e,
                   const Common& c) {
    ScanOptions opt;
    opt.p = p;
    opt.s = s;
    opt.bound_only = bound_only;
    opt.max_e = max_e;
    opt.distance = distance_options(c);
    return run_scan(Field(p), opt);
}

int cmd_scan(std::uint32_t p, std::size_t s, bool bound_only, std::optional<std::size_t> max_e, const Common& c,
             std::ostream& out, std::ostream& err) {
    require_format(c, {"json", "csv"});
    const ScanResult res = do_scan(p, s, bound_only, max_e, c);
    Output o(c.out_file, out);
    if (c.format == "csv") o.stream() << scan_csv_header() << "\n";
    for (const auto& r : res.records) {
        if (c.format == "csv") {
            o.stream() << to_csv(r) << "\n";
        } else {
            o.stream() << to_json(r).dump() << "\n";
        }
    }
    err << to_json(res.summary).dump() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& path, const Common& c, std::ostream& out) {
    const std::string text = read_file(path);
    const bool single = [&] {
        try {
            return Json::parse(text).contains("G");
        } catch (const nlohmann::json::exception&) {
            return false;
        }
    }();
    const std::string failure = single ? verify_construction_text(text, c.budget) : verify_scan_text(text, c.budget);
    if (!failure.empty()) throw InvariantFailure(failure);
    out << "ok\n";
    return kExitOk;
}

std::string witness_text(const RowComparison& r) {
    if (!r.witness) return "-";
    const ScanRecord& w = *r.witness;
    std::ostringstream os;
    os << "[[" << w.N << "," << w.K << ",";
    if (w.d_upper && w.d_lower < *w.d_upper) {
        os << w.d_lower << ".." << *w.d_upper;
    } else {
        os << w.d();
    }
    os << "]] n=" << w.n << " (i,j,k)=(" << w.exps.i << "," << w.exps.j << "," << w.exps.k << ") e=" << w.e;
    return os.str();
}

int cmd_table(bool large, const std::vector<std::string>& inputs, const Common& c, std::ostream& out,
              std::ostream& err) {
    require_format(c, {"text", "json", "csv"});
    std::vector<ScanRecord> records;
    std::vector<std::pair<std::uint32_t, std::size_t>> scanned;
    if (!inputs.empty()) {
        for (const auto& path : inputs) {
            std::istringstream lines(read_file(path));
            std::string line;
            while (std::getline(lines, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                const ScanRecord r = scan_record_from_json(Json::parse(line));
                if (std::find(scanned.begin(), scanned.end(), std::pair(r.p, r.s)) == scanned.end()) {
                    scanned.emplace_back(r.p, r.s);
                }
                records.push_back(r);
            }
        }
    } else {
        std::vector<std::tuple<std::uint32_t, std::size_t, bool>> plan = {{5, 1, false}, {7, 1, false}};
        if (large) {
            plan.emplace_back(5, 2, true);
            plan.emplace_back(7, 2, true);
            plan.emplace_back(5, 3, true);
        }
        for (auto [p, s, bound] : plan) {
            const ScanResult res = do_scan(p, s, bound, std::nullopt, c);
            err << "scan p=" << p << " s=" << s << ": " << to_json(res.summary).dump() << "\n";
            records.insert(records.end(), res.records.begin(), res.records.end());
            scanned.emplace_back(p, s);
        }
    }

    std::vector<RowComparison> rows;
    for (const auto& t : reference_rows()) {
        if (std::find(scanned.begin(), scanned.end(), std::pair(t.p, t.s)) == scanned.end()) continue;
        rows.push_back(compare_row(t, records));
    }

    Output o(c.out_file, out);
    if (c.format == "json") {
        Json doc = Json::array();
        for (const auto& r : rows) doc.push_back(to_json(r));
        o.stream() << doc.dump(2) << "\n";
    } else if (c.format == "csv") {
        o.stream() << "N,K,d,p,s,status,found_N,found_K,found_d_lower,found_d_exact,found_d_upper,i,j,k,e\n";
        for (const auto& r : rows) {
            o.stream() << r.target.N << ',' << r.target.K << ',' << r.target.d << ',' << r.target.p << ','
                       << r.target.s << ',' << to_string(r.status);
            if (r.witness) {
                const ScanRecord& w = *r.witness;
                o.stream() << ',' << w.N << ',' << w.K << ',' << w.d_lower << ','
                           << (w.d_exact ? std::to_string(*w.d_exact) : "") << ','
                           << (w.d_upper ? std::to_string(*w.d_upper) : "") << ',' << w.exps.i << ',' << w.exps.j
                           << ',' << w.exps.k << ',' << w.e;
            } else {
                o.stream() << ",,,,,,,,,";
            }
            o.stream() << "\n";
        }
    } else {
        o.stream() << std::left << std::setw(20) << "target" << std::setw(18) << "status" << "witness\n";
        for (const auto& r : rows) {
            const std::string target = "[[" + std::to_string(r.target.N) + "," + std::to_string(r.target.K) + "," +
                                       std::to_string(r.target.d) + "]]_" + std::to_string(r.target.p);
            o.stream() << std::left << std::setw(20) << target << std::setw(18) << to_string(r.status)
                       << witness_text(r);
            if (!r.note.empty() && r.status != MatchStatus::beaten) o.stream() << "  " << r.note;
            o.stream() << "\n";
        }
    }
    return kExitOk;
}

void add_common(CLI::App* app, Common& c, bool with_format = true) {
    if (with_format) app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app->add_option("--out", c.out_file, "Write output to FILE");
    app->add_option("--budget", c.budget, "Distance search work limit");
    app->add_option("--seed", c.seed, "Seed for randomized searches");
}

}  // namespace

std::string verify_construction_text(const std::string& text, unsigned long long budget) {
    Json doc;
    try {
        doc = Json::parse(text);
        return verify_construction_json(doc, budget);
    } catch (const nlohmann::json::exception& ex) {
        return std::string("malformed construction document: ") + ex.what();
    } catch (const std::invalid_argument& ex) {
        return std::string("invalid construction document: ") + ex.what();
    }
}

std::string verify_scan_text(const std::string& text, unsigned long long budget) {
    std::istringstream lines(text);
    std::string line;
    std::size_t number = 0, seen = 0;
    while (std::getline(lines, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++seen;
        std::string failure;
        try {
            failure = verify_record(scan_record_from_json(Json::parse(line)), budget);
        } catch (const nlohmann::json::exception& ex) {
            failure = std::string("malformed JSON: ") + ex.what();
        } catch (const std::invalid_argument& ex) {
            failure = ex.what();
        }
        if (!failure.empty()) return "line " + std::to_string(number) + ": " + failure;
    }
    if (seen == 0) return "no records to verify";
    return {};
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construction X quantum codes over GF(p^2)", "qconx"};
    app.require_subcommand(1);

    Common common;
    std::uint32_t p = 0;
    std::size_t s = 1;

    auto* info = app.add_subcommand("field-info", "Field constants and conventions for GF(p^2)");
    info->add_option("--p", p, "Odd prime")->required();
    add_common(info, common);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Construction X on one cyclic code");
    construct->add_option("--p", ca.p, "Prime p > 2")->required();
    construct->add_option("--s", ca.s, "Length 3p^s family exponent");
    construct->add_option("--i", ca.i, "Multiplicity of (x-1)");
    construct->add_option("--j", ca.j, "Multiplicity of (x-w)");
    construct->add_option("--k", ca.k, "Multiplicity of (x-w^2)");
    construct->add_option("--gen", ca.gen, "Generator in factored form, e.g. (x-1)^2(x-w)^1");
    construct->add_option("--defset", ca.defset, "Defining set, e.g. 0,4,8");
    construct->add_option("--n", ca.n, "Code length for --gen or --defset");
    construct->add_flag("--exact", ca.exact, "Certify the minimum weight of E");
    construct->add_flag("--verify", ca.verify, "Re-check every invariant of the output");
    add_common(construct, common);

    bool bound_only = false;
    std::optional<std::size_t> max_e;
    auto* scan = app.add_subcommand("scan", "All (i,j,k) in [0,p^s]^3, best d per (N,K)");
    scan->add_option("--p", p, "Prime p > 3")->required();
    scan->add_option("--s", s, "Length 3p^s family exponent");
    scan->add_flag("--bound-only", bound_only, "Long lengths: closed-form upper and searched lower bounds");
    scan->add_option("--max-e", max_e, "Skip constructions with e above this");
    add_common(scan, common);

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Re-check a construction document or scan records");
    verify->add_option("file", verify_path, "construct output or scan JSON lines")->required();
    add_common(verify, common, false);

    bool large = false;
    std::vector<std::string> inputs;
    auto* table = app.add_subcommand("table", "Compare scans with the reference parameter table");
    table->add_flag("--large", large, "Also run bound-only scans at lengths 75, 147 and 375");
    table->add_option("--in", inputs, "Use scan JSON lines from these files instead of scanning");
    add_common(table, common);

    std::vector<const char*> args;
    for (const auto& a : argv) args.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*info) return cmd_field_info(p, common, out);
        if (*construct) return cmd_construct(ca, common, out, err);
        if (*scan) return cmd_scan(p, s, bound_only, max_e, common, out, err);
        if (*verify) return cmd_verify(verify_path, common, out);
        if (*table) {
            if (common.format == "json" && !table->count("--format")) common.format = "text";
            return cmd_table(large, inputs, common, out, err);
        }
    } catch (const InvariantFailure& ex) {
        err << "invariant failure: " << ex.what() << "\n";
        return kExitInvariant;
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& ex) {
        err << "invariant failure: " << ex.what() << "\n";
        return kExitInvariant;
    } catch (const Json::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        err << "invariant failure: " << ex.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}

}  // namespace qconx::cli
