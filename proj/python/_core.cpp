#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "qconx/cli.hpp"
#include "qconx/constructx.hpp"
#include "qconx/json_io.hpp"
#include "qconx/scan.hpp"

namespace py = pybind11;
using namespace qconx;

namespace {

DistanceOptions distance_options(std::uint64_t budget, std::uint64_t seed) {
    DistanceOptions d;
    d.budget = budget;
    d.seed = seed;
    return d;
}

std::string construct(std::uint32_t p, std::size_t s, std::size_t i, std::size_t j, std::size_t k, bool exact,
                      std::uint64_t budget, std::uint64_t seed) {
    const Field f(p);
    ConstructionOptions opt;
    opt.compute_exact = exact;
    opt.distance = distance_options(budget, seed);
    Json doc = to_json(f, construction_x(f, repeated_root_code(f, s, {i, j, k}), opt));
    doc["input"] = {{"p", p}, {"kind", "exponents"}, {"s", s}, {"i", i}, {"j", j}, {"k", k}};
    return doc.dump();
}

std::string construct_defining_set(std::uint32_t p, std::size_t n, std::vector<std::size_t> elements, bool exact,
                                   std::uint64_t budget) {
    const Field f(p);
    ConstructionOptions opt;
    opt.compute_exact = exact;
    opt.distance.budget = budget;
    const DefiningSet z(n, elements);
    const ConstructionResult r = n % (f.order() - 1) == 0 ? construction_x_cyclic(f, z, opt)
                                                          : construction_x(f, from_defining_set(f, z), opt);
    Json doc = to_json(f, r);
    doc["input"] = {{"p", p}, {"kind", "defining_set"}, {"n", n}, {"elements", z.elements}};
    return doc.dump();
}

std::string scan(std::uint32_t p, std::size_t s, bool bound_only, std::optional<std::size_t> max_e,
                 std::uint64_t budget, std::uint64_t seed) {
    ScanOptions opt;
    opt.p = p;
    opt.s = s;
    opt.bound_only = bound_only;
    opt.max_e = max_e;
    opt.distance = distance_options(budget, seed);
    ScanResult res;
    {
        py::gil_scoped_release release;
        res = run_scan(Field(p), opt);
    }
    Json out;
    out["records"] = Json::array();
    for (const auto& r : res.records) out["records"].push_back(to_json(r));
    out["summary"] = to_json(res.summary);
    return out.dump();
}

std::string compare_table(const std::string& records_json) {
    std::vector<ScanRecord> records;
    std::vector<std::pair<std::uint32_t, std::size_t>> seen;
    for (const auto& j : Json::parse(records_json)) {
        records.push_back(scan_record_from_json(j));
        seen.emplace_back(records.back().p, records.back().s);
    }
    Json out = Json::array();
    for (const auto& t : reference_rows()) {
        if (std::find(seen.begin(), seen.end(), std::pair(t.p, t.s)) == seen.end()) continue;
        out.push_back(to_json(compare_row(t, records)));
    }
    return out.dump();
}

std::string min_weight_json(std::uint32_t p, const std::string& generator_json, std::uint64_t budget,
                            std::uint64_t seed) {
    const Field f(p);
    const Json g = Json::parse(generator_json);
    if (!g.is_array() || g.empty()) throw std::invalid_argument("generator must be a nonempty list of rows");
    const LinearCode c(f, matrix_from_json(f, g, g[0].size()));
    return to_json(min_weight(f, c, distance_options(budget, seed))).dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::vector<std::string> argv{"qconx"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = cli::run(argv, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Construction X quantum codes over GF(p^2); results are JSON strings";

    m.def("field_info", [](std::uint32_t p) { return field_info_json(Field(p)).dump(); }, py::arg("p"));
    m.def("construct", &construct, py::arg("p"), py::arg("s") = 1, py::arg("i") = 0, py::arg("j") = 0,
          py::arg("k") = 0, py::arg("exact") = false, py::arg("budget") = DistanceOptions{}.budget,
          py::arg("seed") = 0);
    m.def("construct_defining_set", &construct_defining_set, py::arg("p"), py::arg("n"), py::arg("elements"),
          py::arg("exact") = false, py::arg("budget") = DistanceOptions{}.budget);
    m.def("scan", &scan, py::arg("p"), py::arg("s") = 1, py::arg("bound_only") = false,
          py::arg("max_e") = py::none(), py::arg("budget") = DistanceOptions{}.budget, py::arg("seed") = 0);
    m.def("compare_table", &compare_table, py::arg("records_json"));
    m.def("min_weight", &min_weight_json, py::arg("p"), py::arg("generator_json"),
          py::arg("budget") = DistanceOptions{}.budget, py::arg("seed") = 0);
    m.def("dual_exponents",
          [](std::uint32_t p, std::size_t s, std::size_t i, std::size_t j, std::size_t k) {
              const Exponents3 d = dual_exponents_3ps(p, s, {i, j, k});
              return py::make_tuple(d.i, d.j, d.k);
          },
          py::arg("p"), py::arg("s"), py::arg("i"), py::arg("j"), py::arg("k"));
    m.def("distance_3ps",
          [](std::uint32_t p, std::size_t s, std::size_t i, std::size_t j, std::size_t k) {
              return distance_3ps(p, s, {i, j, k});
          },
          py::arg("p"), py::arg("s"), py::arg("i"), py::arg("j"), py::arg("k"));
    m.def("verify_construction", &cli::verify_construction_text, py::arg("text"),
          py::arg("budget") = DistanceOptions{}.budget);
    m.def("verify_scan", &cli::verify_scan_text, py::arg("text"), py::arg("budget") = DistanceOptions{}.budget);
    m.def("run_cli", &run_cli, py::arg("args"));
}
