// Python bindings. The interchange format is the same canonical JSON the
// CLI speaks, so the module exposes string-to-string wrappers around the
// main operations plus the suite runner.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ncbir/json_io.hpp"

namespace py = pybind11;
using namespace ncbir;
using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

bool is_matrix_doc(const json& j) { return j.is_object() && j.contains("entries"); }

Matrix as_matrix(const json& j) {
    return is_matrix_doc(j) ? matrix_from_json(j) : hat_from_json(j).to_matrix();
}

std::string check(const std::string& doc_text) {
    const json doc = parse(doc_text);
    const DomainReport report =
        is_matrix_doc(doc) ? in_S(matrix_from_json(doc)) : in_S_hat(hat_from_json(doc));
    return canonical_dump(domain_report_to_json(report));
}

std::string apply_map(const std::string& map, const std::string& doc_text) {
    const json doc = parse(doc_text);
    if (map == "j1" || map == "j2" || map == "j" || map == "j-inv") {
        const Matrix m = as_matrix(doc);
        Matrix out = map == "j1"   ? j1(m)
                     : map == "j2" ? j2(m)
                     : map == "j"  ? j(m)
                                   : j_inverse(m);
        return canonical_dump(matrix_to_json(out));
    }
    if (map == "phi" || map == "phi-inv" || map == "psi" || map == "phi2") {
        const HatParams p = is_matrix_doc(doc) ? HatParams::from_matrix(matrix_from_json(doc))
                                               : hat_from_json(doc);
        HatParams out = map == "phi"       ? phi(p)
                        : map == "phi-inv" ? phi_inv(p)
                        : map == "psi"     ? psi(p)
                                           : phi(phi(p));
        return canonical_dump(hat_to_json(out));
    }
    throw Error("unknown map '" + map + "'");
}

std::string matrix_binop(const std::string& op, const std::string& a_text,
                         const std::string& b_text) {
    const Matrix a = as_matrix(parse(a_text));
    const Matrix b = as_matrix(parse(b_text));
    if (op == "mul") return canonical_dump(matrix_to_json(mat_mul(a, b)));
    if (op == "hadamard") return canonical_dump(matrix_to_json(hadamard_mul(a, b)));
    throw Error("unknown matrix operation '" + op + "'");
}

std::string matrix_unop(const std::string& op, const std::string& a_text) {
    const Matrix a = as_matrix(parse(a_text));
    if (op == "transpose") return canonical_dump(matrix_to_json(transpose(a)));
    if (op == "inverse") return canonical_dump(matrix_to_json(mat_inverse(a)));
    throw Error("unknown matrix operation '" + op + "'");
}

std::optional<std::string> witness(const std::string& a_text, const std::string& b_text) {
    const Matrix a = as_matrix(parse(a_text));
    const Matrix b = as_matrix(parse(b_text));
    const auto w = equiv_witness(a, b);
    if (!w) return std::nullopt;
    return canonical_dump(witness_to_json(*w, a.ring()));
}

std::string run_suite_py(const std::string& ring_text, long trials, std::uint64_t seed, int depth,
                         const std::vector<std::string>& checks) {
    SuiteConfig cfg;
    cfg.ring = ring_from_json(parse(ring_text));
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.depth = depth;
    cfg.checks = checks;
    return canonical_dump(suite_report_to_json(run_suite(cfg)));
}

std::string sample_member(const std::string& ring_text, std::uint64_t seed) {
    Rng rng(seed);
    return canonical_dump(matrix_to_json(sample_in_S(ring_from_json(parse(ring_text)), rng)));
}

bool ring_commutative(const std::string& ring_text) {
    return ring_from_json(parse(ring_text)).commutative();
}

}  // namespace

PYBIND11_MODULE(ncbir, m) {
    m.doc() = "Exact-arithmetic verification of the noncommutative birational maps "
              "J1, J2, J, Phi, Phi^-1 and Psi over pluggable rings. All values are "
              "exchanged as canonical JSON strings matching the CLI formats.";

    m.def("check", &check, py::arg("document"),
          "Domain membership report (S for matrices, S-hat for hatted parameters).");
    m.def("apply_map", &apply_map, py::arg("map"), py::arg("document"),
          "Apply one of j1, j2, j, j-inv, phi, phi-inv, psi, phi2.");
    m.def("matrix_binop", &matrix_binop, py::arg("op"), py::arg("a"), py::arg("b"),
          "Binary matrix operation: mul or hadamard.");
    m.def("matrix_unop", &matrix_unop, py::arg("op"), py::arg("a"),
          "Unary matrix operation: transpose or inverse.");
    m.def("witness", &witness, py::arg("a"), py::arg("b"),
          "Orbit witness carrying a to b, or None when there is none.");
    m.def("run_suite", &run_suite_py, py::arg("ring"), py::arg("trials") = 100,
          py::arg("seed") = 0, py::arg("depth") = 6,
          py::arg("checks") = std::vector<std::string>{},
          "Run the randomized identity suite and return the JSON report.");
    m.def("sample_member", &sample_member, py::arg("ring"), py::arg("seed") = 0,
          "Sample a matrix from the stabilized domain S.");
    m.def("is_commutative", &ring_commutative, py::arg("ring"));
    m.attr("__version__") = "0.1.0";
}
