// Command-line front end: domain checks, map application and iteration,
// orbit-witness extraction, and the randomized verification suite. All
// input and output is canonical JSON. Exit codes: 0 success/pass, 1
// verification failure or absent witness, 2 usage or domain errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncbir/json_io.hpp"

using namespace ncbir;
using nlohmann::json;

namespace {

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw ParseError("cannot open output file '" + out_path + "'");
    file << text;
}

bool is_matrix_doc(const json& j) { return j.is_object() && j.contains("entries"); }

Matrix as_matrix(const json& j) {
    if (is_matrix_doc(j)) return matrix_from_json(j);
    return hat_from_json(j).to_matrix();
}

HatParams as_hat(const json& j) {
    if (is_matrix_doc(j)) return HatParams::from_matrix(matrix_from_json(j));
    return hat_from_json(j);
}

int run_check(const std::string& in_path, const std::string& out_path) {
    const json doc = read_json(in_path);
    const DomainReport report =
        is_matrix_doc(doc) ? in_S(matrix_from_json(doc)) : in_S_hat(hat_from_json(doc));
    write_output(canonical_dump(domain_report_to_json(report)), out_path);
    return report.member ? 0 : 1;
}

int run_apply(const std::string& map, const std::string& in_path, const std::string& out_path) {
    const json doc = read_json(in_path);
    json result;
    if (map == "j1" || map == "j2" || map == "j" || map == "j-inv") {
        const Matrix m = as_matrix(doc);
        Matrix out = map == "j1"   ? j1(m)
                     : map == "j2" ? j2(m)
                     : map == "j"  ? j(m)
                                   : j_inverse(m);
        result = matrix_to_json(out);
    } else {
        const HatParams p = as_hat(doc);
        HatParams out = map == "phi"       ? phi(p)
                        : map == "phi-inv" ? phi_inv(p)
                        : map == "psi"     ? psi(p)
                                           : phi(phi(p));  // phi2
        result = hat_to_json(out);
    }
    write_output(canonical_dump(result), out_path);
    return 0;
}

// Per-step domain status: membership in S for 3 x 3 matrices, literal
// membership in dom(J) and dom(J^-1) for other sizes.
json matrix_step(int index, const Matrix& m) {
    json step{{"index", index}, {"value", matrix_to_json(m)}};
    if (m.n() == 3) {
        step["in_S"] = in_S(m).member;
        return step;
    }
    bool in_dom = true;
    for (int r = 0; in_dom && r < m.n(); ++r)
        for (int c = 0; in_dom && c < m.n(); ++c)
            if (!try_inverse(m.at(r, c))) in_dom = false;
    if (in_dom) {
        const auto inv = try_mat_inverse(m);
        if (!inv) {
            in_dom = false;
        } else {
            for (int r = 0; in_dom && r < m.n(); ++r)
                for (int c = 0; in_dom && c < m.n(); ++c)
                    if (!try_inverse(inv->at(r, c))) in_dom = false;
            if (in_dom && !try_mat_inverse(j2(m))) in_dom = false;
        }
    }
    step["in_dom"] = in_dom;
    return step;
}

int run_iterate(const std::string& map, int count, const std::string& in_path,
                const std::string& out_path) {
    const json doc = read_json(in_path);
    json steps = json::array();
    bool truncated = false;
    if (map == "j" || map == "j-inv") {
        Matrix m = as_matrix(doc);
        steps.push_back(matrix_step(0, m));
        for (int k = 1; k <= count; ++k) {
            try {
                m = map == "j" ? j(m) : j_inverse(m);
            } catch (const Error& e) {
                steps.push_back(json{{"index", k}, {"error", e.what()}});
                truncated = true;
                break;
            }
            steps.push_back(matrix_step(k, m));
        }
    } else {
        HatParams p = as_hat(doc);
        steps.push_back(
            json{{"index", 0}, {"value", hat_to_json(p)}, {"in_S", in_S_hat(p).member}});
        for (int k = 1; k <= count; ++k) {
            try {
                p = map == "phi" ? phi(p) : phi_inv(p);
            } catch (const Error& e) {
                steps.push_back(json{{"index", k}, {"error", e.what()}});
                truncated = true;
                break;
            }
            steps.push_back(
                json{{"index", k}, {"value", hat_to_json(p)}, {"in_S", in_S_hat(p).member}});
        }
    }
    write_output(canonical_dump(json{{"map", map}, {"count", count}, {"steps", steps}}), out_path);
    return truncated ? 1 : 0;
}

int run_witness(const std::string& a_path, const std::string& b_path,
                const std::string& out_path) {
    const Matrix a = as_matrix(read_json(a_path));
    const Matrix b = as_matrix(read_json(b_path));
    const auto witness = equiv_witness(a, b);
    if (!witness) {
        write_output(canonical_dump(json("absent")), out_path);
        return 1;
    }
    write_output(canonical_dump(witness_to_json(*witness, a.ring())), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the noncommutative birational maps J, Phi and friends"};
    app.require_subcommand(1);

    std::string in_path = "-", out_path, map_name, a_path, b_path;
    int count = 1;

    auto* check = app.add_subcommand("check", "domain membership report for a matrix or hatted parameters");
    check->add_option("--in", in_path, "input JSON file, - for stdin");
    check->add_option("--out", out_path, "output file, defaults to stdout");

    auto* apply = app.add_subcommand("apply", "apply one map to the input");
    apply->add_option("--map", map_name, "map to apply")
        ->required()
        ->check(CLI::IsMember({"j1", "j2", "j", "j-inv", "phi", "phi-inv", "psi", "phi2"}));
    apply->add_option("--in", in_path, "input JSON file, - for stdin");
    apply->add_option("--out", out_path, "output file, defaults to stdout");

    auto* iterate = app.add_subcommand("iterate", "iterate a map, recording per-step domain status");
    iterate->add_option("--map", map_name, "map to iterate")
        ->required()
        ->check(CLI::IsMember({"j", "j-inv", "phi", "phi-inv"}));
    iterate->add_option("--count", count, "number of steps")->required()->check(CLI::PositiveNumber);
    iterate->add_option("--in", in_path, "input JSON file, - for stdin");
    iterate->add_option("--out", out_path, "output file, defaults to stdout");

    auto* witness = app.add_subcommand("witness", "diagonal-pair witness that two matrices share an orbit");
    witness->add_option("--a", a_path, "first matrix JSON file")->required();
    witness->add_option("--b", b_path, "second matrix JSON file")->required();
    witness->add_option("--out", out_path, "output file, defaults to stdout");

    std::string ring_kind = "block-matrix", inner_kind = "mod-p", checks_csv;
    std::uint64_t modulus = 101, seed = 0;
    int block_size = 2, depth = 6;
    long trials = 100;
    auto* suite = app.add_subcommand("suite", "run the randomized identity suite");
    suite->add_option("--ring", ring_kind, "ring kind")
        ->check(CLI::IsMember({"fraction", "mod-p", "block-matrix"}));
    suite->add_option("--modulus", modulus, "prime modulus for mod-p rings");
    suite->add_option("--block-size", block_size, "block size k for block-matrix rings");
    suite->add_option("--inner", inner_kind, "scalar ring inside a block-matrix ring")
        ->check(CLI::IsMember({"fraction", "mod-p"}));
    suite->add_option("--trials", trials, "trials per check");
    suite->add_option("--seed", seed, "root seed");
    suite->add_option("--depth", depth, "confinement depth");
    suite->add_option("--checks", checks_csv, "comma-separated subset of checks (default: all)");
    suite->add_option("--out", out_path, "output file, defaults to stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(in_path, out_path);
        if (apply->parsed()) return run_apply(map_name, in_path, out_path);
        if (iterate->parsed()) return run_iterate(map_name, count, in_path, out_path);
        if (witness->parsed()) return run_witness(a_path, b_path, out_path);

        SuiteConfig cfg;
        if (ring_kind == "fraction") {
            cfg.ring = RingDescriptor::fraction();
        } else if (ring_kind == "mod-p") {
            cfg.ring = RingDescriptor::mod_p(modulus);
        } else {
            const RingDescriptor inner = inner_kind == "fraction" ? RingDescriptor::fraction()
                                                                  : RingDescriptor::mod_p(modulus);
            cfg.ring = RingDescriptor::block_matrix(block_size, inner);
        }
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.depth = depth;
        if (!checks_csv.empty()) {
            std::stringstream stream(checks_csv);
            std::string item;
            while (std::getline(stream, item, ','))
                if (!item.empty()) cfg.checks.push_back(item);
        }
        const Report report = run_suite(cfg);
        write_output(canonical_dump(suite_report_to_json(report)), out_path);
        return report.overall_pass ? 0 : 1;
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
