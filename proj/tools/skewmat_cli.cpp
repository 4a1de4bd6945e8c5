// Command line front end; talks to the library through the C interface only.

#include "skewmat/skewmat.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using ordered_json = nlohmann::ordered_json;

bool g_pretty = false;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(2);
    }
    ss << in.rdbuf();
    return ss.str();
}

// Validation problems exit 2, refused resource caps 3, everything else 4.
int exit_for(int rc) {
    switch (rc) {
        case 0:
            return 0;
        case 1:  // BadInput
        case 2:  // BadShape
        case 3:  // FieldMismatch
        case 5:  // NotPrime
        case 6:  // ReducibleModulus
        case 7:  // NotReduced
        case 8:  // ReducednessConflict
            return 2;
        case 9:  // CapExceeded
            return 3;
        default:
            return 4;
    }
}

void print_report(const std::string& text) {
    if (g_pretty)
        std::cout << ordered_json::parse(text).dump(2) << "\n";
    else
        std::cout << text << "\n";
}

// Emits the report (or the error) and returns the process exit code.
int finish(int rc, char* out) {
    if (rc != 0) {
        std::cerr << "error (" << skewmat_errc_name(rc) << "): " << skewmat_last_error() << "\n";
        return exit_for(rc);
    }
    std::string text(out);
    skewmat_free(out);
    print_report(text);
    return 0;
}

// "Q" for the rationals, "p" or "p^k" for finite fields.
ordered_json field_spec(const std::string& s) {
    if (s == "Q" || s == "rational" || s == "rationals") return "Q";
    ordered_json f;
    auto caret = s.find('^');
    if (caret == std::string::npos) {
        f["p"] = s;
        f["k"] = 1;
    } else {
        f["p"] = s.substr(0, caret);
        f["k"] = std::stoul(s.substr(caret + 1));
    }
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with skew matrix algebras"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "indent the JSON report");
    bool compact = false;
    app.add_flag("--json", compact, "compact single-line JSON (the default)");

    std::string in_a, in_b;
    std::size_t cap_ideals = 4096;
    unsigned long long seed = 1;

    auto* validate = app.add_subcommand("validate", "check a skew set document for reducedness");
    validate->add_option("input", in_a, "skew set JSON file, - for stdin")->required();

    auto* analyze = app.add_subcommand("analyze", "structure report for a skew set");
    analyze->add_option("input", in_a, "skew set JSON file, - for stdin")->required();
    analyze->add_option("--cap-ideals", cap_ideals,
                        "ideal enumeration bound, 0 refuses large instances");

    auto* equiv = app.add_subcommand("equiv", "decide diagonal-scaling equivalence");
    equiv->add_option("first", in_a, "skew set JSON file")->required();
    equiv->add_option("second", in_b, "skew set JSON file")->required();

    auto* tensor = app.add_subcommand("tensor", "tensor product of two skew sets");
    tensor->add_option("first", in_a, "skew set JSON file")->required();
    tensor->add_option("second", in_b, "skew set JSON file")->required();

    unsigned fuzz_n = 3;
    std::string fuzz_field = "Q";
    double fuzz_density = 0.3;
    std::size_t fuzz_count = 100;
    auto* fuzz = app.add_subcommand("fuzz", "randomized invariant battery");
    fuzz->add_option("--n", fuzz_n, "matrix degree");
    fuzz->add_option("--field", fuzz_field, "Q, p, or p^k");
    fuzz->add_option("--density", fuzz_density, "probability of a zero entry");
    fuzz->add_option("--count", fuzz_count, "number of random skew sets");
    fuzz->add_option("--seed", seed, "random seed");

    std::string only;
    bool list_cases = false;
    auto* suite = app.add_subcommand("paper-suite", "golden worked-example suite");
    suite->add_option("--only", only, "run a single case id");
    suite->add_flag("--list", list_cases, "print the case ids and exit");

    auto* split = app.add_subcommand("split", "split an algebra along an etale subalgebra");
    split->add_option("input", in_a, "split input JSON file, - for stdin")->required();
    split->add_option("--seed", seed, "random seed");

    auto* descend = app.add_subcommand("descend", "fixed points of a semilinear action");
    descend->add_option("input", in_a, "descent datum JSON file, - for stdin")->required();
    descend->add_option("--seed", seed, "random seed");

    auto* realize = app.add_subcommand("realize-sigma", "realize a prescribed nucleus quotient");
    realize->add_option("input", in_a, "target list JSON file, - for stdin")->required();
    realize->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    char* out = nullptr;
    if (validate->parsed()) {
        int rc = skewmat_validate(read_input(in_a).c_str(), &out);
        if (rc != 0) return finish(rc, out);
        std::string text(out);
        skewmat_free(out);
        print_report(text);
        return ordered_json::parse(text).at("ok").get<bool>() ? 0 : 2;
    }
    if (analyze->parsed()) {
        int rc = skewmat_analyze(read_input(in_a).c_str(), cap_ideals, &out);
        return finish(rc, out);
    }
    if (equiv->parsed()) {
        int rc = skewmat_equivalent(read_input(in_a).c_str(), read_input(in_b).c_str(), &out);
        return finish(rc, out);
    }
    if (tensor->parsed()) {
        int rc = skewmat_tensor(read_input(in_a).c_str(), read_input(in_b).c_str(), &out);
        return finish(rc, out);
    }
    if (fuzz->parsed()) {
        ordered_json opt;
        opt["n"] = fuzz_n;
        opt["field"] = field_spec(fuzz_field);
        opt["density"] = fuzz_density;
        opt["count"] = fuzz_count;
        opt["seed"] = seed;
        int rc = skewmat_fuzz(opt.dump().c_str(), &out);
        if (rc != 0) return finish(rc, out);
        std::string text(out);
        skewmat_free(out);
        print_report(text);
        ordered_json rep = ordered_json::parse(text);
        if (!rep.at("pass").get<bool>()) {
            std::cerr << "invariant violations: " << rep.at("violations").size() << "\n";
            return 4;
        }
        return 0;
    }
    if (suite->parsed()) {
        if (list_cases) {
            int rc = skewmat_paper_case_ids(&out);
            return finish(rc, out);
        }
        auto t0 = std::chrono::steady_clock::now();
        int rc = skewmat_paper_suite(only.c_str(), &out);
        std::chrono::duration<double> el = std::chrono::steady_clock::now() - t0;
        std::cerr << "suite wall time: " << el.count() << "s\n";
        if (rc != 0) return finish(rc, out);
        std::string text(out);
        skewmat_free(out);
        print_report(text);
        ordered_json rep = ordered_json::parse(text);
        if (!rep.at("pass").get<bool>()) {
            std::cerr << "failing cases:";
            for (const auto& id : rep.at("failing")) std::cerr << " " << id.get<std::string>();
            std::cerr << "\n";
            return 5;
        }
        return 0;
    }
    if (split->parsed()) {
        int rc = skewmat_split(read_input(in_a).c_str(), seed, &out);
        return finish(rc, out);
    }
    if (descend->parsed()) {
        int rc = skewmat_descend(read_input(in_a).c_str(), seed, &out);
        return finish(rc, out);
    }
    if (realize->parsed()) {
        int rc = skewmat_realize_sigma(read_input(in_a).c_str(), seed, &out);
        return finish(rc, out);
    }
    return 0;
}
