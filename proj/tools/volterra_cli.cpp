// Command-line front end. Talks to the library exclusively through the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "volterra/volterra.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kUsageError = 64;

struct AlgebraDeleter {
    void operator()(vt_algebra* a) const { vt_algebra_free(a); }
};
using AlgebraHandle = std::unique_ptr<vt_algebra, AlgebraDeleter>;

struct StringDeleter {
    void operator()(char* s) const { vt_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int report_error(vt_status status) {
    std::cerr << "volterra: " << vt_last_error() << "\n";
    return status == VT_INVALID_ARGUMENT ? kUsageError : static_cast<int>(status);
}

// Loads a spec file; returns a non-zero exit code on failure.
int load(const std::string& path, AlgebraHandle& out) {
    vt_algebra* raw = nullptr;
    const vt_status st = vt_algebra_from_file(path.c_str(), &raw);
    if (st != VT_OK) return report_error(st);
    out.reset(raw);
    return 0;
}

// Calls an API function producing JSON; nullopt when no document came back.
template <class F>
std::optional<Json> fetch(F&& call, vt_status& status) {
    char* raw = nullptr;
    status = call(&raw);
    OwnedString owned(raw);
    if (!raw) return std::nullopt;
    return Json::parse(raw);
}

int exit_code(vt_status status) {
    return status == VT_INVALID_ARGUMENT ? kUsageError : static_cast<int>(status);
}

std::string matrix_text(const Json& flat, int n) {
    std::ostringstream os;
    std::size_t width = 1;
    for (const auto& x : flat) width = std::max(width, x.get<std::string>().size());
    for (int i = 0; i < n; ++i) {
        os << "    [";
        for (int j = 0; j < n; ++j)
            os << (j ? " " : "") << std::setw(static_cast<int>(width)) << flat[static_cast<std::size_t>(i * n + j)].get<std::string>();
        os << "]\n";
    }
    return os.str();
}

std::string join(const Json& arr) {
    std::string s;
    for (const auto& v : arr) s += (s.empty() ? "" : " ") + v.dump();
    return s;
}

int cmd_validate(const std::string& path, bool json) {
    AlgebraHandle alg;
    if (int rc = load(path, alg)) return rc;
    vt_status st;
    const auto doc = fetch([&](char** o) { return vt_validate(alg.get(), o); }, st);
    if (!doc) return report_error(st);
    if (json) {
        std::cout << doc->dump(2) << "\n";
    } else if (doc->empty()) {
        std::cout << "valid\n";
    } else {
        for (const auto& v : *doc) std::cout << "violation: " << v["message"].get<std::string>() << "\n";
    }
    return exit_code(st);
}

int cmd_derive(const std::string& path, bool json) {
    AlgebraHandle alg;
    if (int rc = load(path, alg)) return rc;
    vt_status st;
    const auto doc = fetch([&](char** o) { return vt_derive(alg.get(), o); }, st);
    if (!doc) return report_error(st);
    if (json) {
        std::cout << doc->dump(2) << "\n";
    } else {
        const int n = vt_algebra_dimension(alg.get());
        std::cout << "dim: " << (*doc)["dim"] << "\n";
        int k = 1;
        for (const auto& m : (*doc)["basis"]) std::cout << "  D" << k++ << ":\n" << matrix_text(m, n);
    }
    return exit_code(st);
}

int cmd_classify(const std::string& path, bool json) {
    AlgebraHandle alg;
    if (int rc = load(path, alg)) return rc;
    vt_status st;
    const auto doc = fetch([&](char** o) { return vt_classify(alg.get(), o); }, st);
    if (!doc) return report_error(st);
    if (json) {
        std::cout << doc->dump(2) << "\n";
    } else {
        std::cout << "case: " << (*doc)["case"].get<std::string>() << "\n"
                  << "signature: " << join((*doc)["signature"]) << "\n"
                  << "permutation: " << join((*doc)["permutation"]) << "\n";
    }
    return exit_code(st);
}

int cmd_localcheck(const std::string& path, bool json, std::uint64_t sample_seed) {
    AlgebraHandle alg;
    if (int rc = load(path, alg)) return rc;
    vt_status st;
    const auto doc = fetch([&](char** o) { return vt_localcheck(alg.get(), sample_seed, o); }, st);
    if (!doc) return report_error(st);
    if (json) {
        std::cout << doc->dump(2) << "\n";
    } else {
        std::cout << "der_dim: " << (*doc)["der_dim"] << "\n"
                  << "locder_dim: " << (*doc)["locder_dim"] << "\n"
                  << "samples_used: " << (*doc)["samples_used"] << "\n"
                  << "stabilized: " << (*doc)["stabilized"] << "\n"
                  << "equals_der: " << (*doc)["equals_der"].dump() << "\n";
    }
    return exit_code(st);
}

int cmd_verify(const std::string& path, std::uint64_t sample_seed) {
    AlgebraHandle alg;
    if (int rc = load(path, alg)) return rc;
    vt_status st;
    const auto doc = fetch([&](char** o) { return vt_verify(alg.get(), sample_seed, o); }, st);
    if (!doc) return report_error(st);
    std::cout << doc->dump(2) << "\n";
    return exit_code(st);
}

int cmd_gen(const std::string& label, const std::string& mode, std::uint64_t seed, const std::string& out_path) {
    vt_algebra* raw = nullptr;
    const vt_status st = vt_generate(label.c_str(), mode.c_str(), seed, &raw);
    if (st != VT_OK) return report_error(st);
    AlgebraHandle alg(raw);
    char* text = nullptr;
    if (vt_status s = vt_algebra_to_json(alg.get(), &text); s != VT_OK) return report_error(s);
    OwnedString owned(text);
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!(out << text)) {
        std::cerr << "volterra: cannot write '" << out_path << "'\n";
        return VT_PARSE_ERROR;
    }
    return 0;
}

void print_suite_table(const Json& s) {
    std::cout << "suite: trials=" << s["trials"] << " seed=" << s["seed"] << "\n\n";
    std::cout << std::left << std::setw(18) << "group" << std::right << std::setw(6) << "n" << std::setw(10) << "inst"
              << std::setw(8) << "pass" << "  " << std::left << std::setw(34) << "asserted checks (fail/inconcl)"
              << std::setw(30) << "oracle checks" << "dims\n";
    for (const auto& g : s["groups"]) {
        const auto& p = g["asserted_checks"];
        const auto& o = g["oracle_checks"];
        std::ostringstream asserted;
        asserted << "snd " << p["soundness_failures"] << " l1 " << p["lemma1_failures"] << " rs "
              << p["row_sum_failures"] << " ct " << p["containment_failures"] << " loc " << p["local_failures"] << "/"
              << p["inconclusive"] << (p["local_informational"].get<bool>() ? "*" : "");
        std::ostringstream oracle;
        oracle << "exp " << (o["expected_dim"].is_null() ? std::string("-") : o["expected_dim"].dump()) << " dm "
               << o["dim_mismatches"] << " fam " << o["family_mismatches"] << " cls "
               << o["classification_mismatches"];
        std::cout << std::left << std::setw(18) << g["name"].get<std::string>() << std::right << std::setw(6)
                  << g["dimension"].dump() << std::setw(10) << g["instances"].dump() << std::setw(8)
                  << (g["passed"].get<bool>() ? "yes" : "NO") << "  " << std::left << std::setw(34) << asserted.str()
                  << std::setw(30) << oracle.str() << join(g["dims_seen"]) << "\n";
    }
    std::cout << "\n(* local comparison reported only; not asserted for n != 4)\n";
    for (const auto& note : s["notes"]) std::cout << "note: " << note.get<std::string>() << "\n";
    std::cout << "\nresult: " << (s["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

int cmd_suite(int trials, std::uint64_t seed, const std::string& cases, const std::string& dims, bool dims_given,
              bool cases_given, bool json) {
    // With an explicit case list and no --dims, only the case battery runs.
    const std::string effective_dims = dims_given ? dims : (cases_given ? "" : "2..6");
    vt_status st;
    const auto doc = fetch(
        [&](char** o) {
            return vt_run_suite(trials, seed, cases_given ? cases.c_str() : nullptr, effective_dims.c_str(), o);
        },
        st);
    if (!doc) return report_error(st);
    if (json)
        std::cout << doc->dump(2) << "\n";
    else
        print_suite_table(*doc);
    return exit_code(st);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("VOLTERRA_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "volterra: ignoring malformed VOLTERRA_SEED='" << env << "'\n";
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derivations and local derivations of genetic Volterra algebras"};
    app.set_version_flag("--version", std::string(vt_version()));
    app.require_subcommand(1);

    std::string spec_path;
    bool json = false;
    std::uint64_t sample_seed = 0;

    auto* validate = app.add_subcommand("validate", "check the Volterra axioms");
    validate->add_option("spec", spec_path, "algebra spec (JSON)")->required();
    validate->add_flag("--json", json, "machine-readable output");

    auto* derive = app.add_subcommand("derive", "basis and dimension of the derivation space");
    derive->add_option("spec", spec_path, "algebra spec (JSON)")->required();
    derive->add_flag("--json", json, "machine-readable output");

    auto* classify = app.add_subcommand("classify", "case label, degree signature, canonical permutation");
    classify->add_option("spec", spec_path, "algebra spec (JSON)")->required();
    classify->add_flag("--json", json, "machine-readable output");

    auto* localcheck = app.add_subcommand("localcheck", "compare local derivations with derivations");
    localcheck->add_option("spec", spec_path, "algebra spec (JSON)")->required();
    localcheck->add_flag("--json", json, "machine-readable output");
    localcheck->add_option("--sample-seed", sample_seed, "seed of the pseudo-random sample points (0 = default)");

    auto* verify = app.add_subcommand("verify", "full case report (JSON)");
    verify->add_option("spec", spec_path, "algebra spec (JSON)")->required();
    verify->add_option("--sample-seed", sample_seed, "seed of the pseudo-random sample points (0 = default)");

    std::string gen_case;
    std::string gen_mode = "generic";
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a four-dimensional instance of a case");
    gen->add_option("--case", gen_case, "A..J or EMPTY")->required();
    gen->add_option("--mode", gen_mode, "generic or coincident")->check(CLI::IsMember({"generic", "coincident"}));
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("-o,--output", gen_out, "write the spec to this file instead of stdout");

    int trials = 10;
    std::uint64_t suite_seed = default_seed();
    std::string suite_cases;
    std::string suite_dims;
    auto* suite = app.add_subcommand("suite", "run the verification battery");
    suite->add_option("--trials", trials, "instances per group")->check(CLI::PositiveNumber);
    suite->add_option("--seed", suite_seed, "base seed (default: $VOLTERRA_SEED or 1)");
    auto* cases_opt = suite->add_option("--cases", suite_cases, "comma-separated case labels");
    auto* dims_opt = suite->add_option("--dims", suite_dims, "random-spec dimensions, e.g. 2..6 or 2,3,5");
    suite->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    if (*validate) return cmd_validate(spec_path, json);
    if (*derive) return cmd_derive(spec_path, json);
    if (*classify) return cmd_classify(spec_path, json);
    if (*localcheck) return cmd_localcheck(spec_path, json, sample_seed);
    if (*verify) return cmd_verify(spec_path, sample_seed);
    if (*gen) return cmd_gen(gen_case, gen_mode, gen_seed, gen_out);
    if (*suite)
        return cmd_suite(trials, suite_seed, suite_cases, suite_dims, dims_opt->count() > 0, cases_opt->count() > 0,
                         json);
    return kUsageError;
}
