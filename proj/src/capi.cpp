#include "volterra/volterra.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "volterra/generate.hpp"
#include "volterra/report.hpp"
#include "volterra/serialize.hpp"
#include "volterra/suite.hpp"

struct vt_algebra {
    volterra::AlgebraSpec spec;
    std::optional<volterra::Algebra> algebra;  // engaged iff spec is valid
};

namespace {

thread_local std::string g_last_error;

vt_status fail(vt_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

vt_status emit(const volterra::Json& j, char** out_json, vt_status status = VT_OK) {
    if (!out_json) return fail(VT_INVALID_ARGUMENT, "null output pointer");
    *out_json = copy_string(volterra::dump(j));
    if (!*out_json) return fail(VT_INTERNAL_ERROR, "out of memory");
    return status;
}

vt_algebra* wrap(volterra::AlgebraSpec spec) {
    auto* h = new vt_algebra{std::move(spec), std::nullopt};
    if (volterra::validate(h->spec).empty()) h->algebra.emplace(h->spec);
    return h;
}

// Runs body, translating exceptions into status codes.
template <class F>
vt_status guarded(F&& body) {
    g_last_error.clear();
    try {
        return body();
    } catch (const volterra::ParseError& e) {
        return fail(VT_PARSE_ERROR, e.what());
    } catch (const volterra::InvalidSpec& e) {
        return fail(VT_AXIOM_VIOLATION, e.what());
    } catch (const volterra::UsageError& e) {
        return fail(VT_INVALID_ARGUMENT, e.what());
    } catch (const volterra::LocalDerivationError& e) {
        return fail(VT_INTERNAL_ERROR, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(VT_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(VT_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(VT_INTERNAL_ERROR, "unknown error");
    }
}

const volterra::Algebra& require_valid(const vt_algebra* alg) {
    if (!alg) throw std::invalid_argument("null algebra handle");
    if (!alg->algebra) throw volterra::InvalidSpec(volterra::validate(alg->spec));
    return *alg->algebra;
}

volterra::LocalSamplingOptions sampling(uint64_t seed) {
    volterra::LocalSamplingOptions o;
    if (seed != 0) o.seed = seed;
    return o;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto pos = s.find(sep, start);
        const std::string part = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        if (!part.empty()) out.push_back(part);
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

int to_int(const std::string& s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw volterra::UsageError("not an integer: '" + s + "'");
    return v;
}

std::vector<int> parse_dims(const std::string& text) {
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = to_int(text.substr(0, dots));
        const int hi = to_int(text.substr(dots + 2));
        if (lo < 1 || hi < lo) throw volterra::UsageError("bad dimension range '" + text + "'");
        std::vector<int> out;
        for (int n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    }
    std::vector<int> out;
    for (const auto& part : split(text, ',')) out.push_back(to_int(part));
    return out;
}

}  // namespace

extern "C" {

const char* vt_version(void) { return volterra::kToolVersion; }

const char* vt_last_error(void) { return g_last_error.c_str(); }

void vt_string_free(char* s) { std::free(s); }

vt_status vt_algebra_from_json(const char* json, vt_algebra** out) {
    return guarded([&] {
        if (!json || !out) return fail(VT_INVALID_ARGUMENT, "null argument");
        *out = wrap(volterra::parse_spec(json));
        return VT_OK;
    });
}

vt_status vt_algebra_from_file(const char* path, vt_algebra** out) {
    return guarded([&] {
        if (!path || !out) return fail(VT_INVALID_ARGUMENT, "null argument");
        *out = wrap(volterra::load_spec(path));
        return VT_OK;
    });
}

vt_status vt_generate(const char* case_label, const char* mode, uint64_t seed, vt_algebra** out) {
    return guarded([&] {
        if (!case_label || !mode || !out) return fail(VT_INVALID_ARGUMENT, "null argument");
        const auto label = volterra::parse_case_label(case_label);
        if (!label || *label == volterra::CaseLabel::Generic)
            return fail(VT_INVALID_ARGUMENT, std::string("unknown case '") + case_label + "'");
        const auto m = volterra::parse_gen_mode(mode);
        if (!m) return fail(VT_INVALID_ARGUMENT, std::string("unknown mode '") + mode + "'");
        *out = wrap(volterra::generate({*label, *m, seed}));
        return VT_OK;
    });
}

void vt_algebra_free(vt_algebra* alg) { delete alg; }

int32_t vt_algebra_dimension(const vt_algebra* alg) { return alg ? alg->spec.dimension : -1; }

vt_status vt_algebra_to_json(const vt_algebra* alg, char** out_json) {
    return guarded([&] {
        if (!alg) return fail(VT_INVALID_ARGUMENT, "null algebra handle");
        return emit(volterra::spec_to_json(alg->spec), out_json);
    });
}

vt_status vt_validate(const vt_algebra* alg, char** out_json) {
    return guarded([&] {
        if (!alg) return fail(VT_INVALID_ARGUMENT, "null algebra handle");
        const auto violations = volterra::validate(alg->spec);
        return emit(volterra::violations_to_json(violations), out_json,
                    violations.empty() ? VT_OK : VT_AXIOM_VIOLATION);
    });
}

vt_status vt_derive(const vt_algebra* alg, char** out_json) {
    return guarded([&] {
        return emit(volterra::derivation_space_to_json(volterra::derivation_space(require_valid(alg))), out_json);
    });
}

vt_status vt_classify(const vt_algebra* alg, char** out_json) {
    return guarded([&] {
        return emit(volterra::classification_to_json(volterra::classify_case(require_valid(alg))), out_json);
    });
}

vt_status vt_localcheck(const vt_algebra* alg, uint64_t sample_seed, char** out_json) {
    return guarded([&] {
        const auto& a = require_valid(alg);
        const auto der = volterra::derivation_space(a);
        const auto local = volterra::local_derivation_space(a, der, sampling(sample_seed));
        const auto outcome = volterra::compare_local(der, local);
        volterra::Json j = volterra::local_fragment_to_json(local, outcome);
        j["der_dim"] = der.dim();
        j["sample_seed"] = local.seed;
        const vt_status status = outcome == volterra::LocalOutcome::Equal      ? VT_OK
                                 : outcome == volterra::LocalOutcome::NotEqual ? VT_VERIFICATION_FAILED
                                                                               : VT_INCONCLUSIVE;
        if (status != VT_OK) g_last_error = std::string("local derivation check: ") + volterra::to_string(outcome);
        return emit(j, out_json, status);
    });
}

vt_status vt_verify(const vt_algebra* alg, uint64_t sample_seed, char** out_json) {
    return guarded([&] {
        const auto report = volterra::verify(require_valid(alg), sampling(sample_seed));
        const auto status = static_cast<vt_status>(report.exit_status());
        if (status != VT_OK) g_last_error = "verification did not pass";
        return emit(volterra::report_to_json(report), out_json, status);
    });
}

vt_status vt_run_suite(int32_t trials, uint64_t seed, const char* cases, const char* dims, char** out_json) {
    return guarded([&] {
        volterra::SuiteOptions opts;
        opts.trials = trials;
        opts.seed = seed;
        if (cases && *cases) {
            opts.cases.clear();
            for (const auto& name : split(cases, ',')) {
                const auto label = volterra::parse_case_label(name);
                if (!label || *label == volterra::CaseLabel::Generic)
                    return fail(VT_INVALID_ARGUMENT, "unknown case '" + name + "'");
                opts.cases.push_back(*label);
            }
        }
        if (dims) opts.dims = parse_dims(dims);
        const auto summary = volterra::run_suite(opts);
        const vt_status status = summary.passed() ? VT_OK : VT_VERIFICATION_FAILED;
        if (status != VT_OK) g_last_error = "suite reported failures";
        return emit(volterra::suite_to_json(summary), out_json, status);
    });
}

}  // extern "C"
