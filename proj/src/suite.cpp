#include "volterra/suite.hpp"

#include <algorithm>
#include <stdexcept>

namespace volterra {

bool SuiteGroup::passed() const {
    const int local = local_informational ? 0 : local_failures + inconclusive;
    return soundness_failures + lemma1_failures + row_sum_failures + containment_failures + local + dim_mismatches +
               family_mismatches + classification_mismatches ==
           0;
}

bool SuiteSummary::passed() const {
    return std::all_of(groups.begin(), groups.end(), [](const SuiteGroup& g) { return g.passed(); });
}

std::optional<std::size_t> expected_dimension(CaseLabel label, GenMode mode) {
    if (mode == GenMode::Coincident) {
        switch (label) {
            case CaseLabel::A: return 2;
            case CaseLabel::B: return 4;
            case CaseLabel::D: return 6;
            case CaseLabel::G: return 2;
            case CaseLabel::J: return 12;
            case CaseLabel::Empty: return 0;
            default: return std::nullopt;
        }
    }
    switch (label) {
        case CaseLabel::I: return 3;
        case CaseLabel::J: return 12;
        case CaseLabel::Generic: return std::nullopt;
        default: return 0;
    }
}

std::uint64_t instance_seed(std::uint64_t base, std::size_t group, std::size_t trial) {
    std::uint64_t s = base ^ (static_cast<std::uint64_t>(group + 1) * 0x9E3779B97F4A7C15ULL);
    s += static_cast<std::uint64_t>(trial) * 0xBF58476D1CE4E5B9ULL;
    Lcg mix(s);
    const std::uint64_t hi = mix.next();
    const std::uint64_t lo = mix.next();
    return (hi << 32) ^ lo;
}

namespace {

void record(SuiteGroup& g, const Algebra& alg, const CaseReport& r) {
    ++g.instances;
    if (!r.soundness_ok) ++g.soundness_failures;
    if (!r.lemma1_ok) ++g.lemma1_failures;
    if (!r.row_sums_ok) ++g.row_sum_failures;
    if (r.containment_ok && !*r.containment_ok) ++g.containment_failures;
    if (r.local_outcome == LocalOutcome::NotEqual) ++g.local_failures;
    if (r.local_outcome == LocalOutcome::Inconclusive) ++g.inconclusive;

    const std::size_t dim = r.der.dim();
    if (g.instances == 1) {
        g.min_dim = g.max_dim = dim;
    } else {
        g.min_dim = std::min(g.min_dim, dim);
        g.max_dim = std::max(g.max_dim, dim);
    }
    if (std::find(g.dims_seen.begin(), g.dims_seen.end(), dim) == g.dims_seen.end()) {
        g.dims_seen.push_back(dim);
        std::sort(g.dims_seen.begin(), g.dims_seen.end());
    }
    if (g.expected_dim && dim != *g.expected_dim) ++g.dim_mismatches;
    if (g.expect_family_equal) {
        const SubspaceBasis canon = canonical_derivation_space(alg, r.classification, r.der);
        if (!subspace_equal(canon, theorem_family(r.classification.label))) ++g.family_mismatches;
    }
    if (r.list_consistent && !*r.list_consistent) ++g.list_discrepancies;
    if (r.refined_consistent && !*r.refined_consistent) ++g.refined_discrepancies;
}

bool family_is_exact(CaseLabel label, GenMode mode) {
    if (label == CaseLabel::I || label == CaseLabel::J) return true;
    if (mode != GenMode::Coincident) return false;
    return label == CaseLabel::A || label == CaseLabel::B || label == CaseLabel::D || label == CaseLabel::G;
}

}  // namespace

SuiteSummary run_suite(const SuiteOptions& options) {
    if (options.trials < 1) throw std::invalid_argument("suite: trials must be at least 1");
    SuiteSummary summary;
    summary.trials = options.trials;
    summary.seed = options.seed;

    std::size_t group_index = 0;
    for (CaseLabel label : options.cases) {
        if (label == CaseLabel::Generic) throw std::invalid_argument("suite: GENERIC is not a selectable case");
        std::vector<GenMode> modes = {GenMode::Generic};
        if (label == CaseLabel::A || label == CaseLabel::B || label == CaseLabel::D || label == CaseLabel::G)
            modes.push_back(GenMode::Coincident);
        for (GenMode mode : modes) {
            SuiteGroup g;
            g.name = std::string(to_string(label)) + " " + std::string(to_string(mode));
            g.label = label;
            g.mode = mode;
            g.expected_dim = expected_dimension(label, mode);
            g.expect_family_equal = family_is_exact(label, mode);
            for (int t = 0; t < options.trials; ++t) {
                const GenRequest req{label, mode, instance_seed(options.seed, group_index, static_cast<std::size_t>(t))};
                const Algebra alg(generate(req));
                const CaseReport r = verify(alg, options.local);
                record(g, alg, r);
                if (r.classification.label != label) ++g.classification_mismatches;
            }
            summary.groups.push_back(std::move(g));
            ++group_index;
        }
    }

    for (int n : options.dims) {
        if (n < 1) throw std::invalid_argument("suite: dimensions must be positive");
        SuiteGroup g;
        g.name = "random n=" + std::to_string(n);
        g.dimension = n;
        g.local_informational = n != 4;
        for (int t = 0; t < options.trials; ++t) {
            Lcg rng(instance_seed(options.seed, group_index, static_cast<std::size_t>(t)));
            const Algebra alg(random_spec(n, rng));
            const CaseReport r = verify(alg, options.local);
            record(g, alg, r);
            if (n == 4) {
                const Algebra moved = alg.relabeled(random_permutation(n, rng));
                if (classify_case(moved).label != r.classification.label) ++g.classification_mismatches;
            }
        }
        summary.groups.push_back(std::move(g));
        ++group_index;
    }

    for (const auto& g : summary.groups) {
        if (g.label == CaseLabel::D && g.list_discrepancies > 0)
            summary.notes.push_back(
                "Case D (" + std::string(to_string(*g.mode)) + "): " + std::to_string(g.list_discrepancies) + " of " +
                std::to_string(g.instances) +
                " instances have only the zero derivation although list item III admits non-trivial "
                "derivations; containment in the Case D family is unaffected");
        else if (g.list_discrepancies > 0)
            summary.notes.push_back(g.name + ": " + std::to_string(g.list_discrepancies) +
                                    " instances disagree with the condition list of non-trivial regimes");
        if (g.refined_discrepancies > 0)
            summary.notes.push_back(g.name + ": " + std::to_string(g.refined_discrepancies) +
                                    " instances disagree with the oracle-refined conditions");
    }
    return summary;
}

Json suite_to_json(const SuiteSummary& s) {
    Json groups = Json::array();
    for (const auto& g : s.groups) {
        Json j;
        j["name"] = g.name;
        j["case"] = g.label ? Json(std::string(to_string(*g.label))) : Json(nullptr);
        j["mode"] = g.mode ? Json(std::string(to_string(*g.mode))) : Json(nullptr);
        j["dimension"] = g.dimension;
        j["instances"] = g.instances;
        j["passed"] = g.passed();
        j["asserted_checks"] = Json{{"soundness_failures", g.soundness_failures},
                                 {"lemma1_failures", g.lemma1_failures},
                                 {"row_sum_failures", g.row_sum_failures},
                                 {"containment_failures", g.containment_failures},
                                 {"local_failures", g.local_failures},
                                 {"inconclusive", g.inconclusive},
                                 {"local_informational", g.local_informational}};
        j["oracle_checks"] = Json{{"expected_dim", g.expected_dim ? Json(*g.expected_dim) : Json(nullptr)},
                                  {"dim_mismatches", g.dim_mismatches},
                                  {"expect_family_equal", g.expect_family_equal},
                                  {"family_mismatches", g.family_mismatches},
                                  {"classification_mismatches", g.classification_mismatches}};
        j["dims_seen"] = g.dims_seen;
        j["min_dim"] = g.min_dim;
        j["max_dim"] = g.max_dim;
        j["discrepancies"] = Json{{"list", g.list_discrepancies}, {"refined", g.refined_discrepancies}};
        groups.push_back(std::move(j));
    }
    Json out;
    out["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    out["trials"] = s.trials;
    out["seed"] = s.seed;
    out["passed"] = s.passed();
    out["groups"] = std::move(groups);
    out["notes"] = s.notes;
    return out;
}

}  // namespace volterra
