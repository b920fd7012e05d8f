#include "volterra/report.hpp"

namespace volterra {

bool CaseReport::checks_pass() const {
    return soundness_ok && lemma1_ok && row_sums_ok && containment_ok.value_or(true) &&
           local_outcome == LocalOutcome::Equal;
}

int CaseReport::exit_status() const {
    const bool others = soundness_ok && lemma1_ok && row_sums_ok && containment_ok.value_or(true);
    if (!others || local_outcome == LocalOutcome::NotEqual) return 2;
    if (local_outcome == LocalOutcome::Inconclusive) return 4;
    return 0;
}

CaseReport verify(const Algebra& alg, const LocalSamplingOptions& options) {
    CaseReport r;
    r.input = alg.spec();
    r.classification = classify_case(alg);
    r.der = derivation_space(alg);

    r.soundness_ok = true;
    for (const auto& d : r.der.matrices())
        if (!is_derivation(alg, d)) r.soundness_ok = false;
    r.lemma1_ok = check_lemma1(alg, r.der);
    r.row_sums_ok = check_row_sums(r.der);

    r.local = local_derivation_space(alg, r.der, options);
    r.local_outcome = compare_local(r.der, r.local);

    if (alg.dimension() == 4) {
        r.containment_ok = subspace_includes(theorem_family(r.classification.label),
                                             canonical_derivation_space(alg, r.classification, r.der));
        r.coincidences = coincidence_report(alg);
        const bool nontrivial = r.der.dim() > 0;
        r.list_consistent = nontrivial == r.coincidences->list_admits_nontrivial;
        r.refined_consistent = nontrivial == r.coincidences->refined_admits_nontrivial;
    }
    return r;
}

Json report_to_json(const CaseReport& r) {
    Json out;
    out["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    out["input"] = spec_to_json(r.input);
    out["dimension"] = r.input.dimension;
    const Json cls = classification_to_json(r.classification);
    out["case"] = cls["case"];
    out["signature"] = cls["signature"];
    out["permutation"] = cls["permutation"];
    out["der_dim"] = r.der.dim();
    out["der_basis"] = derivation_space_to_json(r.der)["basis"];
    out["locder_dim"] = r.local.dim();
    out["samples_used"] = r.local.samples_used;
    out["stabilized"] = r.local.stabilized;
    out["local_equals_der"] = outcome_to_json(r.local_outcome);
    out["soundness_ok"] = r.soundness_ok;
    out["lemma1_ok"] = r.lemma1_ok;
    out["row_sums_ok"] = r.row_sums_ok;
    out["containment_ok"] = r.containment_ok ? Json(*r.containment_ok) : Json(nullptr);
    if (r.coincidences) {
        Json c = coincidences_to_json(*r.coincidences);
        c["list_consistent"] = r.list_consistent.value_or(true);
        c["refined_consistent"] = r.refined_consistent.value_or(true);
        out["coincidences"] = std::move(c);
    } else {
        out["coincidences"] = nullptr;
    }
    out["provenance"] = Json{{"sample_seed", r.local.seed},
                             {"lcg", Json{{"multiplier", Lcg::kMultiplier}, {"increment", Lcg::kIncrement}}}};
    return out;
}

}  // namespace volterra
