#ifndef VOLTERRA_REPORT_HPP
#define VOLTERRA_REPORT_HPP

#include <optional>

#include "volterra/derivation.hpp"
#include "volterra/local.hpp"
#include "volterra/serialize.hpp"

namespace volterra {

inline constexpr const char* kToolName = "volterra";
inline constexpr const char* kToolVersion = "0.1.0";

/// Everything verify computes for one algebra. Each flag is recomputable
/// from the input spec alone.
struct CaseReport {
    AlgebraSpec input;
    Classification classification;
    DerivationSpace der;
    LocalDerivationSpace local;
    LocalOutcome local_outcome = LocalOutcome::Inconclusive;

    bool soundness_ok = false;  // every basis matrix satisfies the identity
    bool lemma1_ok = false;
    bool row_sums_ok = false;
    std::optional<bool> containment_ok;             // n = 4 only
    std::optional<CoincidenceReport> coincidences;  // n = 4 only
    /// (der_dim > 0) agrees with the condition list / with the refined conditions.
    std::optional<bool> list_consistent;
    std::optional<bool> refined_consistent;

    /// Soundness, lemma checks, containment and local = der all hold.
    bool checks_pass() const;
    /// 0 success, 2 a check failed, 4 local comparison inconclusive.
    int exit_status() const;
};

CaseReport verify(const Algebra& alg, const LocalSamplingOptions& options = {});

Json report_to_json(const CaseReport& report);

}  // namespace volterra

#endif  // VOLTERRA_REPORT_HPP
