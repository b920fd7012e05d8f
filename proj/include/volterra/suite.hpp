#ifndef VOLTERRA_SUITE_HPP
#define VOLTERRA_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "volterra/generate.hpp"
#include "volterra/report.hpp"

namespace volterra {

struct SuiteOptions {
    int trials = 10;
    std::uint64_t seed = 1;
    std::vector<CaseLabel> cases = four_dimensional_cases();
    std::vector<int> dims = {2, 3, 4, 5, 6};
    LocalSamplingOptions local;
};

/// Aggregated results for one (case, mode) or one random-dimension batch.
struct SuiteGroup {
    std::string name;
    std::optional<CaseLabel> label;  // unset for random batches
    std::optional<GenMode> mode;
    int dimension = 4;
    int instances = 0;

    // Checks asserted for every instance.
    int soundness_failures = 0;
    int lemma1_failures = 0;
    int row_sum_failures = 0;
    int containment_failures = 0;
    int local_failures = 0;
    int inconclusive = 0;
    /// Local comparison only reported, not counted as a failure (n != 4).
    bool local_informational = false;

    // Expectations established by the elimination oracle.
    std::optional<std::size_t> expected_dim;
    int dim_mismatches = 0;
    bool expect_family_equal = false;
    int family_mismatches = 0;
    int classification_mismatches = 0;

    std::size_t min_dim = 0;
    std::size_t max_dim = 0;
    std::vector<std::size_t> dims_seen;  // sorted, distinct

    // Reported, never failing.
    int list_discrepancies = 0;
    int refined_discrepancies = 0;

    bool passed() const;
};

struct SuiteSummary {
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteGroup> groups;
    std::vector<std::string> notes;

    bool passed() const;
};

/// Expected derivation-space dimension for generated instances.
std::optional<std::size_t> expected_dimension(CaseLabel label, GenMode mode);

/// Seed of trial `trial` in group `group`; deterministic in all three.
std::uint64_t instance_seed(std::uint64_t base, std::size_t group, std::size_t trial);

/// Throws std::invalid_argument if trials < 1.
SuiteSummary run_suite(const SuiteOptions& options);

Json suite_to_json(const SuiteSummary& summary);

}  // namespace volterra

#endif  // VOLTERRA_SUITE_HPP
