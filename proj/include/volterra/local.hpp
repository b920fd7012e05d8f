#ifndef VOLTERRA_LOCAL_HPP
#define VOLTERRA_LOCAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "volterra/derivation.hpp"
#include "volterra/lcg.hpp"

namespace volterra {

/// {D x : D in space}, a subspace of Q^n.
SubspaceBasis orbit(const DerivationSpace& space, std::span<const Rational> x);

/// Flattened n x n maps Delta with Delta(x) in orbit(space, x). Each
/// functional f annihilating the orbit contributes the linear condition
/// f(Delta(x)) = 0.
SubspaceBasis local_conditions_at(const DerivationSpace& space, std::span<const Rational> x);

struct LocalSamplingOptions {
    std::uint64_t seed = 20240601;
    /// Stop once this many consecutive pseudo-random samples leave the dimension unchanged.
    int stable_run = 5;
    /// Give up (not stabilized) after this many pseudo-random samples.
    int max_random_samples = 64;
};

/// Structured sample points: every e_i, every e_i + e_j (i < j), every
/// e_i + e_j + e_k (i < j < k), the all-ones vector, then the signed
/// variants e_i - e_j and e_i +/- e_j +/- e_k with at least one minus sign.
/// The signed points reach loci where the orbit collapses, which generic
/// points miss.
std::vector<RatVector> structured_samples(int n);

/// Pseudo-random sample with components a/q, a in {-3..3}, q in {1,2,3}.
RatVector random_sample(int n, Lcg& rng);

struct LocalDerivationSpace {
    int n = 0;
    SubspaceBasis basis;  // ambient n*n
    std::size_t samples_used = 0;
    bool stabilized = false;
    std::uint64_t seed = 0;
    /// Intersection dimension after each sample, in order.
    std::vector<std::size_t> dims_after_step;
    /// Der was contained in the running intersection after every step.
    bool lower_bound_held = true;

    std::size_t dim() const { return basis.dim(); }
};

/// Thrown when the running intersection loses a derivation: an internal bug.
class LocalDerivationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Intersection of local conditions over the given points, in order.
/// Not marked stabilized; used directly for order-independence checks.
LocalDerivationSpace intersect_local_conditions(const DerivationSpace& der,
                                                const std::vector<RatVector>& samples);

/// Structured samples followed by pseudo-random samples until the dimension
/// is unchanged for stable_run consecutive random samples.
LocalDerivationSpace local_derivation_space(const Algebra& alg, const DerivationSpace& der,
                                            const LocalSamplingOptions& options = {});
LocalDerivationSpace local_derivation_space(const Algebra& alg, const LocalSamplingOptions& options = {});

enum class LocalOutcome { Equal, NotEqual, Inconclusive };

const char* to_string(LocalOutcome outcome);

LocalOutcome compare_local(const DerivationSpace& der, const LocalDerivationSpace& local);
LocalOutcome local_equals_der(const Algebra& alg, const LocalSamplingOptions& options = {});

/// A derivation D in der with D(x) = delta(x), if one exists.
std::optional<RatMatrix> local_witness(const DerivationSpace& der, const RatMatrix& delta,
                                       std::span<const Rational> x);

}  // namespace volterra

#endif  // VOLTERRA_LOCAL_HPP
