#ifndef VOLTERRA_GENERATE_HPP
#define VOLTERRA_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "volterra/algebra.hpp"
#include "volterra/derivation.hpp"
#include "volterra/lcg.hpp"

namespace volterra {

enum class GenMode { Generic, Coincident };

std::string_view to_string(GenMode mode);
std::optional<GenMode> parse_gen_mode(std::string_view text);

struct GenRequest {
    CaseLabel label = CaseLabel::Empty;
    GenMode mode = GenMode::Generic;
    std::uint64_t seed = 0;
};

/// Request that cannot be honoured (unknown case, coincident mode without predicates).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-half values used for free parameters. All lie strictly between 0
/// and 1/2, so no value equals another's complement.
const std::vector<Rational>& non_half_pool();

/// Cases accepting coincident mode: A, B, D, G, plus J and EMPTY where it
/// is the same as generic.
bool supports_coincident(CaseLabel label);

/// Four-dimensional spec in canonical labeling with the requested half-edge
/// pattern. Generic mode draws pairwise distinct pool values; coincident
/// mode imposes the case's equalities exactly:
///   A: p13_1 = p23_2, p14_1 = p24_2      B: p13_1 = p14_1 = p23_2 = p24_2
///   D: p14_1 = p24_2 = p34_3            G: p23_2 = p24_2
AlgebraSpec generate(const GenRequest& request);

/// Uniform half-edge pattern (each pair is 1/2 with probability 1/2), other
/// pairs drawn as a/b with 1 <= b <= 8, 0 <= a <= b, a/b != 1/2.
AlgebraSpec random_spec(int n, Lcg& rng);

Permutation random_permutation(int n, Lcg& rng);

}  // namespace volterra

#endif  // VOLTERRA_GENERATE_HPP
