#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "volterra/generate.hpp"
#include "volterra/local.hpp"

using namespace volterra;
using support::alg4;
using support::flat;

namespace {

const Algebra kAllHalf(AlgebraSpec::uniform(4, Rational(1, 2)));
const Algebra kCaseACoincident = alg4("1/2", "1/3", "1/4", "1/3", "1/4", "1/5");

}  // namespace

TEST_CASE("orbit examples") {
    const DerivationSpace zero{4, SubspaceBasis(16)};
    CHECK(orbit(zero, RatVector{1, 2, 3, 4}).is_zero());

    const auto der = derivation_space(kCaseACoincident);
    CHECK(orbit(der, unit_vector(4, 0)) == SubspaceBasis::span(4, {{1, -1, 0, 0}}));
    CHECK(orbit(der, unit_vector(4, 2)).is_zero());
}

TEST_CASE("local condition examples") {
    const auto j = derivation_space(kAllHalf);
    const auto c = local_conditions_at(j, unit_vector(4, 0));
    CHECK(c.dim() == 15);
    CHECK(c.contains(flat(4, {{0, 0, 1}, {0, 3, -1}})));
    CHECK_FALSE(c.contains(flat(4, {{0, 0, 1}})));

    const DerivationSpace zero{4, SubspaceBasis(16)};
    CHECK(local_conditions_at(zero, unit_vector(4, 0)).dim() == 12);
    CHECK(local_conditions_at(zero, RatVector(4)) == SubspaceBasis::full(16));
    CHECK(local_conditions_at(j, RatVector(4)) == SubspaceBasis::full(16));
}

TEST_CASE("structured samples") {
    CHECK(structured_samples(1).size() == 2);
    const auto s4 = structured_samples(4);
    CHECK(s4.size() == 4 + 6 + 4 + 1 + 6 + 12);
    CHECK(s4.front() == RatVector{1, 0, 0, 0});
    CHECK(s4[14] == RatVector{1, 1, 1, 1});
    CHECK(std::find(s4.begin(), s4.end(), RatVector{0, 1, 0, -1}) != s4.end());
    Lcg a(5), b(5);
    CHECK(random_sample(4, a) == random_sample(4, b));
}

TEST_CASE("local derivation space examples") {
    const Algebra c = alg4("1/2", "1/2", "1/3", "1/4", "1/5", "1/6");
    const auto lc = local_derivation_space(c);
    CHECK(lc.basis.is_zero());
    CHECK(lc.stabilized);

    const auto la = local_derivation_space(kCaseACoincident);
    CHECK(la.dim() == 2);
    CHECK(compare_local(derivation_space(kCaseACoincident), la) == LocalOutcome::Equal);

    const auto lj = local_derivation_space(kAllHalf);
    CHECK(lj.basis == support::zero_row_sum_space(4));
    CHECK(local_equals_der(kAllHalf) == LocalOutcome::Equal);

    CHECK(local_equals_der(Algebra(AlgebraSpec{1, {}})) == LocalOutcome::Equal);
    CHECK(local_equals_der(Algebra(generate({CaseLabel::B, GenMode::Coincident, 3}))) == LocalOutcome::Equal);
}

TEST_CASE("case I needs points where the orbit collapses") {
    const Algebra i = Algebra(generate({CaseLabel::I, GenMode::Generic, 1}));
    const auto der = derivation_space(i);
    REQUIRE(der.dim() == 3);

    // Unsigned samples only pin the image; they leave one extra dimension.
    std::vector<RatVector> unsigned_only;
    for (const auto& x : structured_samples(4))
        if (std::none_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() < 0; }))
            unsigned_only.push_back(x);
    CHECK(intersect_local_conditions(der, unsigned_only).dim() == 4);

    // x = e_2 - e_4 is moved by no derivation, which removes it.
    unsigned_only.push_back(RatVector{0, 1, 0, -1});
    CHECK(intersect_local_conditions(der, unsigned_only).basis == der.basis);
    CHECK(local_equals_der(i) == LocalOutcome::Equal);
}

TEST_CASE("inconclusive when stabilization is impossible") {
    LocalSamplingOptions opts;
    opts.max_random_samples = 2;
    const auto l = local_derivation_space(kAllHalf, opts);
    CHECK_FALSE(l.stabilized);
    CHECK(compare_local(derivation_space(kAllHalf), l) == LocalOutcome::Inconclusive);
}

TEST_CASE("witnesses") {
    const auto der = derivation_space(kCaseACoincident);
    const RatMatrix delta = der.matrices().front();
    const RatVector x{2, 1, 3, 0};
    const auto w = local_witness(der, delta, x);
    REQUIRE(w);
    CHECK(apply_map(*w, x) == apply_map(delta, x));
    CHECK_FALSE(local_witness(der, RatMatrix::identity(4), x));
    const DerivationSpace zero{4, SubspaceBasis(16)};
    CHECK(local_witness(zero, RatMatrix(4, 4), x));
}

TEST_CASE("property: intersection is monotone and contains Der") {
    Lcg rng(31);
    for (int t = 0; t < 25; ++t) {
        const Algebra alg(random_spec(4, rng));
        const auto l = local_derivation_space(alg);
        CHECK(l.lower_bound_held);
        CHECK(std::is_sorted(l.dims_after_step.rbegin(), l.dims_after_step.rend()));
        CHECK(l.dims_after_step.size() == l.samples_used);
        CHECK(subspace_includes(l.basis, derivation_space(alg).basis));
        CHECK(l.stabilized);
        CHECK(compare_local(derivation_space(alg), l) == LocalOutcome::Equal);
    }
}

TEST_CASE("property: sample order does not change the intersection") {
    Lcg rng(37);
    for (int t = 0; t < 15; ++t) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const Algebra alg(random_spec(n, rng));
        const auto der = derivation_space(alg);
        auto samples = structured_samples(n);
        for (int k = 0; k < 4; ++k) samples.push_back(random_sample(n, rng));
        const auto forward = intersect_local_conditions(der, samples);
        std::reverse(samples.begin(), samples.end());
        CHECK(intersect_local_conditions(der, samples).basis == forward.basis);
    }
}

TEST_CASE("property: every sampled local derivation has a witness at random points") {
    Lcg rng(41);
    for (int t = 0; t < 15; ++t) {
        const Algebra alg(random_spec(4, rng));
        const auto der = derivation_space(alg);
        const auto l = local_derivation_space(alg, der);
        for (const auto& v : l.basis.vectors()) {
            const RatMatrix delta = RatMatrix::unflatten(v, 4);
            for (int k = 0; k < 3; ++k) CHECK(local_witness(der, delta, support::random_vector(4, rng)));
        }
    }
}
