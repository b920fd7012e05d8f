#include "doctest.h"

#include "oracle/oracle.hpp"
#include "support.hpp"
#include "volterra/derivation.hpp"
#include "volterra/generate.hpp"

using namespace volterra;
using support::alg4;
using support::flat;

namespace {

const Algebra kAllHalf(AlgebraSpec::uniform(4, Rational(1, 2)));
const Algebra kCaseACoincident = alg4("1/2", "1/3", "1/4", "1/3", "1/4", "1/5");
const Algebra kCaseC = alg4("1/2", "1/2", "1/3", "1/4", "1/5", "1/6");

}  // namespace

TEST_CASE("n = 1") {
    const Algebra one(AlgebraSpec{1, {}});
    CHECK(assemble_constraints(one) == RatMatrix::from_rows({{-1}}));
    CHECK(derivation_space(one).dim() == 0);
}

TEST_CASE("constraint matrix shape") {
    for (int n = 1; n <= 5; ++n) {
        const Algebra alg(AlgebraSpec::uniform(n, Rational(1, 3)));
        const RatMatrix m = assemble_constraints(alg);
        CHECK(m.rows() == static_cast<std::size_t>(n * n * (n + 1) / 2));
        CHECK(m.cols() == static_cast<std::size_t>(n * n));
    }
}

TEST_CASE("derivation space examples") {
    CHECK(derivation_space(kCaseC).dim() == 0);

    const auto j = derivation_space(kAllHalf);
    CHECK(j.dim() == 12);
    CHECK(j.basis == support::zero_row_sum_space(4));

    const auto a = derivation_space(kCaseACoincident);
    CHECK(a.dim() == 2);
    CHECK(a.basis == support::span(4, {flat(4, {{0, 0, 1}, {0, 1, -1}}), flat(4, {{1, 0, 1}, {1, 1, -1}})}));

    CHECK(derivation_space(Algebra(AlgebraSpec::uniform(2, Rational(1, 2)))).dim() == 2);
    CHECK(derivation_space(Algebra(AlgebraSpec::uniform(3, Rational(1, 2)))).dim() == 6);
}

TEST_CASE("is_derivation") {
    CHECK(is_derivation(kCaseC, RatMatrix(4, 4)));
    CHECK(is_derivation(kCaseACoincident, RatMatrix::unflatten(flat(4, {{0, 0, 1}, {0, 1, -1}}), 4)));
    CHECK_FALSE(is_derivation(kAllHalf, RatMatrix::unflatten(flat(4, {{0, 0, 1}}), 4)));
    CHECK_FALSE(is_derivation(kCaseC, RatMatrix::identity(4)));
    CHECK_THROWS_AS(is_derivation(kCaseC, RatMatrix(3, 3)), DimensionMismatch);
}

TEST_CASE("lemma checks") {
    CHECK(check_lemma1(kCaseACoincident, derivation_space(kCaseACoincident)));
    const Algebra empty = alg4("1/3", "1/3", "1/3", "1/3", "1/3", "1/3");
    CHECK(check_lemma1(empty, derivation_space(empty)));
    CHECK(derivation_space(empty).dim() == 0);
    CHECK(check_lemma1(kAllHalf, derivation_space(kAllHalf)));

    CHECK(check_row_sums(DerivationSpace{4, SubspaceBasis(16)}));
    CHECK(check_row_sums(derivation_space(kAllHalf)));
    CHECK_FALSE(check_row_sums(DerivationSpace{4, support::span(4, {flat(4, {{0, 0, 1}})})}));
    // Off-diagonal entry on a non-edge breaks the zero pattern.
    CHECK_FALSE(check_lemma1(kCaseC, DerivationSpace{4, support::span(4, {flat(4, {{2, 3, 1}})})}));
}

TEST_CASE("case labels") {
    CHECK(parse_case_label("a") == CaseLabel::A);
    CHECK(parse_case_label("EMPTY") == CaseLabel::Empty);
    CHECK(parse_case_label("generic") == CaseLabel::Generic);
    CHECK_FALSE(parse_case_label("K"));
    CHECK(to_string(CaseLabel::Empty) == "EMPTY");
    CHECK(four_dimensional_cases().size() == 11);
}

TEST_CASE("classification examples") {
    const auto b = classify_case(alg4("1/2", "1/3", "1/4", "1/5", "1/6", "1/2"));
    CHECK(b.label == CaseLabel::B);
    CHECK(b.permutation == identity_permutation(4));

    const auto d = classify_case(alg4("1/3", "1/4", "1/5", "1/2", "1/2", "1/2"));
    CHECK(d.label == CaseLabel::D);
    CHECK(d.permutation == Permutation{3, 0, 1, 2});
    CHECK(d.signature == std::vector{2, 2, 2, 0});

    const auto e = classify_case(alg4("1/3", "1/3", "1/3", "1/3", "1/3", "1/3"));
    CHECK(e.label == CaseLabel::Empty);
    CHECK(e.permutation == identity_permutation(4));

    CHECK(classify_case(Algebra(AlgebraSpec::uniform(3, Rational(1, 2)))).label == CaseLabel::Generic);
}

TEST_CASE("every canonical edge set classifies to its own case with the identity") {
    for (const auto label : four_dimensional_cases()) {
        AlgebraSpec s = support::spec4("1/3", "1/3", "1/3", "1/3", "1/3", "1/3");
        for (auto& p : s.params)
            for (const auto& [i, j] : canonical_edges(label))
                if (p.i == i && p.j == j) p.value = Rational(1, 2);
        const auto cls = classify_case(Algebra(s));
        CHECK(cls.label == label);
        CHECK(cls.permutation == identity_permutation(4));
    }
}

TEST_CASE("theorem families") {
    CHECK(theorem_family(CaseLabel::C).is_zero());
    CHECK(theorem_family(CaseLabel::G) ==
          support::span(4, {flat(4, {{2, 2, 1}, {2, 3, -1}}), flat(4, {{3, 2, 1}, {3, 3, -1}})}));
    CHECK(theorem_family(CaseLabel::I) ==
          support::span(4, {flat(4, {{0, 0, 1}, {0, 2, -1}}), flat(4, {{1, 0, 1}, {1, 2, -1}, {3, 0, 1}, {3, 2, -1}}),
                            flat(4, {{2, 0, 1}, {2, 2, -1}})}));
    CHECK(theorem_family(CaseLabel::J) == support::zero_row_sum_space(4));
    CHECK(theorem_family(CaseLabel::D).dim() == 6);
    CHECK(theorem_family(CaseLabel::B).dim() == 4);
    CHECK_THROWS_AS(theorem_family(CaseLabel::Generic), std::invalid_argument);
}

TEST_CASE("containment examples") {
    CHECK(theorem_containment_check(kCaseC));
    const Algebra d6 = alg4("1/2", "1/2", "1/3", "1/2", "1/3", "1/3");
    CHECK(derivation_space(d6).dim() == 6);
    CHECK(theorem_containment_check(d6));
    const Algebra d0 = alg4("1/2", "1/2", "1/3", "1/2", "1/5", "1/7");
    CHECK(derivation_space(d0).dim() == 0);
    CHECK(theorem_containment_check(d0));
    CHECK_THROWS_AS(theorem_containment_check(Algebra(AlgebraSpec::uniform(3, Rational(1, 2)))),
                    std::invalid_argument);
}

TEST_CASE("case I computes the full family") {
    const Algebra i = Algebra(generate({CaseLabel::I, GenMode::Generic, 4}));
    const auto der = derivation_space(i);
    CHECK(der.dim() == 3);
    CHECK(canonical_derivation_space(i, classify_case(i), der) == theorem_family(CaseLabel::I));
}

TEST_CASE("coincidence report") {
    const auto a = coincidence_report(kCaseACoincident);
    CHECK(a.list_item == "I");
    CHECK(a.list_admits_nontrivial);
    for (const auto& p : a.predicates) CHECK(p.holds);

    const Algebra a_generic = alg4("1/2", "1/3", "1/4", "1/5", "1/6", "1/7");
    const auto g = coincidence_report(a_generic);
    CHECK_FALSE(g.list_admits_nontrivial);
    CHECK_FALSE(g.predicates.front().holds);
    CHECK(derivation_space(a_generic).dim() == 0);

    const auto j = coincidence_report(kAllHalf);
    CHECK(j.list_item == "VI");
    CHECK(j.predicates.empty());
    CHECK(j.list_admits_nontrivial);

    const auto d = coincidence_report(alg4("1/2", "1/2", "1/3", "1/2", "1/5", "1/7"));
    CHECK(d.list_item == "III");
    CHECK(d.list_admits_nontrivial);
    CHECK_FALSE(d.refined_admits_nontrivial);

    CHECK_FALSE(coincidence_report(kCaseC).list_item);
}

TEST_CASE("property: every basis element is a derivation and the space matches the oracle") {
    Lcg rng(17);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const Algebra alg(random_spec(n, rng));
        const auto der = derivation_space(alg);
        for (const auto& d : der.matrices()) CHECK(is_derivation(alg, d));
        const auto un = static_cast<std::size_t>(n * n);
        CHECK(der.basis == SubspaceBasis::span(un, oracle::derivations(alg)));
        CHECK(rank(assemble_constraints(alg)) == oracle::rank(oracle::derivation_constraints(alg)));
        for (int k = 0; k < 3; ++k) {
            const auto x = support::random_vector(static_cast<std::size_t>(n), rng);
            const auto y = support::random_vector(static_cast<std::size_t>(n), rng);
            CHECK(product(alg, x, y) == oracle::product(alg, x, y));
        }
    }
}

TEST_CASE("property: relabeling conjugates the derivation space") {
    Lcg rng(23);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const Algebra alg(random_spec(n, rng));
        const Permutation perm = random_permutation(n, rng);
        const auto der = derivation_space(alg);
        CHECK(derivation_space(alg.relabeled(perm)).basis == conjugate(der.basis, n, perm));
        if (n == 4) CHECK(classify_case(alg.relabeled(perm)).label == classify_case(alg).label);
    }
}

TEST_CASE("property: derivations form a Lie algebra") {
    Lcg rng(29);
    for (int t = 0; t < 30; ++t) {
        const Algebra alg(random_spec(4, rng));
        const auto mats = derivation_space(alg).matrices();
        for (std::size_t a = 0; a < mats.size(); ++a)
            for (std::size_t b = a + 1; b < mats.size(); ++b) {
                RatMatrix bracket = multiply(mats[a], mats[b]);
                const RatMatrix ba = multiply(mats[b], mats[a]);
                RatMatrix diff(4, 4);
                for (std::size_t r = 0; r < 4; ++r)
                    for (std::size_t c = 0; c < 4; ++c) diff(r, c) = bracket(r, c) - ba(r, c);
                CHECK(is_derivation(alg, diff));
            }
    }
}
