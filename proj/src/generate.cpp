#include "volterra/generate.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace volterra {

std::string_view to_string(GenMode mode) { return mode == GenMode::Generic ? "generic" : "coincident"; }

std::optional<GenMode> parse_gen_mode(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "generic") return GenMode::Generic;
    if (lower == "coincident") return GenMode::Coincident;
    return std::nullopt;
}

const std::vector<Rational>& non_half_pool() {
    static const std::vector<Rational> pool = {
        Rational(1, 3), Rational(1, 4), Rational(1, 5), Rational(2, 7), Rational(3, 8),  Rational(2, 9),
        Rational(3, 10), Rational(1, 6), Rational(1, 7), Rational(3, 7), Rational(2, 5), Rational(4, 9),
        Rational(1, 8), Rational(3, 11), Rational(5, 12), Rational(1, 9)};
    return pool;
}

bool supports_coincident(CaseLabel label) {
    switch (label) {
        case CaseLabel::A:
        case CaseLabel::B:
        case CaseLabel::D:
        case CaseLabel::G:
        case CaseLabel::J:
        case CaseLabel::Empty: return true;
        default: return false;
    }
}

AlgebraSpec generate(const GenRequest& request) {
    if (request.label == CaseLabel::Generic) throw UsageError("generate: GENERIC is not a four-dimensional case");
    if (request.mode == GenMode::Coincident && !supports_coincident(request.label))
        throw UsageError("generate: case " + std::string(to_string(request.label)) +
                         " has no coincidence predicates; use --mode generic");

    // Seeded Fisher-Yates shuffle of the pool; draws are taken from the front.
    std::vector<Rational> pool = non_half_pool();
    Lcg rng(request.seed);
    for (std::size_t k = pool.size() - 1; k > 0; --k)
        std::swap(pool[k], pool[rng.below(static_cast<std::uint32_t>(k + 1))]);

    const auto& edges = canonical_edges(request.label);
    auto is_edge = [&](int i, int j) { return std::find(edges.begin(), edges.end(), std::pair(i, j)) != edges.end(); };

    AlgebraSpec spec;
    spec.dimension = 4;
    std::size_t next = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            spec.params.push_back({i, j, is_edge(i, j) ? Rational(1, 2) : pool[next++]});

    if (request.mode == GenMode::Coincident) {
        auto set = [&](int i, int j, const Rational& v) {
            for (auto& p : spec.params)
                if (p.i == i && p.j == j) p.value = v;
        };
        auto get = [&](int i, int j) {
            for (const auto& p : spec.params)
                if (p.i == i && p.j == j) return p.value;
            return Rational();
        };
        switch (request.label) {
            case CaseLabel::A:
                set(1, 2, get(0, 2));  // p23_2 = p13_1
                set(1, 3, get(0, 3));  // p24_2 = p14_1
                break;
            case CaseLabel::B:
                for (auto [i, j] : {std::pair(0, 3), std::pair(1, 2), std::pair(1, 3)}) set(i, j, get(0, 2));
                break;
            case CaseLabel::D:
                set(1, 3, get(0, 3));
                set(2, 3, get(0, 3));
                break;
            case CaseLabel::G:
                set(1, 3, get(1, 2));
                break;
            default:
                break;
        }
    }
    return spec;
}

AlgebraSpec random_spec(int n, Lcg& rng) {
    AlgebraSpec spec;
    spec.dimension = n;
    const Rational half(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational v = half;
            if (rng.below(2) == 0) {
                do {
                    const long den = static_cast<long>(rng.below(8)) + 1;
                    const long num = static_cast<long>(rng.below(static_cast<std::uint32_t>(den + 1)));
                    v = Rational(num, den);
                } while (v == half);
            }
            spec.params.push_back({i, j, v});
        }
    return spec;
}

Permutation random_permutation(int n, Lcg& rng) {
    Permutation p = identity_permutation(n);
    for (int k = n - 1; k > 0; --k)
        std::swap(p[static_cast<std::size_t>(k)], p[rng.below(static_cast<std::uint32_t>(k + 1))]);
    return p;
}

}  // namespace volterra
