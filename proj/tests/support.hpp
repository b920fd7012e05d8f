#ifndef VOLTERRA_TESTS_SUPPORT_HPP
#define VOLTERRA_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "volterra/algebra.hpp"
#include "volterra/derivation.hpp"
#include "volterra/lcg.hpp"
#include "volterra/linalg.hpp"

namespace support {

using volterra::Rational;

inline Rational q(const char* text) { return Rational::parse(text); }

// Four-dimensional spec from the six values p12_1, p13_1, p14_1, p23_2, p24_2, p34_3.
inline volterra::AlgebraSpec spec4(const char* p12, const char* p13, const char* p14, const char* p23,
                                   const char* p24, const char* p34) {
    volterra::AlgebraSpec s;
    s.dimension = 4;
    const char* values[] = {p12, p13, p14, p23, p24, p34};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) s.params.push_back({i, j, q(values[k++])});
    return s;
}

inline volterra::Algebra alg4(const char* p12, const char* p13, const char* p14, const char* p23,
                              const char* p24, const char* p34) {
    return volterra::Algebra(spec4(p12, p13, p14, p23, p24, p34));
}

// Flattened n x n matrix with the given (row, col, value) entries, 0-based.
inline volterra::RatVector flat(int n, std::initializer_list<std::tuple<int, int, long>> entries) {
    volterra::RatVector v(static_cast<std::size_t>(n * n));
    for (const auto& [r, c, x] : entries) v[static_cast<std::size_t>(r * n + c)] += Rational(x);
    return v;
}

inline volterra::SubspaceBasis span(int n, std::vector<volterra::RatVector> vectors) {
    return volterra::SubspaceBasis::span(static_cast<std::size_t>(n * n), vectors);
}

// Every n x n matrix whose rows sum to zero.
inline volterra::SubspaceBasis zero_row_sum_space(int n) {
    std::vector<volterra::RatVector> vs;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c + 1 < n; ++c) vs.push_back(flat(n, {{r, c, 1}, {r, n - 1, -1}}));
    return span(n, vs);
}

// Random non-half value a/b with 1 <= b <= 8 plus a coin for exactly 1/2.
inline Rational random_value(volterra::Lcg& rng) {
    if (rng.below(2) == 0) return Rational(1, 2);
    while (true) {
        const long b = static_cast<long>(rng.below(8)) + 1;
        const long a = static_cast<long>(rng.below(static_cast<std::uint32_t>(b + 1)));
        Rational v(a, b);
        if (v != Rational(1, 2)) return v;
    }
}

inline volterra::RatVector random_vector(std::size_t len, volterra::Lcg& rng, int span = 3) {
    volterra::RatVector v(len);
    for (auto& x : v)
        x = Rational(static_cast<long>(rng.below(static_cast<std::uint32_t>(2 * span + 1))) - span,
                     static_cast<long>(rng.below(3)) + 1);
    return v;
}

}  // namespace support

#endif  // VOLTERRA_TESTS_SUPPORT_HPP
