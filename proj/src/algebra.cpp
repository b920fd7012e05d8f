#include "volterra/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace volterra {

namespace {

std::string pair_name(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

std::string summarize(const std::vector<Violation>& violations) {
    std::string s = "invalid algebra spec";
    for (const auto& v : violations) s += "; " + v.message;
    return s;
}

}  // namespace

AlgebraSpec AlgebraSpec::uniform(int dimension, const Rational& value) {
    AlgebraSpec spec;
    spec.dimension = dimension;
    for (int i = 0; i < dimension; ++i)
        for (int j = i + 1; j < dimension; ++j) spec.params.push_back({i, j, value});
    return spec;
}

void AlgebraSpec::sort() {
    std::stable_sort(params.begin(), params.end(), [](const PairParameter& a, const PairParameter& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
}

const char* to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::BadDimension: return "bad_dimension";
        case Violation::Kind::IndexOutOfRange: return "index_out_of_range";
        case Violation::Kind::UnorderedPair: return "unordered_pair";
        case Violation::Kind::DuplicatePair: return "duplicate_pair";
        case Violation::Kind::MissingPair: return "missing_pair";
        case Violation::Kind::NegativeFirst: return "nonnegativity_first";
        case Violation::Kind::NegativeSecond: return "nonnegativity_second";
    }
    return "unknown";
}

std::vector<Violation> validate(const AlgebraSpec& spec) {
    using K = Violation::Kind;
    std::vector<Violation> out;
    const int n = spec.dimension;
    if (n < 1) {
        out.push_back({K::BadDimension, -1, -1, "dimension must be at least 1, got " + std::to_string(n)});
        return out;
    }

    std::map<std::pair<int, int>, int> seen;
    for (const auto& p : spec.params) {
        if (p.i < 0 || p.j < 0 || p.i >= n || p.j >= n) {
            out.push_back({K::IndexOutOfRange, p.i, p.j,
                           "pair (" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) +
                               ") outside 1.." + std::to_string(n)});
            continue;
        }
        if (p.i >= p.j) {
            out.push_back({K::UnorderedPair, p.i, p.j,
                           "pair (" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) +
                               ") must satisfy i < j"});
            continue;
        }
        if (++seen[{p.i, p.j}] == 2)
            out.push_back({K::DuplicatePair, p.i, p.j, "pair " + pair_name(p.i, p.j) + " listed more than once"});

        if (p.value.sign() < 0)
            out.push_back({K::NegativeFirst, p.i, p.j,
                           "nonnegativity of p_{" + pair_name(p.i, p.j) + "," + std::to_string(p.i + 1) +
                               "} (value " + p.value.str() + ")"});
        if (p.value > Rational(1))
            out.push_back({K::NegativeSecond, p.i, p.j,
                           "nonnegativity of p_{" + pair_name(p.i, p.j) + "," + std::to_string(p.j + 1) +
                               "} (value " + (Rational(1) - p.value).str() + ")"});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!seen.contains({i, j}))
                out.push_back({K::MissingPair, i, j, "pair " + pair_name(i, j) + " missing"});
    return out;
}

InvalidSpec::InvalidSpec(std::vector<Violation> violations)
    : std::invalid_argument(summarize(violations)), violations_(std::move(violations)) {}

bool is_permutation(const Permutation& perm, int n) {
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Permutation identity_permutation(int n) {
    Permutation p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

Permutation inverse(const Permutation& perm) {
    Permutation inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    return inv;
}

Algebra::Algebra(const AlgebraSpec& spec) {
    auto violations = validate(spec);
    if (!violations.empty()) throw InvalidSpec(std::move(violations));
    n_ = spec.dimension;
    table_.assign(static_cast<std::size_t>(n_ * n_), Rational());
    for (int i = 0; i < n_; ++i) table_[static_cast<std::size_t>(i * n_ + i)] = 1;
    for (const auto& p : spec.params) {
        table_[static_cast<std::size_t>(p.i * n_ + p.j)] = p.value;
        table_[static_cast<std::size_t>(p.j * n_ + p.i)] = Rational(1) - p.value;
    }
}

Rational Algebra::structure_constant(int i, int j, int k) const {
    if (k == i) return coefficient(i, j);
    if (k == j) return coefficient(j, i);
    return {};
}

AlgebraSpec Algebra::spec() const {
    AlgebraSpec s;
    s.dimension = n_;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) s.params.push_back({i, j, coefficient(i, j)});
    return s;
}

Algebra Algebra::relabeled(const Permutation& perm) const {
    if (!is_permutation(perm, n_)) throw std::invalid_argument("relabeling is not a permutation of the generators");
    AlgebraSpec s;
    s.dimension = n_;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            const int a = perm[static_cast<std::size_t>(i)];
            const int b = perm[static_cast<std::size_t>(j)];
            // p'_{ab,a} = p_{ij,i}
            if (a < b)
                s.params.push_back({a, b, coefficient(i, j)});
            else
                s.params.push_back({b, a, coefficient(j, i)});
        }
    s.sort();
    return Algebra(s);
}

RatVector product(const Algebra& alg, std::span<const Rational> x, std::span<const Rational> y) {
    const auto n = static_cast<std::size_t>(alg.dimension());
    if (x.size() != n || y.size() != n)
        throw DimensionMismatch("product: vectors of length " + std::to_string(x.size()) + " and " +
                                std::to_string(y.size()) + " in dimension " + std::to_string(n));
    RatVector z(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = x[k] * y[k];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const Rational& p = alg.coefficient(static_cast<int>(k), static_cast<int>(j));
            if (p.is_zero()) continue;
            acc += p * (x[k] * y[j] + x[j] * y[k]);
        }
        z[k] = std::move(acc);
    }
    return z;
}

RatVector basis_product(const Algebra& alg, int i, int j) {
    const int n = alg.dimension();
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw std::out_of_range("basis_product: index out of range 1.." + std::to_string(n));
    RatVector z(static_cast<std::size_t>(n));
    if (i == j) {
        z[static_cast<std::size_t>(i)] = 1;
    } else {
        z[static_cast<std::size_t>(i)] = alg.coefficient(i, j);
        z[static_cast<std::size_t>(j)] = alg.coefficient(j, i);
    }
    return z;
}

bool HalfGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::find(edges.begin(), edges.end(), std::pair(i, j)) != edges.end();
}

HalfGraph half_graph(const Algebra& alg) {
    const Rational half(1, 2);
    HalfGraph g;
    g.n = alg.dimension();
    g.degrees.assign(static_cast<std::size_t>(g.n), 0);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (alg.coefficient(i, j) == half) {
                g.edges.emplace_back(i, j);
                ++g.degrees[static_cast<std::size_t>(i)];
                ++g.degrees[static_cast<std::size_t>(j)];
            }
    return g;
}

}  // namespace volterra
