#ifndef VOLTERRA_ALGEBRA_HPP
#define VOLTERRA_ALGEBRA_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "volterra/matrix.hpp"
#include "volterra/rational.hpp"

// Indices are 0-based throughout the C++ API. Human-readable messages and
// the JSON formats use 1-based indices.

namespace volterra {

/// One independent structure constant p_{ij,i} with i < j.
struct PairParameter {
    int i = 0;
    int j = 0;
    Rational value;

    friend bool operator==(const PairParameter&, const PairParameter&) = default;
};

/// Raw description of a genetic Volterra algebra: dimension plus the values
/// p_{ij,i} for i < j. May be invalid; see validate().
struct AlgebraSpec {
    int dimension = 0;
    std::vector<PairParameter> params;

    /// Spec of the given dimension with every p_{ij,i} equal to value.
    static AlgebraSpec uniform(int dimension, const Rational& value);

    /// Sorts params lexicographically by (i, j).
    void sort();

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

struct Violation {
    enum class Kind {
        BadDimension,
        IndexOutOfRange,
        UnorderedPair,
        DuplicatePair,
        MissingPair,
        NegativeFirst,   ///< p_{ij,i} < 0
        NegativeSecond,  ///< p_{ij,j} = 1 - p_{ij,i} < 0
    };
    Kind kind;
    int i = -1;
    int j = -1;
    std::string message;
};

const char* to_string(Violation::Kind kind);

/// Every violated axiom, one entry per offending pair. Empty iff valid.
std::vector<Violation> validate(const AlgebraSpec& spec);

class InvalidSpec : public std::invalid_argument {
public:
    explicit InvalidSpec(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Relabeling of generators: element i is the new index of old generator i.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& perm, int n);
Permutation identity_permutation(int n);
Permutation inverse(const Permutation& perm);

/// A validated genetic Volterra algebra with the full table of p_{ij,i}.
class Algebra {
public:
    /// Throws InvalidSpec when validate(spec) is non-empty.
    explicit Algebra(const AlgebraSpec& spec);

    int dimension() const { return n_; }

    /// p_{ij,i}; equals 1 when i == j.
    const Rational& coefficient(int i, int j) const { return table_[static_cast<std::size_t>(i * n_ + j)]; }
    /// Full structure constant p_{ij,k}.
    Rational structure_constant(int i, int j, int k) const;

    /// Canonical spec (pairs in lexicographic order).
    AlgebraSpec spec() const;

    /// The same algebra with generator i renamed to perm[i].
    Algebra relabeled(const Permutation& perm) const;

private:
    int n_ = 0;
    std::vector<Rational> table_;  // n*n, entry (i, j) = p_{ij,i}
};

/// (x*y)_k = x_k y_k + sum_{j != k} p_{kj,k} (x_k y_j + x_j y_k).
RatVector product(const Algebra& alg, std::span<const Rational> x, std::span<const Rational> y);

/// e_i * e_j. Throws std::out_of_range on a bad index.
RatVector basis_product(const Algebra& alg, int i, int j);

/// Graph on generators with an edge {i, j} exactly when p_{ij,i} = 1/2.
struct HalfGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, lexicographic
    std::vector<int> degrees;

    bool has_edge(int i, int j) const;
};

HalfGraph half_graph(const Algebra& alg);

}  // namespace volterra

#endif  // VOLTERRA_ALGEBRA_HPP
