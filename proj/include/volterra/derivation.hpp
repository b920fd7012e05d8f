#ifndef VOLTERRA_DERIVATION_HPP
#define VOLTERRA_DERIVATION_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "volterra/algebra.hpp"
#include "volterra/linalg.hpp"

namespace volterra {

// Matrix conventions shared by every module:
//   * D(e_i) = sum_j d_ij e_j, so row i of D is the image of e_i and
//     D(x)_j = sum_i x_i d_ij.
//   * An n x n matrix flattens row-major: (i, j) -> i * n + j.

/// D(x) for the matrix D under the row-image convention above.
RatVector apply_map(const RatMatrix& d, std::span<const Rational> x);

RatVector flatten(const RatMatrix& d);

/// D' = P D P^{-1} with (P)_{perm[i], i} = 1, i.e. d'_{perm[i], perm[j]} = d_ij.
RatMatrix conjugate(const RatMatrix& d, const Permutation& perm);
SubspaceBasis conjugate(const SubspaceBasis& space, int n, const Permutation& perm);

struct DerivationSpace {
    int n = 0;
    SubspaceBasis basis;  // ambient n*n

    std::size_t dim() const { return basis.dim(); }
    std::vector<RatMatrix> matrices() const;
};

/// Rows: for every pair i <= j (lexicographic) the n coefficients of
/// D(e_i*e_j) - D(e_i)*e_j - e_i*D(e_j) along e_1..e_n. Columns: flattened D.
RatMatrix assemble_constraints(const Algebra& alg);

DerivationSpace derivation_space(const Algebra& alg);

/// Checks the derivation identity on every basis pair. Throws
/// DimensionMismatch when d is not n x n.
bool is_derivation(const Algebra& alg, const RatMatrix& d);

/// d_ij = d_ji = 0 for every off-diagonal non-edge {i, j} of the half graph.
bool check_lemma1(const Algebra& alg, const DerivationSpace& space);

/// Every basis matrix has zero row sums.
bool check_row_sums(const DerivationSpace& space);

enum class CaseLabel { A, B, C, D, E, F, G, H, I, J, Empty, Generic };

std::string_view to_string(CaseLabel label);
/// Accepts "A".."J", "EMPTY", "GENERIC" (case-insensitive).
std::optional<CaseLabel> parse_case_label(std::string_view text);
/// A..J and EMPTY, in that order.
const std::vector<CaseLabel>& four_dimensional_cases();

/// Canonical half-edge set of each 4-dimensional case (0-based pairs).
const std::vector<std::pair<int, int>>& canonical_edges(CaseLabel label);

struct Classification {
    CaseLabel label = CaseLabel::Generic;
    std::vector<int> signature;  // degrees sorted descending
    Permutation permutation;     // relabeling onto the canonical edge set
};

/// For n = 4: the case of the half graph and the lexicographically smallest
/// permutation mapping it onto the canonical edge set. Other dimensions
/// yield Generic with the identity permutation.
Classification classify_case(const Algebra& alg);

/// The parametric family of the case's theorem as a subspace of flattened
/// 4x4 matrices in canonical labeling. Throws std::invalid_argument for
/// Generic.
SubspaceBasis theorem_family(CaseLabel label);

/// The derivation space conjugated into the canonical labeling.
SubspaceBasis canonical_derivation_space(const Algebra& alg, const Classification& cls,
                                         const DerivationSpace& space);

/// Computed space (canonical labeling) lies inside theorem_family(label).
/// Requires n = 4; throws std::invalid_argument otherwise.
bool theorem_containment_check(const Algebra& alg);

struct CoincidencePredicate {
    std::string name;     // e.g. "p13_1_eq_p23_2"
    Rational lhs;
    Rational rhs;
    bool holds = false;
    std::string source;   // "theorem", "list" or "oracle"
};

struct CoincidenceReport {
    CaseLabel label = CaseLabel::Generic;
    Permutation permutation;
    std::vector<CoincidencePredicate> predicates;
    /// Item ("I".."VI") of the condition list of regimes with non-trivial
    /// derivations that covers this case, if any.
    std::optional<std::string> list_item;
    /// The condition list admits non-trivial derivations for these constants.
    bool list_admits_nontrivial = false;
    /// Same, with necessary-only list items sharpened by the oracle-derived
    /// conditions (only Case D differs).
    bool refined_admits_nontrivial = false;
};

/// Requires n = 4; throws std::invalid_argument otherwise.
CoincidenceReport coincidence_report(const Algebra& alg);

}  // namespace volterra

#endif  // VOLTERRA_DERIVATION_HPP
