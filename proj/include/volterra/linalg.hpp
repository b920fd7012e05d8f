#ifndef VOLTERRA_LINALG_HPP
#define VOLTERRA_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "volterra/matrix.hpp"

namespace volterra {

/// Result of Gauss-Jordan elimination. Pivot selection is deterministic:
/// leftmost remaining column, topmost nonzero row at or below the cursor.
struct EchelonForm {
    RatMatrix reduced;                 ///< reduced row-echelon form, zero rows kept at the bottom
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row, strictly increasing
};

EchelonForm echelon(RatMatrix m);
RatMatrix rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// A linear subspace of Q^ambient held in canonical form: the nonzero rows
/// of the RREF of any spanning set. Two bases describe the same subspace
/// iff they compare equal.
class SubspaceBasis {
public:
    /// The zero subspace.
    explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    static SubspaceBasis span(std::size_t ambient_dim, const std::vector<RatVector>& vectors);
    static SubspaceBasis from_rows(const RatMatrix& rows);
    static SubspaceBasis full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }

    const std::vector<RatVector>& vectors() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Basis vectors as rows (dim x ambient).
    RatMatrix as_rows() const;

    /// Residual of v after reduction against the basis; zero iff v is in the span.
    RatVector reduce(std::span<const Rational> v) const;
    bool contains(std::span<const Rational> v) const;

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<RatVector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m v = 0}.
SubspaceBasis kernel_basis(const RatMatrix& m);

/// Throws DimensionMismatch if ambient dimensions differ.
SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
bool subspace_contains(const SubspaceBasis& a, std::span<const Rational> v);
bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);
/// a is a subspace of b.
bool subspace_includes(const SubspaceBasis& b, const SubspaceBasis& a);
/// {f : f . v = 0 for all v in a}, as a subspace of the same ambient space.
SubspaceBasis annihilator(const SubspaceBasis& a);

/// Coefficients c with sum_k c_k columns[k] = target, if any. The columns
/// need not be independent; free coefficients are set to zero.
std::optional<RatVector> solve_combination(const std::vector<RatVector>& columns,
                                           std::span<const Rational> target);

}  // namespace volterra

#endif  // VOLTERRA_LINALG_HPP
