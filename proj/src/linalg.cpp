#include "volterra/linalg.hpp"

#include <utility>

namespace volterra {

EchelonForm echelon(RatMatrix m) {
    EchelonForm out;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;

        if (pivot != lead_row) {
            auto a = m.row(pivot);
            auto b = m.row(lead_row);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const Rational inv = Rational(1) / m(lead_row, col);
        for (auto& x : m.row(lead_row))
            if (!x.is_zero()) x *= inv;

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col).is_zero()) continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
        }
        out.pivots.push_back(col);
        ++lead_row;
    }
    out.reduced = std::move(m);
    return out;
}

RatMatrix rref(const RatMatrix& m) { return echelon(m).reduced; }

std::size_t rank(const RatMatrix& m) { return echelon(m).pivots.size(); }

SubspaceBasis SubspaceBasis::from_rows(const RatMatrix& rows) {
    SubspaceBasis s(rows.cols());
    EchelonForm e = echelon(rows);
    s.pivots_ = e.pivots;
    s.basis_.reserve(e.pivots.size());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        auto row = e.reduced.row(r);
        s.basis_.emplace_back(row.begin(), row.end());
    }
    return s;
}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, const std::vector<RatVector>& vectors) {
    RatMatrix rows(0, ambient_dim);
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim)
            throw DimensionMismatch("span: vector of length " + std::to_string(v.size()) +
                                    " in ambient dimension " + std::to_string(ambient_dim));
        rows.append_row(v);
    }
    return from_rows(rows);
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient_dim) {
    return from_rows(RatMatrix::identity(ambient_dim));
}

RatMatrix SubspaceBasis::as_rows() const {
    RatMatrix m(0, ambient_);
    for (const auto& v : basis_) m.append_row(v);
    return m;
}

RatVector SubspaceBasis::reduce(std::span<const Rational> v) const {
    if (v.size() != ambient_)
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                                " tested against ambient dimension " + std::to_string(ambient_));
    RatVector r(v.begin(), v.end());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Rational coeff = r[pivots_[k]];
        if (coeff.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!basis_[k][c].is_zero()) r[c] -= coeff * basis_[k][c];
    }
    return r;
}

bool SubspaceBasis::contains(std::span<const Rational> v) const { return volterra::is_zero(reduce(v)); }

SubspaceBasis kernel_basis(const RatMatrix& m) {
    const EchelonForm e = echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<RatVector> vectors;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(n);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        vectors.push_back(std::move(v));
    }
    return SubspaceBasis::span(n, vectors);
}

namespace {

void require_same_ambient(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("subspaces live in ambient dimensions " + std::to_string(a.ambient_dim()) +
                                " and " + std::to_string(b.ambient_dim()));
}

}  // namespace

SubspaceBasis annihilator(const SubspaceBasis& a) {
    if (a.is_zero()) return SubspaceBasis::full(a.ambient_dim());
    return kernel_basis(a.as_rows());
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b);
    if (a.is_zero() || b.is_zero()) return SubspaceBasis(a.ambient_dim());
    RatMatrix constraints = annihilator(a).as_rows();
    const SubspaceBasis bperp = annihilator(b);
    for (const auto& f : bperp.vectors()) constraints.append_row(f);
    if (constraints.rows() == 0) return SubspaceBasis::full(a.ambient_dim());
    return kernel_basis(constraints);
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b);
    std::vector<RatVector> all = a.vectors();
    all.insert(all.end(), b.vectors().begin(), b.vectors().end());
    return SubspaceBasis::span(a.ambient_dim(), all);
}

bool subspace_contains(const SubspaceBasis& a, std::span<const Rational> v) { return a.contains(v); }

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    require_same_ambient(a, b);
    return a == b;
}

bool subspace_includes(const SubspaceBasis& b, const SubspaceBasis& a) {
    require_same_ambient(a, b);
    for (const auto& v : a.vectors())
        if (!b.contains(v)) return false;
    return true;
}

std::optional<RatVector> solve_combination(const std::vector<RatVector>& columns,
                                           std::span<const Rational> target) {
    const std::size_t k = columns.size();
    const std::size_t rows = target.size();
    // Augmented system [columns | target].
    RatMatrix aug(rows, k + 1);
    for (std::size_t c = 0; c < k; ++c) {
        if (columns[c].size() != rows) throw DimensionMismatch("solve_combination: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) aug(r, c) = columns[c][r];
    }
    for (std::size_t r = 0; r < rows; ++r) aug(r, k) = target[r];

    const EchelonForm e = echelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
    RatVector coeffs(k);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) coeffs[e.pivots[r]] = e.reduced(r, k);
    return coeffs;
}

}  // namespace volterra
