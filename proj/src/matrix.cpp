#include "volterra/matrix.hpp"

#include <algorithm>

namespace volterra {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    if (rows.empty()) return {};
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw DimensionMismatch("ragged rows in matrix literal");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

RatMatrix RatMatrix::unflatten(std::span<const Rational> flat, std::size_t n) {
    if (flat.size() != n * n)
        throw DimensionMismatch("flattened length " + std::to_string(flat.size()) +
                                " is not " + std::to_string(n) + "^2");
    RatMatrix m(n, n);
    std::copy(flat.begin(), flat.end(), m.entries_.begin());
    return m;
}

bool RatMatrix::is_zero() const { return volterra::is_zero(entries_); }

void RatMatrix::append_row(std::span<const Rational> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw DimensionMismatch("appended row has wrong length");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
}

RatVector multiply(const RatMatrix& m, std::span<const Rational> v) {
    if (v.size() != m.cols())
        throw DimensionMismatch("matrix-vector product: " + std::to_string(m.cols()) +
                                " columns vs vector of length " + std::to_string(v.size()));
    RatVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.row(r), v);
    return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RatMatrix transpose(const RatMatrix& m) {
    RatMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product of vectors of different length");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

bool is_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

RatVector unit_vector(std::size_t n, std::size_t i) {
    RatVector v(n);
    v.at(i) = 1;
    return v;
}

}  // namespace volterra
