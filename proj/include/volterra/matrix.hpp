#ifndef VOLTERRA_MATRIX_HPP
#define VOLTERRA_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "volterra/rational.hpp"

namespace volterra {

using RatVector = std::vector<Rational>;

/// Thrown whenever two operands have incompatible shapes.
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense row-major matrix of rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    /// Throws DimensionMismatch if the rows are ragged.
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    /// Reinterprets a row-major flattened square matrix (length n*n).
    static RatMatrix unflatten(std::span<const Rational> flat, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    /// Row-major entries; index (i, j) maps to i * cols + j.
    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const;
    void append_row(std::span<const Rational> values);

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// m * v for a column vector v.
RatVector multiply(const RatMatrix& m, std::span<const Rational> v);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);
RatVector unit_vector(std::size_t n, std::size_t i);

}  // namespace volterra

#endif  // VOLTERRA_MATRIX_HPP
