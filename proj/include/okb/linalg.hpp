#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "okb/rat.hpp"

namespace okb {

using RatVector = std::vector<Rat>;

/// Exact solver for "target = sum_i x_i * rows[i]" against a fixed list of
/// rows. The echelon form is built once, then any number of targets can be
/// tested or solved. Rational Gaussian elimination; no rounding.
class SpanSolver {
public:
    SpanSolver() = default;
    /// All rows must have length `columns`.
    SpanSolver(std::size_t columns, const std::vector<RatVector>& rows);

    std::size_t columns() const { return columns_; }
    std::size_t num_rows() const { return num_rows_; }
    std::size_t rank() const { return echelon_.size(); }

    /// Coefficients x with sum_i x_i rows[i] = target, or nullopt if target
    /// is outside the row span. Throws DimensionMismatch on a bad length.
    std::optional<RatVector> solve(const RatVector& target) const;
    bool contains(const RatVector& target) const;

    /// Reduces v against the echelon rows; the result is zero iff v is in the span.
    RatVector residual(const RatVector& v) const;

private:
    struct EchelonRow {
        std::size_t pivot;
        RatVector row;          // row[pivot] == 1, zero at earlier pivots
        RatVector combination;  // row = sum_i combination[i] * rows[i]
    };

    std::size_t columns_ = 0;
    std::size_t num_rows_ = 0;
    std::vector<EchelonRow> echelon_;
};

/// Expresses target in the span of rows; nullopt when it is not a member.
std::optional<RatVector> rat_linear_solve(const std::vector<RatVector>& rows, const RatVector& target);

std::size_t rat_rank(const std::vector<RatVector>& rows);

/// Determinant of a square matrix given as rows.
Rat rat_determinant(std::vector<RatVector> matrix);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<std::vector<RatVector>> rat_inverse(const std::vector<RatVector>& matrix);

/// Basis of {v : row . v = 0 for all rows}.
std::vector<RatVector> rat_nullspace(std::size_t columns, const std::vector<RatVector>& rows);

/// Incrementally maintained echelon basis used to pick linearly independent
/// vectors out of a stream.
class IndependenceFilter {
public:
    explicit IndependenceFilter(std::size_t columns) : columns_(columns) {}
    /// Returns true (and records v) iff v is not in the span of the accepted vectors.
    bool insert(const RatVector& v);
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t columns_;
    std::vector<std::pair<std::size_t, RatVector>> rows_;
};

}  // namespace okb
