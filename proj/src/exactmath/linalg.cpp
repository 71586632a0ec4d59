#include "okb/linalg.hpp"

#include <utility>

#include "okb/errors.hpp"

namespace okb {

namespace {

void axpy(RatVector& y, const Rat& a, const RatVector& x) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!x[i].is_zero()) y[i] -= a * x[i];
    }
}

std::optional<std::size_t> first_nonzero(const RatVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) return i;
    }
    return std::nullopt;
}

}  // namespace

SpanSolver::SpanSolver(std::size_t columns, const std::vector<RatVector>& rows)
    : columns_(columns), num_rows_(rows.size()) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != columns) throw DimensionMismatch("SpanSolver: row length mismatch");
        RatVector v = rows[r];
        RatVector comb(rows.size());
        comb[r] = Rat(1);
        for (const auto& e : echelon_) {
            if (v[e.pivot].is_zero()) continue;
            const Rat f = v[e.pivot];
            axpy(v, f, e.row);
            axpy(comb, f, e.combination);
        }
        const auto pivot = first_nonzero(v);
        if (!pivot) continue;
        const Rat inv = Rat(1) / v[*pivot];
        for (auto& x : v) x *= inv;
        for (auto& x : comb) x *= inv;
        echelon_.push_back({*pivot, std::move(v), std::move(comb)});
    }
}

RatVector SpanSolver::residual(const RatVector& v) const {
    if (v.size() != columns_) throw DimensionMismatch("SpanSolver: target length mismatch");
    RatVector r = v;
    for (const auto& e : echelon_) {
        if (!r[e.pivot].is_zero()) axpy(r, Rat(r[e.pivot]), e.row);
    }
    return r;
}

std::optional<RatVector> SpanSolver::solve(const RatVector& target) const {
    if (target.size() != columns_) throw DimensionMismatch("SpanSolver: target length mismatch");
    RatVector r = target;
    RatVector x(num_rows_);
    for (const auto& e : echelon_) {
        if (r[e.pivot].is_zero()) continue;
        const Rat f = r[e.pivot];
        axpy(r, f, e.row);
        for (std::size_t i = 0; i < num_rows_; ++i) {
            if (!e.combination[i].is_zero()) x[i] += f * e.combination[i];
        }
    }
    if (first_nonzero(r)) return std::nullopt;
    return x;
}

bool SpanSolver::contains(const RatVector& target) const { return !first_nonzero(residual(target)); }

std::optional<RatVector> rat_linear_solve(const std::vector<RatVector>& rows, const RatVector& target) {
    for (const auto& r : rows) {
        if (r.size() != target.size()) throw DimensionMismatch("rat_linear_solve: rows and target differ in length");
    }
    return SpanSolver(target.size(), rows).solve(target);
}

std::size_t rat_rank(const std::vector<RatVector>& rows) {
    if (rows.empty()) return 0;
    IndependenceFilter f(rows.front().size());
    for (const auto& r : rows) f.insert(r);
    return f.rank();
}

Rat rat_determinant(std::vector<RatVector> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw DimensionMismatch("rat_determinant: matrix not square");
    }
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rat inv = Rat(1) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rat f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) {
                if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
            }
        }
    }
    return det;
}

std::optional<std::vector<RatVector>> rat_inverse(const std::vector<RatVector>& matrix) {
    const std::size_t n = matrix.size();
    std::vector<RatVector> a = matrix;
    std::vector<RatVector> inv(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DimensionMismatch("rat_inverse: matrix not square");
        inv[i][i] = Rat(1);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rat s = Rat(1) / a[col][col];
        for (auto& x : a[col]) x *= s;
        for (auto& x : inv[col]) x *= s;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rat f = a[r][col];
            axpy(a[r], f, a[col]);
            axpy(inv[r], f, inv[col]);
        }
    }
    return inv;
}

std::vector<RatVector> rat_nullspace(std::size_t columns, const std::vector<RatVector>& rows) {
    // Reduced row echelon form, then one basis vector per free column.
    std::vector<RatVector> a;
    for (const auto& r : rows) {
        if (r.size() != columns) throw DimensionMismatch("rat_nullspace: row length mismatch");
        a.push_back(r);
    }
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < columns && next < a.size(); ++col) {
        std::size_t piv = next;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[next]);
        const Rat s = Rat(1) / a[next][col];
        for (auto& x : a[next]) x *= s;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r != next && !a[r][col].is_zero()) axpy(a[r], Rat(a[r][col]), a[next]);
        }
        pivots.push_back(col);
        ++next;
    }
    std::vector<RatVector> basis;
    std::size_t p = 0;
    for (std::size_t col = 0; col < columns; ++col) {
        if (p < pivots.size() && pivots[p] == col) {
            ++p;
            continue;
        }
        RatVector v(columns);
        v[col] = Rat(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool IndependenceFilter::insert(const RatVector& v) {
    if (v.size() != columns_) throw DimensionMismatch("IndependenceFilter: length mismatch");
    RatVector r = v;
    for (const auto& [pivot, row] : rows_) {
        if (!r[pivot].is_zero()) axpy(r, Rat(r[pivot]), row);
    }
    const auto pivot = first_nonzero(r);
    if (!pivot) return false;
    const Rat inv = Rat(1) / r[*pivot];
    for (auto& x : r) x *= inv;
    rows_.emplace_back(*pivot, std::move(r));
    return true;
}

}  // namespace okb
