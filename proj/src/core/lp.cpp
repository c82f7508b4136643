#include "vergen/lp.hpp"

#include "vergen/error.hpp"
#include "vergen/linalg.hpp"

#include <vector>

namespace vergen {

namespace {

/// Dense tableau for max c.y s.t. T y = rhs, y >= 0 with a known feasible basis.
class Tableau {
public:
    Tableau(Matrix rows, Point rhs, std::vector<int> basis)
        : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

    std::size_t cols() const { return rows_.empty() ? 0 : rows_[0].size(); }

    void set_objective(const Point& cost) {
        cost_ = cost;
        reduced_ = cost;
        value_ = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Scalar cb = cost[basis_[r]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j < cols(); ++j) reduced_[j] -= cb * rows_[r][j];
            value_ += cb * rhs_[r];
        }
    }

    /// Runs simplex iterations over the allowed columns; false when unbounded.
    bool optimize(const std::vector<bool>& allowed) {
        for (;;) {
            int enter = -1;
            for (std::size_t j = 0; j < cols(); ++j) {
                if (allowed[j] && sgn(reduced_[j]) > 0) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0) return true;

            int leave = -1;
            Scalar best_ratio;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (sgn(rows_[r][enter]) <= 0) continue;
                Scalar ratio = rhs_[r] / rows_[r][enter];
                if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
                    leave = static_cast<int>(r);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Scalar inv = 1 / rows_[row][col];
        for (auto& x : rows_[row]) x *= inv;
        rhs_[row] *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (r == row || sgn(rows_[r][col]) == 0) continue;
            const Scalar f = rows_[r][col];
            for (std::size_t j = 0; j < cols(); ++j)
                if (sgn(rows_[row][j]) != 0) rows_[r][j] -= f * rows_[row][j];
            rhs_[r] -= f * rhs_[row];
        }
        if (!reduced_.empty() && sgn(reduced_[col]) != 0) {
            const Scalar f = reduced_[col];
            for (std::size_t j = 0; j < cols(); ++j)
                if (sgn(rows_[row][j]) != 0) reduced_[j] -= f * rows_[row][j];
            value_ += f * rhs_[row];
        }
        basis_[row] = static_cast<int>(col);
    }

    /// Pivots artificial columns (index >= first_artificial) out of the basis
    /// and drops rows that turn out to be redundant.
    void expel_artificials(std::size_t first_artificial) {
        for (std::size_t r = 0; r < rows_.size();) {
            if (static_cast<std::size_t>(basis_[r]) < first_artificial) {
                ++r;
                continue;
            }
            std::size_t col = 0;
            while (col < first_artificial && sgn(rows_[r][col]) == 0) ++col;
            if (col < first_artificial) {
                pivot(r, col);
                ++r;
            } else {
                rows_.erase(rows_.begin() + static_cast<long>(r));
                rhs_.erase(rhs_.begin() + static_cast<long>(r));
                basis_.erase(basis_.begin() + static_cast<long>(r));
            }
        }
    }

    const Scalar& value() const { return value_; }

    Point solution() const {
        Point y = zero_point(cols());
        for (std::size_t r = 0; r < rows_.size(); ++r) y[basis_[r]] = rhs_[r];
        return y;
    }

private:
    Matrix rows_;
    Point rhs_;
    std::vector<int> basis_;
    Point cost_;
    Point reduced_;
    Scalar value_;
};

LpResult maximize_free(const Point& objective, std::span<const HalfSpace> constraints) {
    const std::size_t n = objective.size();
    const std::size_t m = constraints.size();

    // Columns: x+ (n), x- (n), slacks (m), artificials (one per negative rhs row).
    std::size_t artificials = 0;
    for (const auto& h : constraints) {
        require(h.normal.size() == n, ErrorKind::DimensionMismatch, "lp: constraint dimension mismatch");
        if (sgn(h.offset) < 0) ++artificials;
    }
    const std::size_t first_art = 2 * n + m;
    const std::size_t cols = first_art + artificials;

    Matrix rows(m, zero_point(cols));
    Point rhs(m);
    std::vector<int> basis(m);
    std::size_t next_art = first_art;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& h = constraints[i];
        const int s = sgn(h.offset) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = s * h.normal[j];
            rows[i][n + j] = -s * h.normal[j];
        }
        rows[i][2 * n + i] = s;
        rhs[i] = s * h.offset;
        if (s < 0) {
            rows[i][next_art] = 1;
            basis[i] = static_cast<int>(next_art++);
        } else {
            basis[i] = static_cast<int>(2 * n + i);
        }
    }

    Tableau t(std::move(rows), std::move(rhs), std::move(basis));
    std::vector<bool> all(cols, true);
    if (artificials > 0) {
        Point phase1 = zero_point(cols);
        for (std::size_t j = first_art; j < cols; ++j) phase1[j] = -1;
        t.set_objective(phase1);
        t.optimize(all);
        if (sgn(t.value()) < 0) return LpResult{LpStatus::Infeasible, 0, {}};
        t.expel_artificials(first_art);
    }

    Point phase2 = zero_point(cols);
    for (std::size_t j = 0; j < n; ++j) {
        phase2[j] = objective[j];
        phase2[n + j] = -objective[j];
    }
    t.set_objective(phase2);
    std::vector<bool> allowed(cols, true);
    for (std::size_t j = first_art; j < cols; ++j) allowed[j] = false;
    if (!t.optimize(allowed)) return LpResult{LpStatus::Unbounded, 0, {}};

    const Point y = t.solution();
    Point x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
    return LpResult{LpStatus::Optimal, t.value(), std::move(x)};
}

}  // namespace

LpResult lp(const Point& objective, std::span<const HalfSpace> constraints, LpMode mode) {
    const std::size_t n = objective.size();
    switch (mode) {
        case LpMode::Maximize:
            return maximize_free(objective, constraints);
        case LpMode::Feasibility:
            return maximize_free(zero_point(n), constraints);
        case LpMode::StrictFeasibility: {
            // max t  s.t.  <a_i, x> + t <= b_i,  t <= 1
            std::vector<HalfSpace> lifted;
            lifted.reserve(constraints.size() + 1);
            for (const auto& h : constraints) {
                require(h.normal.size() == n, ErrorKind::DimensionMismatch, "lp: constraint dimension mismatch");
                Point a = h.normal;
                a.push_back(1);
                lifted.push_back(HalfSpace{std::move(a), h.offset});
            }
            Point cap = zero_point(n + 1);
            cap[n] = 1;
            lifted.push_back(HalfSpace{cap, 1});
            LpResult r = maximize_free(cap, lifted);
            if (r.status != LpStatus::Optimal || sgn(r.value) <= 0) return LpResult{LpStatus::Infeasible, 0, {}};
            r.witness.pop_back();
            return r;
        }
    }
    return {};
}

std::optional<Point> lp_feasible(std::span<const HalfSpace> constraints, std::size_t dim) {
    LpResult r = lp(zero_point(dim), constraints, LpMode::Feasibility);
    if (r.status != LpStatus::Optimal) return std::nullopt;
    return r.witness;
}

std::optional<Point> lp_strictly_feasible(std::span<const HalfSpace> constraints, std::size_t dim) {
    LpResult r = lp(zero_point(dim), constraints, LpMode::StrictFeasibility);
    if (r.status != LpStatus::Optimal) return std::nullopt;
    return r.witness;
}

}  // namespace vergen
