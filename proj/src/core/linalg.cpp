#include "vergen/linalg.hpp"

#include "vergen/error.hpp"

#include <utility>

namespace vergen {

RowEchelon rref(Matrix m, std::size_t cols) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Scalar inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            const Scalar f = m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[row][j];
        }
        out.pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

int rank(const Matrix& m, std::size_t cols) { return static_cast<int>(rref(m, cols).pivots.size()); }

std::vector<Point> nullspace(const Matrix& m, std::size_t cols) {
    const RowEchelon e = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<Point> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Point v = zero_point(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Point> solve(Matrix a, Point b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    RowEchelon e = rref(std::move(a), n + 1);
    if (e.pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (e.pivots[i] != static_cast<int>(i)) return std::nullopt;
    Point x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = e.rows[i][n];
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i] = a[i];
        aug[i].resize(2 * n, Scalar(0));
        aug[i][n + i] = 1;
    }
    RowEchelon e = rref(std::move(aug), 2 * n);
    if (e.pivots.size() < n || e.pivots[n - 1] != static_cast<int>(n - 1)) return std::nullopt;
    Matrix inv(n, Point(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
    return inv;
}

Scalar determinant(Matrix a) {
    const std::size_t n = a.size();
    Scalar det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(a[r][col]) == 0) continue;
            const Scalar f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

Matrix identity(std::size_t n) {
    Matrix m(n, zero_point(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    Matrix c(a.size(), zero_point(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        require(a[i].size() == inner, ErrorKind::DimensionMismatch, "matrix product: shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (sgn(a[i][k]) == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& a, std::size_t cols) {
    Matrix t(cols, zero_point(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    return t;
}

Point apply(const Matrix& a, const Point& x) {
    Point y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
    return y;
}

int affine_rank(std::span<const Point> points) {
    if (points.empty()) return -1;
    Matrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    return rank(diffs, points[0].size());
}

}  // namespace vergen
