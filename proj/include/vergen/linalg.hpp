#pragma once

#include "vergen/scalar.hpp"

#include <optional>
#include <vector>

namespace vergen {

/// Dense row-major matrix of exact scalars.
using Matrix = std::vector<Point>;

struct RowEchelon {
    Matrix rows;              ///< reduced row echelon form, zero rows dropped
    std::vector<int> pivots;  ///< pivot column of each row
};

RowEchelon rref(Matrix m, std::size_t cols);

int rank(const Matrix& m, std::size_t cols);

/// Basis of { x : m x = 0 }.
std::vector<Point> nullspace(const Matrix& m, std::size_t cols);

/// Solves the square system a x = b; nullopt when a is singular.
std::optional<Point> solve(Matrix a, Point b);

std::optional<Matrix> inverse(const Matrix& a);

Scalar determinant(Matrix a);

Matrix identity(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a, std::size_t cols);
Point apply(const Matrix& a, const Point& x);

/// Dimension of the affine hull of the points; -1 for an empty set.
int affine_rank(std::span<const Point> points);

}  // namespace vergen
