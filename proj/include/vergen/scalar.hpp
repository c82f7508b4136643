#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vergen {

/// Exact rational number; GMP keeps it canonical (reduced, positive denominator).
using Scalar = mpq_class;

/// Coordinate vector. Its length is the ambient dimension of whatever holds it.
using Point = std::vector<Scalar>;

/// Parses "p/q" or "p". Rejects q <= 0, whitespace, and anything non-numeric.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& value);

/// Parses a comma-separated coordinate list such as "1/2,0,-3".
Point parse_point(std::string_view text);

inline int sign(const Scalar& value) { return sgn(value); }

inline Point zero_point(std::size_t dim) { return Point(dim, Scalar(0)); }

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
Scalar squared_norm(std::span<const Scalar> a);
Scalar squared_distance(std::span<const Scalar> a, std::span<const Scalar> b);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator-(const Point& a);
Point operator*(const Scalar& s, const Point& a);
Point& operator+=(Point& a, const Point& b);

/// (1 - t) a + t b
Point lerp(const Point& a, const Point& b, const Scalar& t);

Point centroid(std::span<const Point> points);

bool is_zero(std::span<const Scalar> a);

/// Lexicographic comparison; the canonical ordering for vertex lists.
bool lex_less(const Point& a, const Point& b);

std::string format_point(const Point& p);

}  // namespace vergen
