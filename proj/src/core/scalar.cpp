#include "vergen/scalar.hpp"

#include "vergen/error.hpp"

#include <algorithm>
#include <cctype>

namespace vergen {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + start, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    mpz_class numerator(std::string(num), 10);
    if (slash == std::string_view::npos) return Scalar(numerator);

    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den)) fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    mpz_class denominator(std::string(den), 10);
    if (denominator <= 0) fail(ErrorKind::Parse, "rational '" + std::string(text) + "' must have a positive denominator");
    Scalar value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

Point parse_point(std::string_view text) {
    Point out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_scalar(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "dot: dimension mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Scalar squared_norm(std::span<const Scalar> a) { return dot(a, a); }

Scalar squared_distance(std::span<const Scalar> a, std::span<const Scalar> b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "distance: dimension mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Scalar d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

Point operator+(const Point& a, const Point& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "point addition: dimension mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point operator-(const Point& a, const Point& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "point subtraction: dimension mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point operator-(const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Point operator*(const Scalar& s, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Point& operator+=(Point& a, const Point& b) {
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "point addition: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Point lerp(const Point& a, const Point& b, const Scalar& t) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
    return r;
}

Point centroid(std::span<const Point> points) {
    require(!points.empty(), ErrorKind::EmptyInput, "centroid of an empty point set");
    Point c = zero_point(points.front().size());
    for (const auto& p : points) c += p;
    const Scalar inv = Scalar(1) / Scalar(static_cast<unsigned long>(points.size()));
    return inv * c;
}

bool is_zero(std::span<const Scalar> a) {
    return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_point(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += format_scalar(p[i]);
    }
    return s + ")";
}

}  // namespace vergen
