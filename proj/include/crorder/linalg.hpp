#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crorder {

using Rational = boost::multiprecision::cpp_rational;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Rational dot(const Vector& a, const Vector& b);

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector apply(const Vector& v) const;
    Matrix operator*(const Matrix& other) const;
    Matrix transpose() const;
    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduces m in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x | m x = 0}.
std::vector<Vector> kernel(const Matrix& m);

/// Some x with m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Subspace of Q^n kept as a canonical (RREF) row basis, so equal subspaces compare equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    /// Span of the given standard basis vectors.
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);
    static Subspace whole(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    /// Basis of the annihilator {w | w·v = 0 for all v in this subspace}.
    std::vector<Vector> annihilator() const;

    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambient_dim_;
    std::vector<Vector> basis_;
};

}  // namespace crorder
