#include "crorder/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace crorder {

Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty integer");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("bad integer");
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
        }
        return boost::multiprecision::cpp_int(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(parse_int(text.substr(0, slash))) / Rational(den);
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    }
    return s;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) s += a * v[c];
        }
        out[r] = std::move(s);
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: size mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) {
                if (!other(k, c).is_zero()) out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead_row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
        }
        const Rational inv = 1 / m(lead_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (!m(lead_row, c).is_zero()) m(lead_row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col).is_zero()) continue;
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!m(lead_row, c).is_zero()) m(r, c) -= factor * m(lead_row, c);
            }
        }
        pivots.push_back(col);
        ++lead_row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> kernel(const Matrix& m) {
    Matrix reduced = m;
    const auto pivots = rref(reduced);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    Matrix m = Matrix::from_rows(vectors, ambient_dim);
    const auto pivots = rref(m);
    for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(m.row(i));
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
    std::vector<Vector> vs;
    for (auto i : indices) {
        Vector v(ambient_dim);
        v.at(i) = 1;
        vs.push_back(std::move(v));
    }
    return span(ambient_dim, vs);
}

Subspace Subspace::whole(std::size_t ambient_dim) {
    std::vector<std::size_t> all(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) all[i] = i;
    return coordinate(ambient_dim, all);
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim_) throw std::invalid_argument("contains: size mismatch");
    // Reduce v against the RREF basis; what is left must vanish.
    Vector rest = v;
    for (const auto& b : basis_) {
        std::size_t lead = 0;
        while (b[lead].is_zero()) ++lead;
        if (rest[lead].is_zero()) continue;
        const Rational f = rest[lead];
        for (std::size_t c = lead; c < ambient_dim_; ++c) {
            if (!b[c].is_zero()) rest[c] -= f * b[c];
        }
    }
    for (const auto& x : rest) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_) {
        if (!contains(v)) return false;
    }
    return true;
}

std::vector<Vector> Subspace::annihilator() const {
    if (basis_.empty()) return Subspace::whole(ambient_dim_).basis();
    return kernel(Matrix::from_rows(basis_, ambient_dim_));
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("sum: ambient mismatch");
    std::vector<Vector> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_dim_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("intersect: ambient mismatch");
    auto constraints = annihilator();
    auto more = other.annihilator();
    constraints.insert(constraints.end(), more.begin(), more.end());
    if (constraints.empty()) return Subspace::whole(ambient_dim_);
    return span(ambient_dim_, kernel(Matrix::from_rows(constraints, ambient_dim_)));
}

}  // namespace crorder
