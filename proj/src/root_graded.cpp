#include "crorder/root_graded.hpp"

#include "crorder/errors.hpp"

namespace crorder {

namespace {

// Square matrices of size N, flattened row-major.
using Mat = std::vector<Rational>;

struct ClassicalFactor {
    std::size_t n = 0;                 ///< matrix size
    std::vector<std::vector<int>> w2;  ///< doubled weight of each index
    Mat form;                          ///< bilinear form J, empty for type A
    Mat form_inv;
};

Mat commutator(const Mat& x, const Mat& y, std::size_t n) {
    Mat out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (!x[i * n + k].is_zero())
                for (std::size_t j = 0; j < n; ++j)
                    if (!y[k * n + j].is_zero()) out[i * n + j] += x[i * n + k] * y[k * n + j];
            if (!y[i * n + k].is_zero())
                for (std::size_t j = 0; j < n; ++j)
                    if (!x[k * n + j].is_zero()) out[i * n + j] -= y[i * n + k] * x[k * n + j];
        }
    return out;
}

Mat product(const Mat& x, const Mat& y, std::size_t n) {
    Mat out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (!x[i * n + k].is_zero())
                for (std::size_t j = 0; j < n; ++j) out[i * n + j] += x[i * n + k] * y[k * n + j];
    return out;
}

ClassicalFactor classical(CartanType type, int rank) {
    const auto r = static_cast<std::size_t>(rank);
    ClassicalFactor f;
    auto weight = [&](std::size_t i, int s) {
        std::vector<int> w(type == CartanType::A ? r + 1 : r, 0);
        w[i] = 2 * s;
        return w;
    };
    switch (type) {
        case CartanType::A:
            f.n = r + 1;
            for (std::size_t i = 0; i < f.n; ++i) f.w2.push_back(weight(i, 1));
            return f;
        case CartanType::B:
        case CartanType::C:
        case CartanType::D: {
            f.n = type == CartanType::B ? 2 * r + 1 : 2 * r;
            for (std::size_t i = 0; i < r; ++i) f.w2.push_back(weight(i, 1));
            for (std::size_t i = 0; i < r; ++i) f.w2.push_back(weight(i, -1));
            if (type == CartanType::B) f.w2.emplace_back(r, 0);
            f.form.assign(f.n * f.n, 0);
            const int lower = type == CartanType::C ? -1 : 1;
            for (std::size_t i = 0; i < r; ++i) {
                f.form[i * f.n + r + i] = 1;
                f.form[(r + i) * f.n + i] = lower;
            }
            if (type == CartanType::B) f.form[(2 * r) * f.n + 2 * r] = 1;
            f.form_inv = f.form;
            if (type == CartanType::C)
                for (auto& x : f.form_inv) x = -x;
            return f;
        }
        default: break;
    }
    throw InvalidRank(std::string("no matrix realization for type ") + to_char(type));
}

// Structure constants of one simple factor, basis: Cartan elements then root vectors by RootId.
ExactLieAlgebra factor_algebra(const RootSystem& rs, std::size_t component, const std::vector<RootId>& roots,
                               std::vector<std::size_t>& root_index, std::size_t offset) {
    const Factor& fac = rs.factors()[component];
    const ClassicalFactor cf = classical(fac.type, fac.rank);
    const std::size_t n = cf.n;
    const auto rank = static_cast<std::size_t>(fac.rank);

    std::vector<Mat> basis;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < rank; ++i) {
        Mat h(n * n);
        if (fac.type == CartanType::A) {
            h[i * n + i] = 1;
            h[(i + 1) * n + i + 1] = -1;
        } else {
            h[i * n + i] = 1;
            h[(rank + i) * n + rank + i] = -1;
        }
        basis.push_back(std::move(h));
        labels.push_back("h" + std::to_string(i + 1) + (rs.factors().size() > 1 ? "'" + std::to_string(component) : ""));
    }
    for (RootId id : roots) {
        const auto& target = rs.root(id).euclid2;
        Mat x;
        for (std::size_t a = 0; a < n && x.empty(); ++a) {
            for (std::size_t b = 0; b < n && x.empty(); ++b) {
                if (a == b) continue;
                bool match = true;
                for (std::size_t k = 0; k < target.size(); ++k) match = match && cf.w2[a][k] - cf.w2[b][k] == target[k];
                if (!match) continue;
                Mat e(n * n);
                e[a * n + b] = 1;
                if (!cf.form.empty()) {
                    Mat et(n * n);
                    et[b * n + a] = 1;
                    const Mat dual = product(product(cf.form_inv, et, n), cf.form, n);
                    for (std::size_t k = 0; k < n * n; ++k) e[k] -= dual[k];
                }
                bool nonzero = false;
                for (const auto& v : e) nonzero = nonzero || !v.is_zero();
                if (nonzero) x = std::move(e);
            }
        }
        if (x.empty()) throw InternalInconsistency("no matrix root vector for " + rs.format(id));
        root_index[id] = offset + basis.size();
        basis.push_back(std::move(x));
        labels.push_back("X[" + rs.format(id) + "]");
    }

    // Coordinates in the basis through a pivot submatrix and its inverse.
    const std::size_t d = basis.size();
    std::vector<Vector> rows;
    for (const auto& m : basis) rows.emplace_back(m.begin(), m.end());
    Matrix reduced = Matrix::from_rows(rows, n * n);
    const auto pivots = rref(reduced);
    if (pivots.size() != d) throw InternalInconsistency("matrix basis is not independent");
    Matrix aug(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug(j, i) = basis[i][pivots[j]];
        aug(i, d + i) = 1;
    }
    rref(aug);
    auto coords = [&](const Mat& m) {
        Vector c(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!aug(i, d + j).is_zero() && !m[pivots[j]].is_zero()) c[i] += aug(i, d + j) * m[pivots[j]];
        Mat back(n * n);
        for (std::size_t i = 0; i < d; ++i)
            if (!c[i].is_zero())
                for (std::size_t k = 0; k < n * n; ++k) back[k] += c[i] * basis[i][k];
        if (back != m) throw InternalInconsistency("bracket leaves the matrix algebra");
        return c;
    };

    ExactLieAlgebra alg(labels);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) alg.set_bracket(i, j, coords(commutator(basis[i], basis[j], n)));
    return alg;
}

}  // namespace

RootGradedAlgebra build_root_graded(const ParabolicCRAlgebra& p) {
    const RootSystem& rs = p.system();
    RootGradedAlgebra out{ExactLieAlgebra({}), std::vector<std::size_t>(rs.size(), 0)};
    std::size_t offset = 0;
    for (std::size_t c = 0; c < rs.factors().size(); ++c) {
        std::vector<RootId> roots;
        for (const auto& r : rs.roots())
            if (r.component == c) roots.push_back(r.id);
        ExactLieAlgebra f = factor_algebra(rs, c, roots, out.root_index, offset);
        offset += f.dim();
        out.algebra = ExactLieAlgebra::direct_sum(out.algebra, f);
    }

    const std::size_t n = out.algebra.dim();
    std::vector<std::size_t> q, qbar;
    std::size_t cartan_start = 0;
    for (std::size_t c = 0; c < rs.factors().size(); ++c) {
        const auto rank = static_cast<std::size_t>(rs.factors()[c].rank);
        std::size_t roots_in_factor = 0;
        for (const auto& r : rs.roots()) roots_in_factor += r.component == c;
        for (std::size_t i = 0; i < rank; ++i) {
            q.push_back(cartan_start + i);
            qbar.push_back(cartan_start + i);
        }
        cartan_start += rank + roots_in_factor;
    }
    for (auto id : p.Q().ids()) q.push_back(out.root_index[id]);
    for (auto id : p.Qbar().ids()) qbar.push_back(out.root_index[id]);
    out.algebra.set_q(Subspace::coordinate(n, q));
    out.algebra.set_qbar(Subspace::coordinate(n, qbar));
    return out;
}

}  // namespace crorder
