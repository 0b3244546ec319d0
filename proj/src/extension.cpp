#include "crorder/extension.hpp"

#include "crorder/errors.hpp"

#include <functional>

namespace crorder {

ExactLieAlgebra::ExactLieAlgebra(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      table_(labels_.size() * labels_.size(), Vector(labels_.size())),
      q_(labels_.size()),
      qbar_(labels_.size()) {}

void ExactLieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
    if (i >= dim() || j >= dim() || value.size() != dim()) throw std::invalid_argument("set_bracket: out of range");
    table_[i * dim() + j] = value;
    Vector neg = value;
    for (auto& x : neg) x = -x;
    table_[j * dim() + i] = std::move(neg);
}

Vector ExactLieAlgebra::bracket(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Vector& b = bracket(i, j);
            const Rational c = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (!b[k].is_zero()) out[k] += c * b[k];
            }
        }
    }
    return out;
}

Vector ExactLieAlgebra::basis_vector(std::size_t i) const {
    Vector v(dim());
    v.at(i) = 1;
    return v;
}

bool ExactLieAlgebra::antisymmetric() const {
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) {
            const Vector& a = bracket(i, j);
            const Vector& b = bracket(j, i);
            for (std::size_t k = 0; k < dim(); ++k) {
                if (a[k] != -b[k]) return false;
            }
        }
    }
    return true;
}

bool ExactLieAlgebra::jacobi() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector s = bracket(bracket(i, j), basis_vector(k));
                const Vector t = bracket(bracket(j, k), basis_vector(i));
                const Vector u = bracket(bracket(k, i), basis_vector(j));
                for (std::size_t m = 0; m < n; ++m) {
                    if (s[m] + t[m] + u[m] != 0) return false;
                }
            }
        }
    }
    return true;
}

bool ExactLieAlgebra::is_subalgebra(const Subspace& s) const {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (!s.contains(bracket(b[i], b[j]))) return false;
        }
    }
    return true;
}

Subspace ExactLieAlgebra::generated_subalgebra(const Subspace& s) const {
    Subspace cur = s;
    while (true) {
        std::vector<Vector> vs = cur.basis();
        const auto& b = cur.basis();
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) vs.push_back(bracket(b[i], b[j]));
        Subspace next = Subspace::span(dim(), vs);
        if (next.dim() == cur.dim()) return cur;
        cur = std::move(next);
    }
}

ExactLieAlgebra ExactLieAlgebra::direct_sum(const ExactLieAlgebra& a, const ExactLieAlgebra& b) {
    std::vector<std::string> labels = a.labels_;
    labels.insert(labels.end(), b.labels_.begin(), b.labels_.end());
    ExactLieAlgebra out(std::move(labels));
    const std::size_t n = out.dim(), na = a.dim();
    auto embed = [&](const Vector& v, std::size_t offset) {
        Vector w(n);
        for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
        return w;
    };
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) out.table_[i * n + j] = embed(a.bracket(i, j), 0);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out.table_[(na + i) * n + na + j] = embed(b.bracket(i, j), na);
    auto sum_space = [&](const Subspace& x, const Subspace& y) {
        std::vector<Vector> vs;
        for (const auto& v : x.basis()) vs.push_back(embed(v, 0));
        for (const auto& v : y.basis()) vs.push_back(embed(v, na));
        return Subspace::span(n, vs);
    };
    out.q_ = sum_space(a.q_, b.q_);
    out.qbar_ = sum_space(a.qbar_, b.qbar_);
    return out;
}

Rational Sl2Module::e_coeff(int h) const {
    if (h <= 0 || h > k) return 0;
    return convention == Convention::Lowering ? Rational(h * (k - h + 1)) : Rational(1);
}

Rational Sl2Module::f_coeff(int h) const {
    if (h < 0 || h >= k) return 0;
    return convention == Convention::Lowering ? Rational(1) : Rational((h + 1) * (k - h));
}

bool Sl2Module::satisfies_axioms() const {
    // E F v_h - F E v_h = (f_h e_{h+1} - e_h f_{h-1}) v_h.
    for (int h = 0; h <= k; ++h) {
        const Rational ef = f_coeff(h) * e_coeff(h + 1);
        const Rational fe = h > 0 ? e_coeff(h) * f_coeff(h - 1) : Rational(0);
        if (ef - fe != weight(h)) return false;
    }
    return true;
}

LeeExtension build_lee_extension(int k, Sl2Module::Convention convention) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    Sl2Module module{k, convention};
    if (!module.satisfies_axioms()) throw InternalInconsistency("sl2-module axioms fail");

    std::vector<std::string> labels{"E", "H", "F"};
    for (int h = 0; h <= k; ++h) labels.push_back("v" + std::to_string(h));
    ExactLieAlgebra alg(std::move(labels));
    const std::size_t n = alg.dim();
    auto unit = [n](std::size_t i, Rational c) {
        Vector v(n);
        v[i] = std::move(c);
        return v;
    };
    using L = LeeExtension;
    alg.set_bracket(L::kH, L::kE, unit(L::kE, 2));
    alg.set_bracket(L::kH, L::kF, unit(L::kF, -2));
    alg.set_bracket(L::kE, L::kF, unit(L::kH, 1));
    for (int h = 0; h <= k; ++h) {
        alg.set_bracket(L::kH, L::v(h), unit(L::v(h), module.weight(h)));
        if (h > 0) alg.set_bracket(L::kE, L::v(h), unit(L::v(h - 1), module.e_coeff(h)));
        if (h < k) alg.set_bracket(L::kF, L::v(h), unit(L::v(h + 1), module.f_coeff(h)));
    }

    std::vector<std::size_t> q{L::kH, L::kF}, qbar{L::kH, L::kE};
    for (int h = 0; h <= k; ++h) {
        if (module.weight(h) < 0) q.push_back(L::v(h));
        if (module.weight(h) > 0) qbar.push_back(L::v(h));
    }
    alg.set_q(Subspace::coordinate(n, q));
    alg.set_qbar(Subspace::coordinate(n, qbar));

    if (!alg.antisymmetric()) throw InternalInconsistency("structure constants are not antisymmetric");
    if (!alg.is_subalgebra(alg.q()) || !alg.is_subalgebra(alg.qbar())) {
        throw InternalInconsistency("q' or its conjugate is not a subalgebra");
    }
    if (!(alg.q().intersect(alg.qbar()) == Subspace::coordinate(n, {L::kH}))) {
        throw InternalInconsistency("q' n qbar' is not span(H)");
    }
    return LeeExtension{module, std::move(alg)};
}

std::vector<std::size_t> SubspaceChainReport::dims() const {
    std::vector<std::size_t> out;
    for (const auto& s : chain) out.push_back(s.dim());
    return out;
}

namespace {

// {Z in prev | [Z, b] in target for every b in probes}.
Subspace refine(const ExactLieAlgebra& alg, const Subspace& prev, const std::vector<Vector>& probes,
                const Subspace& target) {
    const auto& zs = prev.basis();
    if (zs.empty()) return prev;
    const auto constraints = target.annihilator();
    if (constraints.empty()) return prev;
    std::vector<Vector> rows;
    std::vector<std::vector<Vector>> images(probes.size());
    for (std::size_t b = 0; b < probes.size(); ++b) {
        for (const auto& z : zs) images[b].push_back(alg.bracket(z, probes[b]));
        for (const auto& w : constraints) {
            Vector row(zs.size());
            for (std::size_t i = 0; i < zs.size(); ++i) row[i] = dot(w, images[b][i]);
            rows.push_back(std::move(row));
        }
    }
    const auto coeffs = kernel(Matrix::from_rows(rows, zs.size()));
    std::vector<Vector> out;
    for (const auto& c : coeffs) {
        Vector z(alg.dim());
        for (std::size_t i = 0; i < zs.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (std::size_t k = 0; k < z.size(); ++k) z[k] += c[i] * zs[i][k];
        }
        out.push_back(std::move(z));
    }
    return Subspace::span(alg.dim(), out);
}

SubspaceChainReport run_chain(const Subspace& start, const Subspace& bottom,
                              const std::function<Subspace(const Subspace&)>& step) {
    SubspaceChainReport report;
    report.chain.push_back(start);
    while (true) {
        Subspace next = step(report.chain.back());
        if (next == report.chain.back()) break;
        report.chain.push_back(std::move(next));
    }
    report.stabilized_at = report.chain.size() - 1;
    report.order = report.chain.back() == bottom ? Order(static_cast<int>(report.stabilized_at)) : Order::infinite();
    return report;
}

}  // namespace

SubspaceChainReport generic_levi_chain(const ExactLieAlgebra& alg) {
    const Subspace bottom = alg.q().intersect(alg.qbar());
    return run_chain(alg.q(), bottom, [&](const Subspace& prev) {
        return refine(alg, prev, alg.qbar().basis(), prev + alg.qbar());
    });
}

SubspaceChainReport generic_contact_chain(const ExactLieAlgebra& alg) {
    const Subspace bottom = alg.q().intersect(alg.qbar());
    const Subspace top = alg.q() + alg.qbar();
    return run_chain(top, bottom, [&](const Subspace& prev) {
        return bottom + refine(alg, prev, top.basis(), prev);
    });
}

CrDimCodim generic_cr_dim_codim(const ExactLieAlgebra& alg) {
    const auto inter = alg.q().intersect(alg.qbar()).dim();
    const auto sum = (alg.q() + alg.qbar()).dim();
    return {static_cast<int>(alg.q().dim() - inter), static_cast<int>(alg.dim() - sum)};
}

ExtensionCrDimCodim extension_cr_dim_codim(const LeeExtension& ext) {
    ExtensionCrDimCodim out;
    static_cast<CrDimCodim&>(out) = generic_cr_dim_codim(ext.algebra);
    out.even_k = ext.module.k % 2 == 0;
    return out;
}

bool generic_fundamental(const ExactLieAlgebra& alg) {
    return alg.generated_subalgebra(alg.q() + alg.qbar()).dim() == alg.dim();
}

}  // namespace crorder
