#include "crorder/parabolic.hpp"

#include "crorder/errors.hpp"

namespace crorder {

ParabolicCRAlgebra::ParabolicCRAlgebra(RootInvolution sigma, std::vector<std::vector<int>> crossed)
    : sigma_(std::move(sigma)), crossed_(std::move(crossed)) {
    const RootSystem& rs = system();
    if (crossed_.size() > rs.factors().size()) throw NotInSystem("crossed set lists more components than the system has");
    crossed_.resize(rs.factors().size());
    phi_ = rs.empty_set();
    for (std::size_t c = 0; c < crossed_.size(); ++c) {
        for (int index : crossed_[c]) phi_.insert(rs.simple_root(c, index));
    }

    q_ = qr_ = qn_ = qc_ = rs.empty_set();
    for (const auto& root : rs.roots()) {
        const int x = xi(root.id);
        if (x <= 0) q_.insert(root.id);
        if (x == 0) qr_.insert(root.id);
        if (x < 0) qn_.insert(root.id);
        if (x > 0) qc_.insert(root.id);
    }
    qbar_ = sigma_.conjugate(q_);
    qbar_n_ = sigma_.conjugate(qn_);
    qbar_c_ = sigma_.conjugate(qc_);
    r_bullet_ = sigma_.r_bullet();
}

int ParabolicCRAlgebra::xi(RootId beta) const {
    const RootSystem& rs = system();
    const Root& r = rs.root(beta);
    const auto simple = rs.simple_roots(r.component);
    int x = 0;
    for (std::size_t i = 0; i < simple.size(); ++i) {
        if (phi_.contains(simple[i])) x += r.simple_coeffs[i];
    }
    return x;
}

ParabolicCRAlgebra build_pcr(RootInvolution sigma, std::vector<std::vector<int>> crossed) {
    return ParabolicCRAlgebra(std::move(sigma), std::move(crossed));
}

std::pair<int, int> cr_dim_codim(const ParabolicCRAlgebra& p) {
    const auto dim = p.Q_minus_Qbar().size();
    const auto codim = (p.system().full_set() - p.Q_or_Qbar()).size();
    return {static_cast<int>(dim), static_cast<int>(codim)};
}

bool is_parabolic_set(const RootSystem& rs, const RootSet& s) {
    for (auto a : s.ids()) {
        for (auto b : s.ids()) {
            auto sum = rs.add_roots(a, b);
            if (sum && !s.contains(*sum)) return false;
        }
    }
    for (const auto& root : rs.roots()) {
        if (!s.contains(root.id) && !s.contains(rs.negate(root.id))) return false;
    }
    return true;
}

MinimalTypeCriteria minimal_type_criteria(const ParabolicCRAlgebra& p) {
    const auto& sigma = p.sigma();
    MinimalTypeCriteria c{true, true, true};
    c.inclusion = (p.Qc() & p.Qbar_n()).is_subset_of(p.r_bullet());
    for (auto beta : (p.Qc() - p.r_bullet()).ids()) {
        const int x = p.xi(sigma.conjugate(beta));
        if (x < 0) c.nonnegative = false;
        if (p.Qbar().contains(beta) && x != 0) c.vanishing = false;
    }
    return c;
}

bool minimal_type(const ParabolicCRAlgebra& p) {
    const auto c = minimal_type_criteria(p);
    if (!c.agree()) throw InternalInconsistency("minimal-type criteria disagree");
    return c.inclusion;
}

}  // namespace crorder
