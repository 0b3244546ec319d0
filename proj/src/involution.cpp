#include "crorder/involution.hpp"

#include "crorder/errors.hpp"

#include <numeric>
#include <string>

namespace crorder {

const char* to_string(InvolutionError::Kind kind) noexcept {
    switch (kind) {
        case InvolutionError::Kind::NotTotal: return "NotTotal";
        case InvolutionError::Kind::NotInvolutive: return "NotInvolutive";
        case InvolutionError::Kind::NotIsometry: return "NotIsometry";
        case InvolutionError::Kind::DoesNotPermuteRoots: return "DoesNotPermuteRoots";
    }
    return "?";
}

namespace {

std::size_t ambient_index(const RootSystem& rs, std::size_t component, int index) {
    const auto& factors = rs.factors();
    if (component >= factors.size() || index < 1 || static_cast<std::size_t>(index) > factors[component].dim) {
        throw InvolutionError(InvolutionError::Kind::NotTotal,
                              "basis vector (" + std::to_string(component) + ", " + std::to_string(index) +
                                  ") is not in the ambient space");
    }
    return factors[component].offset + static_cast<std::size_t>(index - 1);
}

}  // namespace

RootInvolution::RootInvolution(std::shared_ptr<const RootSystem> rs, Matrix map)
    : rs_(std::move(rs)), map_(std::move(map)) {
    const std::size_t n = rs_->ambient_dim();
    if (map_.rows() != n || map_.cols() != n) {
        throw InvolutionError(InvolutionError::Kind::NotTotal, "map has the wrong size for the ambient space");
    }
    if (!(map_ * map_ == Matrix::identity(n))) {
        throw InvolutionError(InvolutionError::Kind::NotInvolutive, "sigma composed with itself is not the identity");
    }
    if (!(map_.transpose() * map_ == Matrix::identity(n))) {
        throw InvolutionError(InvolutionError::Kind::NotIsometry, "sigma does not preserve the inner product");
    }
    perm_.resize(rs_->size());
    for (const auto& root : rs_->roots()) {
        const auto coords = rs_->ambient2(root.id);
        Vector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = coords[i];
        const Vector image = map_.apply(v);
        std::vector<int> image2(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (denominator(image[i]) != 1) {
                throw InvolutionError(InvolutionError::Kind::DoesNotPermuteRoots,
                                      "sigma(" + rs_->format(root.id) + ") is not a root");
            }
            image2[i] = static_cast<int>(numerator(image[i]));
        }
        auto found = rs_->find_ambient(image2);
        if (!found) {
            throw InvolutionError(InvolutionError::Kind::DoesNotPermuteRoots,
                                  "sigma(" + rs_->format(root.id) + ") is not a root");
        }
        perm_[root.id] = *found;
    }
}

RootInvolution RootInvolution::from_signed_permutation(std::shared_ptr<const RootSystem> rs,
                                                       const std::vector<SignedEntry>& entries) {
    const std::size_t n = rs->ambient_dim();
    Matrix m(n, n);
    std::vector<bool> seen(n, false);
    for (const auto& e : entries) {
        if (e.sign != 1 && e.sign != -1) {
            throw InvolutionError(InvolutionError::Kind::NotIsometry, "sign must be +1 or -1");
        }
        const auto from = ambient_index(*rs, e.from_component, e.from_index);
        const auto to = ambient_index(*rs, e.to_component, e.to_index);
        if (seen[from]) {
            throw InvolutionError(InvolutionError::Kind::NotTotal,
                                  "basis vector (" + std::to_string(e.from_component) + ", " +
                                      std::to_string(e.from_index) + ") is mapped twice");
        }
        seen[from] = true;
        m(to, from) = e.sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen[i]) throw InvolutionError(InvolutionError::Kind::NotTotal, "sigma is not defined on every basis vector");
    }
    return RootInvolution(std::move(rs), std::move(m));
}

RootInvolution RootInvolution::from_matrix(std::shared_ptr<const RootSystem> rs, const Matrix& map) {
    return RootInvolution(std::move(rs), map);
}

RootId RootInvolution::conjugate(RootId beta) const {
    rs_->root(beta);
    return perm_[beta];
}

RootSet RootInvolution::conjugate(const RootSet& s) const {
    RootSet out = rs_->empty_set();
    for (auto id : s.ids()) out.insert(perm_[id]);
    return out;
}

RootSet RootInvolution::r_bullet() const {
    RootSet out = rs_->empty_set();
    for (const auto& root : rs_->roots()) {
        if (perm_[root.id] == rs_->negate(root.id)) out.insert(root.id);
    }
    return out;
}

std::vector<RootInvolution> enumerate_signed_involutions(std::shared_ptr<const RootSystem> rs) {
    const std::size_t n = rs->ambient_dim();
    std::vector<RootInvolution> out;

    // Recursively pair up coordinates: each i is either fixed (sign +-1) or swapped
    // with some j > i (shared sign, so the map squares to the identity).
    std::vector<int> target(n, -1);
    std::vector<int> sign(n, 0);
    auto emit = [&]() {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(static_cast<std::size_t>(target[i]), i) = sign[i];
        try {
            out.push_back(RootInvolution::from_matrix(rs, m));
        } catch (const InvolutionError&) {
        }
    };
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        while (i < n && target[i] >= 0) ++i;
        if (i == n) {
            emit();
            return;
        }
        for (int s : {1, -1}) {
            target[i] = static_cast<int>(i);
            sign[i] = s;
            self(self, i + 1);
            for (std::size_t j = i + 1; j < n; ++j) {
                if (target[j] >= 0) continue;
                target[j] = static_cast<int>(i);
                sign[j] = s;
                target[i] = static_cast<int>(j);
                self(self, i + 1);
                target[j] = -1;
                target[i] = static_cast<int>(i);
            }
        }
        target[i] = -1;
        sign[i] = 0;
    };
    recurse(recurse, 0);
    return out;
}

}  // namespace crorder
