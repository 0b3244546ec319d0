#pragma once

#include "crorder/linalg.hpp"
#include "crorder/roots.hpp"

#include <memory>
#include <vector>

namespace crorder {

/// One entry of a signed permutation of the ambient basis: e_from -> sign * e_to.
/// Components are 0-based, basis indices 1-based (within the factor's realization).
struct SignedEntry {
    std::size_t from_component = 0;
    int from_index = 1;
    std::size_t to_component = 0;
    int to_index = 1;
    int sign = 1;

    bool operator==(const SignedEntry&) const = default;
};

/// The conjugation sigma acting on a root system: an involutive isometry of the
/// ambient space that permutes the roots.
class RootInvolution {
public:
    /// Throws InvolutionError (NotTotal, NotInvolutive, NotIsometry, DoesNotPermuteRoots).
    static RootInvolution from_signed_permutation(std::shared_ptr<const RootSystem> rs,
                                                  const std::vector<SignedEntry>& entries);
    /// `map` acts on column vectors of ambient coordinates.
    static RootInvolution from_matrix(std::shared_ptr<const RootSystem> rs, const Matrix& map);

    const RootSystem& system() const noexcept { return *rs_; }
    const std::shared_ptr<const RootSystem>& system_ptr() const noexcept { return rs_; }
    const Matrix& matrix() const noexcept { return map_; }

    RootId conjugate(RootId beta) const;
    RootId conjugate(const Root& beta) const { return conjugate(rs_->id_of(beta)); }
    RootSet conjugate(const RootSet& s) const;

    /// {beta | sigma(beta) = -beta}.
    RootSet r_bullet() const;

    bool operator==(const RootInvolution& other) const { return perm_ == other.perm_ && map_ == other.map_; }

private:
    RootInvolution(std::shared_ptr<const RootSystem> rs, Matrix map);

    std::shared_ptr<const RootSystem> rs_;
    Matrix map_;
    std::vector<RootId> perm_;
};

/// Every signed permutation of the ambient basis that is an involution preserving R,
/// in a fixed deterministic order.
std::vector<RootInvolution> enumerate_signed_involutions(std::shared_ptr<const RootSystem> rs);

}  // namespace crorder
