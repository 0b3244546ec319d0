#pragma once

#include "crorder/involution.hpp"
#include "crorder/roots.hpp"

#include <utility>
#include <vector>

namespace crorder {

/// Parabolic CR algebra (s_sigma, q_Phi) at root level.
///
/// Phi is given per component as 1-based Bourbaki indices of the crossed simple roots.
/// The Cartan subalgebra is implicit: every subalgebra below is h plus the listed root spaces.
class ParabolicCRAlgebra {
public:
    ParabolicCRAlgebra(RootInvolution sigma, std::vector<std::vector<int>> crossed);

    const RootSystem& system() const noexcept { return sigma_.system(); }
    const RootInvolution& sigma() const noexcept { return sigma_; }
    const std::vector<std::vector<int>>& crossed() const noexcept { return crossed_; }
    /// Crossed simple roots as a root set.
    const RootSet& phi() const noexcept { return phi_; }

    /// Sum of the coefficients of beta on the crossed simple roots.
    int xi(RootId beta) const;

    const RootSet& Q() const noexcept { return q_; }
    const RootSet& Qr() const noexcept { return qr_; }
    const RootSet& Qn() const noexcept { return qn_; }
    const RootSet& Qc() const noexcept { return qc_; }
    const RootSet& Qbar() const noexcept { return qbar_; }
    const RootSet& Qbar_n() const noexcept { return qbar_n_; }
    const RootSet& Qbar_c() const noexcept { return qbar_c_; }
    const RootSet& r_bullet() const noexcept { return r_bullet_; }

    RootSet Q_and_Qbar() const { return q_ & qbar_; }
    RootSet Q_minus_Qbar() const { return q_ - qbar_; }
    RootSet Q_or_Qbar() const { return q_ | qbar_; }

private:
    RootInvolution sigma_;
    std::vector<std::vector<int>> crossed_;
    RootSet phi_, q_, qr_, qn_, qc_, qbar_, qbar_n_, qbar_c_, r_bullet_;
};

ParabolicCRAlgebra build_pcr(RootInvolution sigma, std::vector<std::vector<int>> crossed);

/// (#(Q \ Qbar), #(R \ (Q u Qbar))).
std::pair<int, int> cr_dim_codim(const ParabolicCRAlgebra& p);

/// True iff the set is closed under root addition and R = S u (-S).
bool is_parabolic_set(const RootSystem& rs, const RootSet& s);

struct MinimalTypeCriteria {
    bool inclusion;      ///< Qc n Qbar_n is contained in R_bullet
    bool nonnegative;    ///< xi(sigma beta) >= 0 for beta in Qc \ R_bullet
    bool vanishing;      ///< xi(sigma beta) = 0 for beta in (Qc n Qbar) \ R_bullet
    bool agree() const { return inclusion == nonnegative && nonnegative == vanishing; }
};

MinimalTypeCriteria minimal_type_criteria(const ParabolicCRAlgebra& p);

/// Throws InternalInconsistency if the three criteria disagree.
bool minimal_type(const ParabolicCRAlgebra& p);

}  // namespace crorder
