#pragma once

#include "crorder/order.hpp"
#include "crorder/parabolic.hpp"

#include <optional>
#include <vector>

namespace crorder {

/// A descending chain of root sets, recorded until it stabilizes.
struct ChainReport {
    std::vector<RootSet> chain;  ///< chain[0] is the initial term; the last entry is the limit
    Order order = Order(0);
    std::size_t stabilized_at = 0;  ///< first index p with chain[p] == chain[p+1]
    RootSet limit;
};

struct PerRootOrder {
    RootId beta = 0;
    Order order = Order::infinite();
    std::optional<std::vector<RootId>> witness;  ///< alpha_1..alpha_q, all in Qbar
};

ChainReport levi_chain(const ParabolicCRAlgebra& p);

/// Minimal q with beta + alpha_1 + ... + alpha_q escaping Q u Qbar, alpha_i in Qbar and
/// every proper partial sum a root of Q \ Qbar. Throws NotInSystem unless beta is in Q \ Qbar.
PerRootOrder per_root_levi_order(const ParabolicCRAlgebra& p, RootId beta);

/// Every beta in Q \ Qbar has some alpha in Qbar \ Q with beta + alpha a root outside Qbar.
bool weakly_nondegenerate_criterion(const ParabolicCRAlgebra& p);

struct ContactChains {
    ChainReport bracket;  ///< starts at Q u Qbar
    ChainReport brace;    ///< starts at Q
};

/// Both contact chains, without checking that their orders agree.
ContactChains contact_chains_unchecked(const ParabolicCRAlgebra& p);
/// Throws InternalInconsistency if the two contact orders disagree.
ContactChains contact_chains(const ParabolicCRAlgebra& p);

/// Additive closure of Q u Qbar inside R is all of R.
bool fundamental_by_closure(const ParabolicCRAlgebra& p);
/// The criterion through Phi_o = {alpha in Phi | sigma(alpha) > 0}.
bool fundamental_by_criterion(const ParabolicCRAlgebra& p);
/// sigma(alpha) > 0 for every simple alpha outside R_bullet: the chamber in which the
/// Phi_o criterion is a characterization.
bool adapted_basis(const ParabolicCRAlgebra& p);
/// The closure answer. Throws InternalInconsistency if the basis is adapted and the
/// Phi_o criterion disagrees.
bool fundamental(const ParabolicCRAlgebra& p);

/// Limit of the Levi chain.
RootSet q_infinity(const ParabolicCRAlgebra& p);

/// Smallest superset of `s` closed under root addition.
RootSet additive_closure(const RootSystem& rs, const RootSet& s);

}  // namespace crorder
