#pragma once

#include "crorder/parabolic.hpp"
#include "crorder/roots.hpp"

#include <optional>
#include <set>
#include <vector>

namespace oracle {

using crorder::RootId;
using crorder::RootSet;
using crorder::RootSystem;

/// Closure of the simple roots under their own reflections, in doubled coordinates.
std::set<std::vector<int>> weyl_closure(const RootSystem& rs, std::size_t component);

/// Simple-basis coefficients of a root recovered by solving the linear system on coordinates.
std::vector<int> expand(const RootSystem& rs, RootId id);

/// Q and Qbar rebuilt from coefficients: xi <= 0, then the image under sigma.
RootSet q_from_xi(const crorder::ParabolicCRAlgebra& p);

/// Literal Levi recursion on root sets, run to stabilization.
std::vector<RootSet> literal_levi_chain(const crorder::ParabolicCRAlgebra& p);

/// Shortest escape by repeated relaxation over Q \ Qbar; nullopt if none within `bound` rounds.
std::optional<int> per_root_order(const crorder::ParabolicCRAlgebra& p, RootId beta, int bound);

/// Largest q for which some multiset of size q is admissible, by exhaustive search.
int q_beta(const RootSystem& rs, RootId beta, int max_len);

/// Root count of the simple system of the given type and rank.
std::size_t expected_size(crorder::CartanType type, int rank);

}  // namespace oracle
