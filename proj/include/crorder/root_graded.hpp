#pragma once

#include "crorder/extension.hpp"
#include "crorder/parabolic.hpp"

#include <vector>

namespace crorder {

/// Matrix realization of a classical parabolic CR algebra: g = h + sum of root spaces,
/// q = h + g_Q, qbar = h + g_Qbar. Supports factors of type A, B, C, D; throws
/// InvalidRank for exceptional factors.
struct RootGradedAlgebra {
    ExactLieAlgebra algebra;
    std::vector<std::size_t> root_index;  ///< basis index of the root vector of each RootId
};

RootGradedAlgebra build_root_graded(const ParabolicCRAlgebra& p);

}  // namespace crorder
