#pragma once

#include "crorder/roots.hpp"

#include <string>
#include <utility>
#include <vector>

namespace crorder {

struct AdmissibleWitness {
    RootId beta = 0;
    int q = 0;
    std::vector<RootId> sequence;  ///< nondecreasing ids; repetitions allowed
};

/// True iff alpha_i + alpha_j is neither a root nor zero for all i, j, and every
/// beta + (sum over a nonempty set of distinct indices) is a root.
bool is_admissible(const RootSystem& rs, RootId beta, const std::vector<RootId>& sequence);

/// Largest q with an admissible sequence of length q, with one witness
/// (the lexicographically smallest in id order).
AdmissibleWitness q_beta(const RootSystem& rs, RootId beta);

/// The classification value for a root of the given length in a simple system,
/// or -1 outside the classification (A1).
int expected_q(CartanType type, int rank, bool long_root);

struct TableRow {
    CartanType type;
    int rank;
    bool long_root;
    int expected;
    AdmissibleWitness witness;
    bool witness_valid;
    bool opposite_identity;  ///< q = 4 implies beta + sum = -beta; vacuous otherwise
    bool ok() const { return witness.q == expected && witness_valid && opposite_identity; }
    std::string describe() const;
};

/// One representative per root length for each (type, rank).
std::vector<TableRow> verify_table(const std::vector<std::pair<CartanType, int>>& types);

}  // namespace crorder
