#include "crorder/admissible.hpp"

#include "crorder/errors.hpp"

#include <algorithm>
#include <sstream>

namespace crorder {

bool is_admissible(const RootSystem& rs, RootId beta, const std::vector<RootId>& sequence) {
    const std::size_t q = sequence.size();
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            if (rs.add_roots(sequence[i], sequence[j]) || rs.negate(sequence[i]) == sequence[j]) return false;
        }
    }
    // Every subset sum, computed coordinatewise so no intermediate membership is assumed.
    const auto& b = rs.root(beta);
    for (std::size_t mask = 1; mask < (std::size_t{1} << q); ++mask) {
        std::vector<int> sum = b.euclid2;
        for (std::size_t i = 0; i < q; ++i) {
            if (!(mask >> i & 1)) continue;
            const auto& a = rs.root(sequence[i]);
            if (a.component != b.component) return false;
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += a.euclid2[k];
        }
        if (!rs.find(b.component, sum)) return false;
    }
    return true;
}

namespace {

struct Search {
    const RootSystem& rs;
    std::vector<RootId> candidates;
    std::vector<RootId> current;
    std::vector<RootId> sums;  ///< subset sums indexed by bitmask over `current`
    std::vector<RootId> best;

    void run(std::size_t from) {
        if (current.size() > best.size()) best = current;
        for (std::size_t c = from; c < candidates.size(); ++c) {
            const RootId alpha = candidates[c];
            bool ok = true;
            for (auto a : current) {
                if (rs.add_roots(a, alpha) || rs.negate(a) == alpha) {
                    ok = false;
                    break;
                }
            }
            if (!ok || rs.add_roots(alpha, alpha)) continue;
            std::vector<RootId> extended;
            extended.reserve(sums.size());
            for (auto s : sums) {
                auto t = rs.add_roots(s, alpha);
                if (!t) {
                    ok = false;
                    break;
                }
                extended.push_back(*t);
            }
            if (!ok) continue;
            const auto saved = sums.size();
            sums.insert(sums.end(), extended.begin(), extended.end());
            current.push_back(alpha);
            run(c);
            current.pop_back();
            sums.resize(saved);
        }
    }
};

}  // namespace

AdmissibleWitness q_beta(const RootSystem& rs, RootId beta) {
    Search search{rs, rs.additive_neighbors(beta), {}, {beta}, {}};
    search.run(0);
    AdmissibleWitness w;
    w.beta = beta;
    w.q = static_cast<int>(search.best.size());
    w.sequence = search.best;
    return w;
}

int expected_q(CartanType type, int rank, bool long_root) {
    switch (type) {
        case CartanType::A: return rank == 1 ? -1 : rank == 2 ? 1 : 2;
        case CartanType::B:
            if (rank == 2) return long_root ? 1 : 2;
            return long_root ? 4 : 3;
        case CartanType::C: return 2;
        case CartanType::D:
        case CartanType::E: return 4;
        case CartanType::F: return long_root ? 4 : 3;
        case CartanType::G: return long_root ? 4 : 2;
    }
    return -1;
}

std::string TableRow::describe() const {
    std::ostringstream os;
    os << to_char(type) << rank << ' ' << (long_root ? "long" : "short") << ": expected " << expected << ", got "
       << witness.q;
    if (!witness_valid) os << " (invalid witness)";
    if (!opposite_identity) os << " (beta + sum != -beta)";
    return os.str();
}

std::vector<TableRow> verify_table(const std::vector<std::pair<CartanType, int>>& types) {
    std::vector<TableRow> rows;
    for (const auto& [type, rank] : types) {
        const RootSystem rs = RootSystem::build(type, rank);
        int max_len = 0;
        for (const auto& r : rs.roots()) max_len = std::max(max_len, rs.length4(r.id));
        std::vector<int> seen_lengths;
        for (const auto& r : rs.roots()) {
            const int len = rs.length4(r.id);
            if (std::find(seen_lengths.begin(), seen_lengths.end(), len) != seen_lengths.end()) continue;
            seen_lengths.push_back(len);
            TableRow row{type, rank, len == max_len, 0, {}, false, true};
            row.expected = expected_q(type, rank, row.long_root);
            row.witness = q_beta(rs, r.id);
            row.witness_valid = is_admissible(rs, r.id, row.witness.sequence);
            if (row.witness.q == 4) {
                std::vector<int> sum = r.euclid2;
                for (auto a : row.witness.sequence)
                    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += rs.root(a).euclid2[k];
                row.opposite_identity = rs.find(r.component, sum) == rs.negate(r.id);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace crorder
