#include "crorder/chains.hpp"

#include "crorder/errors.hpp"

#include <deque>
#include <functional>

namespace crorder {

namespace {

using Step = std::function<RootSet(const RootSet&)>;

ChainReport run_chain(const RootSet& start, const RootSet& bottom, const Step& step) {
    ChainReport report;
    report.chain.push_back(start);
    while (true) {
        RootSet next = step(report.chain.back());
        if (next == report.chain.back()) break;
        report.chain.push_back(std::move(next));
    }
    report.stabilized_at = report.chain.size() - 1;
    report.limit = report.chain.back();
    if (report.limit == bottom) {
        report.order = Order(static_cast<int>(report.stabilized_at));
    } else {
        report.order = Order::infinite();
    }
    return report;
}

// {alpha in prev | alpha + delta in allowed for every delta in deltas with alpha + delta in R}.
RootSet refine(const RootSystem& rs, const RootSet& prev, const RootSet& deltas, const RootSet& allowed) {
    RootSet out = rs.empty_set();
    const auto delta_ids = deltas.ids();
    for (auto alpha : prev.ids()) {
        bool keep = true;
        for (auto delta : delta_ids) {
            auto sum = rs.add_roots(alpha, delta);
            if (sum && !allowed.contains(*sum)) {
                keep = false;
                break;
            }
        }
        if (keep) out.insert(alpha);
    }
    return out;
}

}  // namespace

ChainReport levi_chain(const ParabolicCRAlgebra& p) {
    const RootSystem& rs = p.system();
    return run_chain(p.Q(), p.Q_and_Qbar(), [&](const RootSet& prev) {
        return refine(rs, prev, p.Qbar(), prev | p.Qbar());
    });
}

PerRootOrder per_root_levi_order(const ParabolicCRAlgebra& p, RootId beta) {
    const RootSystem& rs = p.system();
    const RootSet inner = p.Q_minus_Qbar();
    if (!inner.contains(beta)) throw NotInSystem(rs.format(beta) + " is not in Q \\ Qbar");
    const RootSet outer = p.Q_or_Qbar();
    const auto deltas = p.Qbar().ids();

    // Breadth-first over Q \ Qbar; deltas tried in id order so the first witness found
    // is the lexicographically smallest among the shortest.
    std::vector<int> parent(rs.size(), -2);
    std::vector<RootId> via(rs.size(), 0);
    std::deque<RootId> frontier{beta};
    parent[beta] = -1;
    auto path_to = [&](RootId node) {
        std::vector<RootId> path;
        for (RootId cur = node; parent[cur] >= 0; cur = static_cast<RootId>(parent[cur])) path.push_back(via[cur]);
        return std::vector<RootId>(path.rbegin(), path.rend());
    };
    while (!frontier.empty()) {
        const RootId gamma = frontier.front();
        frontier.pop_front();
        for (auto delta : deltas) {
            auto sum = rs.add_roots(gamma, delta);
            if (!sum) continue;
            if (!outer.contains(*sum)) {
                auto witness = path_to(gamma);
                witness.push_back(delta);
                PerRootOrder result;
                result.beta = beta;
                result.order = Order(static_cast<int>(witness.size()));
                result.witness = std::move(witness);
                return result;
            }
            if (inner.contains(*sum) && parent[*sum] == -2) {
                parent[*sum] = static_cast<int>(gamma);
                via[*sum] = delta;
                frontier.push_back(*sum);
            }
        }
    }
    PerRootOrder result;
    result.beta = beta;
    return result;
}

bool weakly_nondegenerate_criterion(const ParabolicCRAlgebra& p) {
    const RootSystem& rs = p.system();
    const auto alphas = (p.Qbar() - p.Q()).ids();
    for (auto beta : p.Q_minus_Qbar().ids()) {
        bool found = false;
        for (auto alpha : alphas) {
            auto sum = rs.add_roots(beta, alpha);
            if (sum && !p.Qbar().contains(*sum)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

ContactChains contact_chains_unchecked(const ParabolicCRAlgebra& p) {
    const RootSystem& rs = p.system();
    const RootSet bottom = p.Q_and_Qbar();
    const RootSet both = p.Q_or_Qbar();
    ContactChains out;
    out.bracket = run_chain(both, bottom, [&](const RootSet& prev) {
        return bottom | refine(rs, prev, both, prev);
    });
    out.brace = run_chain(p.Q(), bottom, [&](const RootSet& prev) {
        return bottom | refine(rs, prev, both, prev | p.Qbar());
    });
    return out;
}

ContactChains contact_chains(const ParabolicCRAlgebra& p) {
    auto out = contact_chains_unchecked(p);
    if (out.bracket.order != out.brace.order) {
        throw InternalInconsistency("contact orders disagree: " + out.bracket.order.to_string() + " vs " +
                                    out.brace.order.to_string());
    }
    return out;
}

RootSet additive_closure(const RootSystem& rs, const RootSet& s) {
    RootSet closed = s;
    std::vector<RootId> pending = s.ids();
    while (!pending.empty()) {
        const RootId a = pending.back();
        pending.pop_back();
        for (auto b : closed.ids()) {
            auto sum = rs.add_roots(a, b);
            if (sum && !closed.contains(*sum)) {
                closed.insert(*sum);
                pending.push_back(*sum);
            }
        }
    }
    return closed;
}

bool fundamental_by_closure(const ParabolicCRAlgebra& p) {
    return additive_closure(p.system(), p.Q_or_Qbar()) == p.system().full_set();
}

bool fundamental_by_criterion(const ParabolicCRAlgebra& p) {
    const RootSystem& rs = p.system();
    const auto& sigma = p.sigma();
    std::vector<std::vector<int>> circ(rs.factors().size());
    bool empty = true;
    for (std::size_t c = 0; c < rs.factors().size(); ++c) {
        const auto simple = rs.simple_roots(c);
        for (std::size_t i = 0; i < simple.size(); ++i) {
            if (p.phi().contains(simple[i]) && rs.root(sigma.conjugate(simple[i])).positive()) {
                circ[c].push_back(static_cast<int>(i + 1));
                empty = false;
            }
        }
    }
    if (empty) return true;
    const ParabolicCRAlgebra reduced(sigma, circ);
    for (auto alpha : reduced.phi().ids()) {
        if (reduced.Qbar_c().contains(alpha)) return false;
    }
    return true;
}

bool adapted_basis(const ParabolicCRAlgebra& p) {
    const RootSystem& rs = p.system();
    for (const auto& root : rs.roots()) {
        if (root.height() != 1 || p.r_bullet().contains(root.id)) continue;
        if (!rs.root(p.sigma().conjugate(root.id)).positive()) return false;
    }
    return true;
}

bool fundamental(const ParabolicCRAlgebra& p) {
    const bool a = fundamental_by_closure(p);
    if (adapted_basis(p) && a != fundamental_by_criterion(p)) {
        throw InternalInconsistency("fundamentality criteria disagree");
    }
    return a;
}

RootSet q_infinity(const ParabolicCRAlgebra& p) { return levi_chain(p).limit; }

}  // namespace crorder
