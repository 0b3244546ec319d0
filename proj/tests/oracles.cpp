#include "oracles.hpp"

#include "crorder/linalg.hpp"

#include <functional>
#include <numeric>

namespace oracle {

using crorder::Rational;

namespace {

int ip(const std::vector<int>& a, const std::vector<int>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

}  // namespace

std::set<std::vector<int>> weyl_closure(const RootSystem& rs, std::size_t component) {
    std::vector<std::vector<int>> simple;
    for (auto id : rs.simple_roots(component)) simple.push_back(rs.root(id).euclid2);
    std::set<std::vector<int>> seen(simple.begin(), simple.end());
    std::vector<std::vector<int>> frontier = simple;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& v : frontier) {
            for (const auto& a : simple) {
                const int n = 2 * ip(v, a) / ip(a, a);
                std::vector<int> w = v;
                for (std::size_t i = 0; i < w.size(); ++i) w[i] -= n * a[i];
                if (seen.insert(w).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

std::vector<int> expand(const RootSystem& rs, RootId id) {
    const auto& root = rs.root(id);
    const auto simple = rs.simple_roots(root.component);
    const std::size_t dim = root.euclid2.size();
    crorder::Matrix m(dim, simple.size());
    crorder::Vector b(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < simple.size(); ++j) m(i, j) = rs.root(simple[j]).euclid2[i];
        b[i] = root.euclid2[i];
    }
    const auto x = crorder::solve(m, b);
    std::vector<int> out;
    for (const auto& c : *x) out.push_back(static_cast<int>(boost::multiprecision::numerator(c)));
    return out;
}

RootSet q_from_xi(const crorder::ParabolicCRAlgebra& p) {
    const RootSystem& rs = p.system();
    RootSet q = rs.empty_set();
    for (RootId id = 0; id < rs.size(); ++id) {
        const auto coeffs = expand(rs, id);
        int xi = 0;
        for (int i : p.crossed()[rs.root(id).component]) xi += coeffs[i - 1];
        if (xi <= 0) q.insert(id);
    }
    return q;
}

std::vector<RootSet> literal_levi_chain(const crorder::ParabolicCRAlgebra& p) {
    const RootSystem& rs = p.system();
    const RootSet qbar = p.Qbar();
    std::vector<RootSet> chain{p.Q()};
    while (true) {
        const RootSet& prev = chain.back();
        const RootSet allowed = prev | qbar;
        RootSet next = rs.empty_set();
        for (auto b : prev.ids()) {
            bool keep = true;
            for (auto a : qbar.ids()) {
                auto s = rs.add_roots(b, a);
                if (s && !allowed.contains(*s)) keep = false;
            }
            if (keep) next.insert(b);
        }
        if (next == prev) break;
        chain.push_back(next);
    }
    return chain;
}

std::optional<int> per_root_order(const crorder::ParabolicCRAlgebra& p, RootId beta, int bound) {
    const RootSystem& rs = p.system();
    const RootSet inside = p.Q_minus_Qbar();
    const RootSet either = p.Q_or_Qbar();
    const auto qbar = p.Qbar().ids();
    constexpr int kInf = 1 << 20;
    std::vector<int> d(rs.size(), kInf);
    for (int round = 0; round < bound; ++round) {
        bool changed = false;
        for (auto b : inside.ids()) {
            for (auto a : qbar) {
                auto s = rs.add_roots(b, a);
                if (!s) continue;
                int cand = kInf;
                if (!either.contains(*s))
                    cand = 1;
                else if (inside.contains(*s) && d[*s] < kInf)
                    cand = d[*s] + 1;
                if (cand < d[b]) {
                    d[b] = cand;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    if (d[beta] >= kInf) return std::nullopt;
    return d[beta];
}

int q_beta(const RootSystem& rs, RootId beta, int max_len) {
    const std::size_t n = rs.size();
    auto zero_or_root = [&](RootId a, RootId b) { return rs.negate(a) == b || rs.add_roots(a, b).has_value(); };
    auto admissible = [&](const std::vector<RootId>& seq) {
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = 0; j < seq.size(); ++j)
                if (zero_or_root(seq[i], seq[j])) return false;
        const std::size_t k = seq.size();
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> v = rs.root(beta).euclid2;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1)
                    for (std::size_t c = 0; c < v.size(); ++c) v[c] += rs.root(seq[i]).euclid2[c];
            if (!rs.find(rs.root(beta).component, v)) return false;
        }
        return true;
    };
    int best = 0;
    std::vector<RootId> seq;
    std::function<void(RootId)> grow = [&](RootId start) {
        if (static_cast<int>(seq.size()) >= max_len) return;
        for (RootId a = start; a < n; ++a) {
            if (rs.root(a).component != rs.root(beta).component) continue;
            seq.push_back(a);
            if (admissible(seq)) {
                best = std::max(best, static_cast<int>(seq.size()));
                grow(a);
            }
            seq.pop_back();
        }
    };
    grow(0);
    return best;
}

std::size_t expected_size(crorder::CartanType type, int n) {
    using crorder::CartanType;
    switch (type) {
        case CartanType::A: return n * (n + 1);
        case CartanType::B:
        case CartanType::C: return 2 * n * n;
        case CartanType::D: return 2 * n * (n - 1);
        case CartanType::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
        case CartanType::F: return 48;
        case CartanType::G: return 12;
    }
    return 0;
}

}  // namespace oracle
