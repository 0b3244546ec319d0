#include "crorder/roots.hpp"

#include "crorder/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crorder {

CartanType parse_cartan_type(std::string_view name) {
    if (name.size() == 1) {
        switch (name[0]) {
            case 'A': case 'a': return CartanType::A;
            case 'B': case 'b': return CartanType::B;
            case 'C': case 'c': return CartanType::C;
            case 'D': case 'd': return CartanType::D;
            case 'E': case 'e': return CartanType::E;
            case 'F': case 'f': return CartanType::F;
            case 'G': case 'g': return CartanType::G;
            default: break;
        }
    }
    throw InvalidRank("unknown Cartan type '" + std::string(name) + "'");
}

char to_char(CartanType type) noexcept { return static_cast<char>(type); }

std::vector<Rational> Root::euclid() const {
    std::vector<Rational> out;
    out.reserve(euclid2.size());
    for (int x : euclid2) out.emplace_back(Rational(x) / 2);
    return out;
}

int Root::height() const { return std::accumulate(simple_coeffs.begin(), simple_coeffs.end(), 0); }

std::size_t RootSet::size() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true)); }

std::vector<RootId> RootSet::ids() const {
    std::vector<RootId> out;
    for (std::size_t i = 0; i < mask_.size(); ++i) {
        if (mask_[i]) out.push_back(static_cast<RootId>(i));
    }
    return out;
}

bool RootSet::is_subset_of(const RootSet& other) const {
    for (std::size_t i = 0; i < mask_.size(); ++i) {
        if (mask_[i] && !other.mask_.at(i)) return false;
    }
    return true;
}

RootSet RootSet::operator&(const RootSet& other) const {
    RootSet out(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] && other.mask_.at(i);
    return out;
}

RootSet RootSet::operator|(const RootSet& other) const {
    RootSet out(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] || other.mask_.at(i);
    return out;
}

RootSet RootSet::operator-(const RootSet& other) const {
    RootSet out(mask_.size());
    for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] && !other.mask_.at(i);
    return out;
}

namespace {

using Vec2 = std::vector<int>;

Vec2 unit2(std::size_t dim, std::size_t i, int scale) {
    Vec2 v(dim, 0);
    v[i] = scale;
    return v;
}

Vec2 plus(Vec2 a, const Vec2& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec2 minus(Vec2 a, const Vec2& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

// e_i +- e_j for i < j, all four sign patterns.
void add_long_pairs(std::size_t dim, std::size_t upto, std::vector<Vec2>& out) {
    for (std::size_t i = 0; i < upto; ++i) {
        for (std::size_t j = i + 1; j < upto; ++j) {
            for (int si : {1, -1}) {
                for (int sj : {1, -1}) {
                    Vec2 v(dim, 0);
                    v[i] = 2 * si;
                    v[j] = 2 * sj;
                    out.push_back(v);
                }
            }
        }
    }
}

struct Realization {
    std::size_t dim;
    std::vector<Vec2> roots;
    std::vector<Vec2> simple;
};

Realization realize_e8() {
    Realization r{8, {}, {}};
    add_long_pairs(8, 8, r.roots);
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        Vec2 v(8);
        for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        r.roots.push_back(v);
    }
    r.simple.push_back({1, -1, -1, -1, -1, -1, -1, 1});
    r.simple.push_back(plus(unit2(8, 0, 2), unit2(8, 1, 2)));
    for (std::size_t i = 0; i + 1 < 7; ++i) r.simple.push_back(minus(unit2(8, i + 1, 2), unit2(8, i, 2)));
    return r;
}

Realization realize(CartanType type, int rank) {
    const auto n = static_cast<std::size_t>(rank);
    switch (type) {
        case CartanType::A: {
            if (rank < 1) break;
            Realization r{n + 1, {}, {}};
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; j <= n; ++j)
                    if (i != j) r.roots.push_back(minus(unit2(n + 1, i, 2), unit2(n + 1, j, 2)));
            for (std::size_t i = 0; i < n; ++i) r.simple.push_back(minus(unit2(n + 1, i, 2), unit2(n + 1, i + 1, 2)));
            return r;
        }
        case CartanType::B:
        case CartanType::C: {
            if (rank < (type == CartanType::B ? 2 : 3)) break;
            const int short_scale = type == CartanType::B ? 2 : 4;
            Realization r{n, {}, {}};
            add_long_pairs(n, n, r.roots);
            for (std::size_t i = 0; i < n; ++i) {
                r.roots.push_back(unit2(n, i, short_scale));
                r.roots.push_back(unit2(n, i, -short_scale));
            }
            for (std::size_t i = 0; i + 1 < n; ++i) r.simple.push_back(minus(unit2(n, i, 2), unit2(n, i + 1, 2)));
            r.simple.push_back(unit2(n, n - 1, short_scale));
            return r;
        }
        case CartanType::D: {
            if (rank < 4) break;
            Realization r{n, {}, {}};
            add_long_pairs(n, n, r.roots);
            for (std::size_t i = 0; i + 1 < n; ++i) r.simple.push_back(minus(unit2(n, i, 2), unit2(n, i + 1, 2)));
            r.simple.push_back(plus(unit2(n, n - 2, 2), unit2(n, n - 1, 2)));
            return r;
        }
        case CartanType::E: {
            if (rank < 6 || rank > 8) break;
            // E6 and E7 are the E8 roots supported on the first 6 (resp. 7) simple roots.
            Realization e8 = realize_e8();
            if (rank == 8) return e8;
            Matrix s(8, 8);
            for (std::size_t c = 0; c < 8; ++c)
                for (std::size_t i = 0; i < 8; ++i) s(i, c) = e8.simple[c][i];
            Realization r{8, {}, {}};
            for (const auto& v : e8.roots) {
                Vector x(8);
                for (std::size_t i = 0; i < 8; ++i) x[i] = v[i];
                auto k = solve(s, x);
                bool inside = true;
                for (std::size_t c = n; c < 8; ++c) inside = inside && (*k)[c].is_zero();
                if (inside) r.roots.push_back(v);
            }
            r.simple.assign(e8.simple.begin(), e8.simple.begin() + rank);
            return r;
        }
        case CartanType::F: {
            if (rank != 4) break;
            Realization r{4, {}, {}};
            add_long_pairs(4, 4, r.roots);
            for (std::size_t i = 0; i < 4; ++i) {
                r.roots.push_back(unit2(4, i, 2));
                r.roots.push_back(unit2(4, i, -2));
            }
            for (int mask = 0; mask < 16; ++mask) {
                Vec2 v(4);
                for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
                r.roots.push_back(v);
            }
            r.simple = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
            return r;
        }
        case CartanType::G: {
            if (rank != 2) break;
            Realization r{3, {}, {}};
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    if (i == j) continue;
                    r.roots.push_back(minus(unit2(3, i, 2), unit2(3, j, 2)));
                }
                Vec2 v(3, -2);
                v[i] = 4;
                r.roots.push_back(v);
                r.roots.push_back(minus(Vec2(3, 0), v));
            }
            // alpha_1 = e1 - e2 (short), alpha_2 = -e1 + 2e2 - e3 (long).
            r.simple = {{2, -2, 0}, {-2, 4, -2}};
            return r;
        }
    }
    throw InvalidRank(std::string("invalid rank ") + std::to_string(rank) + " for type " + to_char(type));
}

}  // namespace

RootSystem RootSystem::build(CartanType type, int rank) {
    const Realization real = realize(type, rank);
    const auto r = real.simple.size();

    Matrix s(real.dim, r);
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t i = 0; i < real.dim; ++i) s(i, c) = real.simple[c][i];

    std::vector<Root> roots;
    roots.reserve(real.roots.size());
    for (const auto& v : real.roots) {
        Vector x(real.dim);
        for (std::size_t i = 0; i < real.dim; ++i) x[i] = v[i];
        auto k = solve(s, x);
        if (!k) throw InternalInconsistency("root outside the span of the simple roots");
        Root root;
        root.euclid2 = v;
        bool has_pos = false, has_neg = false;
        for (const auto& kc : *k) {
            if (denominator(kc) != 1) throw InternalInconsistency("non-integral simple coefficient");
            const int ki = static_cast<int>(numerator(kc));
            has_pos = has_pos || ki > 0;
            has_neg = has_neg || ki < 0;
            root.simple_coeffs.push_back(ki);
        }
        if (has_pos == has_neg) throw InternalInconsistency("root with mixed-sign expansion");
        roots.push_back(std::move(root));
    }

    // Positive roots by increasing height (ties: lexicographically larger coefficients first),
    // then the negatives in the same order, so ids [0, r) are the simple roots.
    std::vector<Root> positive;
    for (const auto& root : roots)
        if (root.positive()) positive.push_back(root);
    std::sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return a.simple_coeffs > b.simple_coeffs;
    });

    RootSystem rs;
    rs.factors_.push_back(Factor{type, rank, real.dim, 0});
    rs.ambient_dim_ = real.dim;
    for (const auto& p : positive) rs.roots_.push_back(p);
    for (const auto& p : positive) {
        Root neg = p;
        for (auto& x : neg.simple_coeffs) x = -x;
        for (auto& x : neg.euclid2) x = -x;
        rs.roots_.push_back(std::move(neg));
    }
    if (rs.roots_.size() != roots.size()) throw InternalInconsistency("root set not closed under negation");
    rs.simple_.emplace_back();
    for (std::size_t i = 0; i < r; ++i) rs.simple_[0].push_back(static_cast<RootId>(i));
    rs.finalize();
    for (std::size_t i = 0; i < r; ++i) {
        if (rs.roots_[i].euclid2 != real.simple[i]) throw InternalInconsistency("simple root ordering");
    }
    return rs;
}

RootSystem RootSystem::direct_sum(std::span<const RootSystem> systems) {
    RootSystem rs;
    std::size_t component_base = 0;
    for (const auto& sys : systems) {
        const auto id_base = static_cast<RootId>(rs.roots_.size());
        for (const auto& f : sys.factors_) {
            Factor g = f;
            g.offset = rs.ambient_dim_ + f.offset;
            rs.factors_.push_back(g);
        }
        for (const auto& root : sys.roots_) {
            Root copy = root;
            copy.component += component_base;
            rs.roots_.push_back(std::move(copy));
        }
        for (const auto& simple : sys.simple_) {
            std::vector<RootId> shifted;
            for (auto id : simple) shifted.push_back(id + id_base);
            rs.simple_.push_back(std::move(shifted));
        }
        rs.ambient_dim_ += sys.ambient_dim_;
        component_base += sys.factors_.size();
    }
    rs.finalize();
    return rs;
}

void RootSystem::finalize() {
    index_.clear();
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        roots_[i].id = static_cast<RootId>(i);
        index_.emplace(std::make_pair(roots_[i].component, roots_[i].euclid2), static_cast<RootId>(i));
    }
    const std::size_t n = roots_.size();
    negation_.assign(n, 0);
    sums_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = roots_[i];
        std::vector<int> neg = a.euclid2;
        for (auto& x : neg) x = -x;
        negation_[i] = index_.at({a.component, neg});
        for (std::size_t j = 0; j < n; ++j) {
            const auto& b = roots_[j];
            if (b.component != a.component) continue;
            std::vector<int> s = a.euclid2;
            bool zero = true;
            for (std::size_t k = 0; k < s.size(); ++k) {
                s[k] += b.euclid2[k];
                zero = zero && s[k] == 0;
            }
            if (zero) continue;
            auto it = index_.find({a.component, s});
            if (it != index_.end()) sums_[i * n + j] = it->second;
        }
    }
}

const Root& RootSystem::root(RootId id) const {
    if (id >= roots_.size()) throw NotInSystem("root id " + std::to_string(id) + " out of range");
    return roots_[id];
}

std::span<const RootId> RootSystem::simple_roots(std::size_t component) const {
    if (component >= simple_.size()) throw NotInSystem("component " + std::to_string(component) + " out of range");
    return simple_[component];
}

RootId RootSystem::simple_root(std::size_t component, int index) const {
    auto simple = simple_roots(component);
    if (index < 1 || static_cast<std::size_t>(index) > simple.size()) {
        throw NotInSystem("simple root index " + std::to_string(index) + " out of range for component " +
                          std::to_string(component));
    }
    return simple[static_cast<std::size_t>(index - 1)];
}

std::optional<RootId> RootSystem::find(std::size_t component, const std::vector<int>& euclid2) const {
    auto it = index_.find({component, euclid2});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<RootId> RootSystem::find_ambient(const std::vector<int>& ambient2) const {
    if (ambient2.size() != ambient_dim_) return std::nullopt;
    std::optional<std::size_t> component;
    for (std::size_t c = 0; c < factors_.size(); ++c) {
        const auto& f = factors_[c];
        for (std::size_t k = 0; k < f.dim; ++k) {
            if (ambient2[f.offset + k] != 0) {
                if (component && *component != c) return std::nullopt;
                component = c;
            }
        }
    }
    if (!component) return std::nullopt;
    const auto& f = factors_[*component];
    std::vector<int> local(ambient2.begin() + static_cast<std::ptrdiff_t>(f.offset),
                           ambient2.begin() + static_cast<std::ptrdiff_t>(f.offset + f.dim));
    return find(*component, local);
}

std::vector<int> RootSystem::ambient2(RootId id) const {
    const auto& r = root(id);
    const auto& f = factors_[r.component];
    std::vector<int> out(ambient_dim_, 0);
    for (std::size_t k = 0; k < f.dim; ++k) out[f.offset + k] = r.euclid2[k];
    return out;
}

RootId RootSystem::id_of(const Root& r) const {
    auto found = find(r.component, r.euclid2);
    if (!found) throw NotInSystem("not a root of this system");
    return *found;
}

RootId RootSystem::negate(RootId id) const {
    root(id);
    return negation_[id];
}

std::optional<RootId> RootSystem::add_roots(RootId alpha, RootId beta) const {
    root(alpha);
    root(beta);
    const auto s = sums_[alpha * roots_.size() + beta];
    if (s < 0) return std::nullopt;
    return static_cast<RootId>(s);
}

std::vector<RootId> RootSystem::support(RootId beta) const {
    const auto& r = root(beta);
    std::vector<RootId> out;
    for (std::size_t i = 0; i < r.simple_coeffs.size(); ++i) {
        if (r.simple_coeffs[i] != 0) out.push_back(simple_[r.component][i]);
    }
    return out;
}

std::vector<RootId> RootSystem::additive_neighbors(RootId beta) const {
    root(beta);
    std::vector<RootId> out;
    for (std::size_t j = 0; j < roots_.size(); ++j) {
        if (sums_[beta * roots_.size() + j] >= 0) out.push_back(static_cast<RootId>(j));
    }
    return out;
}

int RootSystem::inner4(RootId a, RootId b) const {
    const auto& x = root(a);
    const auto& y = root(b);
    if (x.component != y.component) return 0;
    int s = 0;
    for (std::size_t k = 0; k < x.euclid2.size(); ++k) s += x.euclid2[k] * y.euclid2[k];
    return s;
}

RootSet RootSystem::full_set() const {
    RootSet s(size());
    for (std::size_t i = 0; i < size(); ++i) s.insert(static_cast<RootId>(i));
    return s;
}

std::string RootSystem::format(RootId id) const {
    const auto& r = root(id);
    const std::string prime = factors_.size() > 1 ? "'" + std::to_string(r.component) : "";
    const bool half = std::any_of(r.euclid2.begin(), r.euclid2.end(), [](int x) { return x % 2 != 0; });
    std::ostringstream os;
    if (half) os << "1/2(";
    bool first = true;
    for (std::size_t k = 0; k < r.euclid2.size(); ++k) {
        int c = half ? r.euclid2[k] : r.euclid2[k] / 2;
        if (c == 0) continue;
        if (c < 0) os << '-';
        else if (!first) os << '+';
        if (std::abs(c) != 1) os << std::abs(c);
        os << 'e' << (k + 1) << prime;
        first = false;
    }
    if (half) os << ')';
    return os.str();
}

}  // namespace crorder
