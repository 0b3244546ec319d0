#pragma once

#include "crorder/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crorder {

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

CartanType parse_cartan_type(std::string_view name);
char to_char(CartanType type) noexcept;

using RootId = std::uint32_t;

/// A root of a (possibly reducible) reduced root system.
///
/// `euclid2` holds twice the coordinates in the factor's standard realization;
/// every realization used here has coordinates in (1/2)Z, so this is exact.
struct Root {
    RootId id = 0;
    std::size_t component = 0;
    std::vector<int> simple_coeffs;
    std::vector<int> euclid2;

    std::vector<Rational> euclid() const;
    int height() const;
    bool positive() const { return height() > 0; }
    bool operator==(const Root&) const = default;
};

struct Factor {
    CartanType type;
    int rank;
    std::size_t dim;     ///< dimension of the factor's realization space
    std::size_t offset;  ///< first coordinate of the factor in the ambient space
};

/// Set of roots of a fixed system, stored as a membership mask indexed by RootId.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(std::size_t universe) : mask_(universe, false) {}

    std::size_t universe() const noexcept { return mask_.size(); }
    bool contains(RootId id) const { return mask_.at(id); }
    void insert(RootId id) { mask_.at(id) = true; }
    void erase(RootId id) { mask_.at(id) = false; }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::vector<RootId> ids() const;

    bool is_subset_of(const RootSet& other) const;
    RootSet operator&(const RootSet& other) const;
    RootSet operator|(const RootSet& other) const;
    RootSet operator-(const RootSet& other) const;
    bool operator==(const RootSet& other) const = default;

private:
    std::vector<bool> mask_;
};

/// Finite reduced root system, a direct sum of simple factors, with exact coordinates.
///
/// Simple roots follow Bourbaki's numbering. Roots are immutable after
/// construction and addressed by dense RootId values; `root(id).id == id`.
class RootSystem {
public:
    /// Builds the simple system of the given type. Valid ranks: A >= 1,
    /// B >= 2, C >= 3, D >= 4, E 6..8, F 4, G 2. Throws InvalidRank.
    static RootSystem build(CartanType type, int rank);

    /// Concatenates factors; roots keep their local coordinates and get new component indices.
    static RootSystem direct_sum(std::span<const RootSystem> systems);

    std::size_t size() const noexcept { return roots_.size(); }
    const std::vector<Root>& roots() const noexcept { return roots_; }
    const Root& root(RootId id) const;
    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t ambient_dim() const noexcept { return ambient_dim_; }

    /// Simple roots of one factor, in Bourbaki order.
    std::span<const RootId> simple_roots(std::size_t component) const;
    /// Simple root alpha_index (1-based) of a factor. Throws NotInSystem.
    RootId simple_root(std::size_t component, int index) const;

    std::optional<RootId> find(std::size_t component, const std::vector<int>& euclid2) const;
    /// Lookup by doubled coordinates in the ambient (concatenated) space.
    std::optional<RootId> find_ambient(const std::vector<int>& ambient2) const;
    std::vector<int> ambient2(RootId id) const;

    /// Checks that `r` is literally a root of this system and returns its id. Throws NotInSystem.
    RootId id_of(const Root& r) const;

    RootId negate(RootId id) const;
    /// alpha + beta if it is a root; nullopt otherwise, including the zero sum.
    std::optional<RootId> add_roots(RootId alpha, RootId beta) const;
    /// Simple roots with nonzero coefficient in beta.
    std::vector<RootId> support(RootId beta) const;
    /// {alpha | beta + alpha is a root}.
    std::vector<RootId> additive_neighbors(RootId beta) const;
    /// Twice-doubled Euclidean inner product: 4 (a, b).
    int inner4(RootId a, RootId b) const;
    int length4(RootId a) const { return inner4(a, a); }

    RootSet empty_set() const { return RootSet(size()); }
    RootSet full_set() const;

    /// Human-readable form such as "e1-e2", "2e3" or "1/2(e1-e2-e3-e4)".
    std::string format(RootId id) const;

private:
    void finalize();

    std::vector<Factor> factors_;
    std::vector<Root> roots_;
    std::vector<std::vector<RootId>> simple_;
    std::map<std::pair<std::size_t, std::vector<int>>, RootId> index_;
    std::vector<RootId> negation_;
    std::vector<std::int64_t> sums_;  ///< size()^2 table, -1 for "not a root"
    std::size_t ambient_dim_ = 0;
};

}  // namespace crorder
