#include "crorder/errors.hpp"
#include "crorder/roots.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace crorder;
using testing::root;

namespace {

const std::vector<std::pair<CartanType, int>> kTypes = {
    {CartanType::A, 1}, {CartanType::A, 2}, {CartanType::A, 3}, {CartanType::A, 5}, {CartanType::B, 2},
    {CartanType::B, 3}, {CartanType::B, 4}, {CartanType::C, 3}, {CartanType::C, 4}, {CartanType::D, 4},
    {CartanType::D, 5}, {CartanType::E, 6}, {CartanType::E, 7}, {CartanType::E, 8}, {CartanType::F, 4},
    {CartanType::G, 2}};

}  // namespace

TEST_CASE("root sets equal the reflection closure of the simple roots") {
    for (auto [t, n] : kTypes) {
        CAPTURE(to_char(t));
        CAPTURE(n);
        const auto rs = RootSystem::build(t, n);
        CHECK(rs.size() == oracle::expected_size(t, n));
        std::set<std::vector<int>> listed;
        for (const auto& r : rs.roots()) listed.insert(r.euclid2);
        CHECK(listed == oracle::weyl_closure(rs, 0));
    }
}

TEST_CASE("simple coefficients agree with a linear solve and are sign-coherent") {
    for (auto [t, n] : kTypes) {
        const auto rs = RootSystem::build(t, n);
        for (RootId id = 0; id < rs.size(); ++id) {
            const auto& c = rs.root(id).simple_coeffs;
            CHECK(c == oracle::expand(rs, id));
            const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
            const bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
            CHECK((nonneg != nonpos));
            CHECK(rs.id_of(rs.root(id)) == id);
        }
    }
}

TEST_CASE("systems are reduced and closed under negation") {
    for (auto [t, n] : kTypes) {
        const auto rs = RootSystem::build(t, n);
        for (RootId id = 0; id < rs.size(); ++id) {
            auto v = rs.root(id).euclid2;
            for (auto& x : v) x *= 2;
            CHECK_FALSE(rs.find(0, v).has_value());
            CHECK(rs.root(rs.negate(id)).euclid2 == [&] {
                auto w = rs.root(id).euclid2;
                for (auto& x : w) x = -x;
                return w;
            }());
        }
    }
}

TEST_CASE("B3 has 18 roots on the basis e1-e2, e2-e3, e3") {
    const auto rs = RootSystem::build(CartanType::B, 3);
    CHECK(rs.size() == 18);
    CHECK(rs.root(rs.simple_root(0, 1)).euclid2 == testing::e2({1, -1, 0}));
    CHECK(rs.root(rs.simple_root(0, 2)).euclid2 == testing::e2({0, 1, -1}));
    CHECK(rs.root(rs.simple_root(0, 3)).euclid2 == testing::e2({0, 0, 1}));
}

TEST_CASE("A1 has the two roots +-(e1-e2)") {
    const auto rs = RootSystem::build(CartanType::A, 1);
    REQUIRE(rs.size() == 2);
    CHECK(rs.find(0, testing::e2({1, -1})).has_value());
    CHECK(rs.find(0, testing::e2({-1, 1})).has_value());
}

TEST_CASE("E8 has 112 integral and 128 half-integral roots") {
    const auto rs = RootSystem::build(CartanType::E, 8);
    int integral = 0, half = 0;
    for (const auto& r : rs.roots()) {
        if (std::all_of(r.euclid2.begin(), r.euclid2.end(), [](int x) { return x % 2 == 0; }))
            ++integral;
        else
            ++half;
    }
    CHECK(integral == 112);
    CHECK(half == 128);
}

TEST_CASE("direct sums keep the factors apart") {
    const auto a3 = RootSystem::build(CartanType::A, 3);
    const std::vector<RootSystem> two{a3, a3};
    const auto sum = RootSystem::direct_sum(two);
    CHECK(sum.size() == 24);
    CHECK(sum.factors().size() == 2);
    const std::vector<RootSystem> one{a3};
    const auto same = RootSystem::direct_sum(one);
    CHECK(same.size() == a3.size());
    for (RootId id = 0; id < a3.size(); ++id) CHECK(same.root(id).simple_coeffs == a3.root(id).simple_coeffs);
    const auto a6 = RootSystem::build(CartanType::A, 6);
    const std::vector<RootSystem> a66{a6, a6};
    CHECK(RootSystem::direct_sum(a66).size() == 84);
    const auto mixed = RootSystem::direct_sum(two);
    for (RootId a = 0; a < mixed.size(); ++a)
        for (RootId b = 0; b < mixed.size(); ++b)
            if (mixed.root(a).component != mixed.root(b).component) CHECK_FALSE(mixed.add_roots(a, b).has_value());
}

TEST_CASE("add_roots") {
    const auto b3 = RootSystem::build(CartanType::B, 3);
    CHECK(b3.add_roots(root(b3, {0, 0, 1}), root(b3, {1, 0, -1})) == root(b3, {1, 0, 0}));
    CHECK(b3.add_roots(root(b3, {0, 1, -1}), root(b3, {0, 0, 1})) == root(b3, {0, 1, 0}));
    for (RootId id = 0; id < b3.size(); ++id) CHECK_FALSE(b3.add_roots(id, b3.negate(id)).has_value());
    const auto g2 = RootSystem::build(CartanType::G, 2);
    CHECK(g2.add_roots(root(g2, {-1, 1, 0}), root(g2, {2, -1, -1})) == root(g2, {1, 0, -1}));
}

TEST_CASE("support") {
    const auto a3 = RootSystem::build(CartanType::A, 3);
    CHECK(a3.support(root(a3, {1, 0, 0, -1})).size() == 3);
    const auto b3 = RootSystem::build(CartanType::B, 3);
    CHECK(b3.support(root(b3, {0, 0, 1})) == std::vector<RootId>{b3.simple_root(0, 3)});
    CHECK(b3.root(root(b3, {1, 1, 0})).simple_coeffs == std::vector<int>{1, 2, 2});
}

TEST_CASE("additive neighbors") {
    const auto a3 = RootSystem::build(CartanType::A, 3);
    const std::set<RootId> expected{root(a3, {1, 0, -1, 0}), root(a3, {1, 0, 0, -1}), root(a3, {0, -1, 1, 0}),
                                    root(a3, {0, -1, 0, 1})};
    CHECK(testing::as_set(a3.additive_neighbors(root(a3, {-1, 1, 0, 0}))) == expected);

    const auto b2 = RootSystem::build(CartanType::B, 2);
    const std::set<RootId> expected_b{root(b2, {0, 1}), root(b2, {0, -1}), root(b2, {1, 1}), root(b2, {1, -1})};
    CHECK(testing::as_set(b2.additive_neighbors(root(b2, {-1, 0}))) == expected_b);

    const auto a1 = RootSystem::build(CartanType::A, 1);
    CHECK(a1.additive_neighbors(0).empty());
}

TEST_CASE("invalid ranks and lookups") {
    CHECK_THROWS_AS(RootSystem::build(CartanType::B, 1), InvalidRank);
    CHECK_THROWS_AS(RootSystem::build(CartanType::D, 3), InvalidRank);
    CHECK_THROWS_AS(RootSystem::build(CartanType::E, 9), InvalidRank);
    CHECK_THROWS_AS(RootSystem::build(CartanType::G, 3), InvalidRank);
    CHECK_THROWS_AS(RootSystem::build(CartanType::A, 0), InvalidRank);
    const auto a2 = RootSystem::build(CartanType::A, 2);
    CHECK_THROWS_AS(a2.simple_root(0, 3), NotInSystem);
    Root fake = a2.root(0);
    fake.euclid2 = {4, -4, 0};
    CHECK_THROWS_AS(a2.id_of(fake), NotInSystem);
}
