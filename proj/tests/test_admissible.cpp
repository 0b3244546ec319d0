#include "crorder/admissible.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace crorder;
using testing::root;

TEST_CASE("q(beta) matches exhaustive search on small systems") {
    for (auto [t, n] : std::vector<std::pair<CartanType, int>>{{CartanType::A, 2},
                                                               {CartanType::A, 3},
                                                               {CartanType::A, 4},
                                                               {CartanType::B, 2},
                                                               {CartanType::B, 3},
                                                               {CartanType::C, 3},
                                                               {CartanType::D, 4},
                                                               {CartanType::G, 2}}) {
        CAPTURE(to_char(t));
        CAPTURE(n);
        const auto rs = RootSystem::build(t, n);
        for (RootId b = 0; b < rs.size(); ++b) {
            const auto w = q_beta(rs, b);
            CHECK(w.q == oracle::q_beta(rs, b, 5));
            CHECK(is_admissible(rs, b, w.sequence));
            CHECK(static_cast<int>(w.sequence.size()) == w.q);
        }
    }
}

TEST_CASE("every A2 root has q = 1") {
    const auto rs = RootSystem::build(CartanType::A, 2);
    for (RootId b = 0; b < rs.size(); ++b) CHECK(q_beta(rs, b).q == 1);
}

TEST_CASE("known maximal witnesses are admissible") {
    const auto b3 = RootSystem::build(CartanType::B, 3);
    const auto beta = root(b3, {-1, 0, 0});
    CHECK(q_beta(b3, beta).q == 3);
    CHECK(is_admissible(b3, beta, {root(b3, {1, 1, 0}), root(b3, {1, -1, 0}), root(b3, {0, 0, 1})}));

    const auto g2 = RootSystem::build(CartanType::G, 2);
    const auto long_beta = root(g2, {-2, 1, 1});
    CHECK(q_beta(g2, long_beta).q == 4);
    const auto a = root(g2, {1, -1, 0});
    CHECK(is_admissible(g2, long_beta, {a, a, a, root(g2, {1, 1, -2})}));
}

TEST_CASE("table rows for A3, A4, C3, F4") {
    const auto rows = verify_table({{CartanType::A, 3}, {CartanType::A, 4}, {CartanType::C, 3}, {CartanType::F, 4}});
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].witness.q == 2);
    CHECK(rows[1].witness.q == 2);
    for (std::size_t i = 2; i < 4; ++i) CHECK(rows[i].witness.q == 2);
    for (const auto& r : rows) {
        if (r.type != CartanType::F) continue;
        CHECK(r.witness.q == (r.long_root ? 4 : 3));
    }
    for (const auto& r : rows) CHECK(r.ok());
}

TEST_CASE("q = 4 witnesses land on -beta") {
    const auto rows = verify_table({{CartanType::D, 4}, {CartanType::E, 6}, {CartanType::G, 2}});
    for (const auto& r : rows) {
        if (r.witness.q == 4) CHECK(r.opposite_identity);
    }
}
