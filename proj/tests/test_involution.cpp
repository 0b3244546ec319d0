#include "crorder/errors.hpp"
#include "crorder/involution.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace crorder;
using testing::perm;
using testing::root;

TEST_CASE("the Fels involution is valid") {
    auto rs = testing::system(CartanType::B, 3);
    const auto s = RootInvolution::from_signed_permutation(rs, perm({3, -2, 1}));
    CHECK(s.conjugate(root(*rs, {1, 0, 0})) == root(*rs, {0, 0, 1}));
    CHECK(s.conjugate(root(*rs, {0, 1, 0})) == root(*rs, {0, -1, 0}));
    for (RootId id = 0; id < rs->size(); ++id) CHECK(s.conjugate(s.conjugate(id)) == id);
}

TEST_CASE("the identity involution fixes every root") {
    auto rs = testing::system(CartanType::D, 4);
    const auto s = RootInvolution::from_signed_permutation(rs, perm({1, 2, 3, 4}));
    for (RootId id = 0; id < rs->size(); ++id) CHECK(s.conjugate(id) == id);
    CHECK(s.r_bullet().empty());
}

TEST_CASE("a non-bijective map is rejected") {
    auto rs = testing::system(CartanType::A, 2);
    try {
        RootInvolution::from_signed_permutation(rs, perm({2, 2, 3}));
        FAIL("expected InvolutionError");
    } catch (const InvolutionError& e) {
        CHECK(e.kind() == InvolutionError::Kind::NotInvolutive);
    }
}

TEST_CASE("missing and non-isometric maps are rejected") {
    auto rs = testing::system(CartanType::A, 2);
    try {
        RootInvolution::from_signed_permutation(rs, perm({1, 2}));
        FAIL("expected InvolutionError");
    } catch (const InvolutionError& e) {
        CHECK(e.kind() == InvolutionError::Kind::NotTotal);
    }
    Matrix m = Matrix::identity(3);
    m(1, 1) = -1;
    // e2 -> -e2 sends e1-e2 to e1+e2, which is not an A2 root.
    try {
        RootInvolution::from_matrix(rs, m);
        FAIL("expected InvolutionError");
    } catch (const InvolutionError& e) {
        CHECK(e.kind() == InvolutionError::Kind::DoesNotPermuteRoots);
    }
    Matrix scale = Matrix::identity(3);
    scale(0, 0) = Rational(1, 2);
    scale(0, 1) = Rational(1, 2);
    scale(1, 0) = Rational(3, 2);
    scale(1, 1) = Rational(-1, 2);
    CHECK_THROWS_AS(RootInvolution::from_matrix(rs, scale), InvolutionError);
}

TEST_CASE("R_bullet") {
    auto b3 = testing::system(CartanType::B, 3);
    const auto s = RootInvolution::from_signed_permutation(b3, perm({2, 1, -3}));
    const std::set<RootId> expected{root(*b3, {0, 0, 1}), root(*b3, {0, 0, -1}), root(*b3, {1, -1, 0}),
                                    root(*b3, {-1, 1, 0})};
    CHECK(testing::as_set(s.r_bullet().ids()) == expected);

    const auto minus = RootInvolution::from_signed_permutation(b3, perm({-1, -2, -3}));
    CHECK(minus.r_bullet() == b3->full_set());
}

TEST_CASE("swapping two copies of A6") {
    const auto spec = fixture("sl7C");
    auto rs = build_system(spec);
    const auto s = build_sigma(rs, spec.sigma);
    for (RootId id = 0; id < rs->size(); ++id) {
        CHECK(rs->root(s.conjugate(id)).component != rs->root(id).component);
    }
    CHECK(s.r_bullet().empty());
}

TEST_CASE("signed-permutation involution counts") {
    CHECK(enumerate_signed_involutions(testing::system(CartanType::A, 1)).size() == 4);
    CHECK(enumerate_signed_involutions(testing::system(CartanType::A, 2)).size() == 8);
    CHECK(enumerate_signed_involutions(testing::system(CartanType::G, 2)).size() == 8);
    for (const auto& s : enumerate_signed_involutions(testing::system(CartanType::B, 3))) {
        const auto& rs = s.system();
        for (RootId id = 0; id < rs.size(); ++id) {
            CHECK(s.conjugate(s.conjugate(id)) == id);
            CHECK(rs.length4(s.conjugate(id)) == rs.length4(id));
        }
    }
}
