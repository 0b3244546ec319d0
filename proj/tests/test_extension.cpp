#include "crorder/errors.hpp"
#include "crorder/extension.hpp"
#include "crorder/root_graded.hpp"
#include "crorder/chains.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace crorder;
using Conv = Sl2Module::Convention;

namespace {

Subspace span_of(const ExactLieAlgebra& alg, const std::vector<std::size_t>& idx) {
    return Subspace::coordinate(alg.dim(), idx);
}

}  // namespace

TEST_CASE("sl2 modules satisfy the axioms in both conventions") {
    for (int k = 0; k <= 10; ++k) {
        CHECK(Sl2Module{k, Conv::Lowering}.satisfies_axioms());
        CHECK(Sl2Module{k, Conv::Raising}.satisfies_axioms());
    }
}

TEST_CASE("negative weight parts") {
    const auto k2 = build_lee_extension(2);
    CHECK(k2.algebra.dim() == 6);
    const auto& a2 = k2.algebra;
    CHECK(a2.q() == span_of(a2, {LeeExtension::kH, LeeExtension::kF, LeeExtension::v(2)}));
    const auto k4 = build_lee_extension(4);
    const auto& a4 = k4.algebra;
    CHECK(a4.q() == span_of(a4, {LeeExtension::kH, LeeExtension::kF, LeeExtension::v(3), LeeExtension::v(4)}));
    const auto k0 = build_lee_extension(0);
    CHECK(k0.algebra.q() == span_of(k0.algebra, {LeeExtension::kH, LeeExtension::kF}));
}

TEST_CASE("Lee extensions are Lie algebras with q a subalgebra") {
    for (int k = 0; k <= 8; ++k) {
        for (auto conv : {Conv::Lowering, Conv::Raising}) {
            const auto ext = build_lee_extension(k, conv);
            CHECK(ext.algebra.antisymmetric());
            CHECK(ext.algebra.jacobi());
            CHECK(ext.algebra.is_subalgebra(ext.algebra.q()));
            CHECK(ext.algebra.is_subalgebra(ext.algebra.qbar()));
            CHECK(ext.algebra.q().intersect(ext.algebra.qbar()) == span_of(ext.algebra, {LeeExtension::kH}));
        }
    }
}

TEST_CASE("E^q applied to v_2q leaves q and qbar") {
    for (int q = 1; q <= 4; ++q) {
        const int k = 2 * q;
        const auto ext = build_lee_extension(k);
        Vector x = ext.algebra.basis_vector(LeeExtension::v(k));
        for (int i = 0; i < q; ++i) x = ext.algebra.bracket(ext.algebra.basis_vector(LeeExtension::kE), x);
        CHECK(x[LeeExtension::v(q)] != 0);
        CHECK_FALSE(ext.algebra.q().contains(x));
        CHECK_FALSE(ext.algebra.qbar().contains(x));
    }
}

TEST_CASE("Levi and contact orders of Lee extensions") {
    for (int q = 1; q <= 4; ++q) {
        for (auto conv : {Conv::Lowering, Conv::Raising}) {
            const auto ext = build_lee_extension(2 * q, conv);
            const auto levi = generic_levi_chain(ext.algebra);
            const auto contact = generic_contact_chain(ext.algebra);
            CHECK(levi.order == Order(q));
            CHECK(contact.order == Order(q));
            const auto dims = levi.dims();
            for (std::size_t i = 1; i < dims.size(); ++i) CHECK(dims[i] < dims[i - 1]);
            const auto cr = extension_cr_dim_codim(ext);
            CHECK(cr.cr_dim == q + 1);
            CHECK(cr.cr_codim == 1);
            CHECK(generic_fundamental(ext.algebra));
        }
    }
    CHECK(generic_levi_chain(build_lee_extension(4).algebra).dims() == std::vector<std::size_t>{4, 2, 1});
}

TEST_CASE("odd highest weights are holomorphically degenerate") {
    for (int k : {1, 3, 5}) {
        const auto ext = build_lee_extension(k);
        CHECK_FALSE(generic_levi_chain(ext.algebra).order.is_finite());
        CHECK_FALSE(extension_cr_dim_codim(ext).even_k);
    }
}

TEST_CASE("k = 0 gives the complex-type degenerate case") {
    const auto ext = build_lee_extension(0);
    const auto cr = extension_cr_dim_codim(ext);
    CHECK(cr.cr_dim == 1);
    // v_0 is central and lies in neither q nor qbar.
    CHECK(cr.cr_codim == 1);
}

TEST_CASE("q = qbar gives order 0") {
    auto alg = build_lee_extension(2).algebra;
    alg.set_qbar(alg.q());
    CHECK(generic_levi_chain(alg).order == Order(0));
    CHECK(generic_contact_chain(alg).order == Order(0));
}

TEST_CASE("root-graded matrix algebras reproduce root-level orders") {
    for (const std::string name : {"su13-grassmannian", "fels-b3-k2", "c3-order2", "b3-phi1-order2"}) {
        CAPTURE(name);
        const auto p = testing::fixture_pcr(name);
        const auto g = build_root_graded(p);
        CHECK(g.algebra.jacobi());
        CHECK(generic_levi_chain(g.algebra).order == levi_chain(p).order);
        CHECK(generic_contact_chain(g.algebra).order == contact_chains(p).bracket.order);
        const auto cr = generic_cr_dim_codim(g.algebra);
        CHECK(std::pair{cr.cr_dim, cr.cr_codim} == cr_dim_codim(p));
    }
    CHECK_THROWS_AS(build_root_graded(testing::fixture_pcr("g2-order3")), InvalidRank);
}
