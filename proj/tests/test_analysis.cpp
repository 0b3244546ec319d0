#include "crorder/analysis.hpp"
#include "crorder/errors.hpp"
#include "crorder/fixtures.hpp"

#include <doctest.h>

using namespace crorder;

TEST_CASE("analysis of the named examples") {
    const auto fels = analyze(fixture("fels-b3-k2"));
    CHECK(fels.levi_order == Order(3));
    CHECK(fels.contact_order <= Order(3));
    CHECK(fels.fundamental);
    CHECK(fels.minimal_type == false);
    CHECK(analyze(fixture("sl7C")).levi_order == Order(1));
    CHECK(analyze(fixture("c3-order2")).levi_order == Order(2));
    const auto lee = analyze(fixture("lee-k6"));
    CHECK(lee.levi_order == Order(3));
    CHECK(lee.contact_order == Order(3));
    CHECK(lee.cr_dim == 4);
    CHECK(lee.cr_codim == 1);
}

TEST_CASE("every fixture passes its cross-checks") {
    for (const auto& info : fixture_catalog()) {
        CAPTURE(info.name);
        const auto r = analyze_unchecked(fixture(info.name));
        for (const auto& [name, ok] : r.checks) {
            CAPTURE(name);
            CHECK(ok);
        }
    }
}

TEST_CASE("a contact-chain disagreement is an internal inconsistency") {
    InstanceSpec spec;
    spec.components = {{CartanType::A, 3}};
    spec.crossed = {{1, 2, 3}};
    spec.sigma.entries = {{0, 1, 0, 1, -1}, {0, 2, 0, 2, -1}, {0, 3, 0, 4, -1}, {0, 4, 0, 3, -1}};
    CHECK_FALSE(analyze_unchecked(spec).check("contact_chains_agree"));
    CHECK_THROWS_AS(analyze(spec), InternalInconsistency);
}

TEST_CASE("reports are deterministic") {
    for (const auto& info : fixture_catalog()) {
        const auto spec = fixture(info.name);
        CHECK(report_json(analyze(spec)) == report_json(analyze(spec)));
    }
}

TEST_CASE("json reports carry orders, chains and witnesses") {
    const auto j = to_json(analyze(fixture("fels-b3-k2")));
    CHECK(j["levi_order"] == 3);
    CHECK(j["levi_chain"].size() == 4);
    bool found = false;
    for (const auto& e : j["per_root"]) {
        if (e["label"] == "-e1-e2") {
            found = true;
            CHECK(e["order"] == 3);
            CHECK(e["witness"].size() == 3);
        }
    }
    CHECK(found);
    const auto degenerate = to_json(analyze(fixture("sl4-flags-n5")));
    CHECK(degenerate["levi_order"] == "infinite");
}

TEST_CASE("enumeration over A1 yields only orders 0, 1 and infinite") {
    const auto result = enumerate_instances(CartanType::A, 1);
    CHECK(result.items.size() == 8);
    for (const auto& item : result.items) {
        const auto o = item.report.levi_order;
        CHECK((o == Order(0) || o == Order(1) || !o.is_finite()));
    }
}

TEST_CASE("enumeration theorems over A2 and B2") {
    const auto a2 = enumerate_instances(CartanType::A, 2);
    CHECK(a2.tally("fundamental_and_wnd_implies_order_le_3").violations == 0);
    CHECK(a2.tally("fundamental_and_wnd_implies_order_le_3").checked > 0);
    const auto b2 = enumerate_instances(CartanType::B, 2);
    CHECK(b2.tally("minimal_type_implies_order_le_2").violations == 0);
    CHECK(b2.tally("minimal_type_implies_order_le_2").checked > 0);
}

TEST_CASE("enumeration output does not depend on the thread count") {
    setenv("CRORDER_THREADS", "1", 1);
    const auto serial = to_json(enumerate_instances(CartanType::B, 3, 6)).dump();
    setenv("CRORDER_THREADS", "4", 1);
    const auto parallel = to_json(enumerate_instances(CartanType::B, 3, 6)).dump();
    unsetenv("CRORDER_THREADS");
    CHECK(serial == parallel);
}
