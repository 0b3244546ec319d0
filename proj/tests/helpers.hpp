#pragma once

#include "crorder/fixtures.hpp"
#include "crorder/instance.hpp"
#include "crorder/roots.hpp"

#include <doctest.h>

#include <cstdlib>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace testing {

inline std::shared_ptr<const crorder::RootSystem> system(crorder::CartanType t, int rank) {
    return std::make_shared<const crorder::RootSystem>(crorder::RootSystem::build(t, rank));
}

/// Doubled coordinates from plain integer coordinates.
inline std::vector<int> e2(std::vector<int> v) {
    for (auto& x : v) x *= 2;
    return v;
}

inline crorder::RootId root(const crorder::RootSystem& rs, std::vector<int> coords, std::size_t component = 0) {
    auto id = rs.find(component, e2(std::move(coords)));
    REQUIRE(id.has_value());
    return *id;
}

/// image[i] = +-j: e_{i+1} -> +-e_j.
inline std::vector<crorder::SignedEntry> perm(const std::vector<int>& image) {
    std::vector<crorder::SignedEntry> out;
    for (std::size_t i = 0; i < image.size(); ++i) {
        out.push_back({0, static_cast<int>(i + 1), 0, std::abs(image[i]), image[i] < 0 ? -1 : 1});
    }
    return out;
}

inline crorder::ParabolicCRAlgebra pcr(crorder::CartanType t, int rank, std::vector<int> crossed,
                                       const std::vector<int>& image) {
    auto rs = system(t, rank);
    return crorder::build_pcr(crorder::RootInvolution::from_signed_permutation(rs, perm(image)), {std::move(crossed)});
}

inline crorder::ParabolicCRAlgebra fixture_pcr(const std::string& name) {
    return crorder::build_instance(crorder::fixture(name));
}

inline std::set<crorder::RootId> as_set(const std::vector<crorder::RootId>& v) { return {v.begin(), v.end()}; }

}  // namespace testing
