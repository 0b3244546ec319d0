#pragma once

#include "crorder/instance.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace crorder {

struct FixtureInfo {
    std::string name;
    std::string description;
};

const std::vector<FixtureInfo>& fixture_catalog();

/// Throws ParseError for unknown names. The returned spec carries the fixture name.
InstanceSpec fixture(std::string_view name);

/// A_n, Phi = {alpha_2..alpha_{n-1}}, sigma(e_1) = -e_{n+1}, sigma(e_i) = -e_i.
InstanceSpec sl_flags(int n);

}  // namespace crorder
