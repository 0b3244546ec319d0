#pragma once

#include "crorder/involution.hpp"
#include "crorder/parabolic.hpp"
#include "crorder/roots.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crorder {

struct ComponentSpec {
    CartanType type = CartanType::A;
    int rank = 1;
    bool operator==(const ComponentSpec&) const = default;
};

struct SigmaSpec {
    enum class Kind { SignedPermutation, Matrix };
    Kind kind = Kind::SignedPermutation;
    std::vector<SignedEntry> entries;          ///< for SignedPermutation
    std::vector<std::vector<Rational>> matrix; ///< for Matrix: rows over the ambient space
    bool operator==(const SigmaSpec&) const = default;
};

/// An instance document. Either a parabolic CR algebra (components, crossed, sigma)
/// or a Lee extension (lee_k). A fixture name overrides every other field.
struct InstanceSpec {
    std::optional<std::string> fixture;
    std::vector<ComponentSpec> components;
    std::vector<std::vector<int>> crossed;  ///< per component, 1-based simple-root indices
    SigmaSpec sigma;
    std::optional<int> lee_k;
    bool operator==(const InstanceSpec&) const = default;
};

/// Parses and validates a JSON instance document.
/// Throws ParseError (syntax, unknown fixture, bad field, index out of range) or InvolutionError.
InstanceSpec parse_instance(std::string_view document);
InstanceSpec parse_instance(const nlohmann::ordered_json& doc);
inline InstanceSpec parse_instance(const std::string& document) { return parse_instance(std::string_view(document)); }
inline InstanceSpec parse_instance(const char* document) { return parse_instance(std::string_view(document)); }

nlohmann::ordered_json to_json(const InstanceSpec& spec);
std::string serialize_instance(const InstanceSpec& spec);

std::shared_ptr<const RootSystem> build_system(const InstanceSpec& spec);
RootInvolution build_sigma(std::shared_ptr<const RootSystem> rs, const SigmaSpec& sigma);
/// Requires a root-system instance (no lee_k).
ParabolicCRAlgebra build_instance(const InstanceSpec& spec);

/// Signed-permutation entries of a map that is a signed permutation matrix.
std::vector<SignedEntry> signed_entries(const RootSystem& rs, const Matrix& map);

}  // namespace crorder
