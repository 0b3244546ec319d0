#include "crorder/instance.hpp"

#include "crorder/errors.hpp"
#include "crorder/fixtures.hpp"

namespace crorder {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ParseError(field + ": " + message);
}

const ordered_json& require(const ordered_json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

int as_int(const ordered_json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
}

Rational as_rational(const ordered_json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            fail(path, "malformed rational '" + v.get<std::string>() + "'");
        }
    }
    fail(path, "expected an integer or a rational string");
}

std::pair<std::size_t, int> basis_ref(const ordered_json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) fail(path, "expected [component, index]");
    const int c = as_int(v[0], path + "[0]");
    if (c < 0) fail(path + "[0]", "negative component");
    return {static_cast<std::size_t>(c), as_int(v[1], path + "[1]")};
}

void validate(InstanceSpec& spec) {
    if (spec.lee_k) {
        if (*spec.lee_k < 0) fail("lee_k", "must be nonnegative");
        return;
    }
    if (spec.components.empty()) fail("components", "at least one component is required");
    std::shared_ptr<const RootSystem> rs;
    try {
        rs = build_system(spec);
    } catch (const InvalidRank& e) {
        fail("components", e.what());
    }
    if (spec.crossed.size() > spec.components.size()) fail("crossed", "more entries than components");
    spec.crossed.resize(spec.components.size());
    for (std::size_t c = 0; c < spec.crossed.size(); ++c) {
        for (std::size_t i = 0; i < spec.crossed[c].size(); ++i) {
            const int idx = spec.crossed[c][i];
            if (idx < 1 || idx > spec.components[c].rank) {
                fail("crossed[" + std::to_string(c) + "][" + std::to_string(i) + "]",
                     "index " + std::to_string(idx) + " out of range for " + to_char(spec.components[c].type) +
                         std::to_string(spec.components[c].rank));
            }
        }
    }
    build_sigma(rs, spec.sigma);
}

}  // namespace

InstanceSpec parse_instance(const ordered_json& doc) {
    if (!doc.is_object()) fail("document", "expected a JSON object");
    if (auto it = doc.find("fixture"); it != doc.end()) {
        if (!it->is_string()) fail("fixture", "expected a string");
        return fixture(it->get<std::string>());
    }
    InstanceSpec spec;
    if (auto it = doc.find("lee_k"); it != doc.end()) {
        spec.lee_k = as_int(*it, "lee_k");
        validate(spec);
        return spec;
    }

    const auto& comps = require(doc, "components", "");
    if (!comps.is_array()) fail("components", "expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string path = "components[" + std::to_string(i) + "]";
        const auto& type = require(comps[i], "type", path);
        if (!type.is_string()) fail(path + ".type", "expected a string");
        ComponentSpec cs;
        try {
            cs.type = parse_cartan_type(type.get<std::string>());
        } catch (const InvalidRank& e) {
            fail(path + ".type", e.what());
        }
        cs.rank = as_int(require(comps[i], "rank", path), path + ".rank");
        spec.components.push_back(cs);
    }

    if (auto it = doc.find("crossed"); it != doc.end()) {
        if (!it->is_array()) fail("crossed", "expected an array of arrays");
        for (std::size_t c = 0; c < it->size(); ++c) {
            const auto& list = (*it)[c];
            const std::string path = "crossed[" + std::to_string(c) + "]";
            if (!list.is_array()) fail(path, "expected an array");
            std::vector<int> indices;
            for (std::size_t i = 0; i < list.size(); ++i) indices.push_back(as_int(list[i], path + "[" + std::to_string(i) + "]"));
            spec.crossed.push_back(std::move(indices));
        }
    }

    const auto& sigma = require(doc, "sigma", "");
    const auto& kind = require(sigma, "kind", "sigma");
    const auto& entries = require(sigma, "entries", "sigma");
    if (!entries.is_array()) fail("sigma.entries", "expected an array");
    if (kind == "signed_permutation") {
        spec.sigma.kind = SigmaSpec::Kind::SignedPermutation;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const std::string path = "sigma.entries[" + std::to_string(i) + "]";
            SignedEntry e;
            std::tie(e.from_component, e.from_index) = basis_ref(require(entries[i], "from", path), path + ".from");
            std::tie(e.to_component, e.to_index) = basis_ref(require(entries[i], "to", path), path + ".to");
            e.sign = as_int(require(entries[i], "sign", path), path + ".sign");
            if (e.sign != 1 && e.sign != -1) fail(path + ".sign", "must be 1 or -1");
            spec.sigma.entries.push_back(e);
        }
    } else if (kind == "matrix") {
        spec.sigma.kind = SigmaSpec::Kind::Matrix;
        for (std::size_t r = 0; r < entries.size(); ++r) {
            const std::string path = "sigma.entries[" + std::to_string(r) + "]";
            if (!entries[r].is_array()) fail(path, "expected an array");
            std::vector<Rational> row;
            for (std::size_t c = 0; c < entries[r].size(); ++c) row.push_back(as_rational(entries[r][c], path + "[" + std::to_string(c) + "]"));
            spec.sigma.matrix.push_back(std::move(row));
        }
    } else {
        fail("sigma.kind", "expected \"signed_permutation\" or \"matrix\"");
    }
    validate(spec);
    return spec;
}

InstanceSpec parse_instance(std::string_view document) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(document);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    return parse_instance(doc);
}

ordered_json to_json(const InstanceSpec& spec) {
    ordered_json out = ordered_json::object();
    if (spec.fixture) out["fixture"] = *spec.fixture;
    if (spec.lee_k) {
        out["lee_k"] = *spec.lee_k;
        return out;
    }
    out["components"] = ordered_json::array();
    for (const auto& c : spec.components) {
        out["components"].push_back({{"type", std::string(1, to_char(c.type))}, {"rank", c.rank}});
    }
    out["crossed"] = spec.crossed;
    ordered_json sigma = ordered_json::object();
    if (spec.sigma.kind == SigmaSpec::Kind::SignedPermutation) {
        sigma["kind"] = "signed_permutation";
        sigma["entries"] = ordered_json::array();
        for (const auto& e : spec.sigma.entries) {
            sigma["entries"].push_back({{"from", {e.from_component, e.from_index}},
                                        {"to", {e.to_component, e.to_index}},
                                        {"sign", e.sign}});
        }
    } else {
        sigma["kind"] = "matrix";
        sigma["entries"] = ordered_json::array();
        for (const auto& row : spec.sigma.matrix) {
            ordered_json r = ordered_json::array();
            for (const auto& x : row) r.push_back(to_string(x));
            sigma["entries"].push_back(std::move(r));
        }
    }
    out["sigma"] = std::move(sigma);
    return out;
}

std::string serialize_instance(const InstanceSpec& spec) { return to_json(spec).dump(2) + "\n"; }

std::shared_ptr<const RootSystem> build_system(const InstanceSpec& spec) {
    std::vector<RootSystem> factors;
    for (const auto& c : spec.components) factors.push_back(RootSystem::build(c.type, c.rank));
    if (factors.size() == 1) return std::make_shared<const RootSystem>(std::move(factors.front()));
    return std::make_shared<const RootSystem>(RootSystem::direct_sum(factors));
}

RootInvolution build_sigma(std::shared_ptr<const RootSystem> rs, const SigmaSpec& sigma) {
    if (sigma.kind == SigmaSpec::Kind::SignedPermutation) return RootInvolution::from_signed_permutation(rs, sigma.entries);
    const std::size_t n = rs->ambient_dim();
    if (sigma.matrix.size() != n) {
        throw InvolutionError(InvolutionError::Kind::NotTotal, "sigma matrix must have " + std::to_string(n) + " rows");
    }
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (sigma.matrix[r].size() != n) {
            throw InvolutionError(InvolutionError::Kind::NotTotal, "sigma matrix must have " + std::to_string(n) + " columns");
        }
        for (std::size_t c = 0; c < n; ++c) m(r, c) = sigma.matrix[r][c];
    }
    return RootInvolution::from_matrix(std::move(rs), m);
}

ParabolicCRAlgebra build_instance(const InstanceSpec& spec) {
    if (spec.lee_k) throw ParseError("instance is a Lee extension, not a parabolic CR algebra");
    auto rs = build_system(spec);
    return build_pcr(build_sigma(rs, spec.sigma), spec.crossed);
}

std::vector<SignedEntry> signed_entries(const RootSystem& rs, const Matrix& map) {
    auto locate = [&](std::size_t k) {
        const auto& fs = rs.factors();
        for (std::size_t c = 0; c < fs.size(); ++c) {
            if (k >= fs[c].offset && k < fs[c].offset + fs[c].dim) {
                return std::pair<std::size_t, int>{c, static_cast<int>(k - fs[c].offset + 1)};
            }
        }
        throw NotInSystem("coordinate out of range");
    };
    std::vector<SignedEntry> out;
    for (std::size_t col = 0; col < map.cols(); ++col) {
        for (std::size_t row = 0; row < map.rows(); ++row) {
            if (map(row, col).is_zero()) continue;
            if (map(row, col) != 1 && map(row, col) != -1) throw InvolutionError(InvolutionError::Kind::NotIsometry, "not a signed permutation");
            SignedEntry e;
            std::tie(e.from_component, e.from_index) = locate(col);
            std::tie(e.to_component, e.to_index) = locate(row);
            e.sign = map(row, col) == 1 ? 1 : -1;
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace crorder
