#include "crorder/fixtures.hpp"

#include "crorder/errors.hpp"

namespace crorder {

namespace {

// image[i] = +-(j) means e_{i+1} -> +-e_j inside a single component.
SigmaSpec simple_sigma(const std::vector<int>& image) {
    SigmaSpec s;
    for (std::size_t i = 0; i < image.size(); ++i) {
        const int to = image[i] < 0 ? -image[i] : image[i];
        s.entries.push_back({0, static_cast<int>(i + 1), 0, to, image[i] < 0 ? -1 : 1});
    }
    return s;
}

// e_i of component 0 -> e_{image[i]} of component 1, and back.
SigmaSpec swap_sigma(const std::vector<int>& image) {
    SigmaSpec s;
    for (std::size_t i = 0; i < image.size(); ++i) {
        s.entries.push_back({0, static_cast<int>(i + 1), 1, image[i], 1});
    }
    for (std::size_t i = 0; i < image.size(); ++i) {
        for (std::size_t j = 0; j < image.size(); ++j) {
            if (image[j] == static_cast<int>(i + 1)) s.entries.push_back({1, static_cast<int>(i + 1), 0, static_cast<int>(j + 1), 1});
        }
    }
    return s;
}

InstanceSpec single(CartanType type, int rank, std::vector<int> crossed, const std::vector<int>& image) {
    InstanceSpec spec;
    spec.components = {{type, rank}};
    spec.crossed = {std::move(crossed)};
    spec.sigma = simple_sigma(image);
    return spec;
}

struct Entry {
    FixtureInfo info;
    InstanceSpec (*make)();
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = {
        {{"sl4-flags-n3", "A3, Phi = {a2}, sigma(e1) = -e4, sigma(e_i) = -e_i"}, [] { return sl_flags(3); }},
        {{"sl4-flags-n4", "A4, Phi = {a2, a3}, sigma(e1) = -e5, sigma(e_i) = -e_i"}, [] { return sl_flags(4); }},
        {{"sl4-flags-n5", "A5, Phi = {a2, a3, a4}, sigma(e1) = -e6, sigma(e_i) = -e_i"}, [] { return sl_flags(5); }},
        {{"fels-b3-k2", "B3, Phi = {a2}, e1 <-> e3, e2 -> -e2"},
         [] { return single(CartanType::B, 3, {2}, {3, -2, 1}); }},
        {{"d4-lines-order3", "D4, Phi = {a2}, e1 <-> e4, e2 -> -e2, e3 -> -e3"},
         [] { return single(CartanType::D, 4, {2}, {4, -2, -3, 1}); }},
        {{"g2-order3", "G2, Phi = {a2}, e1 <-> e3"}, [] { return single(CartanType::G, 2, {2}, {3, 2, 1}); }},
        {{"b3-phi13-minimaltype", "B3, Phi = {a1, a3}, e1 <-> e2, e3 -> -e3"},
         [] { return single(CartanType::B, 3, {1, 3}, {2, 1, -3}); }},
        {{"su13-grassmannian", "A3, Phi = {a2}, e1 <-> -e4, e_i -> -e_i"},
         [] { return single(CartanType::A, 3, {2}, {-4, -2, -3, -1}); }},
        {{"sl3H-grassmannian", "A5, Phi = {a3}, e1 <-> e2, e3 <-> e4, e5 <-> e6"},
         [] { return single(CartanType::A, 5, {3}, {2, 1, 4, 3, 6, 5}); }},
        {{"sl7C", "A6 + A6, Phi = {a1, a4, a5} + {a2, a3, a6}, e_i <-> e'_i"},
         [] {
             InstanceSpec spec;
             spec.components = {{CartanType::A, 6}, {CartanType::A, 6}};
             spec.crossed = {{1, 4, 5}, {2, 3, 6}};
             spec.sigma = swap_sigma({1, 2, 3, 4, 5, 6, 7});
             return spec;
         }},
        {{"b3-phi1-order2", "B3, Phi = {a1}, e1 <-> -e2, e3 fixed"},
         [] { return single(CartanType::B, 3, {1}, {-2, -1, 3}); }},
        {{"sl3C-product-order1", "A3 + A3, Phi = {a1, a3} on both, e1 <-> e'2, e2 <-> e'1, e3 <-> e'4, e4 <-> e'3"},
         [] {
             InstanceSpec spec;
             spec.components = {{CartanType::A, 3}, {CartanType::A, 3}};
             spec.crossed = {{1, 3}, {1, 3}};
             spec.sigma = swap_sigma({2, 1, 4, 3});
             return spec;
         }},
        {{"d4-order1", "D4, Phi = {a2}, e1 <-> e4, e2 <-> -e3"},
         [] { return single(CartanType::D, 4, {2}, {4, -3, -2, 1}); }},
        {{"c3-order2", "C3, Phi = {a2}, e1 <-> e3, e2 -> -e2"},
         [] { return single(CartanType::C, 3, {2}, {3, -2, 1}); }},
        {{"lee-k2", "sl2 + V_2 Lee extension"}, [] { InstanceSpec s; s.lee_k = 2; return s; }},
        {{"lee-k4", "sl2 + V_4 Lee extension"}, [] { InstanceSpec s; s.lee_k = 4; return s; }},
        {{"lee-k6", "sl2 + V_6 Lee extension"}, [] { InstanceSpec s; s.lee_k = 6; return s; }},
    };
    return list;
}

}  // namespace

// A_n, Phi = {alpha_2..alpha_{n-1}}, sigma(e_1) = -e_{n+1}, sigma(e_i) = -e_i, sigma(e_{n+1}) = -e_1.
InstanceSpec sl_flags(int n) {
    std::vector<int> crossed;
    for (int i = 2; i < n; ++i) crossed.push_back(i);
    std::vector<int> image{-(n + 1)};
    for (int i = 2; i <= n; ++i) image.push_back(-i);
    image.push_back(-1);
    return single(CartanType::A, n, crossed, image);
}

const std::vector<FixtureInfo>& fixture_catalog() {
    static const std::vector<FixtureInfo> catalog = [] {
        std::vector<FixtureInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return catalog;
}

InstanceSpec fixture(std::string_view name) {
    for (const auto& e : entries()) {
        if (e.info.name == name) {
            InstanceSpec spec = e.make();
            spec.fixture = e.info.name;
            return spec;
        }
    }
    throw ParseError("fixture: unknown fixture '" + std::string(name) + "'");
}

}  // namespace crorder
