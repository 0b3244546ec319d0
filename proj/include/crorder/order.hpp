#pragma once

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>

namespace crorder {

/// Nonnegative integer order or +infinity (holomorphic / contact degeneracy).
class Order {
public:
    constexpr explicit Order(int value) : value_(value) {
        if (value < 0) throw std::invalid_argument("order must be nonnegative");
    }

    static constexpr Order infinite() { return Order(); }

    constexpr bool is_finite() const noexcept { return value_ != kInfinite; }

    constexpr int value() const {
        if (!is_finite()) throw std::logic_error("infinite order has no value");
        return value_;
    }

    constexpr auto operator<=>(const Order&) const = default;

    std::string to_string() const { return is_finite() ? std::to_string(value_) : "infinite"; }

private:
    static constexpr int kInfinite = std::numeric_limits<int>::max();

    constexpr Order() : value_(kInfinite) {}

    int value_;
};

}  // namespace crorder
