#pragma once

#include <cmath>
#include <limits>

namespace canal {

/// Closed interval [lo, hi]; either end may be infinite.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    static constexpr Interval unbounded() noexcept { return {}; }

    constexpr bool contains(double x) const noexcept { return x >= lo && x <= hi; }
    bool is_finite() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }
    constexpr double width() const noexcept { return hi - lo; }
    constexpr bool valid() const noexcept { return lo <= hi; }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace canal
