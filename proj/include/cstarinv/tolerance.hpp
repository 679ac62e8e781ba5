#pragma once

#include <cstdint>

namespace cstarinv {

/// Central knob for every approximate comparison and randomized search.
/// Comparisons use ||x - y|| <= atol + rtol * max(||x||, ||y||).
struct ToleranceConfig {
    double atol = 1e-9;
    double rtol = 1e-7;
    std::uint64_t seed = 0;
    int search_budget = 2000;

    /// Scale-aware threshold for a quantity of magnitude `ref`.
    double scale(double ref) const { return atol + rtol * ref; }

    bool close(double x, double y) const {
        double ax = x < 0 ? -x : x;
        double ay = y < 0 ? -y : y;
        double d = x - y;
        if (d < 0) d = -d;
        return d <= scale(ax > ay ? ax : ay);
    }
};

}  // namespace cstarinv
