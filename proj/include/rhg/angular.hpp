#pragma once

#include <cstddef>

#include "rhg/params.hpp"

namespace rhg {

namespace detail {

template <class ThetaAt>
std::size_t lower_idx(std::size_t n, ThetaAt&& th, double x) {
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (th(mid) < x)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

template <class ThetaAt>
std::size_t upper_idx(std::size_t n, ThetaAt&& th, double x) {
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (th(mid) <= x)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

} // namespace detail

// visits positions of an angularly sorted sequence whose theta lies in
// [lo, hi]; the raw endpoints may spill outside [0, 2pi) and are folded back.
// theta_at(pos) must be non-decreasing; the visitor returns false to stop
// early, and so does this function.
template <class ThetaAt, class F>
bool visit_angular_window(std::size_t n, ThetaAt&& theta_at, double lo, double hi, F&& f) {
    auto run = [&](double a, double b) -> bool {
        const std::size_t first = detail::lower_idx(n, theta_at, a);
        const std::size_t last = detail::upper_idx(n, theta_at, b);
        for (std::size_t pos = first; pos < last; ++pos)
            if (!f(pos)) return false;
        return true;
    };
    if (hi - lo >= kTwoPi) return run(-1.0, kTwoPi + 1.0);
    if (lo < 0.0) return run(lo + kTwoPi, kTwoPi + 1.0) && run(-1.0, hi);
    if (hi >= kTwoPi) return run(lo, kTwoPi + 1.0) && run(-1.0, hi - kTwoPi);
    return run(lo, hi);
}

} // namespace rhg
