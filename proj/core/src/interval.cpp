#include "obound/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace obound {

namespace {

double snap01(double v) {
    if (v < 0.0) {
        if (v < -kBoundarySlack) {
            throw std::invalid_argument("interval endpoint " + std::to_string(v) +
                                        " outside [0,1]");
        }
        return 0.0;
    }
    if (v > 1.0) {
        if (v > 1.0 + kBoundarySlack) {
            throw std::invalid_argument("interval endpoint " + std::to_string(v) +
                                        " outside [0,1]");
        }
        return 1.0;
    }
    return v;
}

} // namespace

Interval::Interval(double lo, double hi) : lo_(snap01(lo)), hi_(snap01(hi)) {
    if (lo_ > hi_) {
        if (lo_ - hi_ > kBoundarySlack) {
            throw std::invalid_argument("inverted interval [" + std::to_string(lo) +
                                        ", " + std::to_string(hi) + "]");
        }
        lo_ = hi_ = 0.5 * (lo_ + hi_);
    }
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    const double lo = std::max(a.lo(), b.lo());
    const double hi = std::min(a.hi(), b.hi());
    if (lo > hi + kEmptyIntersectionTol) {
        return std::nullopt;
    }
    if (lo > hi) {
        // Touching within tolerance: collapse to the contact point.
        return Interval::point(0.5 * (lo + hi));
    }
    return Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

} // namespace obound
