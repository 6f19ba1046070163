#include "obound/triangle_bounds.hpp"

#include <algorithm>
#include <cmath>

namespace obound {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// The algebra keeps these in [0,1]; floating point does not. Inputs are
// sanitized against sub-epsilon drift past the boundary as well.
double envelope(double x, double y, double sign) {
    x = clamp01(x);
    y = clamp01(y);
    const double s = std::sqrt(x * y) + sign * std::sqrt((1.0 - x) * (1.0 - y));
    return clamp01(s * s);
}

double classical_lower(double x, double y) { return std::max(0.0, x + y - 1.0); }
double classical_upper(double x, double y) { return std::min(1.0, 1.0 - std::abs(x - y)); }

} // namespace

double f_plus(double x, double y) { return envelope(x, y, +1.0); }

double f_minus(double x, double y) { return envelope(x, y, -1.0); }

Interval triangle_interval(TriangleInputs in, Model model) {
    const double x = in.r_ab;
    const double y = in.r_ac;
    double lo = 0.0;
    double hi = 1.0;
    switch (model) {
        case Model::PureQudit:
            lo = (x + y > 1.0) ? f_minus(x, y) : 0.0;
            hi = f_plus(x, y);
            break;
        case Model::Qubit:
            lo = f_minus(x, y);
            hi = f_plus(x, y);
            break;
        case Model::Classical:
            lo = classical_lower(x, y);
            hi = classical_upper(x, y);
            break;
    }
    return Interval(std::min(lo, hi), hi);
}

Interval triangle_interval_lifted(const Interval& rx, const Interval& ry, Model model) {
    // Upper endpoint. Every model's upper bound is maximal when the two
    // inputs can be equal, where it reaches 1. For disjoint input ranges it
    // is evaluated at the nearest pair of endpoints: in angle coordinates
    // the bound decreases with the angle gap, so the closest admissible
    // inputs maximize it.
    double hi;
    const bool overlap = rx.lo() <= ry.hi() && ry.lo() <= rx.hi();
    if (overlap) {
        hi = 1.0;
    } else {
        const double x = (rx.hi() < ry.lo()) ? rx.hi() : rx.lo();
        const double y = (rx.hi() < ry.lo()) ? ry.lo() : ry.hi();
        hi = (model == Model::Classical) ? classical_upper(x, y) : f_plus(x, y);
    }

    // Lower endpoint.
    double lo = 0.0;
    switch (model) {
        case Model::Classical:
            // max(0, x + y - 1) is nondecreasing in both arguments.
            lo = classical_lower(rx.lo(), ry.lo());
            break;
        case Model::PureQudit:
            // The gated bound is nondecreasing in both arguments (it grows
            // with the overlaps inside the gate and is 0 outside), so the
            // rectangle minimum sits at the lower-left corner.
            lo = (rx.lo() + ry.lo() > 1.0) ? f_minus(rx.lo(), ry.lo()) : 0.0;
            break;
        case Model::Qubit:
            // Ungated f_minus is cos^2 of the angle sum, smallest where the
            // sum is nearest a right angle. The angle sum decreases in each
            // overlap, and crosses the right angle exactly where x + y
            // crosses 1, giving three cases over the rectangle.
            if (rx.lo() + ry.lo() >= 1.0) {
                lo = f_minus(rx.lo(), ry.lo());
            } else if (rx.hi() + ry.hi() <= 1.0) {
                lo = f_minus(rx.hi(), ry.hi());
            } else {
                lo = 0.0;
            }
            break;
    }
    return Interval(std::min(lo, hi), hi);
}

} // namespace obound
