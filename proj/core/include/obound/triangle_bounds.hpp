#ifndef OBOUND_TRIANGLE_BOUNDS_HPP
#define OBOUND_TRIANGLE_BOUNDS_HPP

#include "obound/interval.hpp"
#include "obound/model.hpp"

namespace obound {

/// The two overlaps known in a 3-vertex chain: r_ab between the hub and one
/// end, r_ac between the hub and the other end.
struct TriangleInputs {
    double r_ab = 0.0;
    double r_ac = 0.0;
};

/// Upper envelope (sqrt(xy) + sqrt((1-x)(1-y)))^2, clamped into [0,1].
/// Concave on (0,1)^2; equals 1 on the diagonal x == y.
double f_plus(double x, double y);

/// Lower envelope (sqrt(xy) - sqrt((1-x)(1-y)))^2, clamped into [0,1].
/// This is the raw expression without any regime gating; convex on (0,1)^2.
double f_minus(double x, double y);

/// The exact range of the third overlap r_bc given the two measured values,
/// under the chosen model:
///  - PureQudit: [f_minus if r_ab + r_ac > 1 else 0, f_plus]
///  - Qubit:     [f_minus, f_plus] with no gate (holds for mixed qubits too)
///  - Classical: [max(0, r_ab + r_ac - 1), min(1, 1 - |r_ab - r_ac|)]
/// Never empty.
Interval triangle_interval(TriangleInputs in, Model model);

/// Range of the third overlap when the two known values are themselves only
/// known up to intervals: the hull of triangle_interval over the rectangle
/// rx × ry. Closed-form endpoint evaluation; every case is cross-checked
/// against a dense rectangle scan in the test suite.
Interval triangle_interval_lifted(const Interval& rx, const Interval& ry,
                                  Model model);

} // namespace obound

#endif // OBOUND_TRIANGLE_BOUNDS_HPP
