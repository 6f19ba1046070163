#ifndef OBOUND_INTERVAL_HPP
#define OBOUND_INTERVAL_HPP

#include <optional>

namespace obound {

/// Absolute tolerance below which a would-be-empty intersection is still
/// treated as touching. Measured overlaps are floating point; bounds that
/// touch exactly in theory must not report infeasibility.
inline constexpr double kEmptyIntersectionTol = 1e-9;

/// Values this close to the [0,1] boundary are snapped onto it; anything
/// further out is rejected so that bad measurement data stays visible.
inline constexpr double kBoundarySlack = 1e-12;

/// A closed subinterval of [0,1]. Invariant: 0 <= lo <= hi <= 1. An empty
/// set is never represented by an Interval; see intersect().
class Interval {
public:
    /// Defaults to the full interval [0,1].
    Interval() = default;

    /// Throws std::invalid_argument if either endpoint lies outside [0,1]
    /// by more than kBoundarySlack, or if lo exceeds hi by more than that.
    Interval(double lo, double hi);

    static Interval point(double v) { return Interval(v, v); }
    static Interval full() { return Interval(); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double width() const { return hi_ - lo_; }

    bool contains(double v, double tol = 0.0) const {
        return v >= lo_ - tol && v <= hi_ + tol;
    }
    bool contains(const Interval& other, double tol = 0.0) const {
        return other.lo_ >= lo_ - tol && other.hi_ <= hi_ + tol;
    }
    bool is_point(double tol = 0.0) const { return width() <= tol; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 1.0;
};

/// Largest interval contained in both, or nullopt when the inputs are
/// disjoint by more than kEmptyIntersectionTol. Inputs that miss each other
/// by no more than the tolerance collapse to the touching point.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Smallest interval containing both inputs.
Interval hull(const Interval& a, const Interval& b);

} // namespace obound

#endif // OBOUND_INTERVAL_HPP
