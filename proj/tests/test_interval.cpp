#include "obound/interval.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace obound;

namespace {

// Random intervals on a coarse grid so that boundary coincidences are exact.
Interval random_interval(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> grid(0, 64);
    int a = grid(rng), b = grid(rng);
    if (a > b) std::swap(a, b);
    return Interval(a / 64.0, b / 64.0);
}

} // namespace

TEST_CASE("intersect on the worked examples") {
    auto r = intersect(Interval(0.2, 0.6), Interval(0.5, 1.0));
    REQUIRE(r.has_value());
    CHECK(r->lo() == doctest::Approx(0.5));
    CHECK(r->hi() == doctest::Approx(0.6));

    r = intersect(Interval::full(), Interval(0.3, 0.3));
    REQUIRE(r.has_value());
    CHECK(r->lo() == 0.3);
    CHECK(r->hi() == 0.3);

    CHECK_FALSE(intersect(Interval(0.0, 0.2), Interval(0.5, 1.0)).has_value());
}

TEST_CASE("near-touching intervals do not report emptiness") {
    const auto r = intersect(Interval(0.0, 0.5), Interval(0.5 + 0.5e-9, 1.0));
    REQUIRE(r.has_value());
    CHECK(r->is_point(1e-9));
    CHECK_FALSE(intersect(Interval(0.0, 0.5), Interval(0.5 + 1e-8, 1.0)).has_value());
}

TEST_CASE("hull on the worked examples") {
    CHECK(hull(Interval(0.0, 0.1), Interval(0.9, 1.0)) == Interval::full());
    CHECK(hull(Interval(0.3, 0.5), Interval(0.4, 0.6)) == Interval(0.3, 0.6));
    const Interval x(0.25, 0.75);
    CHECK(hull(x, x) == x);
}

TEST_CASE("construction enforces the [0,1] invariant with boundary slack") {
    CHECK_THROWS_AS(Interval(-0.01, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Interval(0.0, 1.2), std::invalid_argument);
    CHECK_THROWS_AS(Interval(0.6, 0.4), std::invalid_argument);
    // Accumulated rounding dust snaps onto the boundary.
    CHECK(Interval(-1e-13, 1.0 + 1e-13) == Interval::full());
    CHECK(Interval(0.5 + 1e-13, 0.5).is_point(1e-12));
}

TEST_CASE("intersect and hull algebra") {
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 2000; ++trial) {
        const Interval a = random_interval(rng);
        const Interval b = random_interval(rng);
        const Interval c = random_interval(rng);

        CHECK(hull(a, b) == hull(b, a));
        CHECK(hull(hull(a, b), c) == hull(a, hull(b, c)));
        CHECK(hull(a, a) == a);
        CHECK(hull(a, b).contains(a));

        const auto ab = intersect(a, b);
        const auto ba = intersect(b, a);
        CHECK(ab.has_value() == ba.has_value());
        if (ab) {
            CHECK(*ab == *ba);
            CHECK(a.contains(*ab));
            CHECK(b.contains(*ab));
        }
        CHECK(intersect(a, a) == a);

        // Associativity whenever every intermediate stays nonempty.
        const auto bc = intersect(b, c);
        if (ab && bc) {
            const auto left = intersect(*ab, c);
            const auto right = intersect(a, *bc);
            CHECK(left.has_value() == right.has_value());
            if (left) CHECK(*left == *right);
        }
    }
}
