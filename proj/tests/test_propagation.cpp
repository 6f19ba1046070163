#include "obound/propagation.hpp"

#include "obound/oracle.hpp"
#include "obound/triangle_bounds.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace obound;

namespace {

OverlapGraph five_cycle() {
    // A .. E = 0 .. 4; the five measured cycle edges.
    return OverlapGraph(5, {{0, 1, OverlapValue::exact_value(1.0), Provenance::Measured},
                            {1, 2, OverlapValue::exact_value(1.0), Provenance::Measured},
                            {2, 3, OverlapValue::exact_value(0.75), Provenance::Measured},
                            {3, 4, OverlapValue::exact_value(0.75), Provenance::Measured},
                            {4, 0, OverlapValue::exact_value(1.0), Provenance::Measured}});
}

Interval inferred(const InferenceResult& r, int i, int j) {
    const EdgeRecord* e = r.complete.find_edge(i, j);
    REQUIRE(e != nullptr);
    return e->value.interval();
}

OverlapGraph random_connected_graph(int n, std::mt19937_64& rng, double extra_edge_prob) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<EdgeRecord> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({std::min(order[i], order[i + 1]), std::max(order[i], order[i + 1]),
                         OverlapValue::exact_value(unif(rng)), Provenance::Measured});
    }
    OverlapGraph tree(n, edges);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (tree.find_edge(i, j) == nullptr && unif(rng) < extra_edge_prob) {
                edges.push_back({i, j, OverlapValue::exact_value(unif(rng)), Provenance::Measured});
            }
        }
    }
    return OverlapGraph(n, edges);
}

} // namespace

TEST_CASE("five-cycle: first sweep infers the transitive edges") {
    const InferenceResult r = complete_and_tighten(five_cycle(), Model::PureQudit, 1);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 1);

    CHECK(inferred(r, 0, 2) == Interval::point(1.0));  // AC
    CHECK(inferred(r, 1, 4) == Interval::point(1.0));  // BE
    CHECK(inferred(r, 0, 3).lo() == doctest::Approx(0.75).epsilon(1e-12)); // AD
    CHECK(inferred(r, 0, 3).hi() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(inferred(r, 1, 3).lo() == doctest::Approx(0.75).epsilon(1e-12)); // BD
    CHECK(inferred(r, 1, 3).hi() == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(inferred(r, 2, 4).lo() == doctest::Approx(0.25).epsilon(1e-12)); // CE
    CHECK(inferred(r, 2, 4).hi() == 1.0);
}

TEST_CASE("five-cycle: revisiting tightens the last edge to a point") {
    const InferenceResult r = complete_and_tighten(five_cycle(), Model::PureQudit);
    CHECK(r.converged);
    CHECK(r.input_connected);
    CHECK_FALSE(r.infeasible());
    CHECK(inferred(r, 2, 4).lo() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(inferred(r, 2, 4).hi() == 1.0);

    // Measured edges come through verbatim.
    const EdgeRecord* ab = r.complete.find_edge(0, 1);
    CHECK(ab->provenance == Provenance::Measured);
    CHECK(ab->value.exact);
    CHECK(ab->value.lo == 1.0);
}

TEST_CASE("two measured overlaps leave the far pair with the raw triangle range") {
    const OverlapGraph g(3, {{0, 1, OverlapValue::exact_value(0.75), Provenance::Measured},
                             {0, 2, OverlapValue::exact_value(0.75), Provenance::Measured}});
    const InferenceResult r = complete_and_tighten(g, Model::PureQudit);
    CHECK(r.converged);
    CHECK(inferred(r, 1, 2).lo() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(inferred(r, 1, 2).hi() == 1.0);
}

TEST_CASE("contradictory measurements are infeasible with a witness") {
    const OverlapGraph g(3, {{0, 1, OverlapValue::exact_value(1.0), Provenance::Measured},
                             {0, 2, OverlapValue::exact_value(1.0), Provenance::Measured},
                             {1, 2, OverlapValue::exact_value(0.0), Provenance::Measured}});
    const InferenceResult r = complete_and_tighten(g, Model::PureQudit);
    REQUIRE(r.infeasible());
    CHECK_FALSE(r.converged);
    const InfeasibilityWitness& w = *r.infeasible_witness;
    CHECK(w.common_neighbor == 0);
    CHECK(w.b == 1);
    CHECK(w.c == 2);
    CHECK(w.implied.lo() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measured edges are never modified, even when inference would tighten them") {
    // The wide measured range on {1,2} is consistent with, but looser than,
    // what the triangle implies.
    const OverlapGraph g(3, {{0, 1, OverlapValue::exact_value(1.0), Provenance::Measured},
                             {0, 2, OverlapValue::exact_value(1.0), Provenance::Measured},
                             {1, 2, OverlapValue::range(0.5, 1.0), Provenance::Measured}});
    const InferenceResult r = complete_and_tighten(g, Model::PureQudit);
    CHECK_FALSE(r.infeasible());
    const EdgeRecord* e = r.complete.find_edge(1, 2);
    CHECK(e->value.lo == 0.5);
    CHECK(e->value.hi == 1.0);
}

TEST_CASE("disconnected graphs keep cross-component pairs trivial and warn") {
    const OverlapGraph g(4, {{0, 1, OverlapValue::exact_value(1.0), Provenance::Measured},
                             {2, 3, OverlapValue::exact_value(1.0), Provenance::Measured}});
    const InferenceResult r = complete_and_tighten(g, Model::PureQudit);
    CHECK_FALSE(r.input_connected);
    CHECK(inferred(r, 0, 2) == Interval::full());
    CHECK(inferred(r, 1, 3) == Interval::full());
}

TEST_CASE("monotone contraction and idempotence") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 10; ++trial) {
        const OverlapGraph g = random_connected_graph(6, rng, 0.3);
        std::vector<Interval> last;
        for (int sweeps = 1; sweeps <= 4; ++sweeps) {
            const InferenceResult r = complete_and_tighten(g, Model::PureQudit, sweeps);
            std::vector<Interval> now;
            for (int i = 0; i < 6; ++i) {
                for (int j = i + 1; j < 6; ++j) now.push_back(inferred(r, i, j));
            }
            if (!last.empty()) {
                for (size_t k = 0; k < now.size(); ++k) {
                    CHECK(last[k].contains(now[k], 1e-12));
                }
            }
            last = std::move(now);
        }

        // Re-running on the fixpoint output changes nothing.
        const InferenceResult fix = complete_and_tighten(g, Model::PureQudit);
        REQUIRE(fix.converged);
        const InferenceResult again = complete_and_tighten(fix.complete, Model::PureQudit);
        for (int i = 0; i < 6; ++i) {
            for (int j = i + 1; j < 6; ++j) {
                const Interval a = inferred(fix, i, j);
                const Interval b = again.complete.find_edge(i, j)->value.interval();
                CHECK(std::abs(a.lo() - b.lo()) <= 1e-12);
                CHECK(std::abs(a.hi() - b.hi()) <= 1e-12);
            }
        }
    }
}

TEST_CASE("results are equivariant under vertex relabeling") {
    std::mt19937_64 rng(31337);
    const OverlapGraph g = random_connected_graph(6, rng, 0.4);
    const InferenceResult r = complete_and_tighten(g, Model::PureQudit);

    std::vector<int> perm{5, 3, 0, 4, 1, 2}; // new label of each old vertex
    std::vector<EdgeRecord> relabeled;
    for (const EdgeRecord& e : g.edges()) {
        relabeled.push_back({perm[e.i], perm[e.j], e.value, e.provenance});
    }
    const InferenceResult rp = complete_and_tighten(OverlapGraph(6, relabeled), Model::PureQudit);

    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            const Interval a = r.complete.find_edge(i, j)->value.interval();
            const Interval b = rp.complete.find_edge(perm[i], perm[j])->value.interval();
            CHECK(std::abs(a.lo() - b.lo()) <= 1e-12);
            CHECK(std::abs(a.hi() - b.hi()) <= 1e-12);
        }
    }
}

TEST_CASE("classical lower bounds via shortest paths") {
    SUBCASE("two measured overlaps around a hub") {
        const OverlapGraph g(3, {{0, 1, OverlapValue::exact_value(0.75), Provenance::Measured},
                                 {0, 2, OverlapValue::exact_value(0.75), Provenance::Measured}});
        const auto lower = classical_lower_map(g);
        CHECK(lower.at({1, 2}) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(lower.at({0, 1}) == doctest::Approx(0.75).epsilon(1e-12));
    }
    SUBCASE("perfect overlaps are transitive") {
        const OverlapGraph g(4, {{0, 1, OverlapValue::exact_value(1.0), Provenance::Measured},
                                 {1, 2, OverlapValue::exact_value(1.0), Provenance::Measured},
                                 {2, 3, OverlapValue::exact_value(1.0), Provenance::Measured}});
        CHECK(classical_lower_map(g).at({0, 3}) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("cross-component pairs get the trivial bound") {
        const OverlapGraph g(4, {{0, 1, OverlapValue::exact_value(0.9), Provenance::Measured},
                                 {2, 3, OverlapValue::exact_value(0.9), Provenance::Measured}});
        CHECK(classical_lower_map(g).at({0, 2}) == 0.0);
    }
    SUBCASE("matches the exhaustive subgraph enumeration on random graphs") {
        std::mt19937_64 rng(2718281);
        for (int trial = 0; trial < 8; ++trial) {
            const OverlapGraph g = random_connected_graph(6, rng, 0.45);
            const auto lower = classical_lower_map(g);
            for (int k = 0; k < 6; ++k) {
                for (int l = k + 1; l < 6; ++l) {
                    const double brute = oracle::connected_subgraph_lower(g, k, l);
                    CHECK(lower.at({k, l}) == doctest::Approx(brute).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("classical lower map dominates the single-triangle bound") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 10; ++trial) {
        const OverlapGraph g = random_connected_graph(5, rng, 0.5);
        const auto lower = classical_lower_map(g);
        for (int a = 0; a < 5; ++a) {
            for (int b = 0; b < 5; ++b) {
                for (int c = b + 1; c < 5; ++c) {
                    if (a == b || a == c) continue;
                    const EdgeRecord* ab = g.find_edge(a, b);
                    const EdgeRecord* ac = g.find_edge(a, c);
                    if (!ab || !ac) continue;
                    const double triangle = ab->value.lo + ac->value.lo - 1.0;
                    CHECK(lower.at({b, c}) >= triangle - 1e-12);
                }
            }
        }
    }
}
