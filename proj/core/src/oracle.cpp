#include "obound/oracle.hpp"

#include "obound/propagation.hpp"
#include "obound/triangle_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace obound::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

double PureState::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return s;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 of the combined value.
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<PureState> haar_pure_states(int n, int d, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("haar_pure_states: n must be >= 1");
    if (d < 2) throw std::invalid_argument("haar_pure_states: d must be >= 2");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<PureState> states;
    states.reserve(n);
    for (int s = 0; s < n; ++s) {
        PureState psi;
        psi.amplitudes.resize(d);
        for (auto& a : psi.amplitudes) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            a = {re, im};
        }
        const double norm = std::sqrt(psi.norm_sq());
        for (auto& a : psi.amplitudes) a /= norm;
        states.push_back(std::move(psi));
    }
    return states;
}

std::vector<std::vector<double>> overlap_matrix(const std::vector<PureState>& states) {
    const int n = static_cast<int>(states.size());
    std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        if (states[i].dimension() != states[0].dimension()) {
            throw std::invalid_argument("overlap_matrix: DimensionMismatch (state " +
                                        std::to_string(i) + ")");
        }
        r[i][i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
            std::complex<double> inner = 0.0;
            const int d = states[i].dimension();
            if (states[j].dimension() != d) {
                throw std::invalid_argument("overlap_matrix: DimensionMismatch (state " +
                                            std::to_string(j) + ")");
            }
            for (int k = 0; k < d; ++k) {
                inner += std::conj(states[i].amplitudes[k]) * states[j].amplitudes[k];
            }
            r[i][j] = r[j][i] = std::norm(inner);
        }
    }
    return r;
}

ScanExtremes triangle_scan(double r_ab, double r_ac, int steps) {
    if (steps < 64) throw std::invalid_argument("triangle_scan: steps must be >= 64");
    const double beta = std::acos(std::sqrt(std::clamp(r_ab, 0.0, 1.0)));
    const double gamma = std::acos(std::sqrt(std::clamp(r_ac, 0.0, 1.0)));

    // r_bc(alpha, phi) = A + B sin^2(alpha) + C sin(alpha) cos(phi), with the
    // third state free to leave the plane of the first two (alpha) and carry
    // a relative phase (phi).
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double cg = std::cos(gamma), sg = std::sin(gamma);
    const double A = cb * cb * cg * cg;
    const double B = sb * sb * sg * sg;
    const double C = 2.0 * sb * cb * sg * cg;

    ScanExtremes ext{1.0, 0.0};
    ext.min_value = std::numeric_limits<double>::infinity();
    ext.max_value = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < steps; ++i) {
        const double alpha = (kPi / 2.0) * i / (steps - 1);
        const double sa = std::sin(alpha);
        const double base = A + B * sa * sa;
        const double amp = C * sa;
        for (int j = 0; j < steps; ++j) {
            const double phi = 2.0 * kPi * j / steps;
            const double v = base + amp * std::cos(phi);
            ext.min_value = std::min(ext.min_value, v);
            ext.max_value = std::max(ext.max_value, v);
        }
    }
    return ext;
}

QubitDensityMatrix QubitDensityMatrix::from_bloch(double x, double y, double z) {
    return {0.5 * (1.0 + z), {0.5 * x, -0.5 * y}};
}

bool QubitDensityMatrix::positive_semidefinite(double tol) const {
    return rho0 >= -tol && rho0 <= 1.0 + tol &&
           std::norm(rho1) <= rho0 * (1.0 - rho0) + tol;
}

double mixed_overlap(const QubitDensityMatrix& rho, const QubitDensityMatrix& sigma) {
    return rho.rho0 * sigma.rho0 + (1.0 - rho.rho0) * (1.0 - sigma.rho0) +
           2.0 * std::real(std::conj(rho.rho1) * sigma.rho1);
}

std::vector<MixedQubitTriple> random_mixed_qubit_triples(int count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("random_mixed_qubit_triples: count must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    auto sample = [&]() {
        // Uniform over the Bloch ball: Gaussian direction, cbrt-radius.
        double x = gauss(rng), y = gauss(rng), z = gauss(rng);
        const double len = std::sqrt(x * x + y * y + z * z);
        const double radius = std::cbrt(unif(rng));
        const double scale = (len > 0.0) ? radius / len : 0.0;
        return QubitDensityMatrix::from_bloch(x * scale, y * scale, z * scale);
    };

    std::vector<MixedQubitTriple> triples;
    triples.reserve(count);
    for (int t = 0; t < count; ++t) {
        MixedQubitTriple tr;
        tr.a = sample();
        tr.b = sample();
        tr.c = sample();
        tr.r_ab = mixed_overlap(tr.a, tr.b);
        tr.r_ac = mixed_overlap(tr.a, tr.c);
        tr.r_bc = mixed_overlap(tr.b, tr.c);
        triples.push_back(tr);
    }
    return triples;
}

SoundnessReport soundness_trial(int n, int d, double edge_fraction, Model model,
                                std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("soundness_trial: n must be >= 3");
    if (edge_fraction <= 0.0 || edge_fraction > 1.0) {
        throw std::invalid_argument("soundness_trial: edge_fraction must be in (0,1]");
    }
    if (model == Model::Classical) {
        throw std::invalid_argument("soundness_trial: the classical model has no state sampler");
    }
    if (model == Model::Qubit && d != 2) {
        throw std::invalid_argument("soundness_trial: Qubit model requires d == 2");
    }

    const auto states = haar_pure_states(n, d, derive_seed(seed, 1));
    const auto r = overlap_matrix(states);

    std::mt19937_64 rng(derive_seed(seed, 2));
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    SoundnessReport report;
    constexpr int kResampleCap = 100;
    std::vector<std::pair<int, int>> kept;
    for (int attempt = 0;; ++attempt) {
        if (attempt == kResampleCap) {
            throw std::runtime_error("DisconnectedSample: no connected edge subset after " +
                                     std::to_string(kResampleCap) + " draws");
        }
        kept.clear();
        UnionFind uf(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (unif(rng) <= edge_fraction) {
                    kept.emplace_back(i, j);
                    uf.unite(i, j);
                }
            }
        }
        bool connected = true;
        for (int v = 1; v < n && connected; ++v) connected = uf.find(v) == uf.find(0);
        if (connected) break;
        ++report.resamples;
    }

    std::vector<EdgeRecord> edges;
    edges.reserve(kept.size());
    for (const auto& [i, j] : kept) {
        edges.push_back({i, j, OverlapValue::exact_value(r[i][j]), Provenance::Measured});
    }
    const OverlapGraph g(n, std::move(edges));

    const InferenceResult result = complete_and_tighten(g, model);
    if (result.infeasible()) {
        report.infeasible = true;
        report.pass = false;
        return report;
    }

    const double tol = 1e-9;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const EdgeRecord* e = result.complete.find_edge(i, j);
            if (e->provenance == Provenance::Measured) continue;
            ++report.held_out_pairs;
            const Interval iv = e->value.interval();
            if (!iv.contains(r[i][j], tol)) {
                ++report.violations;
                const double excess =
                    std::max(iv.lo() - r[i][j], r[i][j] - iv.hi());
                report.worst_excess = std::max(report.worst_excess, excess);
            }
        }
    }
    report.pass = report.violations == 0;
    return report;
}

double connected_subgraph_lower(const OverlapGraph& g, int k, int l) {
    const int n = g.vertex_count();
    if (n > 7) throw std::invalid_argument("connected_subgraph_lower: TooLarge (max 7 vertices)");
    if (k == l || k < 0 || l < 0 || k >= n || l >= n) {
        throw std::invalid_argument("connected_subgraph_lower: bad vertex pair");
    }

    struct Edge {
        int i, j;
        double r;
    };
    std::vector<Edge> edges;
    for (const EdgeRecord& e : g.edges()) {
        if (e.provenance != Provenance::Measured) continue;
        edges.push_back({e.i, e.j, e.value.interval().lo()});
    }
    const int m = static_cast<int>(edges.size());
    if (m > 30) throw std::invalid_argument("connected_subgraph_lower: TooLarge (edge count)");

    double best = 0.0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        UnionFind uf(n);
        int count = 0;
        double sum = 0.0;
        std::uint32_t touched = 0;
        for (int e = 0; e < m; ++e) {
            if (!(mask & (1u << e))) continue;
            uf.unite(edges[e].i, edges[e].j);
            touched |= 1u << edges[e].i;
            touched |= 1u << edges[e].j;
            ++count;
            sum += edges[e].r;
        }
        if (!(touched & (1u << k)) || !(touched & (1u << l))) continue;
        // The chosen edges must form one connected subgraph.
        int root = -1;
        bool connected = true;
        for (int v = 0; v < n && connected; ++v) {
            if (!(touched & (1u << v))) continue;
            if (root < 0) root = uf.find(v);
            else connected = uf.find(v) == root;
        }
        if (!connected) continue;
        best = std::max(best, 1.0 - count + sum);
    }
    return best;
}

Interval rect_grid_extremes(const Interval& rx, const Interval& ry, Model model, int steps) {
    if (steps < 100) throw std::invalid_argument("rect_grid_extremes: steps must be >= 100");
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < steps; ++i) {
        const double x = rx.lo() + rx.width() * i / (steps - 1);
        for (int j = 0; j < steps; ++j) {
            const double y = ry.lo() + ry.width() * j / (steps - 1);
            const Interval t = triangle_interval({x, y}, model);
            lo = std::min(lo, t.lo());
            hi = std::max(hi, t.hi());
        }
    }
    return Interval(lo, hi);
}

} // namespace obound::oracle
