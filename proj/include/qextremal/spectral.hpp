#ifndef QEXTREMAL_SPECTRAL_HPP
#define QEXTREMAL_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qextremal/errors.hpp"
#include "qextremal/graph.hpp"

namespace qext {

struct SpectralResult {
    double q1 = 0.0;              // Rayleigh quotient at the final iterate
    std::vector<double> perron;   // entrywise positive, unit max entry
    double residual = 0.0;        // infinity norm of Q*x - q1*x
    long iterations = 0;
};

inline constexpr double kDefaultEigTol = 1e-10;
inline constexpr long kPowerIterationCap = 1000000;

// Margin for every strict-inequality claim; differences inside it are
// reported as inconclusive rather than pass/fail.
inline constexpr double kStrictMargin = 1e-9;

// Dense Q(G) = D(G) + A(G).
inline std::vector<std::vector<double>> q_matrix(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<double>> q(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = g.degree(i);
        vs_for_each(g.row(i), [&](int j) { q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1.0; });
    }
    return q;
}

// Power iteration on Q. Connected input makes Q irreducible with a positive
// diagonal, hence primitive, so the iteration converges from the all-ones
// start without shifts. Disconnected input is rejected: the caller must take
// the max over components explicitly.
inline SpectralResult q_index(const Graph& g, double tol = kDefaultEigTol) {
    if (tol <= 0) throw domain_error("q_index needs tol > 0");
    int n = g.vertex_count();
    if (n == 1) return SpectralResult{0.0, {1.0}, 0.0, 0};
    if (!g.is_connected()) throw disconnected_error("q_index requires a connected graph");

    std::vector<double> x(static_cast<std::size_t>(n), 1.0), y(static_cast<std::size_t>(n), 0.0);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) deg[static_cast<std::size_t>(i)] = g.degree(i);

    double rho = 0.0, res = 0.0;
    for (long it = 1; it <= kPowerIterationCap; ++it) {
        for (int i = 0; i < n; ++i) {
            double acc = deg[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            vs_for_each(g.row(i), [&](int j) { acc += x[static_cast<std::size_t>(j)]; });
            y[static_cast<std::size_t>(i)] = acc;
        }
        double xx = 0.0, xy = 0.0;
        for (int i = 0; i < n; ++i) {
            xx += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            xy += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        }
        rho = xy / xx;
        res = 0.0;
        for (int i = 0; i < n; ++i)
            res = std::max(res, std::abs(y[static_cast<std::size_t>(i)] - rho * x[static_cast<std::size_t>(i)]));
        double ymax = *std::max_element(y.begin(), y.end());
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / ymax;
        if (res < tol) return SpectralResult{rho, std::move(x), res, it};
    }
    throw convergence_error("power iteration cap hit, last residual " + std::to_string(res), res);
}

// Q-index of a possibly disconnected graph: max over components.
inline double q_index_max_over_components(const Graph& g, double tol = kDefaultEigTol) {
    double best = 0.0;
    for (VertexSet comp : g.components()) best = std::max(best, q_index(g.induced(comp), tol).q1);
    return best;
}

// q1(K_n - e) = 3n/2 - 3 + sqrt(n^2 + 4n - 12)/2.
inline double closed_form_kn_minus_e(int n) {
    if (n < 3) throw domain_error("closed_form_kn_minus_e needs n >= 3");
    return 1.5 * n - 3.0 + std::sqrt(static_cast<double>(n) * n + 4.0 * n - 12.0) / 2.0;
}

// Monic cubic x^3 + b x^2 + c x + d with a bracket for its largest real root.
struct CubicSpec {
    double b = 0.0, c = 0.0, d = 0.0;
    double lo = 0.0, hi = 0.0;

    double eval(double x) const { return ((x + b) * x + c) * x + d; }
};

// Bisection for the largest root inside [lo, hi]. A downward grid scan from
// hi picks the rightmost sign change first, so interior roots below it cannot
// capture the bisection.
inline double cubic_largest_root(const CubicSpec& spec, double tol = 1e-12) {
    if (tol <= 0) throw domain_error("cubic_largest_root needs tol > 0");
    if (!(spec.lo < spec.hi)) throw domain_error("cubic bracket is empty");
    double fhi = spec.eval(spec.hi);
    if (fhi == 0.0) return spec.hi;
    if (fhi < 0.0) throw domain_error("cubic bracket has no sign change: f(hi) < 0");

    constexpr int kGrid = 1024;
    double step = (spec.hi - spec.lo) / kGrid;
    double hi = spec.hi, lo = spec.lo;
    bool found = false;
    for (int k = 1; k <= kGrid; ++k) {
        double x = spec.hi - k * step;
        if (k == kGrid) x = spec.lo;
        double fx = spec.eval(x);
        if (fx == 0.0) return x;
        if (fx < 0.0) {
            lo = x;
            hi = spec.hi - (k - 1) * step;
            found = true;
            break;
        }
    }
    if (!found) throw domain_error("cubic bracket has no sign change in [lo, hi]");

    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fm = spec.eval(mid);
        if (fm == 0.0) return mid;
        (fm < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Coefficients of the order-(t+2) double-pendant graph's key cubic:
// x^3 - (3t-4) x^2 + (t-2)(2t-1) x - 2(t-2)(t-3), bracketed by [2t-3, 2t].
inline CubicSpec double_pendant_cubic(int t) {
    if (t < 3) throw domain_error("double_pendant_cubic needs t >= 3");
    CubicSpec spec;
    spec.b = -(3.0 * t - 4.0);
    spec.c = (t - 2.0) * (2.0 * t - 1.0);
    spec.d = -2.0 * (t - 2.0) * (t - 3.0);
    spec.lo = 2.0 * t - 3.0;
    spec.hi = 2.0 * t;
    return spec;
}

// Cubic satisfied by the Q-index of odd_case_family(t, a1):
// q^3 + (5 - 3t - a1) q^2 + (3 a1 t - 8t - 5 a1 + 2t^2 + 6) q + c,
// c = -2 a1^2 - (2t^2 - 10t + 8) a1.
inline CubicSpec odd_case_cubic(int t, int a1) {
    if (t < 4) throw domain_error("odd_case_cubic needs t >= 4");
    if (a1 % 2 != 0 || a1 < 2 || a1 > t - 2)
        throw domain_error("odd_case_cubic needs even a1 with 2 <= a1 <= t-2");
    CubicSpec spec;
    spec.b = 5.0 - 3.0 * t - a1;
    spec.c = 3.0 * a1 * t - 8.0 * t - 5.0 * a1 + 2.0 * static_cast<double>(t) * t + 6.0;
    spec.d = -2.0 * static_cast<double>(a1) * a1 - (2.0 * static_cast<double>(t) * t - 10.0 * t + 8.0) * a1;
    spec.lo = 2.0 * t - 3.0;
    spec.hi = 2.0 * t;
    return spec;
}

inline double odd_case_cubic_residual(int t, int a1, double q) { return odd_case_cubic(t, a1).eval(q); }

// The constant term the odd-case cubic would need for q to be a root:
// c(q) = -q^3 - b q^2 - c q with the coefficients above. Strictly decreasing
// in q beyond 2t-3, which is what pins a1 = t-2 at the extremum.
inline double odd_case_constant_term(int t, int a1, double q) {
    CubicSpec spec = odd_case_cubic(t, a1);
    return -(((q + spec.b) * q + spec.c) * q);
}

// max over u of d(u) + (sum of neighbor degrees) / d(u); tight exactly for
// regular and semiregular bipartite connected graphs.
inline double merris_bound(const Graph& g) {
    int n = g.vertex_count();
    double best = 0.0;
    for (int u = 0; u < n; ++u) {
        int du = g.degree(u);
        if (du == 0) throw domain_error("merris_bound undefined at isolated vertex " + std::to_string(u));
        double sum = 0.0;
        vs_for_each(g.row(u), [&](int v) { sum += g.degree(v); });
        best = std::max(best, du + sum / du);
    }
    return best;
}

inline double degree_bound(const Graph& g) { return 2.0 * g.max_degree(); }

inline bool is_regular(const Graph& g) { return g.max_degree() == g.min_degree(); }

// Bipartite with constant degree inside each side; the second equality case
// of the neighbor-degree-sum bound. Requires a connected graph.
inline bool is_semiregular_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{0};
    color[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        bool odd_cycle = false;
        vs_for_each(g.row(u), [&](int v) {
            if (color[static_cast<std::size_t>(v)] == -1) {
                color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                queue.push_back(v);
            } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                odd_cycle = true;
            }
        });
        if (odd_cycle) return false;
    }
    int side_degree[2] = {-1, -1};
    for (int v = 0; v < n; ++v) {
        int c = color[static_cast<std::size_t>(v)];
        if (c == -1) return false;  // disconnected input
        if (side_degree[c] == -1) side_degree[c] = g.degree(v);
        else if (side_degree[c] != g.degree(v)) return false;
    }
    return true;
}

// (lower, upper) bounds for the extremal Q-index over connected n-vertex
// graphs with no t-leaf star minor: upper 2t-2 always; lower 2t-3 at n = t+1
// and 2t-2-2/(t-1) for n >= t+2.
inline std::pair<double, double> extremal_q_bounds(int t, int n) {
    if (t < 3) throw domain_error("extremal_q_bounds needs t >= 3");
    if (n < t + 1) throw domain_error("extremal_q_bounds needs n >= t+1");
    double upper = 2.0 * t - 2.0;
    double lower = (n == t + 1) ? 2.0 * t - 3.0 : 2.0 * t - 2.0 - 2.0 / (t - 1.0);
    return {lower, upper};
}

}  // namespace qext

#endif
