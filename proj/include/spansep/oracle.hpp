#ifndef SPANSEP_ORACLE_HPP
#define SPANSEP_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spansep/cgmz.hpp"
#include "spansep/graph.hpp"
#include "spansep/greedy.hpp"
#include "spansep/metric.hpp"
#include "spansep/net_tree.hpp"
#include "spansep/separator.hpp"
#include "spansep/wspd.hpp"

namespace spansep {

struct CheckWitness {
    std::optional<int> center;
    std::optional<double> radius;
    std::vector<Edge> edges;
    std::vector<int> vertices;
    std::string note;
};

struct CheckReport {
    std::string check_name;
    bool passed = true;
    double measured = 0.0;
    std::optional<double> bound;
    std::optional<CheckWitness> witness;
};

struct OracleOptions {
    int exact_limit = 500;      // exhaustive centers/pairs up to this vertex count
    int center_sample = 500;    // sampled centers above the limit
    int pair_sample = 10000;    // sampled pairs / ball-pairs above the limit
    std::uint64_t seed = 0x5eed5eed5eed5eedull;
};

namespace detail {

// Deterministic distinct sample of k ids out of n (partial Fisher-Yates).
inline std::vector<int> sample_ids(int n, int k, std::uint64_t seed) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    if (k >= n) return ids;
    std::uint64_t state = seed;
    for (int i = 0; i < k; ++i) {
        state = splitmix64(state);
        int j = i + static_cast<int>(state % static_cast<std::uint64_t>(n - i));
        std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
    }
    ids.resize(static_cast<std::size_t>(k));
    return ids;
}

// Breakpoint radii for one center: every distance from the center and every
// edge weight.  The cut count as a function of the radius is piecewise
// constant and only changes at these values, so these plus the midpoints
// between consecutive ones realize every attainable count.
inline std::vector<double> breakpoints(const WeightedGraph& g, const std::vector<double>& dist) {
    std::vector<double> b = dist;
    for (const Edge& e : g.edges()) b.push_back(e.w);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

inline std::vector<double> with_midpoints(const std::vector<double>& b) {
    std::vector<double> c;
    c.reserve(b.size() * 2);
    for (std::size_t i = 0; i < b.size(); ++i) {
        c.push_back(b[i]);
        if (i + 1 < b.size()) {
            double mid = b[i] + (b[i + 1] - b[i]) / 2.0;
            if (mid > b[i] && mid < b[i + 1]) c.push_back(mid);
        }
    }
    return c;
}

inline std::vector<int> chosen_centers(int n, const OracleOptions& opts) {
    if (n <= opts.exact_limit) return sample_ids(n, n, 0);
    return sample_ids(n, opts.center_sample, opts.seed);
}

}  // namespace detail

/// Candidate radii used by the lankiness measures for one center: all
/// breakpoints (distances from the center plus edge weights) and the
/// midpoint of every consecutive breakpoint gap.
inline std::vector<double> lankiness_candidate_radii(const WeightedGraph& g, const MetricInput& m,
                                                     int center) {
    std::vector<double> d(static_cast<std::size_t>(m.n()));
    for (int v = 0; v < m.n(); ++v) d[static_cast<std::size_t>(v)] = m.dist(center, v);
    return detail::with_midpoints(detail::breakpoints(g, d));
}

/// Direct evaluation: the largest number of edges of length >= r cut by
/// B(center, r) over the given radii.  Slow but obviously correct; the
/// production measures must agree with it on their own candidate radii.
inline long lankiness_at_radii(const WeightedGraph& g, const MetricInput& m, int center,
                               const std::vector<double>& radii) {
    std::vector<double> d(static_cast<std::size_t>(m.n()));
    for (int v = 0; v < m.n(); ++v) d[static_cast<std::size_t>(v)] = m.dist(center, v);
    long best = 0;
    for (double r : radii) {
        long c = 0;
        for (const Edge& e : g.edges()) {
            bool iu = d[static_cast<std::size_t>(e.u)] <= r;
            bool iv = d[static_cast<std::size_t>(e.v)] <= r;
            if (iu != iv && e.w >= r) ++c;
        }
        best = std::max(best, c);
    }
    return best;
}

/// Lankiness tau of (g, m): the maximum over centers x and radii r of the
/// number of edges of length >= r with exactly one endpoint in B(x, r).
/// Per center, each edge is active on one contiguous run of the candidate
/// radii, so the maximum is found with a difference array over them.
/// Exhaustive over centers up to opts.exact_limit vertices, sampled above.
inline CheckReport measure_lankiness(const WeightedGraph& g, const MetricInput& m,
                                     std::optional<double> bound = std::nullopt,
                                     const OracleOptions& opts = {}) {
    int n = m.n();
    long best = 0;
    int best_center = 0;
    double best_radius = 0.0;
    std::vector<double> d(static_cast<std::size_t>(n));
    for (int x : detail::chosen_centers(n, opts)) {
        for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)] = m.dist(x, v);
        std::vector<double> cand = detail::with_midpoints(detail::breakpoints(g, d));
        std::vector<long> diff(cand.size() + 1, 0);
        auto idx = [&](double val) {
            return static_cast<std::size_t>(
                std::lower_bound(cand.begin(), cand.end(), val) - cand.begin());
        };
        for (const Edge& e : g.edges()) {
            double lo = std::min(d[static_cast<std::size_t>(e.u)], d[static_cast<std::size_t>(e.v)]);
            double hi = std::max(d[static_cast<std::size_t>(e.u)], d[static_cast<std::size_t>(e.v)]);
            if (lo == hi || e.w < lo) continue;
            std::size_t start = idx(lo);
            std::size_t end = e.w < hi ? idx(e.w) : idx(hi) - 1;
            if (end < start) continue;
            ++diff[start];
            --diff[end + 1];
        }
        long run = 0;
        for (std::size_t k = 0; k < cand.size(); ++k) {
            run += diff[k];
            if (run > best) {
                best = run;
                best_center = x;
                best_radius = cand[k];
            }
        }
    }
    CheckReport rep;
    rep.check_name = "lankiness";
    rep.measured = static_cast<double>(best);
    rep.bound = bound;
    rep.passed = !bound || rep.measured <= *bound;
    CheckWitness wit;
    wit.center = best_center;
    wit.radius = best_radius;
    for (const Edge& e : g.edges()) {
        bool iu = m.dist(best_center, e.u) <= best_radius;
        bool iv = m.dist(best_center, e.v) <= best_radius;
        if (iu != iv && e.w >= best_radius) wit.edges.push_back(e);
    }
    rep.witness = std::move(wit);
    return rep;
}

/// Weak lankiness: like measure_lankiness, but counting the vertices inside
/// B(x, r) that touch at least one cut edge of length >= r, rather than the
/// edges themselves.
inline CheckReport measure_weak_lankiness(const WeightedGraph& g, const MetricInput& m,
                                          std::optional<double> bound = std::nullopt,
                                          const OracleOptions& opts = {}) {
    int n = m.n();
    long best = 0;
    int best_center = 0;
    double best_radius = 0.0;
    std::vector<double> d(static_cast<std::size_t>(n));
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    int round = 0;
    for (int x : detail::chosen_centers(n, opts)) {
        for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)] = m.dist(x, v);
        for (double r : detail::with_midpoints(detail::breakpoints(g, d))) {
            ++round;
            long c = 0;
            for (const Edge& e : g.edges()) {
                if (e.w < r) continue;
                bool iu = d[static_cast<std::size_t>(e.u)] <= r;
                bool iv = d[static_cast<std::size_t>(e.v)] <= r;
                if (iu == iv) continue;
                int inside = iu ? e.u : e.v;
                if (stamp[static_cast<std::size_t>(inside)] != round) {
                    stamp[static_cast<std::size_t>(inside)] = round;
                    ++c;
                }
            }
            if (c > best) {
                best = c;
                best_center = x;
                best_radius = r;
            }
        }
    }
    CheckReport rep;
    rep.check_name = "weak-lankiness";
    rep.measured = static_cast<double>(best);
    rep.bound = bound;
    rep.passed = !bound || rep.measured <= *bound;
    CheckWitness wit;
    wit.center = best_center;
    wit.radius = best_radius;
    rep.witness = std::move(wit);
    return rep;
}

namespace detail {

// Edges with one endpoint marked 1 and the other marked 2 by `mark`.
// Iterates the arcs of the smaller side.
inline long crossing_edges(const WeightedGraph& g, const std::vector<int>& side_a,
                           const std::vector<int>& side_b, std::vector<int>& mark, int& round,
                           std::vector<Edge>* out = nullptr) {
    ++round;
    int tag = round * 2;
    for (int v : side_a) mark[static_cast<std::size_t>(v)] = tag;
    for (int v : side_b) mark[static_cast<std::size_t>(v)] = tag + 1;
    const std::vector<int>& small = side_a.size() <= side_b.size() ? side_a : side_b;
    int own = side_a.size() <= side_b.size() ? tag : tag + 1;
    int other = own == tag ? tag + 1 : tag;
    long c = 0;
    for (int v : small)
        for (const auto& arc : g.neighbors(v))
            if (mark[static_cast<std::size_t>(arc.to)] == other) {
                ++c;
                if (out) out->push_back(g.edge(arc.edge_id));
            }
    return c;
}

}  // namespace detail

/// Thinness kappa: the largest number of spanner edges crossing any
/// 1-separated pair of metric balls.  Pairs come from an s=1 decomposition
/// of the net hierarchy plus opts.pair_sample random ball pairs built to be
/// 1-separated by construction (radii at most a quarter of the center
/// distance).
inline CheckReport measure_thinness(const WeightedGraph& g, const MetricInput& m,
                                    const NetHierarchy& tree,
                                    std::optional<double> bound = std::nullopt,
                                    const OracleOptions& opts = {}) {
    int n = m.n();
    std::vector<int> mark(static_cast<std::size_t>(n), -1);
    int round = 0;
    long best = 0;
    CheckWitness wit;

    for (const WspdPair& p : build_wspd(m, tree, 1.0)) {
        long c = detail::crossing_edges(g, p.a, p.b, mark, round);
        if (c > best) {
            best = c;
            wit.vertices = p.a;
            wit.note = "separated pair from the net hierarchy";
        }
    }

    std::uint64_t state = opts.seed;
    for (int trial = 0; trial < opts.pair_sample && n >= 2; ++trial) {
        state = detail::splitmix64(state);
        int x = static_cast<int>(state % static_cast<std::uint64_t>(n));
        state = detail::splitmix64(state);
        int y = static_cast<int>(state % static_cast<std::uint64_t>(n));
        if (x == y) continue;
        double dxy = m.dist(x, y);
        double rx = detail::uniform01(state) * dxy / 4.0;
        double ry = detail::uniform01(state) * dxy / 4.0;
        std::vector<int> a = ball(m, x, rx);
        std::vector<int> b = ball(m, y, ry);
        long c = detail::crossing_edges(g, a, b, mark, round);
        if (c > best) {
            best = c;
            wit.center = x;
            wit.radius = rx;
            wit.note = "random ball pair";
        }
    }

    CheckReport rep;
    rep.check_name = "thinness";
    rep.measured = static_cast<double>(best);
    rep.bound = bound;
    rep.passed = !bound || rep.measured <= *bound;
    rep.witness = std::move(wit);
    return rep;
}

/// At most `bound` spanner edges may cross any pair of an s-separated
/// decomposition; reports the worst pair.
inline CheckReport check_separated_pair_edges(const WeightedGraph& g, const MetricInput& m,
                                              const NetHierarchy& tree, double s, double bound) {
    int n = m.n();
    std::vector<int> mark(static_cast<std::size_t>(n), -1);
    int round = 0;
    long best = -1;
    CheckWitness wit;
    for (const WspdPair& p : build_wspd(m, tree, s)) {
        std::vector<Edge> crossing;
        long c = detail::crossing_edges(g, p.a, p.b, mark, round, &crossing);
        if (c > best) {
            best = c;
            wit.vertices = p.a;
            wit.edges = std::move(crossing);
        }
    }
    CheckReport rep;
    rep.check_name = "separated-pair-edges";
    rep.measured = static_cast<double>(std::max<long>(best, 0));
    rep.bound = bound;
    rep.passed = rep.measured <= bound;
    rep.witness = std::move(wit);
    return rep;
}

namespace detail {

struct StretchScan {
    double worst = 0.0;  // max ratio seen (inf when the spanner misses a finite host pair)
    int wu = -1, wv = -1;
};

inline void stretch_consider(StretchScan& s, int u, int v, double spanner_d, double host_d) {
    if (host_d == kInf || host_d == 0.0) return;  // cross-component or same vertex
    double ratio = spanner_d == kInf ? kInf : spanner_d / host_d;
    if (ratio > s.worst) {
        s.worst = ratio;
        s.wu = u;
        s.wv = v;
    }
}

inline CheckReport stretch_report(const StretchScan& s, double t) {
    CheckReport rep;
    rep.check_name = "stretch";
    rep.measured = s.worst;
    rep.bound = t;
    rep.passed = s.worst <= t * (1.0 + 1e-9);
    if (s.wu >= 0) {
        CheckWitness wit;
        wit.vertices = {s.wu, s.wv};
        wit.note = "worst pair";
        rep.witness = std::move(wit);
    }
    return rep;
}

}  // namespace detail

/// Stretch of g against the full metric: max over pairs of
/// dist_g(u,v) / dist_m(u,v), compared to t with 1e-9 relative tolerance.
/// All pairs up to opts.exact_limit vertices, sampled source/target grid
/// above.  A pair the spanner disconnects fails (ratio +inf).
inline CheckReport verify_stretch(const WeightedGraph& g, const MetricInput& m, double t,
                                  const OracleOptions& opts = {}) {
    int n = m.n();
    detail::StretchScan scan;
    if (n <= opts.exact_limit) {
        for (int u = 0; u < n; ++u) {
            std::vector<double> dg = dijkstra_all(g, u);
            for (int v = u + 1; v < n; ++v)
                detail::stretch_consider(scan, u, v, dg[static_cast<std::size_t>(v)], m.dist(u, v));
        }
    } else {
        int k = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(opts.pair_sample))));
        std::vector<int> sources = detail::sample_ids(n, k, opts.seed);
        std::vector<int> targets = detail::sample_ids(n, k, opts.seed ^ 0xabcdabcdull);
        for (int u : sources) {
            std::vector<double> dg = dijkstra_all(g, u);
            for (int v : targets)
                if (v != u)
                    detail::stretch_consider(scan, u, v, dg[static_cast<std::size_t>(v)], m.dist(u, v));
        }
    }
    return detail::stretch_report(scan, t);
}

/// Stretch of g against an explicit host graph (used for unit-ball
/// instances): pairs the host disconnects are skipped, pairs the host
/// connects but the spanner does not fail.
inline CheckReport verify_stretch(const WeightedGraph& g, const WeightedGraph& host, double t,
                                  const OracleOptions& opts = {}) {
    int n = host.n();
    detail::StretchScan scan;
    std::vector<int> sources;
    if (n <= opts.exact_limit) {
        sources = detail::sample_ids(n, n, 0);
    } else {
        int k = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(opts.pair_sample))));
        sources = detail::sample_ids(n, k, opts.seed);
    }
    for (int u : sources) {
        std::vector<double> dg = dijkstra_all(g, u);
        std::vector<double> dh = dijkstra_all(host, u);
        for (int v = 0; v < n; ++v)
            if (v > u)
                detail::stretch_consider(scan, u, v, dg[static_cast<std::size_t>(v)],
                                         dh[static_cast<std::size_t>(v)]);
    }
    return detail::stretch_report(scan, t);
}

/// The property that drove every greedy insertion, asserted in its strict
/// form on the final graph: deleting any edge (x, y) leaves
/// dist(x, y) > t * w(x, y).  measured is the smallest margin ratio
/// dist_{g-e}(x,y) / (t * w); passing requires it to exceed 1.
inline CheckReport verify_greedy_edge_property(const WeightedGraph& g, double t) {
    CheckReport rep;
    rep.check_name = "greedy-edge-property";
    rep.bound = 1.0;
    double worst = kInf;
    CheckWitness wit;
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        double limit = t * e.w;
        // Search out to twice the limit so passing edges report a real
        // margin instead of +inf; the verdict only needs d > limit.
        double d = shortest_path_dist(g, e.u, e.v, 2.0 * limit, id);
        double ratio = d == kInf ? kInf : d / limit;
        if (ratio < worst) {
            worst = ratio;
            wit.edges = {e};
        }
    }
    rep.measured = worst;
    rep.passed = worst > 1.0;
    if (!wit.edges.empty()) rep.witness = std::move(wit);
    return rep;
}

/// Re-derives every separator invariant from scratch: the radius law
/// r <= r* <= 2r, the inside-count window [n/(2 lambda), n/2], the cut-edge
/// lists, separation (no surviving edge crosses the ball boundary), and
/// balance (largest component of g - S at most n - ceil(n/(2 lambda)),
/// with the stored component sizes matching).
inline CheckReport verify_separator(const SeparatorResult& res, const WeightedGraph& g,
                                    const MetricInput& m, const PackingParams& params) {
    int n = m.n();
    CheckReport rep;
    rep.check_name = "separator";
    rep.passed = true;
    CheckWitness wit;
    auto fail = [&](const std::string& why) {
        rep.passed = false;
        if (wit.note.empty()) wit.note = why;
    };

    if (!(res.base_radius <= res.final_radius && res.final_radius <= 2.0 * res.base_radius))
        fail("radius law violated: r* outside [r, 2r]");

    std::vector<char> inside(static_cast<std::size_t>(n), 0);
    int inside_count = 0;
    for (int v = 0; v < n; ++v)
        if (m.dist(res.center, v) <= res.final_radius) {
            inside[static_cast<std::size_t>(v)] = 1;
            ++inside_count;
        }
    if (inside_count != res.inside_count) fail("inside_count does not match the ball");
    double lo_needed = static_cast<double>(n) / (2.0 * params.lambda);
    if (static_cast<double>(inside_count) < lo_needed ||
        static_cast<double>(inside_count) > static_cast<double>(n) / 2.0)
        fail("inside_count outside [n/(2 lambda), n/2]");

    std::vector<char> in_sep(static_cast<std::size_t>(n), 0);
    for (int v : res.s) in_sep[static_cast<std::size_t>(v)] = 1;
    std::vector<std::pair<int, int>> cut_expected, cut_stored;
    for (const Edge& e : g.edges()) {
        bool iu = inside[static_cast<std::size_t>(e.u)];
        bool iv = inside[static_cast<std::size_t>(e.v)];
        if (iu != iv) {
            cut_expected.push_back({e.u, e.v});
            if (!in_sep[static_cast<std::size_t>(e.u)] && !in_sep[static_cast<std::size_t>(e.v)]) {
                fail("separation violated by a surviving cut edge");
                wit.edges.push_back(e);
            }
        }
    }
    for (const Edge& e : res.cut_edges) cut_stored.push_back({e.u, e.v});
    std::sort(cut_expected.begin(), cut_expected.end());
    std::sort(cut_stored.begin(), cut_stored.end());
    if (cut_expected != cut_stored) fail("stored cut edges do not match the ball boundary");
    for (const Edge& e : res.short_cut_edges)
        if (e.w > res.final_radius) fail("short cut edge longer than r*");

    auto label = connected_components(g, &in_sep);
    int comp_count = 0;
    for (int l : label) comp_count = std::max(comp_count, l + 1);
    std::vector<int> sizes(static_cast<std::size_t>(comp_count), 0);
    for (int l : label)
        if (l >= 0) ++sizes[static_cast<std::size_t>(l)];
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    if (sizes != res.components) fail("stored component sizes do not match g - S");
    long allowed = static_cast<long>(n) -
                   static_cast<long>(std::ceil(static_cast<double>(n) / (2.0 * params.lambda)));
    long largest = sizes.empty() ? 0 : sizes.front();
    if (largest > allowed) fail("balance violated: a component exceeds n - ceil(n/(2 lambda))");

    rep.measured = n > 0 ? static_cast<double>(largest) / static_cast<double>(n) : 0.0;
    rep.bound = n > 0 ? static_cast<double>(allowed) / static_cast<double>(n) : 0.0;
    if (!rep.passed) {
        wit.center = res.center;
        wit.radius = res.final_radius;
        rep.witness = std::move(wit);
    }
    return rep;
}

/// Largest number of X-to-Y spanner edges, grouped by the direction of the
/// Y endpoint seen from an apex, falling into one angular interval of width
/// 2*pi / ceil(2*pi/(eps/8)); checked for every apex in X.  Two-dimensional
/// Euclidean inputs only.
inline long cone_max_per_cone(const WeightedGraph& g, const MetricInput& m, double eps,
                              const std::vector<int>& xs, const std::vector<int>& ys,
                              CheckWitness* wit = nullptr) {
    int n = m.n();
    std::vector<char> in_x(static_cast<std::size_t>(n), 0), in_y(static_cast<std::size_t>(n), 0);
    for (int v : xs) in_x[static_cast<std::size_t>(v)] = 1;
    for (int v : ys) in_y[static_cast<std::size_t>(v)] = 1;
    std::vector<std::pair<int, int>> cross;  // (x endpoint, y endpoint)
    for (const Edge& e : g.edges()) {
        if (in_x[static_cast<std::size_t>(e.u)] && in_y[static_cast<std::size_t>(e.v)])
            cross.push_back({e.u, e.v});
        else if (in_x[static_cast<std::size_t>(e.v)] && in_y[static_cast<std::size_t>(e.u)])
            cross.push_back({e.v, e.u});
    }
    if (cross.empty()) return 0;
    int cones = static_cast<int>(std::ceil(2.0 * M_PI / (eps / 8.0)));
    double width = 2.0 * M_PI / static_cast<double>(cones);
    long best = 0;
    std::vector<std::vector<int>> bucket_edges(static_cast<std::size_t>(cones));
    for (int apex : xs) {
        const auto& ap = m.points[static_cast<std::size_t>(apex)];
        for (auto& b : bucket_edges) b.clear();
        for (std::size_t ci = 0; ci < cross.size(); ++ci) {
            const auto& yp = m.points[static_cast<std::size_t>(cross[ci].second)];
            double ang = std::atan2(yp[1] - ap[1], yp[0] - ap[0]);
            int b = std::min(cones - 1, static_cast<int>((ang + M_PI) / width));
            bucket_edges[static_cast<std::size_t>(b)].push_back(static_cast<int>(ci));
        }
        for (const auto& b : bucket_edges) {
            if (static_cast<long>(b.size()) > best) {
                best = static_cast<long>(b.size());
                if (wit && best > 1) {
                    wit->center = apex;
                    wit->edges.clear();
                    for (int ci : b) {
                        auto [xe, ye] = cross[static_cast<std::size_t>(ci)];
                        wit->edges.push_back({xe, ye, m.dist(xe, ye)});
                    }
                }
            }
        }
    }
    return best;
}

/// Samples (X, Y, R) configurations from the net hierarchy — X a net ball,
/// R scaled so diam(X) <= eps * R / 12, Y everything at distance >= R from
/// X — and checks that no cone of angle eps/8 at any apex of X receives
/// more than one X-to-Y spanner edge.
inline CheckReport verify_cone_property(const WeightedGraph& g, const MetricInput& m,
                                        const NetHierarchy& tree, double eps, int trials,
                                        std::uint64_t seed = 0xc09e5eedull) {
    if (m.kind == MetricKind::Matrix || m.dim != 2)
        throw std::invalid_argument("verify_cone_property: 2-D Euclidean inputs only");
    int n = m.n();
    CheckReport rep;
    rep.check_name = "cone-property";
    rep.bound = 1.0;
    long best = 0;
    int valid = 0;
    std::uint64_t state = seed;
    int attempts = 0;
    CheckWitness wit;
    while (valid < trials && attempts < trials * 40) {
        ++attempts;
        state = detail::splitmix64(state);
        int level = static_cast<int>(state % static_cast<std::uint64_t>(tree.top_level() + 1));
        const auto& net = tree.levels[static_cast<std::size_t>(level)];
        state = detail::splitmix64(state);
        int x = net[static_cast<std::size_t>(state % net.size())];
        std::vector<int> xs = ball(m, x, tree.radius(level));
        double diam = set_diameter(m, xs);
        double r_min = diam > 0.0 ? 12.0 * diam / eps : tree.radius(level);
        std::vector<int> ys;
        for (int v = 0; v < n; ++v) {
            double dv = kInf;
            for (int p : xs) dv = std::min(dv, m.dist(v, p));
            if (dv >= r_min) ys.push_back(v);
        }
        if (ys.empty()) continue;
        ++valid;
        CheckWitness local;
        long c = cone_max_per_cone(g, m, eps, xs, ys, &local);
        if (c > best) {
            best = c;
            wit = std::move(local);
        }
    }
    rep.measured = static_cast<double>(best);
    rep.passed = best <= 1;
    wit.note = std::to_string(valid) + " configurations checked";
    rep.witness = std::move(wit);
    return rep;
}

/// At most one vertex of any ball B(p, r) may touch an edge of length
/// >= 4 * gamma * r.  Checked per center over the radii where either the
/// ball membership or the length threshold changes.
inline CheckReport check_long_edge_uniqueness(const WeightedGraph& g, const MetricInput& m,
                                              double gamma, const OracleOptions& opts = {}) {
    int n = m.n();
    double scale = 4.0 * gamma;
    long best = 0;
    CheckWitness wit;
    std::vector<double> d(static_cast<std::size_t>(n));
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    int round = 0;
    for (int x : detail::chosen_centers(n, opts)) {
        for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)] = m.dist(x, v);
        std::vector<double> b = d;
        for (const Edge& e : g.edges()) b.push_back(e.w / scale);
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        for (double r : detail::with_midpoints(b)) {
            ++round;
            long c = 0;
            for (const Edge& e : g.edges()) {
                if (e.w < scale * r) continue;
                for (int end : {e.u, e.v}) {
                    if (d[static_cast<std::size_t>(end)] <= r &&
                        stamp[static_cast<std::size_t>(end)] != round) {
                        stamp[static_cast<std::size_t>(end)] = round;
                        ++c;
                    }
                }
            }
            if (c > best) {
                best = c;
                wit.center = x;
                wit.radius = r;
            }
        }
    }
    CheckReport rep;
    rep.check_name = "long-edge-uniqueness";
    rep.measured = static_cast<double>(best);
    rep.bound = 1.0;
    rep.passed = best <= 1;
    rep.witness = std::move(wit);
    return rep;
}

/// Every rerouted edge (v, w) -> (v, u) must satisfy both halves of the
/// rewiring argument: the detour edge is short, delta(u, w) <= eps *
/// delta(v, w), and the replacement does not stretch the lost edge,
/// delta(v, w) >= delta(v, u) / (1 + eps).  measured is the worst
/// delta(u, w) / (eps * delta(v, w)) ratio.
inline CheckReport verify_reroute_claims(const OrientedSpanner& sp, const MetricInput& m,
                                         double eps) {
    CheckReport rep;
    rep.check_name = "reroute-claims";
    rep.bound = 1.0;
    rep.passed = true;
    double worst = 0.0;
    CheckWitness wit;
    for (const RerouteRecord& rec : sp.reroute_log) {
        double dvw = m.dist(rec.v, rec.w);
        double duw = m.dist(rec.u, rec.w);
        double dvu = m.dist(rec.v, rec.u);
        double ratio = duw / (eps * dvw);
        bool ok = duw <= eps * dvw && dvw >= dvu / (1.0 + eps);
        if (ratio > worst || !ok) {
            worst = std::max(worst, ratio);
            wit.vertices = {rec.v, rec.w, rec.u};
        }
        if (!ok) rep.passed = false;
    }
    rep.measured = worst;
    wit.note = std::to_string(sp.reroute_log.size()) + " reroutes checked";
    rep.witness = std::move(wit);
    return rep;
}

/// Sparsity report: edge count over vertex count, optionally checked
/// against a ceiling.
inline CheckReport count_edges(const WeightedGraph& g, std::optional<double> max_ratio = std::nullopt) {
    CheckReport rep;
    rep.check_name = "edge-count";
    rep.measured = g.n() > 0 ? static_cast<double>(g.edge_count()) / static_cast<double>(g.n()) : 0.0;
    rep.bound = max_ratio;
    rep.passed = !max_ratio || rep.measured <= *max_ratio;
    return rep;
}

}  // namespace spansep

#endif  // SPANSEP_ORACLE_HPP
