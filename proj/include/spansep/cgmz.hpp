#ifndef SPANSEP_CGMZ_HPP
#define SPANSEP_CGMZ_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "spansep/graph.hpp"
#include "spansep/metric.hpp"
#include "spansep/net_tree.hpp"

namespace spansep {

/// Configuration for the bounded-degree spanner.  gamma and ell are derived
/// from eps; always construct through make_cgmz_config.
struct CgmzConfig {
    double eps = 0.5;
    double gamma = 68.0;  // 4 + 32/eps
    int ell = 3;          // ceil(1/eps) + 1
};

inline CgmzConfig make_cgmz_config(double eps) {
    if (!(eps > 0.0) || eps > 0.5)
        throw std::invalid_argument("make_cgmz_config: eps must lie in (0, 1/2]");
    CgmzConfig c;
    c.eps = eps;
    c.gamma = 4.0 + 32.0 / eps;
    // Guard against 1/eps landing a hair above an integer in floating point.
    c.ell = static_cast<int>(std::ceil((1.0 / eps) * (1.0 - 1e-12))) + 1;
    return c;
}

/// A level-assigned, orientation-carrying cross edge of the first stage.
/// `head` is the endpoint the edge points at (the one with the higher
/// istar, ties toward the larger id); `tail` is the other endpoint.
struct CrossEdge {
    int tail = 0;
    int head = 0;
    double w = 0.0;
    int level = 0;
};

struct RerouteRecord {
    int v = 0;      // tail of the dropped in-edge
    int w = 0;      // vertex whose in-list overflowed
    int u = 0;      // designated replacement head
    int level = 0;  // level the dropped edge lived on
};

/// Output of the two-stage construction: the level graph g1 with its
/// oriented cross edges and per-(vertex, level) in-neighbor lists, and the
/// degree-reduced final spanner g2 with the log of all reroutes applied.
struct OrientedSpanner {
    WeightedGraph g1;
    std::vector<CrossEdge> cross;
    // Key packs (vertex, level); values are ascending tail ids.
    std::unordered_map<std::uint64_t, std::vector<int>> in_neighbors;
    WeightedGraph g2;
    std::vector<RerouteRecord> reroute_log;

    static std::uint64_t key(int vertex, int level) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(vertex)) << 16) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(level));
    }

    const std::vector<int>* in_list(int vertex, int level) const {
        auto it = in_neighbors.find(key(vertex, level));
        return it == in_neighbors.end() ? nullptr : &it->second;
    }
};

/// Largest per-(vertex, level) in-neighbor set in the oriented graph;
/// bounded by (4 gamma)^d for packable inputs.
inline int max_in_neighbor_count(const OrientedSpanner& os) {
    std::size_t best = 0;
    for (const auto& [k, tails] : os.in_neighbors) best = std::max(best, tails.size());
    return static_cast<int>(best);
}

/// Largest out-degree in the oriented step-1 graph.
inline int max_out_degree(const OrientedSpanner& os, int n) {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    int best = 0;
    for (const CrossEdge& e : os.cross) best = std::max(best, ++out[static_cast<std::size_t>(e.tail)]);
    return best;
}

namespace detail {

// Smallest level i with gamma * r_i >= d (r_i = 2^i / 4), clamped at 0.
inline int first_qualifying_level(double d, double gamma) {
    double target = 4.0 * d / gamma;
    int i = std::max(0, static_cast<int>(std::ceil(std::log2(std::max(target, 1e-300)))));
    while (gamma * std::ldexp(0.25, i) < d) ++i;
    while (i > 0 && gamma * std::ldexp(0.25, i - 1) >= d) --i;
    return i;
}

}  // namespace detail

/// Stage one: every pair that is within gamma * r_i at the smallest level i
/// where both endpoints still live in N_i becomes a cross edge at that
/// level, oriented toward the endpoint with the higher istar (ties toward
/// the larger id).
inline OrientedSpanner cgmz_step1(const MetricInput& m, const NetHierarchy& t,
                                  const CgmzConfig& cfg) {
    OrientedSpanner os;
    int n = m.n();
    os.g1 = WeightedGraph(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            double d = m.dist(u, v);
            int level = detail::first_qualifying_level(d, cfg.gamma);
            int ceiling = std::min(t.istar[static_cast<std::size_t>(u)],
                                   t.istar[static_cast<std::size_t>(v)]);
            if (level > ceiling) continue;  // radius catches up only after an endpoint left the nets
            int iu = t.istar[static_cast<std::size_t>(u)];
            int iv = t.istar[static_cast<std::size_t>(v)];
            int head, tail;
            if (iu < iv) {
                tail = u;
                head = v;
            } else if (iv < iu) {
                tail = v;
                head = u;
            } else {
                tail = std::min(u, v);
                head = std::max(u, v);
            }
            os.g1.add_edge(u, v, d);
            os.cross.push_back({tail, head, d, level});
            os.in_neighbors[OrientedSpanner::key(head, level)].push_back(tail);
        }
    }
    for (auto& [k, list] : os.in_neighbors) std::sort(list.begin(), list.end());
    return os;
}

/// Stage two: for each vertex w, levels carrying in-edges are ranked
/// ascending; in-edges at the first ell ranks are kept, and each in-edge
/// (v -> w) at rank j > ell is rerouted to (v -> u), where u is the
/// smallest-id in-neighbor of w at the level ell ranks below.  The merged
/// undirected result (weights re-read from the metric) becomes g2.
inline OrientedSpanner cgmz_step2(const MetricInput& m, const NetHierarchy& t,
                                  const CgmzConfig& cfg, OrientedSpanner os) {
    (void)t;
    int n = m.n();
    // Per-vertex ascending level lists with at least one in-edge.
    std::vector<std::vector<int>> in_levels(static_cast<std::size_t>(n));
    for (const auto& [k, list] : os.in_neighbors) {
        int vertex = static_cast<int>(k >> 16);
        int level = static_cast<int>(k & 0xffffu);
        if (!list.empty()) in_levels[static_cast<std::size_t>(vertex)].push_back(level);
    }
    for (auto& lv : in_levels) std::sort(lv.begin(), lv.end());

    std::vector<std::pair<int, int>> directed;  // (tail, head) kept or rerouted
    os.reroute_log.clear();
    for (int w = 0; w < n; ++w) {
        const auto& lv = in_levels[static_cast<std::size_t>(w)];
        for (std::size_t j = 0; j < lv.size(); ++j) {
            const auto& tails = os.in_neighbors[OrientedSpanner::key(w, lv[j])];
            if (static_cast<int>(j) < cfg.ell) {
                for (int v : tails) directed.push_back({v, w});
            } else {
                int u = os.in_neighbors[OrientedSpanner::key(w, lv[j - static_cast<std::size_t>(cfg.ell)])]
                            .front();
                for (int v : tails) {
                    directed.push_back({v, u});
                    os.reroute_log.push_back({v, w, u, lv[j]});
                }
            }
        }
    }

    for (auto& [a, b] : directed)
        if (a > b) std::swap(a, b);
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
    os.g2 = WeightedGraph(n);
    for (auto [a, b] : directed) os.g2.add_edge(a, b, m.dist(a, b));
    return os;
}

/// Full two-stage bounded-degree spanner over a normalized metric.
inline OrientedSpanner cgmz_spanner(const MetricInput& m, const NetHierarchy& t,
                                    const CgmzConfig& cfg) {
    return cgmz_step2(m, t, cfg, cgmz_step1(m, t, cfg));
}

inline OrientedSpanner cgmz_spanner(const MetricInput& m, const CgmzConfig& cfg) {
    NetHierarchy t = build_net_tree(m);
    return cgmz_spanner(m, t, cfg);
}

}  // namespace spansep

#endif  // SPANSEP_CGMZ_HPP
