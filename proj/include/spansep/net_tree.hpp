#ifndef SPANSEP_NET_TREE_HPP
#define SPANSEP_NET_TREE_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "spansep/metric.hpp"

namespace spansep {

/// Greedy r-net of `points`: scan in ascending vertex id, keep a point iff
/// it is at distance strictly greater than r from every point kept so far.
/// Every input point then lies within r of some kept point.
inline std::vector<int> build_net(const MetricInput& m, std::vector<int> points, double r) {
    std::sort(points.begin(), points.end());
    std::vector<int> net;
    for (int v : points) {
        bool clear = true;
        for (int u : net)
            if (m.dist(v, u) <= r) {
                clear = false;
                break;
            }
        if (clear) net.push_back(v);
    }
    return net;
}

/// Hierarchy of nested nets N_0 >= N_1 >= ... with radii r_i = 2^i * r0,
/// r0 = 1/4.  Level 0 holds every vertex; the top level (ceil(log2 spread)
/// + 2) holds exactly one.  Each member of N_i points to its closest member
/// of N_{i+1} (ties to the smallest id); istar(v) is the highest level
/// containing v.
struct NetHierarchy {
    double r0 = 0.25;
    std::vector<std::vector<int>> levels;  // levels[i] = sorted ids of N_i
    std::vector<std::vector<int>> parent;  // parent[i][k] = parent id of levels[i][k]; -1 at top
    std::vector<int> istar;                // per vertex id

    int top_level() const { return static_cast<int>(levels.size()) - 1; }
    double radius(int level) const { return std::ldexp(r0, level); }
};

namespace detail {

// Smallest k >= 0 with 2^k >= x (x >= 1), robust to rounding in log2.
inline int ceil_log2(double x) {
    int k = std::max(0, static_cast<int>(std::ceil(std::log2(x))));
    while (std::ldexp(1.0, k) < x) ++k;
    while (k > 0 && std::ldexp(1.0, k - 1) >= x) --k;
    return k;
}

}  // namespace detail

inline NetHierarchy build_net_tree(const MetricInput& m) {
    NetHierarchy t;
    int n = m.n();
    int top = detail::ceil_log2(m.spread) + 2;
    t.levels.resize(static_cast<std::size_t>(top) + 1);
    for (int v = 0; v < n; ++v) t.levels[0].push_back(v);
    for (int i = 1; i <= top; ++i)
        t.levels[static_cast<std::size_t>(i)] =
            build_net(m, t.levels[static_cast<std::size_t>(i) - 1], t.radius(i));

    t.istar.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i <= top; ++i)
        for (int v : t.levels[static_cast<std::size_t>(i)])
            t.istar[static_cast<std::size_t>(v)] = i;

    t.parent.resize(t.levels.size());
    for (int i = 0; i < top; ++i) {
        const auto& cur = t.levels[static_cast<std::size_t>(i)];
        const auto& up = t.levels[static_cast<std::size_t>(i) + 1];
        auto& par = t.parent[static_cast<std::size_t>(i)];
        par.resize(cur.size());
        for (std::size_t k = 0; k < cur.size(); ++k) {
            int best = -1;
            double best_d = 0.0;
            for (int cand : up) {
                double d = m.dist(cur[k], cand);
                if (best == -1 || d < best_d) {
                    best = cand;
                    best_d = d;
                }
            }
            par[k] = best;
        }
    }
    t.parent[static_cast<std::size_t>(top)].assign(t.levels[static_cast<std::size_t>(top)].size(), -1);
    return t;
}

}  // namespace spansep

#endif  // SPANSEP_NET_TREE_HPP
