#ifndef SPANSEP_GREEDY_HPP
#define SPANSEP_GREEDY_HPP

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "spansep/graph.hpp"
#include "spansep/metric.hpp"

namespace spansep {

enum class TieBreak { ByIndexPair };

struct GreedyConfig {
    double eps = 0.5;  // must lie in (0, 1/2]
    TieBreak tie = TieBreak::ByIndexPair;
};

/// Candidate edge set the spanner algorithms may use: every pair for a
/// complete metric, only pairs within 2*mu for a unit-ball instance.
/// Sorted by (weight, u, v) ascending.
inline std::vector<Edge> candidate_pairs(const MetricInput& m) {
    std::vector<Edge> out;
    int n = m.n();
    double limit = m.kind == MetricKind::UnitBall ? 2.0 * m.mu : kInf;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double w = m.dist(u, v);
            if (w <= limit) out.push_back({u, v, w});
        }
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    return out;
}

/// The host graph the spanner is measured against: the complete weighted
/// graph for Euclidean/matrix inputs, the unit ball graph (pairs within
/// 2*mu, weighted by center distance) for unit-ball inputs.
inline WeightedGraph host_graph(const MetricInput& m) {
    WeightedGraph g(m.n());
    for (const Edge& e : candidate_pairs(m)) g.add_edge(e.u, e.v, e.w);
    return g;
}

namespace detail {

// Dijkstra specialized for the greedy scan: stops once the popped distance
// exceeds `cutoff`, reuses stamped arrays across calls, and reports exact
// distances for every settled vertex through `settled`.
class BoundedDijkstra {
public:
    explicit BoundedDijkstra(int n)
        : dist_(static_cast<std::size_t>(n)), stamp_(static_cast<std::size_t>(n), 0) {}

    // Returns the exact distance source->target if it is <= cutoff, else
    // kInf.  With exhaust set, keeps sweeping past the target so that
    // `settled` holds every vertex within the cutoff (the guarantee the
    // greedy scan's exactness frontier relies on); otherwise stops at the
    // target.
    double run(const WeightedGraph& g, int source, int target, double cutoff,
               std::vector<std::pair<int, double>>& settled, bool exhaust = false) {
        settled.clear();
        ++round_;
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        set_dist(source, 0.0);
        heap.push({0.0, source});
        double result = kInf;
        while (!heap.empty()) {
            auto [d, u] = heap.top();
            heap.pop();
            if (d > dist_at(u)) continue;
            if (d > cutoff) break;
            settled.push_back({u, d});
            if (u == target) {
                result = d;
                if (!exhaust) break;
            }
            for (const auto& arc : g.neighbors(u)) {
                double nd = d + g.edge(arc.edge_id).w;
                if (nd < dist_at(arc.to)) {
                    set_dist(arc.to, nd);
                    heap.push({nd, arc.to});
                }
            }
        }
        return result;
    }

private:
    double dist_at(int v) const {
        return stamp_[static_cast<std::size_t>(v)] == round_ ? dist_[static_cast<std::size_t>(v)]
                                                             : kInf;
    }
    void set_dist(int v, double d) {
        dist_[static_cast<std::size_t>(v)] = d;
        stamp_[static_cast<std::size_t>(v)] = round_;
    }

    std::vector<double> dist_;
    std::vector<int> stamp_;
    int round_ = 0;
};

}  // namespace detail

/// Path-greedy (1+eps)-spanner.  Candidate pairs are scanned in
/// nondecreasing weight order (ties by index pair); a pair is kept iff the
/// current spanner distance strictly exceeds (1+eps) times its weight.
///
/// Distances already certified short are cached as upper bounds (they only
/// shrink as edges arrive), so most pairs are decided without a Dijkstra
/// run.  A run from u bounded by cutoff c leaves u's cache row exact for
/// every value <= c (anything unsettled provably lies beyond c), and that
/// stays true until the next edge insertion; tracking the frontier per
/// source and growing cutoffs geometrically caps each source at O(log)
/// runs between insertions.  Every decision is made on an exact distance
/// or a bound that settles it, so the edge set matches the plain
/// one-Dijkstra-per-pair greedy exactly.
inline WeightedGraph greedy_spanner(const MetricInput& m, const GreedyConfig& cfg) {
    if (!(cfg.eps > 0.0) || cfg.eps > 0.5)
        throw std::invalid_argument("greedy_spanner: eps must lie in (0, 1/2]");
    int n = m.n();
    WeightedGraph g(n);
    if (n <= 1) return g;
    double t = 1.0 + cfg.eps;

    std::vector<Edge> cand = candidate_pairs(m);
    std::size_t nn = static_cast<std::size_t>(n);
    std::vector<double> bound(nn * nn, kInf);  // upper bounds on current spanner distance
    auto at = [&](int a, int b) -> double& { return bound[static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b)]; };

    std::vector<double> exact_upto(nn, 0.0);       // u's row is exact up to here...
    std::vector<std::uint64_t> row_ver(nn, 0);     // ...while this matches graph_ver
    std::uint64_t graph_ver = 1;

    detail::BoundedDijkstra dijkstra(n);
    std::vector<std::pair<int, double>> settled;
    for (const Edge& e : cand) {
        double limit = t * e.w;
        double d = at(e.u, e.v);
        if (d > limit && !(row_ver[static_cast<std::size_t>(e.u)] == graph_ver &&
                           limit <= exact_upto[static_cast<std::size_t>(e.u)])) {
            double cutoff = std::max(limit, 2.0 * exact_upto[static_cast<std::size_t>(e.u)]);
            d = dijkstra.run(g, e.u, e.v, cutoff, settled, true);
            for (const auto& [x, dx] : settled) {
                double& b1 = at(e.u, x);
                if (dx < b1) b1 = dx;
                double& b2 = at(x, e.u);
                if (dx < b2) b2 = dx;
            }
            exact_upto[static_cast<std::size_t>(e.u)] = cutoff;
            row_ver[static_cast<std::size_t>(e.u)] = graph_ver;
        }
        if (d > limit) {
            g.add_edge(e.u, e.v, e.w);
            if (e.w < at(e.u, e.v)) at(e.u, e.v) = at(e.v, e.u) = e.w;
            ++graph_ver;
        }
    }
    return g;
}

}  // namespace spansep

#endif  // SPANSEP_GREEDY_HPP
