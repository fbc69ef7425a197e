#ifndef SPANSEP_GRAPH_HPP
#define SPANSEP_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace spansep {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kNoEdge = -1;

struct Edge {
    int u = 0;
    int v = 0;
    double w = 0.0;
};

/// Undirected weighted graph with immutable vertex count.  Edges keep their
/// insertion order (builders insert in nondecreasing weight order, so the
/// stored list is itself deterministic for a given input).
class WeightedGraph {
public:
    WeightedGraph() = default;

    explicit WeightedGraph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("WeightedGraph: negative vertex count");
        adj_.resize(static_cast<std::size_t>(n));
    }

    WeightedGraph(int n, const std::vector<Edge>& edges) : WeightedGraph(n) {
        for (const Edge& e : edges) add_edge(e.u, e.v, e.w);
    }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    // Returns the id of the new edge.
    int add_edge(int u, int v, double w) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::out_of_range("WeightedGraph::add_edge: vertex out of range");
        if (u == v) throw std::invalid_argument("WeightedGraph::add_edge: self loop");
        if (!(w >= 0.0)) throw std::invalid_argument("WeightedGraph::add_edge: negative or NaN weight");
        int id = static_cast<int>(edges_.size());
        if (u > v) std::swap(u, v);
        edges_.push_back({u, v, w});
        adj_[static_cast<std::size_t>(u)].push_back({v, id});
        adj_[static_cast<std::size_t>(v)].push_back({u, id});
        return id;
    }

    struct Arc {
        int to;
        int edge_id;
    };

    const std::vector<Arc>& neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }

    int degree(int u) const { return static_cast<int>(adj_[static_cast<std::size_t>(u)].size()); }

    int max_degree() const {
        int best = 0;
        for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
        return best;
    }

    double total_weight() const {
        double s = 0.0;
        for (const Edge& e : edges_) s += e.w;
        return s;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Arc>> adj_;
};

/// Exact single-pair shortest-path distance, or +inf when the distance
/// exceeds `cutoff` or the endpoints are disconnected.  `skip_edge` removes
/// one edge id from consideration (used for edge-deletion queries).
/// A distance exactly equal to the cutoff is returned exactly.
inline double shortest_path_dist(const WeightedGraph& g, int source, int target,
                                 double cutoff = kInf, int skip_edge = kNoEdge) {
    if (source < 0 || source >= g.n() || target < 0 || target >= g.n())
        throw std::out_of_range("shortest_path_dist: vertex out of range");
    if (source == target) return 0.0;
    std::vector<double> dist(static_cast<std::size_t>(g.n()), kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[static_cast<std::size_t>(source)] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(u)]) continue;
        if (d > cutoff) return kInf;
        if (u == target) return d;
        for (const auto& arc : g.neighbors(u)) {
            if (arc.edge_id == skip_edge) continue;
            double nd = d + g.edge(arc.edge_id).w;
            if (nd < dist[static_cast<std::size_t>(arc.to)]) {
                dist[static_cast<std::size_t>(arc.to)] = nd;
                heap.push({nd, arc.to});
            }
        }
    }
    return kInf;
}

/// Distances from `source` to every vertex (+inf where unreachable).
inline std::vector<double> dijkstra_all(const WeightedGraph& g, int source,
                                        int skip_edge = kNoEdge) {
    std::vector<double> dist(static_cast<std::size_t>(g.n()), kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[static_cast<std::size_t>(source)] = 0.0;
    heap.push({0.0, source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(u)]) continue;
        for (const auto& arc : g.neighbors(u)) {
            if (arc.edge_id == skip_edge) continue;
            double nd = d + g.edge(arc.edge_id).w;
            if (nd < dist[static_cast<std::size_t>(arc.to)]) {
                dist[static_cast<std::size_t>(arc.to)] = nd;
                heap.push({nd, arc.to});
            }
        }
    }
    return dist;
}

/// Component label per vertex, labels numbered 0.. in order of smallest
/// contained vertex id.  `blocked[v]` vertices are skipped entirely and
/// labeled -1.
inline std::vector<int> connected_components(const WeightedGraph& g,
                                             const std::vector<char>* blocked = nullptr) {
    std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (label[static_cast<std::size_t>(s)] != -1) continue;
        if (blocked && (*blocked)[static_cast<std::size_t>(s)]) continue;
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& arc : g.neighbors(u)) {
                if (blocked && (*blocked)[static_cast<std::size_t>(arc.to)]) continue;
                if (label[static_cast<std::size_t>(arc.to)] == -1) {
                    label[static_cast<std::size_t>(arc.to)] = next;
                    stack.push_back(arc.to);
                }
            }
        }
        ++next;
    }
    return label;
}

inline int component_count(const WeightedGraph& g) {
    auto label = connected_components(g);
    int c = 0;
    for (int l : label) c = std::max(c, l + 1);
    return c;
}

}  // namespace spansep

#endif  // SPANSEP_GRAPH_HPP
