#ifndef SPANSEP_WSPD_HPP
#define SPANSEP_WSPD_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "spansep/metric.hpp"
#include "spansep/net_tree.hpp"

namespace spansep {

/// One well-separated pair: dist(a, b) >= s * max(diam(a), diam(b)).
/// `s_achieved` is the exact separation of the emitted pair (+inf when both
/// sides are singletons).
struct WspdPair {
    std::vector<int> a;
    std::vector<int> b;
    double s_achieved = 0.0;
};

namespace detail {

struct WspdNode {
    int level = 0;
    int rep = 0;
    std::vector<int> children;  // node ids one level down
    std::vector<int> pts;       // subtree vertex ids, ascending
    double rad = 0.0;           // max dist(rep, p) over pts
    double diam = -1.0;         // lazy exact diameter
};

class WspdBuilder {
public:
    WspdBuilder(const MetricInput& m, const NetHierarchy& t, double s) : m_(m), s_(s) {
        build_nodes(t);
    }

    std::vector<WspdPair> run(const NetHierarchy& t) {
        pairs_.clear();
        if (!nodes_.empty()) descend(root_);
        (void)t;
        return std::move(pairs_);
    }

private:
    void build_nodes(const NetHierarchy& t) {
        int top = t.top_level();
        if (top < 0 || t.levels[0].empty()) return;
        std::vector<std::vector<int>> id_of(t.levels.size());
        for (int i = 0; i <= top; ++i) {
            const auto& lvl = t.levels[static_cast<std::size_t>(i)];
            id_of[static_cast<std::size_t>(i)].resize(lvl.size());
            for (std::size_t k = 0; k < lvl.size(); ++k) {
                WspdNode nd;
                nd.level = i;
                nd.rep = lvl[k];
                id_of[static_cast<std::size_t>(i)][k] = static_cast<int>(nodes_.size());
                nodes_.push_back(std::move(nd));
            }
        }
        // Wire children through the parent maps (parents live one level up).
        for (int i = 0; i + 1 <= top; ++i) {
            const auto& lvl = t.levels[static_cast<std::size_t>(i)];
            const auto& up = t.levels[static_cast<std::size_t>(i) + 1];
            for (std::size_t k = 0; k < lvl.size(); ++k) {
                int p = t.parent[static_cast<std::size_t>(i)][k];
                std::size_t pk = static_cast<std::size_t>(
                    std::lower_bound(up.begin(), up.end(), p) - up.begin());
                nodes_[static_cast<std::size_t>(id_of[static_cast<std::size_t>(i) + 1][pk])]
                    .children.push_back(id_of[static_cast<std::size_t>(i)][k]);
            }
        }
        // Subtree point sets and radii, bottom-up.
        for (int i = 0; i <= top; ++i) {
            const auto& lvl = t.levels[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < lvl.size(); ++k) {
                int id = id_of[static_cast<std::size_t>(i)][k];
                WspdNode& nd = nodes_[static_cast<std::size_t>(id)];
                if (i == 0) {
                    nd.pts = {nd.rep};
                } else {
                    for (int c : nd.children) {
                        const auto& cp = nodes_[static_cast<std::size_t>(c)].pts;
                        nd.pts.insert(nd.pts.end(), cp.begin(), cp.end());
                    }
                    std::sort(nd.pts.begin(), nd.pts.end());
                }
                nd.rad = 0.0;
                for (int p : nd.pts) nd.rad = std::max(nd.rad, m_.dist(nd.rep, p));
            }
        }
        root_ = id_of[static_cast<std::size_t>(top)][0];
    }

    double diam(int id) {
        WspdNode& nd = nodes_[static_cast<std::size_t>(id)];
        if (nd.diam < 0.0) nd.diam = set_diameter(m_, nd.pts);
        return nd.diam;
    }

    // Conservative test: reps within rad of their whole sets, so
    // dist(A,B) >= dist(rep_u, rep_v) - rad_u - rad_v and diam <= 2*rad.
    bool separated(int u, int v) const {
        const WspdNode& a = nodes_[static_cast<std::size_t>(u)];
        const WspdNode& b = nodes_[static_cast<std::size_t>(v)];
        double gap = m_.dist(a.rep, b.rep) - a.rad - b.rad;
        return gap >= s_ * 2.0 * std::max(a.rad, b.rad);
    }

    void emit(int u, int v) {
        WspdPair p;
        p.a = nodes_[static_cast<std::size_t>(u)].pts;
        p.b = nodes_[static_cast<std::size_t>(v)].pts;
        double md = std::max(diam(u), diam(v));
        p.s_achieved = md == 0.0 ? kInfSep : set_distance(m_, p.a, p.b) / md;
        pairs_.push_back(std::move(p));
    }

    void find_pairs(int u, int v) {
        if (separated(u, v)) {
            emit(u, v);
            return;
        }
        const WspdNode& a = nodes_[static_cast<std::size_t>(u)];
        const WspdNode& b = nodes_[static_cast<std::size_t>(v)];
        bool split_u = a.rad > b.rad || (a.rad == b.rad && a.level >= b.level);
        if (split_u)
            for (int c : a.children) find_pairs(c, v);
        else
            for (int c : b.children) find_pairs(u, c);
    }

    // Every unordered vertex pair splits at exactly one node, so pairing the
    // children of each node covers each pair exactly once.
    void descend(int id) {
        const auto& ch = nodes_[static_cast<std::size_t>(id)].children;
        for (std::size_t i = 0; i < ch.size(); ++i)
            for (std::size_t j = i + 1; j < ch.size(); ++j) find_pairs(ch[i], ch[j]);
        for (int c : ch) descend(c);
    }

    static constexpr double kInfSep = std::numeric_limits<double>::infinity();

    const MetricInput& m_;
    double s_;
    std::vector<WspdNode> nodes_;
    int root_ = -1;
    std::vector<WspdPair> pairs_;
};

}  // namespace detail

/// Well-separated pair decomposition at separation s, built by recursive
/// splitting on the net hierarchy.  Covers every unordered vertex pair
/// exactly once; every emitted pair is at least s-separated.
inline std::vector<WspdPair> build_wspd(const MetricInput& m, const NetHierarchy& t, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("build_wspd: separation must be positive");
    detail::WspdBuilder b(m, t, s);
    return b.run(t);
}

}  // namespace spansep

#endif  // SPANSEP_WSPD_HPP
