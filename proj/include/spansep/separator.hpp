#ifndef SPANSEP_SEPARATOR_HPP
#define SPANSEP_SEPARATOR_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spansep/graph.hpp"
#include "spansep/metric.hpp"

namespace spansep {

enum class SeparatorVariant { Lanky, WeaklyLankyThin };

struct SeparatorConfig {
    PackingParams params;
    SeparatorVariant variant = SeparatorVariant::Lanky;
    int resample_budget = 16;
    std::uint64_t rng_seed = 0;
};

struct SeparatorResult {
    std::vector<int> s;                 // separator vertex ids, ascending
    int center = 0;
    double base_radius = 0.0;           // r chosen by the center search
    double final_radius = 0.0;          // r* = (1 + sigma) * r
    std::vector<Edge> cut_edges;        // all edges crossing B(center, r*)
    std::vector<Edge> short_cut_edges;  // cut edges of length <= r*
    int inside_count = 0;               // |B(center, r*)|
    std::vector<int> components;        // component sizes of g - s, descending
};

class SeparatorInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic exhaustive center search: over every vertex v and every
/// candidate radius r drawn from v's distance values (0 included), keep the
/// pair maximizing |B(v,r)| subject to |B(v,2r)| <= n/2; ties prefer the
/// smaller vertex id, then the smaller radius.  Throws SeparatorInfeasible
/// (naming the best near-miss) when even the maximum falls short of
/// n/(2*lambda), which signals a lambda too small for the input.
inline std::pair<int, double> find_center(const WeightedGraph& g, const MetricInput& m,
                                          const PackingParams& params) {
    (void)g;
    int n = m.n();
    if (n < 2) throw std::invalid_argument("find_center: need at least two vertices");
    int best_inside = 0;
    int best_v = -1;
    double best_r = 0.0;
    std::vector<double> d(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        for (int x = 0; x < n; ++x) d[static_cast<std::size_t>(x)] = m.dist(v, x);
        std::sort(d.begin(), d.end());
        for (std::size_t k = 0; k < d.size(); ++k) {
            if (k + 1 < d.size() && d[k + 1] == d[k]) continue;  // same ball, skip duplicate radius
            double r = d[k];
            auto outer = std::upper_bound(d.begin(), d.end(), 2.0 * r) - d.begin();
            if (static_cast<double>(outer) > static_cast<double>(n) / 2.0) continue;
            int inside = static_cast<int>(k) + 1;
            if (inside > best_inside) {
                best_inside = inside;
                best_v = v;
                best_r = r;
            }
        }
    }
    double needed = static_cast<double>(n) / (2.0 * params.lambda);
    if (best_v < 0 || static_cast<double>(best_inside) < needed)
        throw SeparatorInfeasible(
            "find_center: no ball reaches n/(2*lambda) = " + std::to_string(needed) +
            " (best |B(v,r)| = " + std::to_string(best_inside) + " at v=" +
            std::to_string(std::max(best_v, 0)) + ", r=" + std::to_string(best_r) +
            "); lambda is too small for this input");
    return {best_v, best_r};
}

/// Randomized ball-cut separator.  The center search fixes (v, r); the
/// final radius r* = (1 + sigma) * r is chosen among `resample_budget`
/// uniform draws of sigma in [0,1), keeping the draw that cuts the fewest
/// edges of length <= r* (first minimum wins).  The separator is every
/// endpoint of a cut edge (Lanky variant) or only the endpoints inside the
/// ball (WeaklyLankyThin variant).
inline SeparatorResult extract_separator(const WeightedGraph& g, const MetricInput& m,
                                         const SeparatorConfig& cfg) {
    int n = m.n();
    if (n < 2) throw std::invalid_argument("extract_separator: need at least two vertices");
    if (g.n() != n) throw std::invalid_argument("extract_separator: graph/metric size mismatch");
    if (cfg.resample_budget < 1) throw std::invalid_argument("extract_separator: empty budget");

    auto [center, r] = find_center(g, m, cfg.params);
    if (r == 0.0) {
        // Degenerate singleton ball: use half the closest positive distance
        // so the inflated radius still encloses only the center.
        double closest = kInf;
        for (int x = 0; x < n; ++x)
            if (x != center) closest = std::min(closest, m.dist(center, x));
        r = closest / 2.0;
    }

    std::vector<double> d(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) d[static_cast<std::size_t>(x)] = m.dist(center, x);

    std::uint64_t rng = cfg.rng_seed;
    double best_rstar = 0.0;
    long best_short = -1;
    for (int k = 0; k < cfg.resample_budget; ++k) {
        double rstar = (1.0 + detail::uniform01(rng)) * r;
        long short_cut = 0;
        for (const Edge& e : g.edges()) {
            bool iu = d[static_cast<std::size_t>(e.u)] <= rstar;
            bool iv = d[static_cast<std::size_t>(e.v)] <= rstar;
            if (iu != iv && e.w <= rstar) ++short_cut;
        }
        if (best_short < 0 || short_cut < best_short) {
            best_short = short_cut;
            best_rstar = rstar;
        }
    }

    SeparatorResult res;
    res.center = center;
    res.base_radius = r;
    res.final_radius = best_rstar;
    std::vector<char> in_sep(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        bool iu = d[static_cast<std::size_t>(e.u)] <= best_rstar;
        bool iv = d[static_cast<std::size_t>(e.v)] <= best_rstar;
        if (iu == iv) continue;
        res.cut_edges.push_back(e);
        if (e.w <= best_rstar) res.short_cut_edges.push_back(e);
        if (cfg.variant == SeparatorVariant::Lanky) {
            in_sep[static_cast<std::size_t>(e.u)] = 1;
            in_sep[static_cast<std::size_t>(e.v)] = 1;
        } else {
            in_sep[static_cast<std::size_t>(iu ? e.u : e.v)] = 1;
        }
    }
    for (int x = 0; x < n; ++x) {
        if (d[static_cast<std::size_t>(x)] <= best_rstar) ++res.inside_count;
        if (in_sep[static_cast<std::size_t>(x)]) res.s.push_back(x);
    }
    auto label = connected_components(g, &in_sep);
    int comp_count = 0;
    for (int l : label) comp_count = std::max(comp_count, l + 1);
    res.components.assign(static_cast<std::size_t>(comp_count), 0);
    for (int l : label)
        if (l >= 0) ++res.components[static_cast<std::size_t>(l)];
    std::sort(res.components.begin(), res.components.end(), std::greater<int>());
    return res;
}

/// Node of a recursive balanced decomposition.  `vertices` are original
/// ids; `sep` (absent on leaves) is the node's separator result with every
/// vertex id translated back to the original numbering.
struct DecompositionNode {
    std::vector<int> vertices;
    std::optional<SeparatorResult> sep;
    std::vector<DecompositionNode> children;
};

namespace detail {

inline std::uint64_t child_seed(std::uint64_t seed, int child_index) {
    return splitmix64(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(child_index + 1)));
}

inline MetricInput restrict_metric(const MetricInput& m, const std::vector<int>& ids) {
    MetricInput sub;
    sub.kind = m.kind;
    sub.dim = m.dim;
    sub.mu = m.mu;
    sub.scale = m.scale;
    if (m.kind == MetricKind::Matrix) {
        sub.matrix.resize(ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            sub.matrix[i].resize(ids.size());
            for (std::size_t j = 0; j < ids.size(); ++j)
                sub.matrix[i][j] = m.matrix[static_cast<std::size_t>(ids[i])]
                                           [static_cast<std::size_t>(ids[j])];
        }
    } else {
        for (int id : ids) sub.points.push_back(m.points[static_cast<std::size_t>(id)]);
    }
    double hi = 0.0;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) hi = std::max(hi, sub.dist(static_cast<int>(i), static_cast<int>(j)));
    sub.spread = ids.size() > 1 ? hi : 1.0;
    return sub;
}

inline void decompose_rec(const WeightedGraph& g, const MetricInput& m, SeparatorConfig cfg,
                          int leaf_size, DecompositionNode& node) {
    int n = m.n();
    if (n <= leaf_size) return;
    SeparatorResult local = extract_separator(g, m, cfg);

    std::vector<char> in_sep(static_cast<std::size_t>(n), 0);
    for (int v : local.s) in_sep[static_cast<std::size_t>(v)] = 1;
    auto label = connected_components(g, &in_sep);
    int comp_count = 0;
    for (int l : label) comp_count = std::max(comp_count, l + 1);

    // Translate the stored copy to original ids.
    SeparatorResult stored = local;
    auto orig = [&](int v) { return node.vertices[static_cast<std::size_t>(v)]; };
    stored.center = orig(local.center);
    for (int& v : stored.s) v = orig(v);
    for (Edge& e : stored.cut_edges) {
        e.u = orig(e.u);
        e.v = orig(e.v);
    }
    for (Edge& e : stored.short_cut_edges) {
        e.u = orig(e.u);
        e.v = orig(e.v);
    }
    node.sep = std::move(stored);

    // Children: one per component (labels are ordered by smallest local id).
    std::vector<std::vector<int>> members(static_cast<std::size_t>(comp_count));
    for (int v = 0; v < n; ++v)
        if (label[static_cast<std::size_t>(v)] >= 0)
            members[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].push_back(v);
    for (int c = 0; c < comp_count; ++c) {
        const auto& local_ids = members[static_cast<std::size_t>(c)];
        DecompositionNode child;
        for (int v : local_ids) child.vertices.push_back(orig(v));
        if (static_cast<int>(local_ids.size()) > leaf_size && local_ids.size() >= 2) {
            std::vector<int> pos(static_cast<std::size_t>(n), -1);
            for (std::size_t i = 0; i < local_ids.size(); ++i)
                pos[static_cast<std::size_t>(local_ids[i])] = static_cast<int>(i);
            WeightedGraph sub(static_cast<int>(local_ids.size()));
            for (const Edge& e : g.edges()) {
                int pu = pos[static_cast<std::size_t>(e.u)];
                int pv = pos[static_cast<std::size_t>(e.v)];
                if (pu >= 0 && pv >= 0) sub.add_edge(pu, pv, e.w);
            }
            // Restrict by ids in the current level's numbering; child.vertices
            // holds the original ids and would be out of range below the root.
            MetricInput mm = restrict_metric(m, local_ids);
            SeparatorConfig ccfg = cfg;
            ccfg.rng_seed = child_seed(cfg.rng_seed, c);
            decompose_rec(sub, mm, ccfg, leaf_size, child);
        }
        node.children.push_back(std::move(child));
    }
}

}  // namespace detail

/// Recursive balanced decomposition: split with extract_separator until
/// pieces have at most `leaf_size` vertices.  Child RNG seeds derive
/// deterministically from the parent seed and the child index.
inline DecompositionNode recursive_decompose(const WeightedGraph& g, const MetricInput& m,
                                             const SeparatorConfig& cfg, int leaf_size) {
    if (leaf_size < 2) throw std::invalid_argument("recursive_decompose: leaf_size must be >= 2");
    DecompositionNode root;
    for (int v = 0; v < m.n(); ++v) root.vertices.push_back(v);
    detail::decompose_rec(g, m, cfg, leaf_size, root);
    return root;
}

}  // namespace spansep

#endif  // SPANSEP_SEPARATOR_HPP
