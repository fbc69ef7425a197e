#ifndef SPANSEP_EXPERIMENT_HPP
#define SPANSEP_EXPERIMENT_HPP

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spansep/cgmz.hpp"
#include "spansep/greedy.hpp"
#include "spansep/metric.hpp"
#include "spansep/net_tree.hpp"
#include "spansep/oracle.hpp"
#include "spansep/separator.hpp"

namespace spansep {

/// Shortest-path distances of the unit-ball host graph, packaged as an
/// explicit matrix input (the metric such an instance actually spans).
/// Requires the host graph to be connected.
inline MetricInput ubg_shortest_path_matrix(const MetricInput& m) {
    if (m.kind != MetricKind::UnitBall)
        throw std::invalid_argument("ubg_shortest_path_matrix: unit-ball inputs only");
    WeightedGraph host = host_graph(m);
    int n = m.n();
    MetricInput out;
    out.kind = MetricKind::Matrix;
    out.matrix.assign(static_cast<std::size_t>(n),
                      std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int u = 0; u < n; ++u) {
        std::vector<double> d = dijkstra_all(host, u);
        for (int v = 0; v < n; ++v) {
            if (d[static_cast<std::size_t>(v)] == kInf)
                throw std::invalid_argument("ubg_shortest_path_matrix: host graph is disconnected");
            out.matrix[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                d[static_cast<std::size_t>(v)];
        }
    }
    // Opposite-direction sweeps can differ in the last ulp (different
    // accumulation order along the same path); mirror the upper triangle so
    // the result is exactly symmetric.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            out.matrix[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] =
                out.matrix[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    return out;
}

inline double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median of empty sample");
    std::sort(v.begin(), v.end());
    std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2.0;
}

/// Least-squares slope of y over x.
inline double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("ls_slope: need two aligned samples");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den <= 0.0) throw std::invalid_argument("ls_slope: degenerate x sample");
    return num / den;
}

struct RunSummary {
    std::string label;
    int n = 0;
    int edge_count = 0;
    int max_degree = 0;
    double tau = 0.0;
    double kappa = 0.0;
    int sep_size = -1;               // -1 when no separator was feasible
    double largest_fraction = 1.0;   // largest component of g - S over n
    double wall_ms = 0.0;
};

inline std::string summary_csv_header() {
    return "label,n,edges,max_degree,tau,kappa,sep_size,largest_fraction,wall_ms";
}

inline std::string summary_csv_row(const RunSummary& s) {
    std::ostringstream out;
    out.precision(17);
    out << s.label << "," << s.n << "," << s.edge_count << "," << s.max_degree << "," << s.tau
        << "," << s.kappa << "," << s.sep_size << "," << s.largest_fraction << "," << s.wall_ms;
    return out.str();
}

struct RunArtifacts {
    MetricInput metric;
    WeightedGraph spanner;
    std::optional<SeparatorResult> separator;
    RunSummary summary;
};

/// One end-to-end run: normalize, build the greedy spanner, measure tau and
/// kappa, and extract one separator.  Everything except wall_ms is a pure
/// function of (raw, eps, lambda, seed, variant).
inline RunArtifacts run_instance(const std::string& label, const MetricInput& raw, double eps,
                                 std::optional<double> lambda, std::uint64_t seed,
                                 SeparatorVariant variant = SeparatorVariant::Lanky) {
    auto t0 = std::chrono::steady_clock::now();
    RunArtifacts art;
    art.metric = load_and_normalize(raw);
    GreedyConfig gcfg;
    gcfg.eps = eps;
    art.spanner = greedy_spanner(art.metric, gcfg);

    art.summary.label = label;
    art.summary.n = art.metric.n();
    art.summary.edge_count = art.spanner.edge_count();
    art.summary.max_degree = art.spanner.max_degree();
    art.summary.tau = measure_lankiness(art.spanner, art.metric).measured;
    NetHierarchy tree = build_net_tree(art.metric);
    art.summary.kappa = measure_thinness(art.spanner, art.metric, tree).measured;

    SeparatorConfig scfg;
    scfg.params = default_packing(art.metric.kind == MetricKind::Matrix ? 2 : art.metric.dim);
    if (lambda) scfg.params.lambda = *lambda;
    scfg.variant = variant;
    scfg.rng_seed = seed;
    try {
        art.separator = extract_separator(art.spanner, art.metric, scfg);
        art.summary.sep_size = static_cast<int>(art.separator->s.size());
        if (!art.separator->components.empty())
            art.summary.largest_fraction = static_cast<double>(art.separator->components.front()) /
                                           static_cast<double>(art.summary.n);
        else
            art.summary.largest_fraction = 0.0;
    } catch (const SeparatorInfeasible&) {
        art.summary.sep_size = -1;
        art.summary.largest_fraction = 1.0;
    }
    auto t1 = std::chrono::steady_clock::now();
    art.summary.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return art;
}

}  // namespace spansep

#endif  // SPANSEP_EXPERIMENT_HPP
