#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <spansep/cgmz.hpp>
#include <spansep/generators.hpp>
#include <spansep/greedy.hpp>
#include <spansep/net_tree.hpp>
#include <spansep/oracle.hpp>

using namespace spansep;

namespace {

MetricInput line_metric(std::vector<double> xs) {
    MetricInput raw;
    raw.kind = MetricKind::Euclidean;
    raw.dim = 1;
    for (double x : xs) raw.points.push_back({x});
    return load_and_normalize(raw);
}

MetricInput star_metric() {
    MetricInput raw;
    raw.kind = MetricKind::Matrix;
    raw.matrix = {{0.0, 1.0, 1.0, 1.0},
                  {1.0, 0.0, 2.0, 2.0},
                  {1.0, 2.0, 0.0, 2.0},
                  {1.0, 2.0, 2.0, 0.0}};
    return load_and_normalize(raw);
}

}  // namespace

TEST_CASE("lankiness of the unit star counts the hub edges") {
    MetricInput m = star_metric();
    WeightedGraph g(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}});
    CheckReport lanky = measure_lankiness(g, m);
    REQUIRE(lanky.measured == 3.0);
    REQUIRE(lanky.witness.has_value());
    REQUIRE(lanky.witness->center == 0);

    // Only the hub itself sits inside the radius-zero ball, so the weak
    // count collapses to one vertex.
    CheckReport weak = measure_weak_lankiness(g, m);
    REQUIRE(weak.measured == 1.0);
}

TEST_CASE("lankiness and thinness of the unit path") {
    MetricInput m = line_metric({0.0, 1.0, 2.0, 3.0});
    WeightedGraph g(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
    REQUIRE(measure_lankiness(g, m).measured == 2.0);
    NetHierarchy t = build_net_tree(m);
    REQUIRE(measure_thinness(g, m, t).measured == 1.0);
}

TEST_CASE("measured constants of the 4x4 grid greedy spanner") {
    MetricInput m = load_and_normalize(grid_points(4, 2));
    GreedyConfig cfg;
    cfg.eps = 0.5;
    WeightedGraph g = greedy_spanner(m, cfg);
    REQUIRE(g.edge_count() == 24);
    CheckReport lanky = measure_lankiness(g, m);
    REQUIRE(lanky.measured == 10.0);
    NetHierarchy t = build_net_tree(m);
    CheckReport thin = measure_thinness(g, m, t);
    REQUIRE(thin.measured == 1.0);
    CheckReport weak = measure_weak_lankiness(g, m);
    REQUIRE(weak.measured <= 2.0 * lanky.measured);
    REQUIRE(weak.measured >= 1.0);
}

TEST_CASE("difference-array lankiness equals direct per-radius evaluation") {
    struct Case {
        MetricInput m;
    };
    std::vector<MetricInput> inputs;
    inputs.push_back(load_and_normalize(uniform_points(40, 2, 3)));
    inputs.push_back(load_and_normalize(exp_spread_line(24, 3.0)));
    inputs.push_back(
        load_and_normalize(to_matrix_input(load_and_normalize(uniform_points(32, 2, 5)))));
    inputs.push_back(load_and_normalize(cantor_dust(3, 2)));

    GreedyConfig cfg;
    cfg.eps = 0.5;
    for (const MetricInput& m : inputs) {
        WeightedGraph g = greedy_spanner(m, cfg);
        CheckReport fast = measure_lankiness(g, m);
        long slow = 0;
        for (int c = 0; c < m.n(); ++c)
            slow = std::max(slow, lankiness_at_radii(g, m, c, lankiness_candidate_radii(g, m, c)));
        REQUIRE(fast.measured == static_cast<double>(slow));
    }
}

TEST_CASE("stretch verifier reports the violating pair") {
    MetricInput m = line_metric({0.0, 1.0, 3.0});
    WeightedGraph g(3, {{0, 1, 1.0}, {0, 2, 3.0}});
    CheckReport rep = verify_stretch(g, m, 1.5);
    REQUIRE_FALSE(rep.passed);
    REQUIRE(rep.measured == Catch::Approx(2.0));
    REQUIRE(rep.witness.has_value());

    // The same graph passes once the bound covers the detour.
    REQUIRE(verify_stretch(g, m, 2.0).passed);
}

TEST_CASE("stretch verifier fails on disconnection") {
    MetricInput m = line_metric({0.0, 1.0, 2.0});
    WeightedGraph g(3, {{0, 1, 1.0}});
    CheckReport rep = verify_stretch(g, m, 100.0);
    REQUIRE_FALSE(rep.passed);
    REQUIRE(std::isinf(rep.measured));
}

TEST_CASE("host-graph stretch skips pairs the host itself disconnects") {
    MetricInput m = line_metric({0.0, 1.0, 2.0, 50.0, 51.0});
    WeightedGraph host(5, {{0, 1, 1.0}, {1, 2, 1.0}, {3, 4, 1.0}});
    // Spanner equal to the host: fine despite two components.
    REQUIRE(verify_stretch(host, host, 1.5).passed);
    // Dropping an edge the host needs is a failure.
    WeightedGraph missing(5, {{0, 1, 1.0}, {3, 4, 1.0}});
    CheckReport rep = verify_stretch(missing, host, 1.5);
    REQUIRE_FALSE(rep.passed);
}

TEST_CASE("greedy edge property verifier flags a redundant edge") {
    MetricInput m = line_metric({0.0, 1.0, 2.0});
    WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 2.0}});
    CheckReport rep = verify_greedy_edge_property(g, 1.5);
    REQUIRE_FALSE(rep.passed);
    REQUIRE(rep.measured == Catch::Approx(2.0 / 3.0));

    GreedyConfig cfg;
    cfg.eps = 0.5;
    MetricInput u = load_and_normalize(uniform_points(60, 2, 12));
    CheckReport ok = verify_greedy_edge_property(greedy_spanner(u, cfg), 1.5);
    REQUIRE(ok.passed);
    REQUIRE(std::isfinite(ok.measured));
    REQUIRE(ok.measured > 1.0);
}

TEST_CASE("cone counter sees two parallel far edges in one cone") {
    MetricInput raw;
    raw.kind = MetricKind::Euclidean;
    raw.dim = 2;
    raw.points = {{0.0, 0.0}, {10.0, 0.0}, {11.0, 0.01}};
    MetricInput m = load_and_normalize(raw);
    WeightedGraph g(3);
    g.add_edge(0, 1, m.dist(0, 1));
    g.add_edge(0, 2, m.dist(0, 2));
    long c = cone_max_per_cone(g, m, 0.5, {0}, {1, 2});
    REQUIRE(c == 2);
}

TEST_CASE("cone property holds on a greedy grid spanner") {
    MetricInput m = load_and_normalize(grid_points(5, 2));
    GreedyConfig cfg;
    cfg.eps = 0.5;
    WeightedGraph g = greedy_spanner(m, cfg);
    NetHierarchy t = build_net_tree(m);
    CheckReport rep = verify_cone_property(g, m, t, 0.5, 60);
    INFO((rep.witness ? rep.witness->note : std::string()));
    REQUIRE(rep.passed);
    REQUIRE(rep.measured <= 1.0);

    MetricInput mx = load_and_normalize(to_matrix_input(m));
    NetHierarchy tx = build_net_tree(mx);
    REQUIRE_THROWS_AS(verify_cone_property(g, mx, tx, 0.5, 10), std::invalid_argument);
    MetricInput m3 = load_and_normalize(uniform_points(10, 3, 1));
    NetHierarchy t3 = build_net_tree(m3);
    WeightedGraph g3 = greedy_spanner(m3, cfg);
    REQUIRE_THROWS_AS(verify_cone_property(g3, m3, t3, 0.5, 10), std::invalid_argument);
}

TEST_CASE("separated-pair edge budget on the unit path") {
    MetricInput m = line_metric({0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0});
    WeightedGraph g(8);
    for (int i = 0; i + 1 < 8; ++i) g.add_edge(i, i + 1, 1.0);
    NetHierarchy t = build_net_tree(m);
    CheckReport ok = check_separated_pair_edges(g, m, t, 2.0, 1.0);
    REQUIRE(ok.passed);
    CheckReport bad = check_separated_pair_edges(g, m, t, 2.0, 0.0);
    REQUIRE_FALSE(bad.passed);
    REQUIRE(bad.witness.has_value());
    REQUIRE_FALSE(bad.witness->edges.empty());
}

TEST_CASE("long-edge uniqueness catches two incident far shooters") {
    MetricInput raw;
    raw.kind = MetricKind::Euclidean;
    raw.dim = 1;
    raw.points = {{0.0}, {1.0}, {300.0}, {-300.0}};
    MetricInput m = load_and_normalize(raw);
    WeightedGraph g(4);
    g.add_edge(0, 2, m.dist(0, 2));
    g.add_edge(1, 3, m.dist(1, 3));
    CheckReport rep = check_long_edge_uniqueness(g, m, 68.0);
    REQUIRE_FALSE(rep.passed);
    REQUIRE(rep.measured == 2.0);
}

TEST_CASE("edge-count ratio check") {
    WeightedGraph g(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
    CheckReport free_rep = count_edges(g);
    REQUIRE(free_rep.measured == Catch::Approx(0.75));
    REQUIRE(free_rep.passed);
    REQUIRE(count_edges(g, 1.0).passed);
    REQUIRE_FALSE(count_edges(g, 0.5).passed);
}

TEST_CASE("sampled verification paths stay deterministic and sound") {
    MetricInput m = load_and_normalize(uniform_points(64, 2, 31));
    GreedyConfig cfg;
    cfg.eps = 0.5;
    WeightedGraph g = greedy_spanner(m, cfg);
    OracleOptions opts;
    opts.exact_limit = 20;  // force the sampled code paths
    opts.center_sample = 30;
    opts.pair_sample = 100;
    CheckReport s1 = verify_stretch(g, m, 1.5, opts);
    CheckReport s2 = verify_stretch(g, m, 1.5, opts);
    REQUIRE(s1.passed);
    REQUIRE(s1.measured == s2.measured);
    CheckReport l1 = measure_lankiness(g, m, std::nullopt, opts);
    CheckReport l2 = measure_lankiness(g, m, std::nullopt, opts);
    REQUIRE(l1.measured == l2.measured);
    CheckReport full = measure_lankiness(g, m);
    REQUIRE(l1.measured <= full.measured);
}
