#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include <spansep/generators.hpp>
#include <spansep/io.hpp>

using namespace spansep;

TEST_CASE("points survive a csv round trip bit for bit") {
    MetricInput m = load_and_normalize(uniform_points(25, 3, 77));
    MetricInput back = points_from_csv(points_to_csv(m));
    REQUIRE(back.dim == 3);
    REQUIRE(back.points.size() == m.points.size());
    for (std::size_t i = 0; i < m.points.size(); ++i)
        for (std::size_t k = 0; k < 3; ++k)
            REQUIRE(back.points[i][k] == m.points[i][k]);
}

TEST_CASE("points csv skips comments and blank lines") {
    MetricInput m = points_from_csv("# header\n\n0,0\n1,0\n# trailing\n");
    REQUIRE(m.n() == 2);
    REQUIRE(m.dim == 2);
    REQUIRE_THROWS(points_from_csv("0,0\n1\n"));
    REQUIRE_THROWS(points_from_csv("# nothing\n"));
}

TEST_CASE("matrices survive a csv round trip") {
    MetricInput m = to_matrix_input(load_and_normalize(uniform_points(12, 2, 9)));
    MetricInput back = matrix_from_csv(matrix_to_csv(m));
    REQUIRE(back.matrix == m.matrix);
}

TEST_CASE("metric json round trip preserves each presentation") {
    MetricInput eu = load_and_normalize(uniform_points(10, 2, 1));
    MetricInput eu2 = metric_from_json(metric_to_json(eu));
    REQUIRE(eu2.kind == MetricKind::Euclidean);
    REQUIRE(eu2.points == eu.points);
    REQUIRE(eu2.dim == 2);

    MetricInput ub = load_and_normalize(unit_ball_uniform(10, 2, 0.3, 2));
    MetricInput ub2 = metric_from_json(metric_to_json(ub));
    REQUIRE(ub2.kind == MetricKind::UnitBall);
    REQUIRE(ub2.mu == ub.mu);
    REQUIRE(ub2.points == ub.points);

    MetricInput mx = to_matrix_input(eu);
    MetricInput mx2 = metric_from_json(metric_to_json(mx));
    REQUIRE(mx2.kind == MetricKind::Matrix);
    REQUIRE(mx2.matrix == mx.matrix);
}

TEST_CASE("graph json round trip") {
    WeightedGraph g(5, {{0, 1, 1.5}, {2, 4, 2.25}, {1, 3, 0.125}});
    WeightedGraph back = graph_from_json(graph_to_json(g));
    REQUIRE(back.n() == 5);
    REQUIRE(back.edge_count() == 3);
    for (int i = 0; i < 3; ++i) {
        REQUIRE(back.edge(i).u == g.edge(i).u);
        REQUIRE(back.edge(i).v == g.edge(i).v);
        REQUIRE(back.edge(i).w == g.edge(i).w);
    }
}

TEST_CASE("check reports serialize non-finite measurements as null") {
    CheckReport rep;
    rep.check_name = "demo";
    rep.passed = false;
    rep.measured = std::numeric_limits<double>::infinity();
    json j = check_to_json(rep);
    REQUIRE(j["measured"].is_null());
    REQUIRE(j["check"] == "demo");
    REQUIRE(j["passed"] == false);

    rep.measured = 2.5;
    rep.bound = 3.0;
    CheckWitness wit;
    wit.center = 4;
    wit.note = "why";
    rep.witness = wit;
    json k = check_to_json(rep);
    REQUIRE(k["measured"] == 2.5);
    REQUIRE(k["bound"] == 3.0);
    REQUIRE(k["witness"]["note"] == "why");
}

TEST_CASE("grid generator walks coordinates lexicographically") {
    MetricInput m = grid_points(3, 2);
    REQUIRE(m.n() == 9);
    REQUIRE(m.points[0] == std::vector<double>{0.0, 0.0});
    REQUIRE(m.points[1] == std::vector<double>{0.0, 1.0});
    REQUIRE(m.points[3] == std::vector<double>{1.0, 0.0});
    REQUIRE(m.points[8] == std::vector<double>{2.0, 2.0});
    std::set<std::vector<double>> uniq(m.points.begin(), m.points.end());
    REQUIRE(uniq.size() == 9);
    REQUIRE(grid_points(4, 3).n() == 64);
    REQUIRE_THROWS_AS(grid_points(0, 2), std::invalid_argument);
}

TEST_CASE("exponential line gaps multiply by the base") {
    MetricInput m = exp_spread_line(5, 3.0);
    std::vector<double> xs;
    for (const auto& p : m.points) xs.push_back(p[0]);
    REQUIRE(xs == std::vector<double>{0.0, 1.0, 4.0, 13.0, 40.0});
    REQUIRE_THROWS_AS(exp_spread_line(3, 0.5), std::invalid_argument);
}

TEST_CASE("uniform generator is seed-deterministic") {
    MetricInput a = uniform_points(20, 2, 42);
    MetricInput b = uniform_points(20, 2, 42);
    MetricInput c = uniform_points(20, 2, 43);
    REQUIRE(a.points == b.points);
    REQUIRE(a.points != c.points);
    for (const auto& p : a.points)
        for (double x : p) {
            REQUIRE(x >= 0.0);
            REQUIRE(x <= 1.0);
        }
}

TEST_CASE("dust generator count follows the survivor rule") {
    // Each square splits in four and drops one corner: 3^depth survivors.
    REQUIRE(cantor_dust(1, 2).n() == 3);
    REQUIRE(cantor_dust(2, 2).n() == 9);
    REQUIRE(cantor_dust(4, 2).n() == 81);
    // In d dimensions the per-step survivor count is 2^d - 1.
    REQUIRE(cantor_dust(2, 3).n() == 49);
    MetricInput m = cantor_dust(3, 2);
    std::set<std::vector<double>> uniq(m.points.begin(), m.points.end());
    REQUIRE(uniq.size() == m.points.size());
}

TEST_CASE("matrix presentation reproduces the source distances") {
    MetricInput src = load_and_normalize(uniform_points(15, 2, 4));
    MetricInput mx = to_matrix_input(src);
    REQUIRE(mx.kind == MetricKind::Matrix);
    for (int i = 0; i < src.n(); ++i)
        for (int j = 0; j < src.n(); ++j)
            REQUIRE(mx.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                    src.dist(i, j));
}

TEST_CASE("text files round trip through the filesystem helpers") {
    std::string path = "io_test_scratch.txt";
    write_text_file(path, "line one\nline two\n");
    REQUIRE(read_text_file(path) == "line one\nline two\n");
    std::remove(path.c_str());
    REQUIRE_THROWS(read_text_file("definitely/not/a/file.txt"));
}
