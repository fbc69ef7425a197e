#ifndef SPANSEP_GENERATORS_HPP
#define SPANSEP_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spansep/metric.hpp"

namespace spansep {

/// Integer lattice with side^dim points, lexicographic order.
inline MetricInput grid_points(int side, int dim) {
    if (side < 1 || dim < 1) throw std::invalid_argument("grid_points: side and dim must be >= 1");
    MetricInput m;
    m.kind = MetricKind::Euclidean;
    m.dim = dim;
    long total = 1;
    for (int k = 0; k < dim; ++k) total *= side;
    m.points.reserve(static_cast<std::size_t>(total));
    for (long id = 0; id < total; ++id) {
        std::vector<double> p(static_cast<std::size_t>(dim));
        long rest = id;
        for (int k = dim - 1; k >= 0; --k) {
            p[static_cast<std::size_t>(k)] = static_cast<double>(rest % side);
            rest /= side;
        }
        m.points.push_back(std::move(p));
    }
    return m;
}

/// n points drawn uniformly from the unit cube.
inline MetricInput uniform_points(int n, int dim, std::uint64_t seed) {
    if (n < 1 || dim < 1) throw std::invalid_argument("uniform_points: n and dim must be >= 1");
    MetricInput m;
    m.kind = MetricKind::Euclidean;
    m.dim = dim;
    std::uint64_t state = seed;
    m.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<double> p(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) p[static_cast<std::size_t>(k)] = detail::uniform01(state);
        m.points.push_back(std::move(p));
    }
    return m;
}

/// Self-similar dust in the unit cube: each cell splits into 2^dim half-size
/// cells and the all-ones one is dropped; the surviving cells' lower corners
/// at the final depth are the points.  2-D gives 3^depth points with
/// fractal dimension log2(3).
inline MetricInput cantor_dust(int depth, int dim) {
    if (depth < 0 || dim < 1 || dim > 16)
        throw std::invalid_argument("cantor_dust: need depth >= 0 and 1 <= dim <= 16");
    MetricInput m;
    m.kind = MetricKind::Euclidean;
    m.dim = dim;
    int quads = 1 << dim;
    std::vector<std::vector<double>> cells = {std::vector<double>(static_cast<std::size_t>(dim), 0.0)};
    double size = 1.0;
    for (int level = 0; level < depth; ++level) {
        size /= 2.0;
        std::vector<std::vector<double>> next;
        next.reserve(cells.size() * static_cast<std::size_t>(quads - 1));
        for (const auto& c : cells)
            for (int q = 0; q < quads - 1; ++q) {
                std::vector<double> child = c;
                for (int k = 0; k < dim; ++k)
                    if (q & (1 << k)) child[static_cast<std::size_t>(k)] += size;
                next.push_back(std::move(child));
            }
        cells = std::move(next);
    }
    m.points = std::move(cells);
    return m;
}

/// Collinear points whose consecutive gaps grow geometrically:
/// 0, 1, 1 + base, 1 + base + base^2, ...  Exponential spread in n.
inline MetricInput exp_spread_line(int n, double base) {
    if (n < 1 || base < 1.0)
        throw std::invalid_argument("exp_spread_line: need n >= 1 and base >= 1");
    MetricInput m;
    m.kind = MetricKind::Euclidean;
    m.dim = 1;
    double pos = 0.0, gap = 1.0;
    for (int i = 0; i < n; ++i) {
        m.points.push_back({pos});
        pos += gap;
        gap *= base;
    }
    return m;
}

/// Uniform points carrying a ball radius mu: each point owns a ball of
/// radius mu (mu rescales with the coordinates), and pairs whose balls
/// touch -- center distance <= 2*mu -- become host-graph edges.
inline MetricInput unit_ball_uniform(int n, int dim, double mu, std::uint64_t seed) {
    MetricInput m = uniform_points(n, dim, seed);
    if (!(mu > 0.0)) throw std::invalid_argument("unit_ball_uniform: mu must be positive");
    m.kind = MetricKind::UnitBall;
    m.mu = mu;
    return m;
}

/// The same point set presented as an explicit distance matrix (drops the
/// coordinates, keeping only pairwise distances).
inline MetricInput to_matrix_input(const MetricInput& src) {
    MetricInput m;
    m.kind = MetricKind::Matrix;
    int n = src.n();
    m.matrix.assign(static_cast<std::size_t>(n),
                    std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i == j ? 0.0 : src.dist(i, j);
    return m;
}

}  // namespace spansep

#endif  // SPANSEP_GENERATORS_HPP
