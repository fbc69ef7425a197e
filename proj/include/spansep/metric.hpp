#ifndef SPANSEP_METRIC_HPP
#define SPANSEP_METRIC_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spansep {

enum class MetricKind { Euclidean, Matrix, UnitBall };

/// Thrown when an input point set or distance matrix fails validation.
/// `witness` holds the offending vertex indices (pair or triple).
class InvalidMetric : public std::runtime_error {
public:
    InvalidMetric(std::string msg, std::vector<int> witness = {})
        : std::runtime_error(std::move(msg)), witness_(std::move(witness)) {}
    const std::vector<int>& witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

/// Packing parameters of the ambient metric: any r-separated subset of a
/// unit ball has at most eta*(1/r)^d points, giving doubling constant
/// lambda <= eta*2^d.
struct PackingParams {
    double d = 2.0;
    double eta = 2.0;
    double lambda = 16.0;
};

inline PackingParams default_packing(int dim) {
    PackingParams p;
    p.d = static_cast<double>(dim);
    p.eta = 2.0;
    p.lambda = std::pow(2.0, static_cast<double>(dim)) * 4.0;
    return p;
}

/// A finite metric space in one of three presentations: an explicit
/// Euclidean point set, a distance matrix, or a unit-ball-graph instance
/// (Euclidean points plus a ball radius mu; the metric itself is the
/// Euclidean one, mu only defines the host graph's candidate edges).
///
/// Always construct through load_and_normalize(): it validates the input
/// and rescales so the smallest positive pairwise distance equals 1.
struct MetricInput {
    MetricKind kind = MetricKind::Euclidean;
    int dim = 0;                              // coordinate dimension (0 for Matrix)
    std::vector<std::vector<double>> points;  // Euclidean / UnitBall
    std::vector<std::vector<double>> matrix;  // Matrix
    double mu = 0.0;                          // UnitBall radius, in normalized units
    double spread = 1.0;                      // max pairwise distance after normalization
    double scale = 1.0;                       // factor applied during normalization

    int n() const {
        return kind == MetricKind::Matrix ? static_cast<int>(matrix.size())
                                          : static_cast<int>(points.size());
    }

    double dist(int i, int j) const {
        if (kind == MetricKind::Matrix) return matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        const auto& a = points[static_cast<std::size_t>(i)];
        const auto& b = points[static_cast<std::size_t>(j)];
        double s = 0.0;
        for (int k = 0; k < dim; ++k) {
            double t = a[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k)];
            s += t * t;
        }
        return std::sqrt(s);
    }
};

namespace detail {

inline void validate_coords(const std::vector<std::vector<double>>& pts, int dim) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (static_cast<int>(pts[i].size()) != dim)
            throw InvalidMetric("point " + std::to_string(i) + " has wrong dimension",
                                {static_cast<int>(i)});
        for (double c : pts[i])
            if (!std::isfinite(c))
                throw InvalidMetric("point " + std::to_string(i) + " has a non-finite coordinate",
                                    {static_cast<int>(i)});
    }
}

// Smallest and largest pairwise distance; rejects duplicates (zero distance
// between distinct indices) naming the offending pair.
inline std::pair<double, double> distance_range(const MetricInput& m) {
    int n = m.n();
    double lo = 0.0, hi = 0.0;
    bool have = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = m.dist(i, j);
            if (d <= 0.0)
                throw InvalidMetric("duplicate points: vertices " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are at distance 0",
                                    {i, j});
            if (!have || d < lo) lo = d;
            if (!have || d > hi) hi = d;
            have = true;
        }
    if (!have) return {1.0, 1.0};  // n <= 1: spread defined as 1
    return {lo, hi};
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Advance `state` and map it to [0, 1).
inline double uniform01(std::uint64_t& state) {
    state = splitmix64(state);
    return static_cast<double>(state >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Validates a raw metric description and rescales it so the minimum
/// positive pairwise distance equals 1 (a no-op when already within 1e-9 of
/// 1, keeping normalization idempotent).  Records the spread.  For matrices
/// this checks symmetry, a zero diagonal, non-negativity, and the triangle
/// inequality (exhaustively for n <= 2000, on 1e5 seeded random triples
/// above), throwing InvalidMetric with a witness pair/triple on failure.
inline MetricInput load_and_normalize(MetricInput raw) {
    int n = raw.n();
    if (n == 0) throw InvalidMetric("empty input");

    if (raw.kind == MetricKind::Matrix) {
        for (int i = 0; i < n; ++i)
            if (static_cast<int>(raw.matrix[static_cast<std::size_t>(i)].size()) != n)
                throw InvalidMetric("matrix row " + std::to_string(i) + " has wrong length", {i});
        for (int i = 0; i < n; ++i) {
            if (raw.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0.0)
                throw InvalidMetric("matrix diagonal entry " + std::to_string(i) + " is nonzero", {i});
            for (int j = 0; j < n; ++j) {
                double d = raw.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (!std::isfinite(d) || d < 0.0)
                    throw InvalidMetric("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") is negative or non-finite",
                                        {i, j});
                if (d != raw.matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                    throw InvalidMetric("matrix is asymmetric at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")",
                                        {i, j});
            }
        }
        auto check_triple = [&](int i, int j, int k) {
            double dik = raw.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            double dij = raw.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            double djk = raw.matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            double slack = 1e-9 * std::max({dik, dij, djk, 1.0});
            if (dik > dij + djk + slack)
                throw InvalidMetric("triangle inequality violated on (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")",
                                    {i, j, k});
        };
        if (n <= 2000) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        if (i != j && j != k && i != k) check_triple(i, j, k);
        } else {
            std::uint64_t state = 0x5eedu;
            for (int t = 0; t < 100000; ++t) {
                auto draw = [&]() {
                    state = detail::splitmix64(state);
                    return static_cast<int>(state % static_cast<std::uint64_t>(n));
                };
                int i = draw(), j = draw(), k = draw();
                if (i != j && j != k && i != k) check_triple(i, j, k);
            }
        }
    } else {
        if (raw.dim <= 0) throw InvalidMetric("dimension must be positive");
        detail::validate_coords(raw.points, raw.dim);
        if (raw.kind == MetricKind::UnitBall && !(raw.mu > 0.0))
            throw InvalidMetric("unit ball radius mu must be positive");
    }

    auto [lo, hi] = detail::distance_range(raw);
    double s = 1.0;
    if (n > 1 && std::abs(lo - 1.0) > 1e-9) s = 1.0 / lo;
    if (s != 1.0) {
        if (raw.kind == MetricKind::Matrix) {
            for (auto& row : raw.matrix)
                for (double& d : row) d *= s;
        } else {
            for (auto& p : raw.points)
                for (double& c : p) c *= s;
            raw.mu *= s;
        }
    }
    raw.scale = s;
    raw.spread = (n > 1) ? hi * s : 1.0;
    return raw;
}

/// Closed metric ball: ids of all vertices v with dist(center, v) <= r,
/// ascending.  r < 0 yields the empty set.
inline std::vector<int> ball(const MetricInput& m, int center, double r) {
    std::vector<int> out;
    if (r < 0.0) return out;
    for (int v = 0; v < m.n(); ++v)
        if (m.dist(center, v) <= r) out.push_back(v);
    return out;
}

/// Largest pairwise distance within a vertex subset (0 for <= 1 vertex).
inline double set_diameter(const MetricInput& m, const std::vector<int>& a) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            d = std::max(d, m.dist(a[i], a[j]));
    return d;
}

/// Smallest cross distance between two vertex subsets (+inf when either is
/// empty).
inline double set_distance(const MetricInput& m, const std::vector<int>& a,
                           const std::vector<int>& b) {
    double d = std::numeric_limits<double>::infinity();
    for (int x : a)
        for (int y : b) d = std::min(d, m.dist(x, y));
    return d;
}

/// Whether dist(a,b) >= c * max(diam(a), diam(b)) (c-separated pair).
inline bool is_separated_pair(const MetricInput& m, const std::vector<int>& a,
                              const std::vector<int>& b, double c) {
    if (a.empty() || b.empty()) throw std::invalid_argument("is_separated_pair: empty side");
    double diam = std::max(set_diameter(m, a), set_diameter(m, b));
    return set_distance(m, a, b) >= c * diam;
}

}  // namespace spansep

#endif  // SPANSEP_METRIC_HPP
