#ifndef SPANSEP_FRACTAL_HPP
#define SPANSEP_FRACTAL_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spansep/metric.hpp"
#include "spansep/net_tree.hpp"

namespace spansep {

/// Box-counting style dimension estimate.  For each (r, R) pair an r-net of
/// the whole point set is built and the largest number of net points inside
/// any ball B(p, R) centered at a net point is recorded; the estimate is the
/// least-squares slope of log(count) against log(R/r).  Returns nullopt when
/// the slope is undefined (every count is 1, or all R/r ratios coincide).
inline std::optional<double> estimate_fractal_dimension(
    const MetricInput& m, const std::vector<std::pair<double, double>>& radii) {
    if (radii.size() < 2)
        throw std::invalid_argument("estimate_fractal_dimension: need at least two radius pairs");
    for (auto [r, R] : radii)
        if (!(r > 0.0) || R < 2.0 * r)
            throw std::invalid_argument("estimate_fractal_dimension: require r > 0 and R >= 2r");

    std::vector<int> all(static_cast<std::size_t>(m.n()));
    for (int v = 0; v < m.n(); ++v) all[static_cast<std::size_t>(v)] = v;

    std::vector<double> xs, ys;
    bool any_count = false;
    for (auto [r, R] : radii) {
        std::vector<int> net = build_net(m, all, r);
        int best = 0;
        for (int p : net) {
            int c = 0;
            for (int q : net)
                if (m.dist(p, q) <= R) ++c;
            best = std::max(best, c);
        }
        if (best > 1) any_count = true;
        xs.push_back(std::log(R / r));
        ys.push_back(std::log(static_cast<double>(best)));
    }
    if (!any_count) return std::nullopt;

    double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom <= 0.0) return std::nullopt;
    return (n * sxy - sx * sy) / denom;
}

}  // namespace spansep

#endif  // SPANSEP_FRACTAL_HPP
