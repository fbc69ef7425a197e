// Acceptance gate: one line per criterion, PASS or FAIL, with the measured
// numbers inline.  The process exit code is the number of failed criteria.
//
// Criterion 5's degree-stability half is expected to fail: the bounded-degree
// construction's theoretical constant at eps = 0.5, d = 2 is on the order of
// (4*gamma)^d ~ 7e4, far above these instance sizes, so the measured maximum
// degree still grows with n at desk scale.  The run prints the honest
// numbers; docs/notes keep the analysis.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <spansep/spansep.hpp>

using namespace spansep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int id, bool passed, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", id, passed ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!passed) ++g_failures;
}

struct Instance {
    std::string name;
    MetricInput m;
};

std::vector<Instance> small_instances() {
    std::vector<Instance> out;
    out.push_back({"grid-22x22", load_and_normalize(grid_points(22, 2))});
    out.push_back({"uniform-300-2d", load_and_normalize(uniform_points(300, 2, 1))});
    out.push_back({"uniform-400-3d", load_and_normalize(uniform_points(400, 3, 2))});
    out.push_back({"ubg-256", load_and_normalize(unit_ball_uniform(256, 2, 0.15, 3))});
    out.push_back({"matrix-200",
                   load_and_normalize(to_matrix_input(load_and_normalize(uniform_points(200, 2, 4))))});
    return out;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

}  // namespace

// --- criteria 1 and 2: exact stretch and the greedy edge property ----------

static void criteria_1_2() {
    bool ok1 = true, ok2 = true;
    std::string d1, d2;
    double worst_greedy = 0.0, worst_cgmz = 0.0, worst_margin = kInf;
    for (Instance& inst : small_instances()) {
        auto t0 = Clock::now();
        GreedyConfig gcfg;
        gcfg.eps = 0.5;
        WeightedGraph g = greedy_spanner(inst.m, gcfg);

        CheckReport sg;
        if (inst.m.kind == MetricKind::UnitBall)
            sg = verify_stretch(g, host_graph(inst.m), 1.5);
        else
            sg = verify_stretch(g, inst.m, 1.5);

        // The degree-reduced construction spans the shortest-path metric of
        // the host graph on unit-ball instances.
        MetricInput base = inst.m.kind == MetricKind::UnitBall
                               ? load_and_normalize(ubg_shortest_path_matrix(inst.m))
                               : inst.m;
        OrientedSpanner os = cgmz_spanner(base, make_cgmz_config(0.5));
        CheckReport sc = verify_stretch(os.g2, base, 3.0);

        double secs = seconds_since(t0);
        if (!sg.passed || !sc.passed || secs > 60.0) {
            ok1 = false;
            d1 += inst.name + (sg.passed ? "" : ":greedy") + (sc.passed ? "" : ":cgmz") +
                  (secs > 60.0 ? ":slow" : "") + " ";
        }
        worst_greedy = std::max(worst_greedy, sg.measured);
        worst_cgmz = std::max(worst_cgmz, sc.measured);

        CheckReport ep = verify_greedy_edge_property(g, 1.5);
        if (!ep.passed) {
            ok2 = false;
            d2 += inst.name + " ";
        }
        worst_margin = std::min(worst_margin, ep.measured);
    }
    report(1, ok1,
           "all-pairs stretch on 5 instances (n<=500): greedy<=1.5 (worst " + fmt(worst_greedy) +
               "), degree-reduced<=3.0 (worst " + fmt(worst_cgmz) + ")" +
               (d1.empty() ? "" : "  offenders: " + d1));
    report(2, ok2,
           "every greedy edge needed: smallest detour margin " + fmt(worst_margin) + " > 1" +
               (d2.empty() ? "" : "  offenders: " + d2));
}

// --- criterion 3: separator validity, zero tolerance ------------------------

static void criterion_3() {
    struct Family {
        std::string name;
        MetricInput m;
        int dim;
    };
    std::vector<Family> fams;
    fams.push_back({"grid-10x10", load_and_normalize(grid_points(10, 2)), 2});
    fams.push_back({"uniform-160", load_and_normalize(uniform_points(160, 2, 5)), 2});
    fams.push_back({"dust-81", load_and_normalize(cantor_dust(4, 2)), 2});
    fams.push_back({"expline-64", load_and_normalize(exp_spread_line(64, 3.0)), 1});
    fams.push_back({"ubg-128", load_and_normalize(unit_ball_uniform(128, 2, 0.2, 6)), 2});
    fams.push_back({"matrix-120",
                    load_and_normalize(to_matrix_input(load_and_normalize(uniform_points(120, 2, 7)))),
                    2});

    bool ok = true;
    std::string bad;
    int runs = 0;
    for (Family& f : fams) {
        GreedyConfig gcfg;
        gcfg.eps = 0.5;
        WeightedGraph g = greedy_spanner(f.m, gcfg);
        for (SeparatorVariant variant :
             {SeparatorVariant::Lanky, SeparatorVariant::WeaklyLankyThin}) {
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                SeparatorConfig cfg;
                cfg.params = default_packing(f.dim);
                cfg.variant = variant;
                cfg.rng_seed = seed;
                try {
                    SeparatorResult res = extract_separator(g, f.m, cfg);
                    ++runs;
                    if (!verify_separator(res, g, f.m, cfg.params).passed) {
                        ok = false;
                        bad += f.name + "/s" + std::to_string(seed) + " ";
                    }
                } catch (const SeparatorInfeasible& e) {
                    ok = false;
                    bad += f.name + "/s" + std::to_string(seed) + ":infeasible ";
                }
            }
        }
    }
    report(3, ok,
           std::to_string(runs) + " seeded extractions across 6 families x 2 variants, " +
               "every result re-verified from scratch" + (bad.empty() ? "" : "  offenders: " + bad));
}

// --- criterion 4: separator size scaling on grids ---------------------------

static void criterion_4() {
    auto t0 = Clock::now();
    std::vector<int> sides = {16, 32, 64};
    std::vector<double> log_n, log_med;
    bool ok = true;
    std::string detail;
    for (int side : sides) {
        MetricInput m = load_and_normalize(grid_points(side, 2));
        GreedyConfig gcfg;
        gcfg.eps = 0.5;
        WeightedGraph g = greedy_spanner(m, gcfg);
        int n = m.n();
        std::vector<double> sizes;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            SeparatorConfig cfg;
            cfg.params = default_packing(2);
            cfg.rng_seed = seed;
            SeparatorResult res = extract_separator(g, m, cfg);
            if (!verify_separator(res, g, m, cfg.params).passed) ok = false;
            sizes.push_back(static_cast<double>(res.s.size()));
            if (static_cast<double>(res.s.size()) > 10.0 * std::sqrt(static_cast<double>(n)))
                ok = false;
        }
        double med = median(sizes);
        detail += "n=" + std::to_string(n) + ":med|S|=" + fmt(med) + " ";
        log_n.push_back(std::log(static_cast<double>(n)));
        log_med.push_back(std::log(med));
    }
    double slope = ls_slope(log_n, log_med);
    double secs = seconds_since(t0);
    if (slope > 0.65) ok = false;
    if (secs > 600.0) ok = false;
    report(4, ok,
           "grid medians over 10 seeds " + detail + "slope " + fmt(slope) +
               " <= 0.65, every |S| <= 10*sqrt(n), verified, " + fmt(secs) + "s");
}

// --- criterion 5: degree stability + reroute claims -------------------------

static void criterion_5() {
    std::vector<int> ns = {256, 1024, 4096};
    std::vector<int> degs;
    bool claims_ok = true;
    std::size_t reroutes = 0;
    for (int n : ns) {
        MetricInput m = load_and_normalize(uniform_points(n, 2, 1));
        OrientedSpanner os = cgmz_spanner(m, make_cgmz_config(0.5));
        degs.push_back(os.g2.max_degree());
        reroutes += os.reroute_log.size();
        if (!verify_reroute_claims(os, m, 0.5).passed) claims_ok = false;
    }
    bool deg_ok = static_cast<double>(degs[2]) <= 1.5 * static_cast<double>(degs[0]);
    report(5, deg_ok && claims_ok,
           "max degree " + std::to_string(degs[0]) + "/" + std::to_string(degs[1]) + "/" +
               std::to_string(degs[2]) + " at n=256/1024/4096 (stability needs " +
               fmt(1.5 * degs[0]) + " at 4096): " + (deg_ok ? "stable" : "grows at desk scale") +
               "; reroute claims " + (claims_ok ? "100% of " : "FAILED among ") +
               std::to_string(reroutes) + " entries");
}

// --- criterion 6: one edge per separated pair at s = 4/eps ------------------

static void criterion_6() {
    std::vector<Instance> insts;
    insts.push_back({"uniform-300-2d", load_and_normalize(uniform_points(300, 2, 1))});
    insts.push_back({"grid-19x19", load_and_normalize(grid_points(19, 2))});
    insts.push_back({"uniform-350-3d", load_and_normalize(uniform_points(350, 3, 8))});
    insts.push_back({"matrix-200",
                     load_and_normalize(to_matrix_input(load_and_normalize(uniform_points(200, 2, 4))))});
    insts.push_back({"expline-matrix-64",
                     load_and_normalize(to_matrix_input(load_and_normalize(exp_spread_line(64, 3.0))))});

    bool ok = true;
    std::string bad;
    double worst = 0.0;
    for (Instance& inst : insts) {
        GreedyConfig gcfg;
        gcfg.eps = 0.5;
        WeightedGraph g = greedy_spanner(inst.m, gcfg);
        NetHierarchy t = build_net_tree(inst.m);
        CheckReport rep = check_separated_pair_edges(g, inst.m, t, 8.0, 1.0);
        worst = std::max(worst, rep.measured);
        if (!rep.passed) {
            ok = false;
            bad += inst.name + " ";
        }
    }
    report(6, ok,
           "every pair of the s=8 decompositions crosses <= 1 greedy edge (worst " + fmt(worst) +
               ") on 5 instances" + (bad.empty() ? "" : "  offenders: " + bad));
}

// --- criterion 7: lankiness stability across n ------------------------------

static void criterion_7() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        GreedyConfig gcfg;
        gcfg.eps = 0.5;
        MetricInput m256 = load_and_normalize(uniform_points(256, 2, seed));
        MetricInput m1024 = load_and_normalize(uniform_points(1024, 2, seed));
        double t256 = measure_lankiness(greedy_spanner(m256, gcfg), m256).measured;
        double t1024 = measure_lankiness(greedy_spanner(m1024, gcfg), m1024).measured;
        double ratio = std::max(t256, t1024) / std::min(t256, t1024);
        detail += "s" + std::to_string(seed) + ":" + fmt(t256) + "/" + fmt(t1024) + " ";
        if (ratio > 2.0) ok = false;
    }
    report(7, ok, "greedy tau at n=256 vs n=1024 per seed " + detail + "(each ratio <= 2)");
}

// --- criterion 8: cone property, 100 configurations, zero violations --------

static void criterion_8() {
    bool ok = true;
    double worst = 0.0;
    std::string bad;
    std::vector<Instance> insts;
    insts.push_back({"uniform-300-2d", load_and_normalize(uniform_points(300, 2, 1))});
    insts.push_back({"grid-15x15", load_and_normalize(grid_points(15, 2))});
    for (Instance& inst : insts) {
        GreedyConfig gcfg;
        gcfg.eps = 0.5;
        WeightedGraph g = greedy_spanner(inst.m, gcfg);
        NetHierarchy t = build_net_tree(inst.m);
        CheckReport rep = verify_cone_property(g, inst.m, t, 0.5, 100);
        worst = std::max(worst, rep.measured);
        if (!rep.passed) {
            ok = false;
            bad += inst.name + " ";
        }
    }
    report(8, ok,
           "100 sampled far-set configurations per instance, max edges in one cone " + fmt(worst) +
               (bad.empty() ? "" : "  offenders: " + bad));
}

// --- criterion 9: weak lankiness across spread + thin separator validity ----

static void criterion_9() {
    bool ok = true;
    std::string detail;
    double prev = -1.0;
    for (double base : {3.0, 9.0, 81.0}) {
        MetricInput m = load_and_normalize(exp_spread_line(64, base));
        GreedyConfig gcfg;
        gcfg.eps = 0.5;
        WeightedGraph g = greedy_spanner(m, gcfg);
        double weak = measure_weak_lankiness(g, m).measured;
        SeparatorConfig cfg;
        cfg.params = default_packing(1);
        cfg.variant = SeparatorVariant::WeaklyLankyThin;
        cfg.rng_seed = 13;
        bool valid;
        try {
            SeparatorResult res = extract_separator(g, m, cfg);
            valid = verify_separator(res, g, m, cfg.params).passed;
        } catch (const SeparatorInfeasible&) {
            valid = false;
        }
        detail += "base=" + fmt(base) + ":weak=" + fmt(weak) + ",logspread=" +
                  fmt(std::log2(m.spread)) + (valid ? " " : "(INVALID) ");
        if (weak < prev) ok = false;  // must be non-decreasing in log spread
        if (!valid) ok = false;
        prev = weak;
    }
    report(9, ok, "weak tau non-decreasing across bases, thin separators valid: " + detail);
}

// --- criterion 10: breakpoint lankiness == dense-grid lankiness -------------

static void criterion_10() {
    std::vector<Instance> insts;
    insts.push_back({"grid-14x14", load_and_normalize(grid_points(14, 2))});
    insts.push_back({"uniform-150-2d", load_and_normalize(uniform_points(150, 2, 2))});
    insts.push_back({"uniform-100-3d", load_and_normalize(uniform_points(100, 3, 3))});
    insts.push_back({"dust-81", load_and_normalize(cantor_dust(4, 2))});
    insts.push_back({"expline-matrix-64",
                     load_and_normalize(to_matrix_input(load_and_normalize(exp_spread_line(64, 3.0))))});
    insts.push_back({"ubg-128", load_and_normalize(unit_ball_uniform(128, 2, 0.2, 5))});
    insts.push_back({"matrix-120",
                     load_and_normalize(to_matrix_input(load_and_normalize(uniform_points(120, 2, 7))))});

    bool ok = true;
    std::string bad;
    for (Instance& inst : insts) {
        GreedyConfig gcfg;
        gcfg.eps = 0.5;
        WeightedGraph g = greedy_spanner(inst.m, gcfg);

        // The cut count as a function of the radius only changes value at a
        // center's breakpoint radii, and its maximum can sit exactly on one
        // of them.  The dense sweep therefore takes the breakpoints plus
        // every gap midpoint plus both extremes — exact equality then proves
        // no larger value hides between or beyond the breakpoints — while a
        // 10x uniform grid (which cannot be expected to land on isolated
        // maxima) must never exceed the breakpoint answer.
        long from_breakpoints = 0, from_dense = 0, from_uniform = 0;
        for (int c = 0; c < inst.m.n(); ++c) {
            std::vector<double> bp = lankiness_candidate_radii(g, inst.m, c);
            from_breakpoints =
                std::max(from_breakpoints, lankiness_at_radii(g, inst.m, c, bp));
            double hi = bp.empty() ? 1.0 : bp.back();
            std::vector<double> dense = bp;
            dense.push_back(0.0);
            dense.push_back(hi * 1.25);
            for (std::size_t i = 0; i + 1 < bp.size(); ++i)
                dense.push_back((bp[i] + bp[i + 1]) / 2.0);
            std::sort(dense.begin(), dense.end());
            from_dense = std::max(from_dense, lankiness_at_radii(g, inst.m, c, dense));

            std::size_t count = bp.size() * 10;
            std::vector<double> grid(count);
            for (std::size_t i = 0; i < count; ++i)
                grid[i] = hi * static_cast<double>(i) / static_cast<double>(count - 1);
            from_uniform = std::max(from_uniform, lankiness_at_radii(g, inst.m, c, grid));
        }
        double fast = measure_lankiness(g, inst.m).measured;
        if (from_breakpoints != from_dense || from_uniform > from_breakpoints ||
            fast != static_cast<double>(from_breakpoints)) {
            ok = false;
            bad += inst.name + "(bp " + std::to_string(from_breakpoints) + ", dense " +
                   std::to_string(from_dense) + ", grid " + std::to_string(from_uniform) +
                   ", fast " + fmt(fast) + ") ";
        }
    }
    report(10, ok,
           "breakpoint tau == midpoint-augmented dense-sweep tau == production tau, 10x "
           "uniform grid never above it, on 7 instances (n<=200)" +
               (bad.empty() ? "" : "  mismatches: " + bad));
}

// Run one criterion; an escaped exception becomes a FAIL line for each
// criterion id the function covers instead of aborting the whole gate.
template <typename Fn>
static void guarded(std::vector<int> ids, Fn fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        for (int id : ids) report(id, false, std::string("exception: ") + e.what());
    }
}

int main() {
    auto t0 = Clock::now();
    guarded({1, 2}, criteria_1_2);
    guarded({3}, criterion_3);
    guarded({4}, criterion_4);
    guarded({5}, criterion_5);
    guarded({6}, criterion_6);
    guarded({7}, criterion_7);
    guarded({8}, criterion_8);
    guarded({9}, criterion_9);
    guarded({10}, criterion_10);
    std::printf("acceptance: %d of 10 criteria passed in %.1fs\n", 10 - g_failures,
                seconds_since(t0));
    return g_failures;
}
