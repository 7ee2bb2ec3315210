// Benchmark of the OpenMP kernels against their serial reference paths:
// the allowed-width grid probe and the multi-restart optimizer.  Results
// must match exactly; only the wall time differs.

#include <chrono>
#include <cstdio>
#include <vector>

#include "ribbonknot/bounds.hpp"
#include "ribbonknot/optimizer.hpp"
#include "ribbonknot/ribbon.hpp"
#include "ribbonknot/samples.hpp"

using namespace ribbonknot;

namespace {

double seconds(auto fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int widths = 2000;
    int restarts = 16;
    if (argc > 1) widths = std::atoi(argv[1]);
    if (argc > 2) restarts = std::atoi(argv[2]);

    const KnotDiagram tri = sample_diagram("fig8-left");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(widths));
    for (int i = 1; i <= widths; ++i) grid.push_back(1.2 * i / (widths + 1.0));

    std::vector<char> serial, parallel;
    const double t_probe_s = seconds([&] {
        serial = probe_allowed(tri, tri.folds, grid, kDefaultTol, Execution::Serial);
    });
    const double t_probe_p = seconds([&] {
        parallel = probe_allowed(tri, tri.folds, grid, kDefaultTol, Execution::Parallel);
    });
    const bool probe_match = serial == parallel;

    OptimizationConfig cfg;
    cfg.n = 3;
    cfg.folds = FoldingInfo::all(3, FoldType::Over);
    cfg.perimeter = 3;
    cfg.restarts = restarts;
    cfg.rng_seed = 7;

    OptimizationResult rs, rp;
    cfg.exec = Execution::Serial;
    const double t_opt_s = seconds([&] { rs = minimize_ribbonlength(cfg); });
    cfg.exec = Execution::Parallel;
    const double t_opt_p = seconds([&] { rp = minimize_ribbonlength(cfg); });
    const bool opt_match = rs.best_value == rp.best_value &&
                           rs.restarts_summary == rp.restarts_summary;

    std::printf("kernel               serial      parallel    speedup   identical\n");
    std::printf("width probe (%5d)  %8.3fs   %8.3fs   %6.2fx   %s\n", widths, t_probe_s,
                t_probe_p, t_probe_s / t_probe_p, probe_match ? "yes" : "NO");
    std::printf("optimizer   (%5d)  %8.3fs   %8.3fs   %6.2fx   %s\n", restarts, t_opt_s,
                t_opt_p, t_opt_s / t_opt_p, opt_match ? "yes" : "NO");
    return probe_match && opt_match ? 0 : 1;
}
