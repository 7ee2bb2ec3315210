#include "ribbonknot/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ribbonknot/ribbon.hpp"

namespace ribbonknot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// splitmix64; used instead of std::uniform_real_distribution so that runs
/// are reproducible across standard libraries.
struct Rng {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

struct Objective {
    const OptimizationConfig& cfg;
    double geom_tol;

    KnotDiagram to_diagram(const std::vector<double>& x) const {
        std::vector<Vec2> verts;
        verts.reserve(static_cast<std::size_t>(cfg.n));
        verts.push_back({0, 0});
        verts.push_back({1, 0});
        for (std::size_t k = 0; 2 * k + 1 < x.size(); ++k) {
            verts.push_back({x[2 * k], x[2 * k + 1]});
        }
        KnotDiagram d;
        d.vertices = std::move(verts);
        d.folds = cfg.folds;
        d.knot_type_label = "unknot";
        return normalize_perimeter(d, cfg.perimeter);
    }

    double operator()(const std::vector<double>& x) const {
        KnotDiagram d;
        try {
            d = to_diagram(x);
        } catch (const std::exception&) {
            return kInf;
        }
        if (!validate_diagram(d, geom_tol).ok()) return kInf;
        try {
            MaxWidthOptions fast;
            fast.grid_check = false;
            fast.exec = Execution::Serial;
            return cfg.perimeter / max_width(d, cfg.folds, cfg.width_tol, fast);
        } catch (const std::exception&) {
            return kInf;
        }
    }
};

struct RestartOutcome {
    double value = kInf;
    std::vector<double> best_x;
    std::vector<TracePoint> trace;
    bool converged = false;
    bool feasible = false;
};

RestartOutcome run_restart(const OptimizationConfig& cfg, const Objective& f,
                           std::uint64_t seed) {
    const std::size_t dim = static_cast<std::size_t>(2 * cfg.n - 4);
    Rng rng{seed};
    RestartOutcome out;

    // Seed a simplex of dim+1 feasible points by rejection sampling.
    std::vector<std::vector<double>> pts;
    std::vector<double> vals;
    for (int tries = 0; pts.size() < dim + 1 && tries < 400; ++tries) {
        std::vector<double> x(dim);
        for (double& c : x) c = rng.uniform(-1.5, 2.5);
        const double v = f(x);
        if (std::isfinite(v)) {
            pts.push_back(std::move(x));
            vals.push_back(v);
        }
    }
    if (pts.size() < dim + 1) return out;
    out.feasible = true;

    auto order = [&] {
        std::vector<std::size_t> idx(pts.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        std::vector<std::vector<double>> p2;
        std::vector<double> v2;
        for (std::size_t i : idx) {
            p2.push_back(pts[i]);
            v2.push_back(vals[i]);
        }
        pts = std::move(p2);
        vals = std::move(v2);
    };
    auto diameter = [&] {
        double dmax = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                double s = 0;
                for (std::size_t k = 0; k < dim; ++k) {
                    const double t = pts[i][k] - pts[j][k];
                    s += t * t;
                }
                dmax = std::max(dmax, std::sqrt(s));
            }
        }
        return dmax;
    };

    const double tol = cfg.simplex_tol * cfg.perimeter;
    order();
    for (int it = 0; it < cfg.max_iters; ++it) {
        const double diam = diameter();
        out.trace.push_back({vals.front(), diam});
        if (diam < tol) {
            out.converged = true;
            break;
        }

        const std::size_t worst = pts.size() - 1;
        std::vector<double> centroid(dim, 0);
        for (std::size_t i = 0; i < worst; ++i) {
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(worst);

        auto blend = [&](double coef) {
            std::vector<double> x(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                x[k] = centroid[k] + coef * (centroid[k] - pts[worst][k]);
            }
            return x;
        };

        const std::vector<double> xr = blend(1.0);
        const double fr = f(xr);
        if (fr < vals.front()) {
            const std::vector<double> xe = blend(2.0);
            const double fe = f(xe);
            if (fe < fr) {
                pts[worst] = xe;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
        } else if (fr < vals[worst - 1]) {
            pts[worst] = xr;
            vals[worst] = fr;
        } else {
            const bool outside = fr < vals[worst];
            const std::vector<double> xc = blend(outside ? 0.5 : -0.5);
            const double fc = f(xc);
            if (fc < (outside ? fr : vals[worst])) {
                pts[worst] = xc;
                vals[worst] = fc;
            } else {
                // shrink toward the best point
                for (std::size_t i = 1; i < pts.size(); ++i) {
                    for (std::size_t k = 0; k < dim; ++k) {
                        pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
                    }
                    vals[i] = f(pts[i]);
                }
            }
        }
        order();
    }
    out.value = vals.front();
    out.best_x = pts.front();
    return out;
}

}  // namespace

KnotDiagram normalize_perimeter(const KnotDiagram& d, double perimeter) {
    if (perimeter <= 0) throw std::invalid_argument("perimeter must be positive");
    const double len = diagram_length(d);
    if (len <= 0) throw std::invalid_argument("degenerate diagram");
    const double s = perimeter / len;
    KnotDiagram out = d;
    for (Vec2& v : out.vertices) v = v * s;
    for (Crossing& c : out.crossings) c.point = c.point * s;
    return out;
}

OptimizationResult minimize_ribbonlength(const OptimizationConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("n must be at least 3");
    if (cfg.folds.size() != static_cast<std::size_t>(cfg.n)) {
        throw std::invalid_argument("fold count must equal n");
    }
    if (cfg.restarts < 1 || cfg.simplex_tol <= 0 || cfg.width_tol <= 0) {
        throw std::invalid_argument("bad optimization config");
    }

    const Objective f{cfg, cfg.width_tol * cfg.perimeter};

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
    parallel_for(outcomes.size(), cfg.exec, [&](std::size_t r) {
        // Distinct, deterministic stream per restart.
        const std::uint64_t seed = cfg.rng_seed * 0x2545f4914f6cdd1dULL + r + 1;
        outcomes[r] = run_restart(cfg, f, seed);
    });

    std::size_t best = outcomes.size();
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        if (!outcomes[r].feasible) continue;
        if (best == outcomes.size() || outcomes[r].value < outcomes[best].value) best = r;
    }
    if (best == outcomes.size()) throw Error("no feasible configuration found");

    OptimizationResult res;
    res.best_value = outcomes[best].value;
    res.trace = std::move(outcomes[best].trace);
    res.converged = outcomes[best].converged;
    for (const RestartOutcome& o : outcomes) {
        res.restarts_summary.push_back(o.feasible ? o.value : std::numeric_limits<double>::infinity());
    }
    res.best_diagram = f.to_diagram(outcomes[best].best_x);
    return res;
}

}  // namespace ribbonknot
