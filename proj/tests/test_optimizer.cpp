#include <doctest.h>

#include <cmath>

#include "ribbonknot/optimizer.hpp"
#include "ribbonknot/ribbon.hpp"

using namespace ribbonknot;

namespace {

OptimizationConfig triangle_config() {
    OptimizationConfig cfg;
    cfg.n = 3;
    cfg.folds = FoldingInfo::all(3, FoldType::Over);
    cfg.perimeter = 3;
    cfg.restarts = 20;
    cfg.rng_seed = 1;
    return cfg;
}

}  // namespace

TEST_CASE("normalize_perimeter") {
    const KnotDiagram big = make_diagram({{0, 0}, {2, 0}, {1, std::sqrt(3.0)}},
                                         FoldingInfo::all(3, FoldType::Over));
    const KnotDiagram d = normalize_perimeter(big, 3.0);
    CHECK(diagram_length(d) == doctest::Approx(3.0));
    CHECK(d.vertex(1).x == doctest::Approx(1.0));

    // ribbonlength unchanged by normalization
    CHECK(std::abs(ribbonlength(d, d.folds) - ribbonlength(big, big.folds)) <=
          1e-9 * ribbonlength(big, big.folds));

    // 3-4-5 at perimeter 12 is already normalized: bitwise unchanged
    const KnotDiagram t345 = make_diagram({{0, 0}, {3, 0}, {0, 4}},
                                          FoldingInfo::all(3, FoldType::Over));
    const KnotDiagram same = normalize_perimeter(t345, 12.0);
    for (int i = 0; i < 3; ++i) CHECK(same.vertex(i) == t345.vertex(i));
}

TEST_CASE("three-stick same-type minimum is the equilateral triangle") {
    const OptimizationConfig cfg = triangle_config();
    const OptimizationResult res = minimize_ribbonlength(cfg);
    CHECK(res.best_value == doctest::Approx(3 * std::sqrt(3.0)).epsilon(1e-3 / 5.196));
    CHECK(res.converged);

    // best diagram is equilateral with perimeter 3: every side near 1
    const KnotDiagram& b = res.best_diagram;
    CHECK(diagram_length(b) == doctest::Approx(3.0));
    for (int i = 0; i < 3; ++i) CHECK(b.edge(i).len() == doctest::Approx(1.0).epsilon(1e-3));

    // value consistent with an independent width evaluation
    const double rib = cfg.perimeter / max_width(b, cfg.folds, cfg.width_tol / 10);
    CHECK(std::abs(rib - res.best_value) <= 10 * cfg.width_tol * rib);
}

TEST_CASE("one-different pattern reaches sqrt(3)") {
    OptimizationConfig cfg = triangle_config();
    cfg.folds = FoldingInfo::one_different(3);
    cfg.restarts = 8;
    const OptimizationResult res = minimize_ribbonlength(cfg);
    CHECK(res.best_value <= std::sqrt(3.0) + 1e-3);
}

TEST_CASE("four sticks with same-type folds reach the square bound") {
    OptimizationConfig cfg;
    cfg.n = 4;
    cfg.folds = FoldingInfo::all(4, FoldType::Over);
    cfg.perimeter = 4;
    cfg.restarts = 16;
    cfg.simplex_tol = 1e-7;
    cfg.rng_seed = 3;
    const OptimizationResult res = minimize_ribbonlength(cfg);
    CHECK(res.best_value <= 4.0 + 1e-3);
    // the square achieves ribbonlength 4; check the optimizer's claim directly
    const double check = cfg.perimeter / max_width(res.best_diagram, cfg.folds, 1e-8);
    CHECK(std::abs(check - res.best_value) <= 1e-4 * check);
}

TEST_CASE("determinism: identical config gives identical traces") {
    const OptimizationConfig cfg = triangle_config();
    const OptimizationResult a = minimize_ribbonlength(cfg);
    const OptimizationResult b = minimize_ribbonlength(cfg);
    CHECK(a.best_value == b.best_value);  // bitwise
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t k = 0; k < a.trace.size(); ++k) {
        CHECK(a.trace[k].value == b.trace[k].value);
        CHECK(a.trace[k].diameter == b.trace[k].diameter);
    }
    CHECK(a.restarts_summary == b.restarts_summary);
}

TEST_CASE("trace best values never increase") {
    const OptimizationResult res = minimize_ribbonlength(triangle_config());
    for (std::size_t k = 1; k < res.trace.size(); ++k) {
        CHECK(res.trace[k].value <= res.trace[k - 1].value + 1e-15);
    }
}

TEST_CASE("accepted diagrams validate") {
    const OptimizationResult res = minimize_ribbonlength(triangle_config());
    CHECK(validate_diagram(res.best_diagram).ok());
}

TEST_CASE("restart summary has one entry per restart") {
    OptimizationConfig cfg = triangle_config();
    cfg.restarts = 7;
    const OptimizationResult res = minimize_ribbonlength(cfg);
    CHECK(res.restarts_summary.size() == 7);
    for (double v : res.restarts_summary) CHECK(v >= res.best_value - 1e-12);
}

TEST_CASE("bad configs are rejected") {
    OptimizationConfig cfg = triangle_config();
    cfg.restarts = 0;
    CHECK_THROWS_AS(minimize_ribbonlength(cfg), std::invalid_argument);
    cfg = triangle_config();
    cfg.folds = FoldingInfo::all(4, FoldType::Over);
    CHECK_THROWS_AS(minimize_ribbonlength(cfg), std::invalid_argument);
}
