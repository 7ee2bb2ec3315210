#ifndef RIBBONKNOT_OPTIMIZER_HPP
#define RIBBONKNOT_OPTIMIZER_HPP

/// Ribbonlength minimization over vertex placements for a fixed stick count
/// and folding information.
///
/// The search space is the 2n-4 dimensional space of shapes modulo
/// similarity: v_0 is pinned to the origin, v_1 to the positive x axis, and
/// the perimeter is renormalized after every candidate generation.  The
/// objective length/max_width is minimized by Nelder-Mead simplex descent
/// (reflection 1, expansion 2, contraction 0.5, shrink 0.5) with seeded
/// multi-restart.  Configurations that fail validation (self-intersecting
/// while the pattern declares no crossings, degenerate folds) score
/// +infinity.  Results are deterministic for a fixed config, independent of
/// the execution policy.

#include <cstdint>

#include "ribbonknot/diagram.hpp"
#include "ribbonknot/parallel.hpp"

namespace ribbonknot {

struct OptimizationConfig {
    int n = 3;
    FoldingInfo folds;             // one entry per vertex
    double perimeter = 3;
    int restarts = 20;
    int max_iters = 5000;
    double simplex_tol = 1e-6;     // convergence diameter, relative to perimeter
    double width_tol = 1e-6;       // max_width tolerance inside the objective
    std::uint64_t rng_seed = 1;
    Execution exec = Execution::Parallel;
};

struct TracePoint {
    double value = 0;     // best objective so far
    double diameter = 0;  // simplex diameter
};

struct OptimizationResult {
    KnotDiagram best_diagram;
    double best_value = 0;
    std::vector<TracePoint> trace;  // of the winning restart
    bool converged = false;
    std::vector<double> restarts_summary;  // final value per restart
};

/// Uniform scaling about the origin so that diagram_length becomes exactly
/// `perimeter`.  Ribbonlength is invariant under this map.
KnotDiagram normalize_perimeter(const KnotDiagram& d, double perimeter);

/// Throws Error("no feasible configuration found") when every restart fails
/// to seed a feasible simplex.
OptimizationResult minimize_ribbonlength(const OptimizationConfig& cfg);

}  // namespace ribbonknot

#endif
