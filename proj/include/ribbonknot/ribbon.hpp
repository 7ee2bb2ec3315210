#ifndef RIBBONKNOT_RIBBON_HPP
#define RIBBONKNOT_RIBBON_HPP

/// Folded ribbon construction and the allowed-width decision.
///
/// Given a diagram and a width w, the ribbon consists of one fold line per
/// non-flat vertex (length w/cos(theta/2), centered at the vertex,
/// perpendicular to the angle bisector) and one strip per edge (the convex
/// quadrilateral between the joints at its two ends, bounded by the offset
/// lines at distance w/2 on either side of the edge).  A width is allowed
/// when every strip is a simple quadrilateral and the forced above/below
/// relations of folds and crossings extend to layer orders that are
/// transitively consistent on every region covered by several strips.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ribbonknot/diagram.hpp"
#include "ribbonknot/parallel.hpp"

namespace ribbonknot {

/// Width so large that a strip degenerates (its two fold lines cross).
struct WidthError : Error {
    using Error::Error;
};

/// One offset segment of the ribbon boundary, annotated with the strip it
/// belongs to and on which side of that strip's edge it runs.
struct BoundarySegment {
    Segment seg;
    int strip = 0;
    Side side = Side::Left;
};

struct FoldedRibbon {
    double width = 0;
    /// Per vertex; nullopt where theta = pi (no fold line).
    std::vector<std::optional<Segment>> fold_lines;
    /// Per edge, CCW convex quadrilaterals.
    std::vector<ConvexPolygon> strips;
    /// One closed chain when the fold count is odd, two when even.
    std::vector<std::vector<BoundarySegment>> boundaries;

    std::vector<Vec2> boundary_polyline(std::size_t component) const;
};

/// Fold line at vertex i for width w.  Throws Error when theta_i = pi
/// ("no fold line"), DegenerateFoldError when theta_i = 0, and
/// WidthError when the fold line would exceed 1e12 * w.
Segment fold_line(const KnotDiagram& d, int i, double w, double tol = kDefaultTol);

struct BuildFailure {
    std::string reason;
};

/// Non-throwing construction; used by the allowed-width decision where a
/// structural failure simply means "not allowed at this width".
std::variant<FoldedRibbon, BuildFailure> try_build_ribbon(const KnotDiagram& d, double w,
                                                          double tol = kDefaultTol);

/// Throwing construction per the module contract.
FoldedRibbon build_ribbon(const KnotDiagram& d, const FoldingInfo& folds, double w,
                          double tol = kDefaultTol);
FoldedRibbon build_ribbon(const KnotDiagram& d, double w, double tol = kDefaultTol);

enum class OverlapOrder { AboveB, BelowB, Unconstrained };

struct OverlapSource {
    enum class Kind { Fold, Crossing, Propagated };
    Kind kind = Kind::Propagated;
    /// Vertex index for Fold, crossing index for Crossing, unused otherwise.
    int index = -1;
};

/// A positive-area overlap between two strips together with the above/below
/// relation it must satisfy.  strip_a < strip_b; required_order describes
/// strip_a relative to strip_b over the whole region.
struct OverlapConstraint {
    int strip_a = 0;
    int strip_b = 0;
    ConvexPolygon region;
    OverlapOrder required_order = OverlapOrder::Unconstrained;
    OverlapSource source;
};

/// Emits the overlap components that carry ordering content.
///
/// Every pair of strips meets in at most one convex component (strips are
/// convex).  Components of non-adjacent strips are always emitted: with the
/// order forced by the diagram crossing they contain, or Unconstrained.
/// Adjacent strips always share a wedge of doubled ribbon next to their
/// common fold line; that wedge is the fold itself, so it is emitted (with
/// the order given by the folding information) only when a third strip also
/// covers part of it and the relation can interact with others.
std::vector<OverlapConstraint> overlap_constraints(const KnotDiagram& d,
                                                   const FoldingInfo& folds, double w,
                                                   double tol = kDefaultTol);

struct AllowedCertificate {
    bool allowed = false;
    std::vector<OverlapConstraint> constraints;
    /// Per constraint, +1 when strip_a is above strip_b; populated iff allowed.
    std::vector<int> order_assignment;
    /// Indices into `constraints` whose forced relations compose into a
    /// contradiction; populated iff not allowed for ordering reasons.
    std::vector<std::size_t> conflict;
    /// Structural reason when the ribbon could not be built at this width.
    std::string failure;
};

/// Decides whether width w is allowed and produces either a consistent
/// layer-order assignment or a contradiction witness.
AllowedCertificate is_allowed(const KnotDiagram& d, const FoldingInfo& folds, double w,
                              double tol = kDefaultTol);
AllowedCertificate is_allowed(const KnotDiagram& d, double w, double tol = kDefaultTol);

/// Layer order between two overlapping strips under a certificate:
/// +1 when strip i lies above strip j.  Folds and crossings answer directly;
/// unconstrained pairs use the certificate's assignment.
int strip_order(const AllowedCertificate& cert, const KnotDiagram& d,
                const FoldingInfo& folds, int i, int j);

/// Evaluates is_allowed over a width grid.  The serial and parallel paths
/// produce identical results.
std::vector<char> probe_allowed(const KnotDiagram& d, const FoldingInfo& folds,
                                const std::vector<double>& widths, double tol = kDefaultTol,
                                Execution exec = Execution::Serial);

struct MaxWidthOptions {
    /// Verify on a 100-point grid that the allowed set really is an
    /// interval; throws Error("allowed set not an interval") on violation.
    bool grid_check = true;
    Execution exec = Execution::Parallel;
};

/// Largest allowed width, by bisection between 0 and the smallest width at
/// which the construction fails structurally (found by doubling from
/// diagram_length/n, capped at 1e6 * diagram_length).
///
/// `tol` is relative to diagram_length and bounds both the bisection
/// accuracy and the geometric tolerance used per evaluation, so the result
/// scales exactly with the diagram.
double max_width(const KnotDiagram& d, const FoldingInfo& folds, double tol = kDefaultTol,
                 const MaxWidthOptions& opts = {});
double max_width(const KnotDiagram& d, double tol = kDefaultTol,
                 const MaxWidthOptions& opts = {});

/// length(K) / w.
double ribbonlength_at(const KnotDiagram& d, double w);

/// length(K) / max_width; scale invariant.
double ribbonlength(const KnotDiagram& d, const FoldingInfo& folds, double tol = kDefaultTol,
                    const MaxWidthOptions& opts = {});
double ribbonlength(const KnotDiagram& d, double tol = kDefaultTol,
                    const MaxWidthOptions& opts = {});

}  // namespace ribbonknot

#endif
