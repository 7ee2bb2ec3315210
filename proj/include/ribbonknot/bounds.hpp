#ifndef RIBBONKNOT_BOUNDS_HPP
#define RIBBONKNOT_BOUNDS_HPP

/// Closed-form constructions and bounds: regular n-gon diagrams, the
/// n*cot(pi/n) ribbonlength bound, inradius identities, and the triangle
/// width bound.

#include <array>
#include <utility>

#include "ribbonknot/diagram.hpp"

namespace ribbonknot {

struct TriangleMetrics {
    double area = 0;       // positive
    double perimeter = 0;
    double inradius = 0;   // distance from the incenter to each side line
    Vec2 incenter;
};

enum class FoldPattern { AllOver, AllUnder, OneDifferent };

/// Counterclockwise regular n-gon centered at the origin with the first
/// vertex on the positive x axis; no crossings; folds per the pattern
/// (OneDifferent flips vertex 0).
KnotDiagram regular_ngon_diagram(int n, double side, FoldPattern pattern = FoldPattern::AllOver);
KnotDiagram regular_ngon_diagram(int n, double side, FoldingInfo folds);

/// n * cot(pi/n), the ribbonlength of the regular n-gon construction.
/// Requires n >= 4 (the 3-stick case is three_stick_bounds).
double ngon_ribbonlength_bound(int n);

/// Exact triangle metrics: inradius 2 * area / perimeter, incenter as the
/// side-length weighted vertex average.  The independent relation between
/// the two -- the incenter is at distance inradius from each side line --
/// is covered by the tests.  Throws on collinear input.
TriangleMetrics triangle_metrics(Vec2 p1, Vec2 p2, Vec2 p3);

/// Upper bound 2 * inradius on the allowed width of a 3-stick diagram whose
/// three corner relations are coherent (the over relations form a directed
/// cycle when traversed, e.g. all folds of the same type); +infinity when
/// the pattern is not coherent and the bound does not apply.
double triangle_width_bound(const KnotDiagram& d, const FoldingInfo& folds);
double triangle_width_bound(const KnotDiagram& d);

/// Same bound for a triangular face of a larger diagram whose corners carry
/// fold or crossing relations: corner_over[k] is true when the strand
/// leaving corner k lies above the strand entering it.
double triangle_face_width_bound(Vec2 p1, Vec2 p2, Vec2 p3,
                                 const std::array<bool, 3>& corner_over);

enum class TriangleShape { Equilateral };

/// Maximum inradius among triangles of perimeter P: P / (6 * sqrt(3)),
/// attained by the equilateral triangle.
std::pair<double, TriangleShape> max_inradius_fixed_perimeter(double perimeter);

/// Minimal 3-stick ribbonlength values: 3*sqrt(3) when all folds are of the
/// same type, sqrt(3) when one differs.
double three_stick_bounds(FoldPattern pattern);

}  // namespace ribbonknot

#endif
