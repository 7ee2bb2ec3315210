#ifndef RIBBONKNOT_SAMPLES_HPP
#define RIBBONKNOT_SAMPLES_HPP

/// Bundled sample diagrams.
///
///   fig1-3stick   triangle, folds (U,U,O), Lk +1
///   fig1-4stick   square, folds (O,O,O,U), Lk -2
///   fig5-left     square, folds (O,U,O,U), Lk 0
///   fig5-center   square, folds (O,O,U,U), Lk 0
///   fig5-right    square, folds (O,O,O,O), Lk -4
///   fig8-left     equilateral triangle, all folds the same type
///   fig8-right    equilateral triangle, one fold different
///   ngon-<n>      regular n-gon, all folds over (n = 3..12)
///   t52-standard  (5,2) torus knot, 7 vertices, 5 crossings, Lk -15
///   t52-short     shorter (5,2) torus knot, 7 vertices, 7 crossings, Lk -13
///
/// The torus coordinates were chosen to match the published diagrams and
/// frozen once the linking-number difference of 2 between the two (5,2)
/// ribbons checked out.

#include <string>
#include <vector>

#include "ribbonknot/diagram.hpp"

namespace ribbonknot {

std::vector<std::string> sample_names();

/// Throws Error for unknown names.
KnotDiagram sample_diagram(const std::string& name);

}  // namespace ribbonknot

#endif
