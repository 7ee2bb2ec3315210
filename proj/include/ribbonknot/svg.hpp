#ifndef RIBBONKNOT_SVG_HPP
#define RIBBONKNOT_SVG_HPP

/// Deterministic SVG rendering of a folded ribbon: strips in painter's
/// order (from the certificate's layer assignment when the relations admit
/// a global order), fold lines, the oriented centerline, and the boundary
/// polylines.  Disallowed widths render with the conflicting overlap
/// regions highlighted.  Output is byte-identical for identical inputs;
/// coordinates are written with 6 decimals.

#include <string>

#include "ribbonknot/diagram.hpp"
#include "ribbonknot/ribbon.hpp"

namespace ribbonknot {

struct SvgResult {
    std::string svg;
    bool allowed = true;
};

SvgResult render_svg(const KnotDiagram& d, const FoldingInfo& folds, double w,
                     double tol = kDefaultTol);

/// Renders and writes to `path`; returns whether the width was allowed.
bool render_svg_file(const KnotDiagram& d, const FoldingInfo& folds, double w,
                     const std::string& path, double tol = kDefaultTol);

}  // namespace ribbonknot

#endif
