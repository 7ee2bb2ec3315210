#ifndef RIBBONKNOT_IO_HPP
#define RIBBONKNOT_IO_HPP

/// JSON serialization.
///
/// Diagram files are UTF-8 JSON objects with "vertices" ([[x,y],...]),
/// "folds" (["over"|"under",...], same length), "crossings"
/// ([{"edge_a":int,"edge_b":int,"over":"a"|"b"},...] with 1-based edge
/// indices) and optional "knot_type" and "name" strings.  Numbers are
/// written in shortest round-trip form, so load followed by save preserves
/// every coordinate bit-exactly and canonical files survive a round trip
/// byte-identically.

#include <string>

#include "ribbonknot/diagram.hpp"
#include "ribbonknot/invariants.hpp"
#include "ribbonknot/optimizer.hpp"
#include "ribbonknot/ribbon.hpp"

namespace ribbonknot {

std::string diagram_to_json(const KnotDiagram& d);
KnotDiagram diagram_from_json(const std::string& text, double tol = kDefaultTol);

KnotDiagram load_diagram(const std::string& path, double tol = kDefaultTol);
void save_diagram(const KnotDiagram& d, const std::string& path);

std::string ribbon_to_json(const FoldedRibbon& r);
std::string report_to_json(const InvariantReport& rep);

OptimizationConfig config_from_json(const std::string& text);
std::string result_to_json(const OptimizationResult& res);

}  // namespace ribbonknot

#endif
