#ifndef RIBBONKNOT_INVARIANTS_HPP
#define RIBBONKNOT_INVARIANTS_HPP

/// Ribbon linking number, topological type, and the three ribbon
/// equivalence predicates.
///
/// The ribbon linking number is the linking number between the diagram and
/// the ribbon boundary, computed combinatorially as
///
///     Lk = sum over folds of (+-1)  +  2 * sum over crossings of (+-1)
///
/// where a left underfold and a right overfold contribute +1, a right
/// underfold and a left overfold contribute -1, and crossing signs follow
/// the usual convention (+1 when the under strand rotated counterclockwise
/// aligns with the over strand).  The geometric cross-check builds the
/// ribbon at an allowed width and counts signed crossings between the
/// diagram and the whole ribbon boundary; half that total equals Lk.  For
/// an even number of edges the boundary has two components, each carrying
/// half of the total.

#include "ribbonknot/diagram.hpp"
#include "ribbonknot/ribbon.hpp"

namespace ribbonknot {

enum class TopoType { Annulus, Mobius };

/// Sign of a declared crossing from the orientations of its two strands and
/// the over/under datum.
int crossing_sign(const KnotDiagram& d, int crossing_index);

/// +-1 contribution of the fold at vertex i; 0 would-be flat vertices are
/// rejected (no fold there).  LeftUnder, RightOver -> +1;
/// RightUnder, LeftOver -> -1.
int fold_contribution(const KnotDiagram& d, const FoldingInfo& folds, int i);

/// Combinatorial ribbon linking number.  Flat vertices contribute nothing.
int ribbon_linking_number(const KnotDiagram& d, const FoldingInfo& folds);
int ribbon_linking_number(const KnotDiagram& d);

struct GeometricLinking {
    /// Lk(K, whole boundary) = sum of the per-component values.
    double total = 0;
    /// Linking number of the diagram with each boundary component separately
    /// (one entry for odd edge counts, two for even).
    std::vector<double> per_component;
};

/// Independent geometric evaluation at width w, which must be allowed.
/// Counts signed diagram/boundary crossings with over/under read from the
/// layer orders of the certificate.
GeometricLinking geometric_linking_number(const KnotDiagram& d, const FoldingInfo& folds,
                                          double w, double tol = kDefaultTol);

/// Annulus for an even number of edges, Mobius for odd.
TopoType topological_type(const KnotDiagram& d);

std::string to_string(TopoType t);

enum class Equivalence { Equivalent, NotEquivalent, Unknown };

std::string to_string(Equivalence e);

/// Same knot type (labels) and same ribbon linking number.  Lk is always
/// computable, so differing Lk decides NotEquivalent even without labels;
/// missing labels otherwise give Unknown.
Equivalence link_equivalent(const KnotDiagram& a, const FoldingInfo& fa,
                            const KnotDiagram& b, const FoldingInfo& fb);
Equivalence link_equivalent(const KnotDiagram& a, const KnotDiagram& b);

/// Same knot type and same annulus/Mobius type.
Equivalence topologically_equivalent(const KnotDiagram& a, const KnotDiagram& b);

/// Same knot type; Unknown when either label is missing.
Equivalence diagram_equivalent(const KnotDiagram& a, const KnotDiagram& b);

struct InvariantReport {
    int linking_number = 0;
    TopoType topo_type = TopoType::Annulus;
    double length = 0;
    double max_width = 0;
    double ribbonlength = 0;
};

InvariantReport invariant_report(const KnotDiagram& d, const FoldingInfo& folds,
                                 double tol = kDefaultTol);
InvariantReport invariant_report(const KnotDiagram& d, double tol = kDefaultTol);

}  // namespace ribbonknot

#endif
