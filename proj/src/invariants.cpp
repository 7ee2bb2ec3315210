#include "ribbonknot/invariants.hpp"

#include <cmath>

namespace ribbonknot {

int crossing_sign(const KnotDiagram& d, int crossing_index) {
    const Crossing& c = d.crossings.at(static_cast<std::size_t>(crossing_index));
    const Vec2 d_over = d.edge_dir(c.over_edge());
    const Vec2 d_under = d.edge_dir(c.under_edge());
    return cross(d_over, d_under) > 0 ? 1 : -1;
}

int fold_contribution(const KnotDiagram& d, const FoldingInfo& folds, int i) {
    switch (handed_fold(d, folds, i)) {
        case HandedFold::LeftUnder:
        case HandedFold::RightOver: return 1;
        case HandedFold::RightUnder:
        case HandedFold::LeftOver: return -1;
    }
    return 0;
}

int ribbon_linking_number(const KnotDiagram& d) {
    return ribbon_linking_number(d, d.folds);
}

int ribbon_linking_number(const KnotDiagram& d, const FoldingInfo& folds) {
    int lk = 0;
    for (int i = 0; i < d.size(); ++i) {
        if (fold_angle(d, i).is_flat()) continue;
        lk += fold_contribution(d, folds, i);
    }
    for (int k = 0; k < static_cast<int>(d.crossings.size()); ++k) {
        lk += 2 * crossing_sign(d, k);
    }
    return lk;
}

GeometricLinking geometric_linking_number(const KnotDiagram& d, const FoldingInfo& folds,
                                          double w, double tol) {
    const AllowedCertificate cert = is_allowed(d, folds, w, tol);
    if (!cert.allowed) throw Error("geometric linking number needs an allowed width");
    const FoldedRibbon r = build_ribbon(d, w, tol);

    GeometricLinking out;
    for (const auto& chain : r.boundaries) {
        double sum = 0;
        for (const BoundarySegment& bs : chain) {
            for (int i = 0; i < d.size(); ++i) {
                if (i == bs.strip) continue;  // an offset never crosses its own edge
                const auto hit = segment_intersection(bs.seg, d.edge(i), tol);
                if (!hit) continue;
                const Vec2 db = bs.seg.dir();
                const Vec2 dk = d.edge_dir(i);
                const int above = strip_order(cert, d, folds, bs.strip, i);
                const Vec2 d_over = above > 0 ? db : dk;
                const Vec2 d_under = above > 0 ? dk : db;
                sum += cross(d_over, d_under) > 0 ? 1 : -1;
            }
        }
        out.per_component.push_back(sum / 2);
        out.total += sum / 2;
    }
    return out;
}

TopoType topological_type(const KnotDiagram& d) {
    return d.size() % 2 == 0 ? TopoType::Annulus : TopoType::Mobius;
}

std::string to_string(TopoType t) {
    return t == TopoType::Annulus ? "annulus" : "mobius";
}

std::string to_string(Equivalence e) {
    switch (e) {
        case Equivalence::Equivalent: return "Equivalent";
        case Equivalence::NotEquivalent: return "NotEquivalent";
        case Equivalence::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

/// Label comparison shared by the three predicates: NotEquivalent when both
/// labels are present and differ, Unknown when one is missing, Equivalent
/// when both present and equal.
Equivalence label_equivalence(const KnotDiagram& a, const KnotDiagram& b) {
    if (a.knot_type_label && b.knot_type_label) {
        return *a.knot_type_label == *b.knot_type_label ? Equivalence::Equivalent
                                                        : Equivalence::NotEquivalent;
    }
    return Equivalence::Unknown;
}

}  // namespace

Equivalence link_equivalent(const KnotDiagram& a, const KnotDiagram& b) {
    return link_equivalent(a, a.folds, b, b.folds);
}

Equivalence link_equivalent(const KnotDiagram& a, const FoldingInfo& fa,
                            const KnotDiagram& b, const FoldingInfo& fb) {
    if (ribbon_linking_number(a, fa) != ribbon_linking_number(b, fb)) {
        return Equivalence::NotEquivalent;
    }
    return label_equivalence(a, b);
}

Equivalence topologically_equivalent(const KnotDiagram& a, const KnotDiagram& b) {
    if (topological_type(a) != topological_type(b)) return Equivalence::NotEquivalent;
    return label_equivalence(a, b);
}

Equivalence diagram_equivalent(const KnotDiagram& a, const KnotDiagram& b) {
    return label_equivalence(a, b);
}

InvariantReport invariant_report(const KnotDiagram& d, double tol) {
    return invariant_report(d, d.folds, tol);
}

InvariantReport invariant_report(const KnotDiagram& d, const FoldingInfo& folds, double tol) {
    InvariantReport rep;
    rep.linking_number = ribbon_linking_number(d, folds);
    rep.topo_type = topological_type(d);
    rep.length = diagram_length(d);
    rep.max_width = max_width(d, folds, tol);
    rep.ribbonlength = rep.length / rep.max_width;
    return rep;
}

}  // namespace ribbonknot
