#ifndef RIBBONKNOT_DIAGRAM_HPP
#define RIBBONKNOT_DIAGRAM_HPP

/// Oriented polygonal knot diagrams with crossing and folding information.
///
/// A diagram is an ordered list of planar vertices v_0..v_{n-1}; edge i runs
/// from v_i to v_{i+1 mod n} and the orientation is the vertex order.  Every
/// transverse double point between non-adjacent edges must be listed exactly
/// once in `crossings`.  Indices are 0-based here; the JSON file format and
/// the CLI are 1-based.
///
/// Diagrams are immutable value types; every operation is a pure function of
/// its inputs and safe to call concurrently.

#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ribbonknot/geometry.hpp"

namespace ribbonknot {

/// Default absolute tolerance, in length units, for all geometric
/// coincidence and transversality tests.
inline constexpr double kDefaultTol = 1e-9;

/// Vertices whose turn angle is below this are flat: consecutive edges
/// continue straight and no fold line exists there.
inline constexpr double kFlatFoldEps = 1e-13;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fold angle out of range or exactly zero (the edge doubles back).
struct DegenerateFoldError : Error {
    using Error::Error;
};

enum class FoldType { Over, Under };

inline FoldType toggled(FoldType f) {
    return f == FoldType::Over ? FoldType::Under : FoldType::Over;
}

enum class Side { Left, Right };

/// Handed fold classification, combining the over/under datum with the turn
/// direction of the diagram at the vertex.
enum class HandedFold { LeftOver, RightOver, LeftUnder, RightUnder };

/// Angle between the reversed incoming edge and the outgoing edge at a
/// vertex, magnitude in [0, pi].  The sign is the turn direction of the
/// diagram; it is undefined (nullopt) when the magnitude is pi, i.e. when
/// consecutive edges continue straight and there is no fold.
struct FoldAngle {
    double magnitude = 0;
    std::optional<Side> sign;

    bool is_flat() const { return !sign.has_value(); }
};

/// Which of the two referenced edges passes over at a crossing.
enum class OverStrand { A, B };

struct Crossing {
    int edge_a = 0;  // edge_a < edge_b, non-adjacent
    int edge_b = 0;
    Vec2 point;      // derived from the geometry, not serialized
    OverStrand over = OverStrand::A;

    int over_edge() const { return over == OverStrand::A ? edge_a : edge_b; }
    int under_edge() const { return over == OverStrand::A ? edge_b : edge_a; }
};

/// One FoldType per vertex.
struct FoldingInfo {
    std::vector<FoldType> folds;

    std::size_t size() const { return folds.size(); }
    FoldType at(int i) const { return folds.at(static_cast<std::size_t>(i)); }

    FoldingInfo toggled_all() const {
        FoldingInfo out = *this;
        for (auto& f : out.folds) f = toggled(f);
        return out;
    }

    static FoldingInfo all(std::size_t n, FoldType t) {
        return FoldingInfo{std::vector<FoldType>(n, t)};
    }
    /// Vertex 0 gets the opposite type of all the others.
    static FoldingInfo one_different(std::size_t n, FoldType majority = FoldType::Over);
};

struct KnotDiagram {
    std::vector<Vec2> vertices;
    std::vector<Crossing> crossings;
    FoldingInfo folds;
    std::optional<std::string> knot_type_label;  // user supplied, never computed
    std::optional<std::string> name;

    int size() const { return static_cast<int>(vertices.size()); }
    Vec2 vertex(int i) const;
    /// Edge i = [v_i, v_{i+1 mod n}].
    Segment edge(int i) const;
    Vec2 edge_dir(int i) const { return edge(i).dir(); }
    bool edges_adjacent(int i, int j) const;
};

/// Builds a diagram, computing each crossing's intersection point from the
/// edge geometry.  `crossing_specs` holds (edge_a, edge_b, over) triples
/// with 0-based non-adjacent edge indices.  Records whose edges do not
/// properly intersect are kept with a NaN point so that validation can
/// report them.
KnotDiagram make_diagram(std::vector<Vec2> vertices,
                         FoldingInfo folds,
                         const std::vector<std::tuple<int, int, OverStrand>>& crossing_specs = {},
                         std::optional<std::string> knot_type = {},
                         std::optional<std::string> name = {},
                         double tol = kDefaultTol);

enum class IssueKind {
    ZeroLengthEdge,
    NonTransverseIntersection,
    TriplePoint,
    VertexOnEdge,
    MissingCrossing,
    ExtraCrossing,
    CrossingPointMismatch,
    InvalidCrossingRecord,
    DegenerateFold,
    BadFoldCount,
};

std::string to_string(IssueKind k);

struct Issue {
    IssueKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Issue> issues;

    bool ok() const { return issues.empty(); }
};

/// Recomputes every pairwise edge intersection and cross-checks the result
/// against the declared crossing list; also rejects non-regular diagrams
/// (tangencies, triple points, vertices interior to other edges) and
/// degenerate (theta = 0) folds.  Findings go in the report; nothing throws.
ValidationReport validate_diagram(const KnotDiagram& d, double tol = kDefaultTol);

/// Fold angle at vertex i.  Throws DegenerateFoldError when the edge doubles
/// back exactly (theta = 0 within tol).
FoldAngle fold_angle(const KnotDiagram& d, int i, double tol = kDefaultTol);

/// Handed fold type at vertex i; requires a fold there (theta < pi).
HandedFold handed_fold(const KnotDiagram& d, const FoldingInfo& f, int i,
                       double tol = kDefaultTol);

/// Sum of edge lengths.
double diagram_length(const KnotDiagram& d);

/// Reverses the traversal direction: vertex order flipped (keeping v_0
/// first, so the operation is an exact involution), every fold toggled
/// Over <-> Under, crossings re-indexed onto the renumbered edges with the
/// physical over strand preserved.
KnotDiagram reverse_orientation(const KnotDiagram& d);

}  // namespace ribbonknot

#endif
