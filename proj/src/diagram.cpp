#include "ribbonknot/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

namespace ribbonknot {

namespace {

int mod(int i, int n) { return ((i % n) + n) % n; }

std::string edge_pair(int a, int b) {
    std::ostringstream os;
    os << "edges " << a + 1 << " and " << b + 1;  // 1-based in messages
    return os.str();
}

}  // namespace

FoldingInfo FoldingInfo::one_different(std::size_t n, FoldType majority) {
    FoldingInfo f = all(n, majority);
    if (n > 0) f.folds[0] = toggled(majority);
    return f;
}

Vec2 KnotDiagram::vertex(int i) const {
    return vertices[static_cast<std::size_t>(mod(i, size()))];
}

Segment KnotDiagram::edge(int i) const {
    return {vertex(i), vertex(i + 1)};
}

bool KnotDiagram::edges_adjacent(int i, int j) const {
    const int n = size();
    const int d = mod(j - i, n);
    return d == 0 || d == 1 || d == n - 1;
}

KnotDiagram make_diagram(std::vector<Vec2> vertices,
                         FoldingInfo folds,
                         const std::vector<std::tuple<int, int, OverStrand>>& crossing_specs,
                         std::optional<std::string> knot_type,
                         std::optional<std::string> name,
                         double tol) {
    KnotDiagram d;
    d.vertices = std::move(vertices);
    d.folds = std::move(folds);
    d.knot_type_label = std::move(knot_type);
    d.name = std::move(name);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (auto [a, b, over] : crossing_specs) {
        if (a > b) {
            std::swap(a, b);
            over = over == OverStrand::A ? OverStrand::B : OverStrand::A;
        }
        Crossing c{a, b, {nan, nan}, over};
        if (a >= 0 && b < d.size() && !d.edges_adjacent(a, b)) {
            if (auto hit = segment_intersection(d.edge(a), d.edge(b), tol)) {
                c.point = hit->point;
            }
        }
        d.crossings.push_back(c);
    }
    std::sort(d.crossings.begin(), d.crossings.end(),
              [](const Crossing& l, const Crossing& r) {
                  return std::pair(l.edge_a, l.edge_b) < std::pair(r.edge_a, r.edge_b);
              });
    return d;
}

std::string to_string(IssueKind k) {
    switch (k) {
        case IssueKind::ZeroLengthEdge: return "zero-length edge";
        case IssueKind::NonTransverseIntersection: return "non-transverse intersection";
        case IssueKind::TriplePoint: return "triple point";
        case IssueKind::VertexOnEdge: return "vertex on edge";
        case IssueKind::MissingCrossing: return "missing crossing record";
        case IssueKind::ExtraCrossing: return "extra crossing record";
        case IssueKind::CrossingPointMismatch: return "crossing point mismatch";
        case IssueKind::InvalidCrossingRecord: return "invalid crossing record";
        case IssueKind::DegenerateFold: return "degenerate fold";
        case IssueKind::BadFoldCount: return "fold count differs from vertex count";
    }
    return "unknown";
}

ValidationReport validate_diagram(const KnotDiagram& d, double tol) {
    ValidationReport rep;
    auto issue = [&](IssueKind k, const std::string& detail) {
        rep.issues.push_back({k, detail});
    };

    const int n = d.size();
    if (n < 2) {
        issue(IssueKind::ZeroLengthEdge, "fewer than 2 vertices");
        return rep;
    }
    if (d.folds.size() != static_cast<std::size_t>(n)) {
        issue(IssueKind::BadFoldCount, "");
    }

    for (int i = 0; i < n; ++i) {
        if (d.edge(i).len() <= tol) {
            std::ostringstream os;
            os << "edge " << i + 1;
            issue(IssueKind::ZeroLengthEdge, os.str());
        }
    }
    if (!rep.ok()) return rep;  // remaining checks assume nonzero edges

    // Degenerate folds: the diagram doubles back exactly at a vertex.
    for (int i = 0; i < n; ++i) {
        const Vec2 u = d.edge_dir(mod(i - 1, n));
        const Vec2 v = d.edge_dir(i);
        const double turn = std::atan2(cross(u, v), dot(u, v));
        if (std::numbers::pi - std::abs(turn) <= tol) {
            std::ostringstream os;
            os << "vertex " << i + 1;
            issue(IssueKind::DegenerateFold, os.str());
        }
    }

    // No vertex may sit in the interior of a non-incident edge.
    for (int i = 0; i < n; ++i) {
        for (int e = 0; e < n; ++e) {
            if (e == i || mod(e + 1, n) == i) continue;
            if (point_segment_distance(d.vertex(i), d.edge(e)) <= tol) {
                std::ostringstream os;
                os << "vertex " << i + 1 << " on edge " << e + 1;
                issue(IssueKind::VertexOnEdge, os.str());
            }
        }
    }

    // Recompute all non-adjacent pairwise intersections.
    struct Found {
        int a, b;
        Vec2 p;
    };
    std::vector<Found> found;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (d.edges_adjacent(i, j)) continue;
            const Segment si = d.edge(i), sj = d.edge(j);
            const auto hit = segment_intersection(si, sj, tol);
            if (hit) {
                found.push_back({i, j, hit->point});
            } else if (segment_distance(si, sj) <= tol) {
                // Touching without a clean transverse interior crossing.
                issue(IssueKind::NonTransverseIntersection, edge_pair(i, j));
            }
        }
    }

    // Triple points: computed crossing points must be pairwise distinct.
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t j = i + 1; j < found.size(); ++j) {
            if (distance(found[i].p, found[j].p) <= tol) {
                std::ostringstream os;
                os << edge_pair(found[i].a, found[i].b) << " / "
                   << edge_pair(found[j].a, found[j].b);
                issue(IssueKind::TriplePoint, os.str());
            }
        }
    }

    // Cross-check declared records against the recomputed set.
    std::set<std::pair<int, int>> declared;
    for (const Crossing& c : d.crossings) {
        if (c.edge_a < 0 || c.edge_b >= n || c.edge_a >= c.edge_b ||
            d.edges_adjacent(c.edge_a, c.edge_b)) {
            issue(IssueKind::InvalidCrossingRecord, edge_pair(c.edge_a, c.edge_b));
            continue;
        }
        if (!declared.insert({c.edge_a, c.edge_b}).second) {
            issue(IssueKind::ExtraCrossing, edge_pair(c.edge_a, c.edge_b) + " (duplicate)");
            continue;
        }
        const auto it = std::find_if(found.begin(), found.end(), [&](const Found& f) {
            return f.a == c.edge_a && f.b == c.edge_b;
        });
        if (it == found.end()) {
            issue(IssueKind::ExtraCrossing, edge_pair(c.edge_a, c.edge_b));
        } else if (!(distance(it->p, c.point) <= tol)) {
            issue(IssueKind::CrossingPointMismatch, edge_pair(c.edge_a, c.edge_b));
        }
    }
    for (const Found& f : found) {
        if (!declared.contains({f.a, f.b})) {
            issue(IssueKind::MissingCrossing, edge_pair(f.a, f.b));
        }
    }

    return rep;
}

FoldAngle fold_angle(const KnotDiagram& d, int i, double tol) {
    const int n = d.size();
    const Vec2 u = d.edge_dir(mod(i - 1, n));
    const Vec2 v = d.edge_dir(i);
    const double turn = std::atan2(cross(u, v), dot(u, v));
    const double mag = std::numbers::pi - std::abs(turn);
    if (mag <= tol) throw DegenerateFoldError("degenerate fold: edge doubles back");
    FoldAngle a;
    if (std::abs(turn) <= kFlatFoldEps) {
        // Collinear continuation: magnitude pi, sign undefined, no fold line.
        a.magnitude = std::numbers::pi;
        return a;
    }
    a.magnitude = mag;
    a.sign = turn > 0 ? Side::Left : Side::Right;
    return a;
}

HandedFold handed_fold(const KnotDiagram& d, const FoldingInfo& f, int i, double tol) {
    const FoldAngle a = fold_angle(d, i, tol);
    if (a.is_flat()) throw Error("no fold at a flat vertex");
    const bool left = *a.sign == Side::Left;
    const bool over = f.at(i) == FoldType::Over;
    if (left) return over ? HandedFold::LeftOver : HandedFold::LeftUnder;
    return over ? HandedFold::RightOver : HandedFold::RightUnder;
}

double diagram_length(const KnotDiagram& d) {
    double s = 0;
    for (int i = 0; i < d.size(); ++i) s += d.edge(i).len();
    return s;
}

KnotDiagram reverse_orientation(const KnotDiagram& d) {
    const int n = d.size();
    KnotDiagram out;
    out.knot_type_label = d.knot_type_label;
    out.name = d.name;
    out.vertices.resize(static_cast<std::size_t>(n));
    out.folds.folds.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int old = mod(-j, n);
        out.vertices[static_cast<std::size_t>(j)] = d.vertices[static_cast<std::size_t>(old)];
        out.folds.folds[static_cast<std::size_t>(j)] =
            toggled(d.folds.folds[static_cast<std::size_t>(old)]);
    }
    // Old edge i = [v_i, v_{i+1}] becomes new edge n-1-i, traversed backward.
    for (const Crossing& c : d.crossings) {
        Crossing r;
        r.edge_a = n - 1 - c.edge_b;
        r.edge_b = n - 1 - c.edge_a;
        r.point = c.point;
        r.over = c.over == OverStrand::A ? OverStrand::B : OverStrand::A;
        out.crossings.push_back(r);
    }
    std::sort(out.crossings.begin(), out.crossings.end(),
              [](const Crossing& l, const Crossing& r) {
                  return std::pair(l.edge_a, l.edge_b) < std::pair(r.edge_a, r.edge_b);
              });
    return out;
}

}  // namespace ribbonknot
