#include "ribbonknot/bounds.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace ribbonknot {

KnotDiagram regular_ngon_diagram(int n, double side, FoldPattern pattern) {
    FoldingInfo folds;
    switch (pattern) {
        case FoldPattern::AllOver:
            folds = FoldingInfo::all(static_cast<std::size_t>(n), FoldType::Over);
            break;
        case FoldPattern::AllUnder:
            folds = FoldingInfo::all(static_cast<std::size_t>(n), FoldType::Under);
            break;
        case FoldPattern::OneDifferent:
            folds = FoldingInfo::one_different(static_cast<std::size_t>(n), FoldType::Over);
            break;
    }
    return regular_ngon_diagram(n, side, std::move(folds));
}

KnotDiagram regular_ngon_diagram(int n, double side, FoldingInfo folds) {
    if (n < 3) throw std::invalid_argument("regular_ngon_diagram needs n >= 3");
    if (side <= 0) throw std::invalid_argument("side must be positive");
    if (folds.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("fold count must equal n");
    }
    const double r = side / (2 * std::sin(std::numbers::pi / n));
    std::vector<Vec2> verts;
    verts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double a = 2 * std::numbers::pi * k / n;
        verts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return make_diagram(std::move(verts), std::move(folds), {}, "unknot");
}

double ngon_ribbonlength_bound(int n) {
    if (n < 4) throw std::invalid_argument("ngon_ribbonlength_bound needs n >= 4");
    return n / std::tan(std::numbers::pi / n);
}

TriangleMetrics triangle_metrics(Vec2 p1, Vec2 p2, Vec2 p3) {
    const double twice_area = cross(p2 - p1, p3 - p1);
    if (twice_area == 0) throw std::invalid_argument("collinear points");
    TriangleMetrics m;
    m.area = std::abs(twice_area) / 2;
    const double a = distance(p2, p3);  // side opposite p1
    const double b = distance(p1, p3);
    const double c = distance(p1, p2);
    m.perimeter = a + b + c;
    m.incenter = (p1 * a + p2 * b + p3 * c) / m.perimeter;
    m.inradius = 2 * m.area / m.perimeter;
    return m;
}

double triangle_face_width_bound(Vec2 p1, Vec2 p2, Vec2 p3,
                                 const std::array<bool, 3>& corner_over) {
    const bool coherent = (corner_over[0] == corner_over[1]) && (corner_over[1] == corner_over[2]);
    if (!coherent) return std::numeric_limits<double>::infinity();
    return 2 * triangle_metrics(p1, p2, p3).inradius;
}

double triangle_width_bound(const KnotDiagram& d) {
    return triangle_width_bound(d, d.folds);
}

double triangle_width_bound(const KnotDiagram& d, const FoldingInfo& folds) {
    if (d.size() != 3) throw std::invalid_argument("not a triangle");
    const std::array<bool, 3> corner_over{folds.at(0) == FoldType::Over,
                                          folds.at(1) == FoldType::Over,
                                          folds.at(2) == FoldType::Over};
    return triangle_face_width_bound(d.vertex(0), d.vertex(1), d.vertex(2), corner_over);
}

std::pair<double, TriangleShape> max_inradius_fixed_perimeter(double perimeter) {
    if (perimeter <= 0) throw std::invalid_argument("perimeter must be positive");
    return {perimeter / (6 * std::sqrt(3.0)), TriangleShape::Equilateral};
}

double three_stick_bounds(FoldPattern pattern) {
    switch (pattern) {
        case FoldPattern::AllOver:
        case FoldPattern::AllUnder: return 3 * std::sqrt(3.0);
        case FoldPattern::OneDifferent: return std::sqrt(3.0);
    }
    throw std::invalid_argument("unknown pattern");
}

}  // namespace ribbonknot
