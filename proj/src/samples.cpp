#include "ribbonknot/samples.hpp"

#include <cmath>

#include "ribbonknot/bounds.hpp"

namespace ribbonknot {

namespace {

using Spec = std::tuple<int, int, OverStrand>;

KnotDiagram square(const char* folds, const char* name) {
    std::vector<FoldType> f;
    for (const char* p = folds; *p; ++p) {
        f.push_back(*p == 'O' ? FoldType::Over : FoldType::Under);
    }
    return make_diagram({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, FoldingInfo{std::move(f)}, {},
                        "unknot", name);
}

KnotDiagram triangle(const char* folds, const char* name) {
    std::vector<FoldType> f;
    for (const char* p = folds; *p; ++p) {
        f.push_back(*p == 'O' ? FoldType::Over : FoldType::Under);
    }
    return make_diagram({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}, FoldingInfo{std::move(f)},
                        {}, "unknot", name);
}

// Pentagram star points, first point on top, steps of 144 degrees.
constexpr Vec2 kStar[5] = {
    {6.123233995736766e-17, 1.0},
    {-0.58778525229247325, -0.80901699437494734},
    {0.95105651629515364, 0.30901699437494717},
    {-0.95105651629515342, 0.30901699437494778},
    {0.5877852522924728, -0.80901699437494767},
};

/// Standard (5,2) torus diagram: the pentagram, with the edge into the top
/// point subdivided by two collinear vertices (the straightened remnant of
/// the shorter diagram's extra sticks).  Alternating crossings.
KnotDiagram t52_standard() {
    const Vec2 a = kStar[4] + (kStar[0] - kStar[4]) * 0.85;
    const Vec2 b = kStar[4] + (kStar[0] - kStar[4]) * 0.92;
    std::vector<Vec2> verts{a, b, kStar[0], kStar[1], kStar[2], kStar[3], kStar[4]};
    const std::vector<Spec> crossings{
        {2, 4, OverStrand::A}, {2, 5, OverStrand::B}, {3, 5, OverStrand::A},
        {3, 6, OverStrand::B}, {4, 6, OverStrand::A},
    };
    return make_diagram(std::move(verts), FoldingInfo::all(7, FoldType::Over), crossings,
                        "5_1", "t52-standard");
}

/// Shorter (5,2) torus diagram: the top star point is replaced by a pleat
/// that dips below the opposite edge, adding two sticks, two crossings that
/// cancel in sign, and one full twist of the band.
KnotDiagram t52_short() {
    const Vec2 a = kStar[4] + (kStar[0] - kStar[4]) * 0.71803398874989488;
    const Vec2 b{0.02, 0.15};
    std::vector<Vec2> verts{a, b, kStar[0], kStar[1], kStar[2], kStar[3], kStar[4]};
    const std::vector<Spec> crossings{
        {0, 4, OverStrand::B}, {1, 4, OverStrand::B}, {2, 4, OverStrand::A},
        {2, 5, OverStrand::B}, {3, 5, OverStrand::A}, {3, 6, OverStrand::B},
        {4, 6, OverStrand::A},
    };
    std::vector<FoldType> folds{FoldType::Under, FoldType::Over, FoldType::Over,
                                FoldType::Over,  FoldType::Over, FoldType::Over,
                                FoldType::Over};
    return make_diagram(std::move(verts), FoldingInfo{std::move(folds)}, crossings, "5_1",
                        "t52-short");
}

}  // namespace

std::vector<std::string> sample_names() {
    std::vector<std::string> names{
        "fig1-3stick", "fig1-4stick", "fig5-left", "fig5-center", "fig5-right",
        "fig8-left",   "fig8-right",  "t52-standard", "t52-short",
    };
    for (int n = 3; n <= 12; ++n) names.push_back("ngon-" + std::to_string(n));
    return names;
}

KnotDiagram sample_diagram(const std::string& name) {
    if (name == "fig1-3stick") return triangle("UUO", "fig1-3stick");
    if (name == "fig1-4stick") return square("OOOU", "fig1-4stick");
    if (name == "fig5-left") return square("OUOU", "fig5-left");
    if (name == "fig5-center") return square("OOUU", "fig5-center");
    if (name == "fig5-right") return square("OOOO", "fig5-right");
    if (name == "fig8-left") return triangle("OOO", "fig8-left");
    if (name == "fig8-right") return triangle("UOO", "fig8-right");
    if (name == "t52-standard") return t52_standard();
    if (name == "t52-short") return t52_short();
    if (name.starts_with("ngon-")) {
        const int n = std::stoi(name.substr(5));
        if (n >= 3 && n <= 64) {
            KnotDiagram d = regular_ngon_diagram(n, 1.0, FoldPattern::AllOver);
            d.name = name;
            return d;
        }
    }
    throw Error("unknown sample: " + name);
}

}  // namespace ribbonknot
