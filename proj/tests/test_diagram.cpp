#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ribbonknot/diagram.hpp"
#include "ribbonknot/invariants.hpp"
#include "ribbonknot/samples.hpp"

using namespace ribbonknot;

namespace {

KnotDiagram unit_square() {
    return make_diagram({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                        FoldingInfo::all(4, FoldType::Over));
}

KnotDiagram equilateral(double s = 1.0) {
    return make_diagram({{0, 0}, {s, 0}, {s / 2, s * std::sqrt(3.0) / 2}},
                        FoldingInfo::all(3, FoldType::Over));
}

// Test-only oracle: brute-force all-pairs proper segment crossings, written
// against plain line algebra rather than the library's intersection code.
int brute_force_crossing_count(const KnotDiagram& d) {
    const int n = d.size();
    int count = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (d.edges_adjacent(i, j)) continue;
            const Segment s = d.edge(i), t = d.edge(j);
            const double d1 = cross(s.b - s.a, t.a - s.a);
            const double d2 = cross(s.b - s.a, t.b - s.a);
            const double d3 = cross(t.b - t.a, s.a - t.a);
            const double d4 = cross(t.b - t.a, s.b - t.a);
            if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("validate: square is regular with no crossings") {
    CHECK(validate_diagram(unit_square()).ok());
}

TEST_CASE("validate: spurious crossing record is flagged") {
    const KnotDiagram d = make_diagram({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                       FoldingInfo::all(4, FoldType::Over),
                                       {{0, 2, OverStrand::A}});
    const ValidationReport rep = validate_diagram(d);
    REQUIRE(!rep.ok());
    CHECK(rep.issues.size() == 1);
    CHECK(rep.issues[0].kind == IssueKind::ExtraCrossing);
}

TEST_CASE("validate: missing crossing record is flagged") {
    // Crossed quadrilateral with one real crossing, none declared.
    const KnotDiagram d = make_diagram({{0, 0}, {4, 0}, {1, 2}, {3, 2}},
                                       FoldingInfo::all(4, FoldType::Over));
    const ValidationReport rep = validate_diagram(d);
    REQUIRE(!rep.ok());
    CHECK(rep.issues[0].kind == IssueKind::MissingCrossing);
}

TEST_CASE("validate: standard (5,2) torus sample, oracle cross-check") {
    const KnotDiagram d = sample_diagram("t52-standard");
    CHECK(d.size() == 7);
    CHECK(d.crossings.size() == 5);
    CHECK(brute_force_crossing_count(d) == 5);
    CHECK(validate_diagram(d).ok());
}

TEST_CASE("validate: short (5,2) torus sample, oracle cross-check") {
    const KnotDiagram d = sample_diagram("t52-short");
    CHECK(d.size() == 7);
    CHECK(d.crossings.size() == 7);
    CHECK(brute_force_crossing_count(d) == 7);
    CHECK(validate_diagram(d).ok());
}

TEST_CASE("validate: every bundled sample is regular") {
    for (const std::string& name : sample_names()) {
        INFO(name);
        CHECK(validate_diagram(sample_diagram(name)).ok());
    }
}

TEST_CASE("validate: degenerate configurations") {
    SUBCASE("zero-length edge") {
        const KnotDiagram d = make_diagram({{0, 0}, {0, 0}, {1, 1}},
                                           FoldingInfo::all(3, FoldType::Over));
        CHECK(!validate_diagram(d).ok());
    }
    SUBCASE("vertex on edge") {
        const KnotDiagram d = make_diagram({{0, 0}, {2, 0}, {1, 0.0}, {1, 1}},
                                           FoldingInfo::all(4, FoldType::Over));
        CHECK(!validate_diagram(d).ok());
    }
    SUBCASE("doubling back is a degenerate fold") {
        const KnotDiagram d = make_diagram({{0, 0}, {2, 0}, {1, 0}},
                                           FoldingInfo::all(3, FoldType::Over));
        const ValidationReport rep = validate_diagram(d);
        bool found = false;
        for (const Issue& i : rep.issues) found |= i.kind == IssueKind::DegenerateFold;
        CHECK(found);
    }
}

TEST_CASE("fold_angle: square and triangle") {
    const KnotDiagram sq = unit_square();
    for (int i = 0; i < 4; ++i) {
        const FoldAngle a = fold_angle(sq, i);
        CHECK(a.magnitude == doctest::Approx(std::numbers::pi / 2));
        REQUIRE(a.sign.has_value());
        CHECK(*a.sign == Side::Left);
    }
    const KnotDiagram tri = equilateral();
    for (int i = 0; i < 3; ++i) {
        CHECK(fold_angle(tri, i).magnitude == doctest::Approx(std::numbers::pi / 3));
        CHECK(*fold_angle(tri, i).sign == Side::Left);
    }
}

TEST_CASE("fold_angle: collinear continuation is flat, no sign") {
    const KnotDiagram d = sample_diagram("t52-standard");
    CHECK(fold_angle(d, 0).is_flat());
    CHECK(fold_angle(d, 1).is_flat());
    CHECK(fold_angle(d, 0).magnitude == doctest::Approx(std::numbers::pi));
}

TEST_CASE("fold_angle: doubling back throws") {
    const KnotDiagram d = make_diagram({{0, 0}, {2, 0}, {1, 0}},
                                       FoldingInfo::all(3, FoldType::Over));
    CHECK_THROWS_AS(fold_angle(d, 1), DegenerateFoldError);  // the hairpin at (2,0)
    CHECK(fold_angle(d, 2).is_flat());                       // straight continuation
}

TEST_CASE("diagram_length") {
    CHECK(diagram_length(unit_square()) == doctest::Approx(4.0));
    CHECK(diagram_length(equilateral(2.5)) == doctest::Approx(7.5));
    const double side = 1 / std::tan(std::numbers::pi / 5);
    KnotDiagram pent = make_diagram(
        [&] {
            std::vector<Vec2> v;
            const double r = side / (2 * std::sin(std::numbers::pi / 5));
            for (int k = 0; k < 5; ++k) {
                const double a = 2 * std::numbers::pi * k / 5;
                v.push_back({r * std::cos(a), r * std::sin(a)});
            }
            return v;
        }(),
        FoldingInfo::all(5, FoldType::Over));
    CHECK(diagram_length(pent) == doctest::Approx(5 / std::tan(std::numbers::pi / 5)));
}

TEST_CASE("reverse_orientation toggles folds and preserves crossings") {
    KnotDiagram tri = equilateral();
    const KnotDiagram rev = reverse_orientation(tri);
    for (FoldType f : rev.folds.folds) CHECK(f == FoldType::Under);

    const KnotDiagram d = sample_diagram("t52-short");
    const KnotDiagram r = reverse_orientation(d);
    CHECK(r.crossings.size() == d.crossings.size());
    CHECK(validate_diagram(r).ok());
}

TEST_CASE("reverse_orientation is an involution") {
    for (const char* name : {"fig1-3stick", "fig1-4stick", "t52-short", "t52-standard"}) {
        const KnotDiagram d = sample_diagram(name);
        const KnotDiagram dd = reverse_orientation(reverse_orientation(d));
        REQUIRE(dd.size() == d.size());
        for (int i = 0; i < d.size(); ++i) {
            CHECK(dd.vertex(i) == d.vertex(i));  // bitwise
            CHECK(dd.folds.at(i) == d.folds.at(i));
        }
        REQUIRE(dd.crossings.size() == d.crossings.size());
        for (std::size_t k = 0; k < d.crossings.size(); ++k) {
            CHECK(dd.crossings[k].edge_a == d.crossings[k].edge_a);
            CHECK(dd.crossings[k].edge_b == d.crossings[k].edge_b);
            CHECK(dd.crossings[k].over == d.crossings[k].over);
        }
    }
}

TEST_CASE("reverse_orientation preserves the ribbon linking number") {
    for (const char* name :
         {"fig1-3stick", "fig1-4stick", "fig5-left", "fig5-right", "t52-short",
          "t52-standard"}) {
        const KnotDiagram d = sample_diagram(name);
        CHECK(ribbon_linking_number(reverse_orientation(d)) == ribbon_linking_number(d));
    }
}

TEST_CASE("signed fold angles of a convex diagram sum to a full turn") {
    // Exterior angle theorem: the turns (pi - theta_i), signed by side, total 2 pi.
    for (int n : {3, 4, 5, 6, 8, 12}) {
        std::vector<Vec2> verts;
        for (int k = 0; k < n; ++k) {
            const double a = 2 * std::numbers::pi * k / n;
            verts.push_back({std::cos(a), std::sin(a)});
        }
        const KnotDiagram d =
            make_diagram(std::move(verts), FoldingInfo::all(static_cast<std::size_t>(n), FoldType::Over));
        double total = 0;
        for (int i = 0; i < n; ++i) {
            const FoldAngle a = fold_angle(d, i);
            REQUIRE(a.sign.has_value());
            total += (*a.sign == Side::Left ? 1 : -1) * (std::numbers::pi - a.magnitude);
        }
        CHECK(total == doctest::Approx(2 * std::numbers::pi));
    }
}

TEST_CASE("handed_fold combines turn side and fold type") {
    const KnotDiagram sq = unit_square();  // all left turns
    CHECK(handed_fold(sq, sq.folds, 0) == HandedFold::LeftOver);
    CHECK(handed_fold(sq, FoldingInfo::all(4, FoldType::Under), 1) == HandedFold::LeftUnder);
    const KnotDiagram cw = reverse_orientation(sq);  // right turns, folds toggled
    CHECK(handed_fold(cw, cw.folds, 0) == HandedFold::RightUnder);
}
