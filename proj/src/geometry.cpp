#include "ribbonknot/geometry.hpp"

#include <algorithm>

namespace ribbonknot {

double point_line_distance(Vec2 p, const Segment& s) {
    const Vec2 d = s.b - s.a;
    const double l = length(d);
    if (l == 0) return distance(p, s.a);
    return std::abs(cross(d / l, p - s.a));
}

double point_segment_distance(Vec2 p, const Segment& s) {
    const Vec2 d = s.b - s.a;
    const double l2 = dot(d, d);
    if (l2 == 0) return distance(p, s.a);
    const double t = std::clamp(dot(p - s.a, d) / l2, 0.0, 1.0);
    return distance(p, s.at(t));
}

double segment_distance(const Segment& s, const Segment& t) {
    // Proper crossings have distance zero.
    const Vec2 r = s.b - s.a, u = t.b - t.a;
    const double den = cross(r, u);
    if (den != 0) {
        const double a = cross(t.a - s.a, u) / den;
        const double b = cross(t.a - s.a, r) / den;
        if (a >= 0 && a <= 1 && b >= 0 && b <= 1) return 0;
    }
    return std::min(std::min(point_segment_distance(s.a, t), point_segment_distance(s.b, t)),
                    std::min(point_segment_distance(t.a, s), point_segment_distance(t.b, s)));
}

std::optional<SegmentHit> segment_intersection(const Segment& s, const Segment& t,
                                               double tol) {
    const Vec2 r = s.b - s.a, u = t.b - t.a;
    const double lr = length(r), lu = length(u);
    if (lr == 0 || lu == 0) return std::nullopt;
    const double den = cross(r, u);
    // Near-parallel: sin of the angle between the lines below tol/len means
    // the crossing parameter is not resolvable at the tol scale.
    if (std::abs(den) <= tol * std::max(lr, lu)) return std::nullopt;
    const double a = cross(t.a - s.a, u) / den;
    const double b = cross(t.a - s.a, r) / den;
    const double ea = tol / lr, eb = tol / lu;
    if (a <= ea || a >= 1 - ea || b <= eb || b >= 1 - eb) return std::nullopt;
    return SegmentHit{s.at(a), a, b};
}

double polygon_area(std::span<const Vec2> poly) {
    const std::size_t n = poly.size();
    if (n < 3) return 0;
    // Shoelace anchored at the first vertex: keeps tiny polygons far from
    // the origin measurable instead of drowning in cancellation noise.
    const Vec2 o = poly[0];
    double s = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        s += cross(poly[i] - o, poly[i + 1] - o);
    }
    return s / 2;
}

ConvexPolygon clip_half_plane(const ConvexPolygon& poly, Vec2 o, Vec2 d) {
    ConvexPolygon out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 p = poly[i], q = poly[(i + 1) % n];
        const double sp = cross(d, p - o);
        const double sq = cross(d, q - o);
        if (sp >= 0) out.push_back(p);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
            const double t = sp / (sp - sq);
            out.push_back(p + (q - p) * t);
        }
    }
    return out;
}

ConvexPolygon clip_convex(const ConvexPolygon& subject, const ConvexPolygon& clip) {
    ConvexPolygon out = subject;
    const std::size_t n = clip.size();
    for (std::size_t i = 0; i < n && !out.empty(); ++i) {
        out = clip_half_plane(out, clip[i], clip[(i + 1) % n] - clip[i]);
    }
    return out;
}

bool point_in_convex(Vec2 p, std::span<const Vec2> poly, double tol) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i], b = poly[(i + 1) % n];
        const double l = distance(a, b);
        if (l == 0) continue;
        if (cross((b - a) / l, p - a) < -tol) return false;
    }
    return true;
}

ConvexPolygon make_ccw(ConvexPolygon poly) {
    if (polygon_area(poly) < 0) std::reverse(poly.begin(), poly.end());
    return poly;
}

}  // namespace ribbonknot
