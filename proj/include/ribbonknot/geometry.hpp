#ifndef RIBBONKNOT_GEOMETRY_HPP
#define RIBBONKNOT_GEOMETRY_HPP

/// Planar primitives shared by the whole library.
///
/// Everything is double precision.  Point-coincidence and transversality
/// tests take a single absolute tolerance `tol` passed explicitly by the
/// caller; there are no hidden epsilons.

#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace ribbonknot {

struct Vec2 {
    double x = 0;
    double y = 0;

    constexpr bool operator==(const Vec2&) const = default;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return a * s; }
    friend constexpr Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double length(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return length(a - b); }
inline Vec2 normalized(Vec2 a) { return a / length(a); }

/// Counterclockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

struct Segment {
    Vec2 a;
    Vec2 b;

    Vec2 dir() const { return normalized(b - a); }
    double len() const { return distance(a, b); }
    Vec2 at(double t) const { return a + (b - a) * t; }
};

/// Distance from point p to the infinite line through `s`.
double point_line_distance(Vec2 p, const Segment& s);

/// Distance from point p to the segment `s`.
double point_segment_distance(Vec2 p, const Segment& s);

/// Minimum distance between two segments.
double segment_distance(const Segment& s, const Segment& t);

struct SegmentHit {
    Vec2 point;
    double t;  // parameter on the first segment, in (0,1)
    double u;  // parameter on the second segment
};

/// Transverse interior intersection of two segments, or nullopt.
///
/// `tol` is an absolute length tolerance: intersections closer than tol to
/// an endpoint, and near-parallel configurations whose intersection point
/// is not resolvable to better than tol, are rejected.
std::optional<SegmentHit> segment_intersection(const Segment& s, const Segment& t,
                                               double tol);

/// Convex polygon as a CCW vertex loop.  An empty vector is the empty set.
using ConvexPolygon = std::vector<Vec2>;

/// Signed area (positive for CCW loops).
double polygon_area(std::span<const Vec2> poly);

/// Intersection of a convex polygon with the half plane
/// { p : cross(d, p - o) >= 0 }  (the left side of the directed line o + t*d).
ConvexPolygon clip_half_plane(const ConvexPolygon& poly, Vec2 o, Vec2 d);

/// Intersection of two convex polygons (Sutherland-Hodgman).  Both inputs
/// must be CCW.  The result is CCW and possibly empty.
ConvexPolygon clip_convex(const ConvexPolygon& subject, const ConvexPolygon& clip);

/// True when p is inside or on the boundary of a CCW convex polygon,
/// with slack `tol` on each edge.
bool point_in_convex(Vec2 p, std::span<const Vec2> poly, double tol);

ConvexPolygon make_ccw(ConvexPolygon poly);

}  // namespace ribbonknot

#endif
