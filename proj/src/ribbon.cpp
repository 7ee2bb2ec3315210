#include "ribbonknot/ribbon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace ribbonknot {

namespace {

int mod(int i, int n) { return ((i % n) + n) % n; }

bool is_flat_vertex(const KnotDiagram& d, int i, double tol) {
    return fold_angle(d, i, tol).is_flat();
}

struct Joint {
    Segment seg;       // fold line, or the perpendicular cap at a flat vertex
    bool is_fold = false;
};

Joint make_joint(const KnotDiagram& d, int i, double w, double tol) {
    if (is_flat_vertex(d, i, tol)) {
        const Vec2 n = perp(d.edge_dir(i));
        const Vec2 v = d.vertex(i);
        return {Segment{v + n * (w / 2), v - n * (w / 2)}, false};
    }
    return {fold_line(d, i, w, tol), true};
}

/// Joint endpoint at vertex v lying on side `s` of edge `edge_i`.
Vec2 joint_endpoint(const Joint& j, const KnotDiagram& d, int vertex_i, int edge_i, Side s) {
    const Vec2 n = perp(d.edge_dir(edge_i));
    const double da = dot(j.seg.a - d.vertex(vertex_i), n);
    const bool a_left = da > 0;
    return (s == Side::Left) == a_left ? j.seg.a : j.seg.b;
}

}  // namespace

std::vector<Vec2> FoldedRibbon::boundary_polyline(std::size_t component) const {
    std::vector<Vec2> out;
    for (const BoundarySegment& b : boundaries.at(component)) out.push_back(b.seg.a);
    return out;
}

Segment fold_line(const KnotDiagram& d, int i, double w, double tol) {
    if (w <= 0) throw std::invalid_argument("width must be positive");
    const FoldAngle a = fold_angle(d, i, tol);  // throws on theta = 0
    if (a.is_flat()) throw Error("no fold line at a flat vertex");
    const double len = w / std::cos(a.magnitude / 2);
    if (!(len <= 1e12 * w)) throw WidthError("degenerate fold line");
    const Vec2 u = d.edge_dir(mod(i - 1, d.size()));
    const Vec2 v = d.edge_dir(i);
    const Vec2 f = normalized(u + v);  // reflection axis; perpendicular to the bisector
    const Vec2 c = d.vertex(i);
    return {c + f * (len / 2), c - f * (len / 2)};
}

std::variant<FoldedRibbon, BuildFailure> try_build_ribbon(const KnotDiagram& d, double w,
                                                          double tol) {
    if (w <= 0) throw std::invalid_argument("width must be positive");
    const int n = d.size();

    FoldedRibbon r;
    r.width = w;
    std::vector<Joint> joints;
    joints.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        joints.push_back(make_joint(d, i, w, tol));  // DegenerateFold/WidthError propagate
        r.fold_lines.push_back(joints.back().is_fold ? std::optional(joints.back().seg)
                                                     : std::nullopt);
    }

    // Strips.  A strip degenerates when its two joints cross or when the
    // quadrilateral between them loses its orientation.
    for (int i = 0; i < n; ++i) {
        const Joint& j0 = joints[static_cast<std::size_t>(i)];
        const Joint& j1 = joints[static_cast<std::size_t>(mod(i + 1, n))];
        if (segment_intersection(j0.seg, j1.seg, tol)) {
            std::ostringstream os;
            os << "width exceeds local geometry at edge " << i + 1;
            return BuildFailure{os.str()};
        }
        ConvexPolygon quad{
            joint_endpoint(j0, d, i, i, Side::Right),
            joint_endpoint(j1, d, mod(i + 1, n), i, Side::Right),
            joint_endpoint(j1, d, mod(i + 1, n), i, Side::Left),
            joint_endpoint(j0, d, i, i, Side::Left),
        };
        if (polygon_area(quad) <= tol * tol) {
            std::ostringstream os;
            os << "width exceeds local geometry at edge " << i + 1;
            return BuildFailure{os.str()};
        }
        r.strips.push_back(std::move(quad));
    }

    // Boundaries: walk the offsets, switching sides at fold lines and
    // passing straight through flat vertices.
    std::vector<std::vector<bool>> visited(2, std::vector<bool>(static_cast<std::size_t>(n)));
    for (const Side start : {Side::Left, Side::Right}) {
        if (visited[start == Side::Left ? 0 : 1][0]) continue;
        std::vector<BoundarySegment> chain;
        int i = 0;
        Side s = start;
        while (!visited[s == Side::Left ? 0 : 1][static_cast<std::size_t>(i)]) {
            visited[s == Side::Left ? 0 : 1][static_cast<std::size_t>(i)] = true;
            const Joint& j0 = joints[static_cast<std::size_t>(i)];
            const int nxt = mod(i + 1, n);
            const Joint& j1 = joints[static_cast<std::size_t>(nxt)];
            const Vec2 p = joint_endpoint(j0, d, i, i, s);
            const Vec2 q = joint_endpoint(j1, d, nxt, i, s);
            chain.push_back({Segment{p, q}, i, s});
            if (j1.is_fold) s = s == Side::Left ? Side::Right : Side::Left;
            i = nxt;
        }
        if (!chain.empty()) r.boundaries.push_back(std::move(chain));
    }

    return r;
}

FoldedRibbon build_ribbon(const KnotDiagram& d, const FoldingInfo&, double w, double tol) {
    return build_ribbon(d, w, tol);
}

FoldedRibbon build_ribbon(const KnotDiagram& d, double w, double tol) {
    auto r = try_build_ribbon(d, w, tol);
    if (auto* fail = std::get_if<BuildFailure>(&r)) throw WidthError(fail->reason);
    return std::get<FoldedRibbon>(std::move(r));
}

namespace {

/// Fold-forced relation for adjacent strips a < b sharing one vertex:
/// returns the order of strip a relative to strip b, plus the vertex.
std::pair<OverlapOrder, int> fold_relation(const KnotDiagram& d, const FoldingInfo& folds,
                                           int a, int b) {
    const int n = d.size();
    int v;       // shared vertex
    int outgoing;  // the strip that leaves the fold
    if (mod(b - a, n) == 1) {
        v = b;
        outgoing = b;
    } else {
        v = a;
        outgoing = a;
    }
    const bool over = folds.at(v) == FoldType::Over;
    const bool a_above = (outgoing == a) == over;
    return {a_above ? OverlapOrder::AboveB : OverlapOrder::BelowB, v};
}

struct OverlapSet {
    std::vector<OverlapConstraint> emitted;
    /// Every positive-area pair component, emitted or not, keyed by (a, b).
    std::map<std::pair<int, int>, ConvexPolygon> pair_regions;
};

OverlapSet compute_overlaps(const KnotDiagram& d, const FoldingInfo& folds,
                            const FoldedRibbon& r, double tol) {
    const int n = d.size();
    const double area_eps = tol * tol;
    OverlapSet out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            ConvexPolygon p = clip_convex(r.strips[static_cast<std::size_t>(a)],
                                          r.strips[static_cast<std::size_t>(b)]);
            if (p.size() < 3 || polygon_area(p) <= area_eps) continue;
            out.pair_regions.emplace(std::pair(a, b), p);

            OverlapConstraint c;
            c.strip_a = a;
            c.strip_b = b;
            c.region = std::move(p);
            if (d.edges_adjacent(a, b)) {
                auto [order, v] = fold_relation(d, folds, a, b);
                c.required_order = order;
                c.source = {OverlapSource::Kind::Fold, v};
                // The doubled wedge next to the fold line exists for every
                // width; it only becomes a constraint once another strip
                // reaches into it.
                bool interacts = false;
                for (int k = 0; k < n && !interacts; ++k) {
                    if (k == a || k == b) continue;
                    ConvexPolygon t =
                        clip_convex(c.region, r.strips[static_cast<std::size_t>(k)]);
                    interacts = t.size() >= 3 && polygon_area(t) > area_eps;
                }
                if (!interacts) continue;
            } else {
                const auto it =
                    std::find_if(d.crossings.begin(), d.crossings.end(), [&](const Crossing& x) {
                        return x.edge_a == a && x.edge_b == b;
                    });
                if (it != d.crossings.end()) {
                    c.required_order =
                        it->over_edge() == a ? OverlapOrder::AboveB : OverlapOrder::BelowB;
                    c.source = {OverlapSource::Kind::Crossing,
                                static_cast<int>(it - d.crossings.begin())};
                } else {
                    c.required_order = OverlapOrder::Unconstrained;
                    c.source = {OverlapSource::Kind::Propagated, -1};
                }
            }
            out.emitted.push_back(std::move(c));
        }
    }
    return out;
}

struct Region {
    std::vector<int> strips;  // sorted, size >= 3
    ConvexPolygon poly;
};

/// All strip subsets of size >= 3 whose common intersection has positive
/// area.  Grown upward from overlapping pairs; each subset visited once.
std::vector<Region> multi_regions(const FoldedRibbon& r, const OverlapSet& ov, double tol) {
    const int n = static_cast<int>(r.strips.size());
    const double area_eps = tol * tol;
    std::vector<Region> out;
    struct Item {
        std::vector<int> strips;
        ConvexPolygon poly;
    };
    std::vector<Item> stack;
    for (const auto& [key, poly] : ov.pair_regions) {
        stack.push_back({{key.first, key.second}, poly});
    }
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        for (int k = it.strips.back() + 1; k < n; ++k) {
            ConvexPolygon p = clip_convex(it.poly, r.strips[static_cast<std::size_t>(k)]);
            if (p.size() < 3 || polygon_area(p) <= area_eps) continue;
            Item ext{it.strips, p};
            ext.strips.push_back(k);
            out.push_back({ext.strips, ext.poly});
            stack.push_back(std::move(ext));
        }
    }
    return out;
}

/// Directed cycle among `nodes` under the "is above" relation, or empty.
/// rel(i, j) yields +1 when i is above j, -1 when below, 0 when free.
template <typename Rel>
std::vector<std::pair<int, int>> find_cycle(const std::vector<int>& nodes, Rel rel) {
    const std::size_t m = nodes.size();
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            if (x == y) continue;
            if (rel(nodes[x], nodes[y]) > 0) adj[x].push_back(y);  // x above y
        }
    }
    std::vector<int> state(m, 0);
    std::vector<std::size_t> path;
    std::vector<std::pair<int, int>> cycle;
    auto dfs = [&](auto&& self, std::size_t u) -> bool {
        state[u] = 1;
        path.push_back(u);
        for (std::size_t v : adj[u]) {
            if (state[v] == 1) {
                const auto it = std::find(path.begin(), path.end(), v);
                for (auto p = it; p != path.end(); ++p) {
                    auto q = std::next(p) == path.end() ? it : std::next(p);
                    cycle.emplace_back(nodes[*p], nodes[*q]);
                }
                return true;
            }
            if (state[v] == 0 && self(self, v)) return true;
        }
        path.pop_back();
        state[u] = 2;
        return false;
    };
    for (std::size_t u = 0; u < m; ++u) {
        if (state[u] == 0 && dfs(dfs, u)) return cycle;
    }
    return {};
}

int forced_value(const OverlapConstraint& c) {
    switch (c.required_order) {
        case OverlapOrder::AboveB: return 1;
        case OverlapOrder::BelowB: return -1;
        case OverlapOrder::Unconstrained: return 0;
    }
    return 0;
}

}  // namespace

std::vector<OverlapConstraint> overlap_constraints(const KnotDiagram& d,
                                                   const FoldingInfo& folds, double w,
                                                   double tol) {
    const FoldedRibbon r = build_ribbon(d, w, tol);
    return compute_overlaps(d, folds, r, tol).emitted;
}

AllowedCertificate is_allowed(const KnotDiagram& d, double w, double tol) {
    return is_allowed(d, d.folds, w, tol);
}

AllowedCertificate is_allowed(const KnotDiagram& d, const FoldingInfo& folds, double w,
                              double tol) {
    AllowedCertificate cert;
    auto built = try_build_ribbon(d, w, tol);
    if (auto* fail = std::get_if<BuildFailure>(&built)) {
        cert.allowed = false;
        cert.failure = fail->reason;
        return cert;
    }
    const FoldedRibbon& r = std::get<FoldedRibbon>(built);
    OverlapSet ov = compute_overlaps(d, folds, r, tol);
    cert.constraints = std::move(ov.emitted);

    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t k = 0; k < cert.constraints.size(); ++k) {
        index[{cert.constraints[k].strip_a, cert.constraints[k].strip_b}] = k;
    }

    const std::vector<Region> regions = multi_regions(r, ov, tol);

    // values[k]: current relation of constraint k (+1 = a above b); 0 = open.
    std::vector<int> values(cert.constraints.size(), 0);
    for (std::size_t k = 0; k < cert.constraints.size(); ++k) {
        values[k] = forced_value(cert.constraints[k]);
    }
    auto rel = [&](int i, int j) -> int {
        const auto it = index.find({std::min(i, j), std::max(i, j)});
        if (it == index.end()) return 0;
        const int v = values[it->second];
        return i < j ? v : -v;
    };
    auto cycle_in_some_region = [&]() -> std::vector<std::pair<int, int>> {
        for (const Region& reg : regions) {
            auto c = find_cycle(reg.strips, rel);
            if (!c.empty()) return c;
        }
        return {};
    };

    // Forced relations alone must already be consistent.
    if (auto cyc = cycle_in_some_region(); !cyc.empty()) {
        cert.allowed = false;
        for (auto [i, j] : cyc) {
            const auto it = index.find({std::min(i, j), std::max(i, j)});
            if (it != index.end()) cert.conflict.push_back(it->second);
        }
        std::sort(cert.conflict.begin(), cert.conflict.end());
        cert.conflict.erase(std::unique(cert.conflict.begin(), cert.conflict.end()),
                            cert.conflict.end());
        return cert;
    }

    // Unconstrained pairs inside multi-covered regions can still interact
    // through transitivity; search the (tiny) assignment space.
    std::vector<std::size_t> flexible;
    for (const Region& reg : regions) {
        for (std::size_t x = 0; x < reg.strips.size(); ++x) {
            for (std::size_t y = x + 1; y < reg.strips.size(); ++y) {
                const auto it = index.find({reg.strips[x], reg.strips[y]});
                if (it != index.end() && forced_value(cert.constraints[it->second]) == 0) {
                    flexible.push_back(it->second);
                }
            }
        }
    }
    std::sort(flexible.begin(), flexible.end());
    flexible.erase(std::unique(flexible.begin(), flexible.end()), flexible.end());

    std::vector<std::pair<int, int>> last_cycle;
    auto assign = [&](auto&& self, std::size_t pos) -> bool {
        if (auto cyc = cycle_in_some_region(); !cyc.empty()) {
            last_cycle = cyc;
            return false;
        }
        if (pos == flexible.size()) return true;
        for (int v : {1, -1}) {
            values[flexible[pos]] = v;
            if (self(self, pos + 1)) return true;
        }
        values[flexible[pos]] = 0;
        return false;
    };
    if (!assign(assign, 0)) {
        cert.allowed = false;
        for (auto [i, j] : last_cycle) {
            const auto it = index.find({std::min(i, j), std::max(i, j)});
            if (it != index.end()) cert.conflict.push_back(it->second);
        }
        std::sort(cert.conflict.begin(), cert.conflict.end());
        cert.conflict.erase(std::unique(cert.conflict.begin(), cert.conflict.end()),
                            cert.conflict.end());
        return cert;
    }

    cert.allowed = true;
    cert.order_assignment.resize(cert.constraints.size());
    for (std::size_t k = 0; k < cert.constraints.size(); ++k) {
        cert.order_assignment[k] = values[k] != 0 ? values[k] : 1;
    }
    return cert;
}

int strip_order(const AllowedCertificate& cert, const KnotDiagram& d,
                const FoldingInfo& folds, int i, int j) {
    const int a = std::min(i, j), b = std::max(i, j);
    int v = 0;
    if (d.edges_adjacent(a, b)) {
        v = fold_relation(d, folds, a, b).first == OverlapOrder::AboveB ? 1 : -1;
    } else {
        const auto cr = std::find_if(d.crossings.begin(), d.crossings.end(),
                                     [&](const Crossing& x) {
                                         return x.edge_a == a && x.edge_b == b;
                                     });
        if (cr != d.crossings.end()) {
            v = cr->over_edge() == a ? 1 : -1;
        } else {
            for (std::size_t k = 0; k < cert.constraints.size(); ++k) {
                if (cert.constraints[k].strip_a == a && cert.constraints[k].strip_b == b) {
                    v = cert.order_assignment.empty() ? 1 : cert.order_assignment[k];
                    break;
                }
            }
            if (v == 0) throw Error("strips do not overlap; no layer order defined");
        }
    }
    return i < j ? v : -v;
}

std::vector<char> probe_allowed(const KnotDiagram& d, const FoldingInfo& folds,
                                const std::vector<double>& widths, double tol,
                                Execution exec) {
    std::vector<char> out(widths.size(), 0);
    parallel_for(widths.size(), exec, [&](std::size_t i) {
        out[i] = is_allowed(d, folds, widths[i], tol).allowed ? 1 : 0;
    });
    return out;
}

double max_width(const KnotDiagram& d, double tol, const MaxWidthOptions& opts) {
    return max_width(d, d.folds, tol, opts);
}

double max_width(const KnotDiagram& d, const FoldingInfo& folds, double tol,
                 const MaxWidthOptions& opts) {
    const double len = diagram_length(d);
    const double tol_w = tol * len;     // bisection accuracy
    const double geom_tol = tol * len;  // per-evaluation geometric tolerance
    const double cap = 1e6 * len;

    auto builds = [&](double w) {
        return std::holds_alternative<FoldedRibbon>(try_build_ribbon(d, w, geom_tol));
    };

    double w_hi = len / d.size();
    while (builds(w_hi)) {
        w_hi *= 2;
        if (w_hi > cap) throw Error("no structural width bound found below cap");
    }

    double lo = 0, hi = w_hi;
    int iter = 0;
    while (hi - lo > tol_w && iter++ < 200) {
        const double mid = (lo + hi) / 2;
        if (is_allowed(d, folds, mid, geom_tol).allowed) lo = mid;
        else hi = mid;
    }
    if (lo == 0) throw Error("no allowed width found");
    const double w_star = (lo + hi) / 2;

    if (opts.grid_check) {
        std::vector<double> grid;
        grid.reserve(100);
        for (int k = 1; k <= 100; ++k) grid.push_back(w_hi * k / 101.0);
        const std::vector<char> ok = probe_allowed(d, folds, grid, geom_tol, opts.exec);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            if (grid[k] < w_star - tol_w && !ok[k]) throw Error("allowed set not an interval");
            if (grid[k] > w_star + tol_w && ok[k]) throw Error("allowed set not an interval");
        }
    }
    return w_star;
}

double ribbonlength_at(const KnotDiagram& d, double w) {
    if (w <= 0) throw std::invalid_argument("width must be positive");
    return diagram_length(d) / w;
}

double ribbonlength(const KnotDiagram& d, double tol, const MaxWidthOptions& opts) {
    return ribbonlength(d, d.folds, tol, opts);
}

double ribbonlength(const KnotDiagram& d, const FoldingInfo& folds, double tol,
                    const MaxWidthOptions& opts) {
    return diagram_length(d) / max_width(d, folds, tol, opts);
}

}  // namespace ribbonknot
