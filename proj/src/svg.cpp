#include "ribbonknot/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ribbonknot {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string path_of(const std::vector<Vec2>& pts, bool close) {
    std::ostringstream os;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << (i == 0 ? "M " : "L ") << num(pts[i].x) << ' ' << num(pts[i].y) << ' ';
    }
    if (close) os << 'Z';
    return os.str();
}

const char* kStripFills[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
                             "#76b7b2", "#edc948", "#ff9da7", "#9c755f", "#bab0ac",
                             "#86bcb6", "#d37295"};

/// Bottom-to-top draw order from the pairwise layer relations; falls back
/// to index order when the relations are globally cyclic (a flat drawing
/// cannot honor a cyclic stacking anyway).
std::vector<int> painter_order(const KnotDiagram& d, const AllowedCertificate& cert) {
    const std::size_t n = static_cast<std::size_t>(d.size());
    std::vector<std::vector<int>> after(n);  // after[lower] holds the strips above it
    std::vector<int> indeg(n, 0);
    for (std::size_t k = 0; k < cert.constraints.size(); ++k) {
        const OverlapConstraint& c = cert.constraints[k];
        const int v = cert.order_assignment.empty() ? 0 : cert.order_assignment[k];
        if (v == 0) continue;
        const int lower = v > 0 ? c.strip_b : c.strip_a;
        const int upper = v > 0 ? c.strip_a : c.strip_b;
        after[static_cast<std::size_t>(lower)].push_back(upper);
        ++indeg[static_cast<std::size_t>(upper)];
    }
    std::vector<int> order;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        int pick = -1;
        for (std::size_t u = 0; u < n; ++u) {
            if (!done[u] && indeg[u] == 0) {
                pick = static_cast<int>(u);
                break;
            }
        }
        if (pick < 0) {  // cyclic stacking
            order.clear();
            for (std::size_t u = 0; u < n; ++u) order.push_back(static_cast<int>(u));
            return order;
        }
        done[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
        for (int w : after[static_cast<std::size_t>(pick)]) {
            --indeg[static_cast<std::size_t>(w)];
        }
    }
    return order;
}

}  // namespace

SvgResult render_svg(const KnotDiagram& d, const FoldingInfo& folds, double w, double tol) {
    const FoldedRibbon r = build_ribbon(d, w, tol);  // throws on structural failure
    const AllowedCertificate cert = is_allowed(d, folds, w, tol);

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto grow = [&](Vec2 p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    for (const ConvexPolygon& s : r.strips) {
        for (Vec2 p : s) grow(p);
    }
    for (Vec2 p : d.vertices) grow(p);
    const double margin = 0.05 * std::max(xmax - xmin, ymax - ymin) + 0.02;
    xmin -= margin;
    ymin -= margin;
    xmax += margin;
    ymax += margin;

    std::ostringstream os;
    // Flip y so the mathematical orientation matches the screen.
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(xmin) << ' '
       << num(-ymax) << ' ' << num(xmax - xmin) << ' ' << num(ymax - ymin) << "\">\n";
    os << "<g transform=\"scale(1,-1)\" stroke-linejoin=\"round\" stroke-linecap=\"round\">\n";

    os << "<g id=\"strips\" stroke=\"#333333\" stroke-width=\"" << num(w / 50)
       << "\" fill-opacity=\"0.55\">\n";
    for (int idx : painter_order(d, cert)) {
        os << "<path fill=\"" << kStripFills[static_cast<std::size_t>(idx) % 12] << "\" d=\""
           << path_of(r.strips[static_cast<std::size_t>(idx)], true) << "\"/>\n";
    }
    os << "</g>\n";

    if (!cert.allowed && !cert.conflict.empty()) {
        os << "<g id=\"conflicts\" fill=\"#d62728\" fill-opacity=\"0.8\" stroke=\"none\">\n";
        for (std::size_t k : cert.conflict) {
            os << "<path d=\"" << path_of(cert.constraints[k].region, true) << "\"/>\n";
        }
        os << "</g>\n";
    }

    os << "<g id=\"fold-lines\" stroke=\"#000000\" stroke-width=\"" << num(w / 25)
       << "\">\n";
    for (const auto& fl : r.fold_lines) {
        if (!fl) continue;
        os << "<line x1=\"" << num(fl->a.x) << "\" y1=\"" << num(fl->a.y) << "\" x2=\""
           << num(fl->b.x) << "\" y2=\"" << num(fl->b.y) << "\"/>\n";
    }
    os << "</g>\n";

    std::vector<Vec2> center = d.vertices;
    os << "<g id=\"centerline\" stroke=\"#111111\" stroke-width=\"" << num(w / 40)
       << "\" fill=\"none\">\n";
    os << "<path d=\"" << path_of(center, true) << "\"/>\n";
    // Orientation arrows at edge midpoints.
    for (int i = 0; i < d.size(); ++i) {
        const Segment e = d.edge(i);
        const Vec2 m = e.at(0.5);
        const Vec2 t = e.dir() * (w / 4);
        const Vec2 nrm = perp(e.dir()) * (w / 8);
        const Vec2 tip = m + t;
        os << "<path fill=\"#111111\" stroke=\"none\" d=\"M " << num(tip.x) << ' '
           << num(tip.y) << " L " << num(m.x - t.x / 2 + nrm.x) << ' '
           << num(m.y - t.y / 2 + nrm.y) << " L " << num(m.x - t.x / 2 - nrm.x) << ' '
           << num(m.y - t.y / 2 - nrm.y) << " Z\"/>\n";
    }
    os << "</g>\n";

    os << "<g id=\"boundaries\" stroke=\"#2ca02c\" stroke-width=\"" << num(w / 60)
       << "\" stroke-dasharray=\"" << num(w / 12) << ' ' << num(w / 24)
       << "\" fill=\"none\">\n";
    for (std::size_t c = 0; c < r.boundaries.size(); ++c) {
        os << "<path d=\"" << path_of(r.boundary_polyline(c), true) << "\"/>\n";
    }
    os << "</g>\n";

    os << "</g>\n</svg>\n";
    return {os.str(), cert.allowed};
}

bool render_svg_file(const KnotDiagram& d, const FoldingInfo& folds, double w,
                     const std::string& path, double tol) {
    const SvgResult res = render_svg(d, folds, w, tol);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << res.svg;
    return res.allowed;
}

}  // namespace ribbonknot
