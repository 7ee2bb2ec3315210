#include "ribbonknot/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ribbonknot {

namespace {

using json = nlohmann::ordered_json;

json point_json(Vec2 p) { return json::array({p.x, p.y}); }

Vec2 point_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("point must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json polyline_json(const std::vector<Vec2>& pts) {
    json out = json::array();
    for (Vec2 p : pts) out.push_back(point_json(p));
    return out;
}

}  // namespace

std::string diagram_to_json(const KnotDiagram& d) {
    json j;
    if (d.name) j["name"] = *d.name;
    if (d.knot_type_label) j["knot_type"] = *d.knot_type_label;
    j["vertices"] = json::array();
    for (Vec2 v : d.vertices) j["vertices"].push_back(point_json(v));
    j["folds"] = json::array();
    for (FoldType f : d.folds.folds) j["folds"].push_back(f == FoldType::Over ? "over" : "under");
    j["crossings"] = json::array();
    for (const Crossing& c : d.crossings) {
        json x;
        x["edge_a"] = c.edge_a + 1;  // 1-based in the file format
        x["edge_b"] = c.edge_b + 1;
        x["over"] = c.over == OverStrand::A ? "a" : "b";
        j["crossings"].push_back(x);
    }
    return j.dump(2) + "\n";
}

KnotDiagram diagram_from_json(const std::string& text, double tol) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("bad diagram JSON: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("folds")) {
        throw Error("diagram JSON needs \"vertices\" and \"folds\"");
    }
    std::vector<Vec2> verts;
    for (const json& p : j["vertices"]) verts.push_back(point_from(p));
    std::vector<FoldType> folds;
    for (const json& f : j["folds"]) {
        const std::string s = f.get<std::string>();
        if (s == "over") folds.push_back(FoldType::Over);
        else if (s == "under") folds.push_back(FoldType::Under);
        else throw Error("fold must be \"over\" or \"under\"");
    }
    std::vector<std::tuple<int, int, OverStrand>> specs;
    if (j.contains("crossings")) {
        for (const json& x : j["crossings"]) {
            const int a = x.at("edge_a").get<int>() - 1;
            const int b = x.at("edge_b").get<int>() - 1;
            const std::string o = x.at("over").get<std::string>();
            if (o != "a" && o != "b") throw Error("crossing \"over\" must be \"a\" or \"b\"");
            specs.emplace_back(a, b, o == "a" ? OverStrand::A : OverStrand::B);
        }
    }
    std::optional<std::string> knot_type, name;
    if (j.contains("knot_type")) knot_type = j["knot_type"].get<std::string>();
    if (j.contains("name")) name = j["name"].get<std::string>();
    return make_diagram(std::move(verts), FoldingInfo{std::move(folds)}, specs,
                        std::move(knot_type), std::move(name), tol);
}

KnotDiagram load_diagram(const std::string& path, double tol) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return diagram_from_json(buf.str(), tol);
}

void save_diagram(const KnotDiagram& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << diagram_to_json(d);
}

std::string ribbon_to_json(const FoldedRibbon& r) {
    json j;
    j["width"] = r.width;
    j["fold_lines"] = json::array();
    for (const auto& fl : r.fold_lines) {
        if (fl) j["fold_lines"].push_back(json::array({point_json(fl->a), point_json(fl->b)}));
        else j["fold_lines"].push_back(nullptr);
    }
    j["strips"] = json::array();
    for (const ConvexPolygon& s : r.strips) j["strips"].push_back(polyline_json(s));
    j["boundaries"] = json::array();
    for (std::size_t c = 0; c < r.boundaries.size(); ++c) {
        j["boundaries"].push_back(polyline_json(r.boundary_polyline(c)));
    }
    return j.dump(2) + "\n";
}

std::string report_to_json(const InvariantReport& rep) {
    json j;
    j["linking_number"] = rep.linking_number;
    j["topo_type"] = to_string(rep.topo_type);
    j["length"] = rep.length;
    j["max_width"] = rep.max_width;
    j["ribbonlength"] = rep.ribbonlength;
    return j.dump(2) + "\n";
}

OptimizationConfig config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("bad config JSON: ") + e.what());
    }
    OptimizationConfig cfg;
    cfg.n = j.at("n").get<int>();
    if (j.contains("folds")) {
        const json& f = j["folds"];
        if (f.is_string()) {
            const std::string s = f.get<std::string>();
            if (s == "all-over") cfg.folds = FoldingInfo::all(static_cast<std::size_t>(cfg.n), FoldType::Over);
            else if (s == "all-under") cfg.folds = FoldingInfo::all(static_cast<std::size_t>(cfg.n), FoldType::Under);
            else if (s == "one-different") cfg.folds = FoldingInfo::one_different(static_cast<std::size_t>(cfg.n));
            else throw Error("folds must be all-over, all-under, one-different or a list");
        } else {
            std::vector<FoldType> folds;
            for (const json& e : f) {
                folds.push_back(e.get<std::string>() == "over" ? FoldType::Over : FoldType::Under);
            }
            cfg.folds = FoldingInfo{std::move(folds)};
        }
    } else {
        cfg.folds = FoldingInfo::all(static_cast<std::size_t>(cfg.n), FoldType::Over);
    }
    if (j.contains("perimeter")) cfg.perimeter = j["perimeter"].get<double>();
    if (j.contains("restarts")) cfg.restarts = j["restarts"].get<int>();
    if (j.contains("max_iters")) cfg.max_iters = j["max_iters"].get<int>();
    if (j.contains("simplex_tol")) cfg.simplex_tol = j["simplex_tol"].get<double>();
    if (j.contains("width_tol")) cfg.width_tol = j["width_tol"].get<double>();
    if (j.contains("rng_seed")) cfg.rng_seed = j["rng_seed"].get<std::uint64_t>();
    if (j.contains("parallel")) {
        cfg.exec = j["parallel"].get<bool>() ? Execution::Parallel : Execution::Serial;
    }
    return cfg;
}

std::string result_to_json(const OptimizationResult& res) {
    json j;
    j["best_value"] = res.best_value;
    j["converged"] = res.converged;
    j["best_diagram"] = json::parse(diagram_to_json(res.best_diagram));
    j["restarts_summary"] = json::array();
    for (double v : res.restarts_summary) {
        if (std::isfinite(v)) j["restarts_summary"].push_back(v);
        else j["restarts_summary"].push_back(nullptr);
    }
    j["trace"] = json::array();
    for (const TracePoint& t : res.trace) j["trace"].push_back(json::array({t.value, t.diameter}));
    return j.dump(2) + "\n";
}

}  // namespace ribbonknot
