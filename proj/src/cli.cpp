#include "ribbonknot/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbonknot/bounds.hpp"
#include "ribbonknot/invariants.hpp"
#include "ribbonknot/io.hpp"
#include "ribbonknot/optimizer.hpp"
#include "ribbonknot/samples.hpp"
#include "ribbonknot/ribbon.hpp"
#include "ribbonknot/svg.hpp"

namespace ribbonknot {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct SourceOpts {
    std::string input;
    std::string sample;
};

void add_source(CLI::App* cmd, SourceOpts& src) {
    auto* in = cmd->add_option("--input", src.input, "diagram JSON file");
    auto* sm = cmd->add_option("--sample", src.sample, "bundled sample name");
    in->excludes(sm);
}

KnotDiagram load_source(const SourceOpts& src, double tol) {
    if (!src.input.empty()) return load_diagram(src.input, tol);
    if (!src.sample.empty()) return sample_diagram(src.sample);
    throw Error("one of --input or --sample is required");
}

/// Commands whose contract assumes a valid diagram reject irregular input.
struct InvalidDiagramError : Error {
    using Error::Error;
};

KnotDiagram load_valid_source(const SourceOpts& src, double tol) {
    KnotDiagram d = load_source(src, tol);
    const ValidationReport rep = validate_diagram(d, tol);
    if (!rep.ok()) {
        std::string msg = "diagram fails validation:";
        for (const Issue& i : rep.issues) {
            msg += "\n  " + to_string(i.kind) + (i.detail.empty() ? "" : ": " + i.detail);
        }
        throw InvalidDiagramError(msg);
    }
    return d;
}

KnotDiagram load_valid(const std::string& path_or_sample, bool is_file, double tol) {
    SourceOpts src;
    (is_file ? src.input : src.sample) = path_or_sample;
    return load_valid_source(src, tol);
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult res;
    std::ostringstream out, err;

    CLI::App app{"folded ribbon knots: construction, invariants, widths, optimization",
                 "ribbonknot"};
    app.require_subcommand(1);

    double tol = kDefaultTol;
    app.add_option("--tol", tol, "geometric / bisection tolerance")->capture_default_str();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine readable output");

    SourceOpts src_validate, src_report, src_rib, src_mw, src_link, src_render;
    double width = 0;
    std::string output;
    std::uint64_t seed = 0;
    bool seed_set = false;

    auto* c_validate = app.add_subcommand("validate", "check diagram regularity");
    add_source(c_validate, src_validate);

    auto* c_report = app.add_subcommand("report", "full invariant report");
    add_source(c_report, src_report);

    auto* c_rib = app.add_subcommand("ribbonlength", "length / max width");
    add_source(c_rib, src_rib);

    auto* c_mw = app.add_subcommand("maxwidth", "largest allowed width");
    add_source(c_mw, src_mw);

    auto* c_link = app.add_subcommand("linking", "ribbon linking number");
    add_source(c_link, src_link);

    auto* c_cmp = app.add_subcommand("compare", "equivalence of two ribbons");
    std::vector<std::string> cmp_samples, cmp_inputs;
    std::string mode = "link";
    c_cmp->add_option("--sample", cmp_samples, "sample name (twice)")->expected(0, 2);
    c_cmp->add_option("--input", cmp_inputs, "diagram file (twice)")->expected(0, 2);
    c_cmp->add_option("--mode", mode, "link | topo | diagram")->capture_default_str();

    auto* c_opt = app.add_subcommand("optimize", "minimize ribbonlength");
    std::string opt_config;
    std::string opt_svg;
    c_opt->add_option("--input", opt_config, "OptimizationConfig JSON file")->required();
    c_opt->add_option("--output", output, "write OptimizationResult JSON here");
    c_opt->add_option("--svg", opt_svg, "also render the best diagram");
    c_opt->add_option("--seed", seed, "override rng_seed")->each([&](const std::string&) {
        seed_set = true;
    });

    auto* c_render = app.add_subcommand("render", "SVG of the folded ribbon");
    add_source(c_render, src_render);
    c_render->add_option("--width", width, "ribbon width")->required();
    c_render->add_option("--output", output, "SVG path")->required();

    auto* c_samples = app.add_subcommand("samples", "list bundled samples");

    // global flags (--tol, --json) may follow the subcommand name
    for (CLI::App* sub : {c_validate, c_report, c_rib, c_mw, c_link, c_cmp, c_opt, c_render,
                          c_samples}) {
        sub->fallthrough();
    }

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());  // CLI11 wants reversed argv
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        const int code = app.exit(e, out, err);
        res.exit_code = code == 0 ? kExitOk : kExitUsage;
        res.out = out.str();
        res.err = err.str();
        return res;
    }

    try {
        if (c_validate->parsed()) {
            const KnotDiagram d = load_source(src_validate, tol);
            const ValidationReport rep = validate_diagram(d, tol);
            if (as_json) {
                nlohmann::ordered_json j;
                j["ok"] = rep.ok();
                j["issues"] = nlohmann::ordered_json::array();
                for (const Issue& i : rep.issues) {
                    j["issues"].push_back({{"kind", to_string(i.kind)}, {"detail", i.detail}});
                }
                out << j.dump(2) << "\n";
            } else if (rep.ok()) {
                out << "ok\n";
            } else {
                for (const Issue& i : rep.issues) {
                    out << to_string(i.kind) << (i.detail.empty() ? "" : ": " + i.detail) << "\n";
                }
            }
            res.exit_code = rep.ok() ? kExitOk : kExitValidation;
        } else if (c_report->parsed()) {
            const KnotDiagram d = load_valid_source(src_report, tol);
            const InvariantReport rep = invariant_report(d, tol);
            if (as_json) {
                out << report_to_json(rep);
            } else {
                out << "linking_number  " << rep.linking_number << "\n"
                    << "topo_type       " << to_string(rep.topo_type) << "\n"
                    << "length          " << fmt(rep.length) << "\n"
                    << "max_width       " << fmt(rep.max_width) << "\n"
                    << "ribbonlength    " << fmt(rep.ribbonlength) << "\n";
            }
        } else if (c_rib->parsed()) {
            const KnotDiagram d = load_valid_source(src_rib, tol);
            out << fmt(ribbonlength(d, tol)) << "\n";
        } else if (c_mw->parsed()) {
            const KnotDiagram d = load_valid_source(src_mw, tol);
            out << fmt(max_width(d, tol)) << "\n";
        } else if (c_link->parsed()) {
            const KnotDiagram d = load_valid_source(src_link, tol);
            out << ribbon_linking_number(d) << "\n";
        } else if (c_cmp->parsed()) {
            std::vector<KnotDiagram> ds;
            for (const std::string& s : cmp_samples) ds.push_back(load_valid(s, false, tol));
            for (const std::string& f : cmp_inputs) ds.push_back(load_valid(f, true, tol));
            if (ds.size() != 2) throw Error("compare needs exactly two diagrams");
            Equivalence e;
            if (mode == "link") e = link_equivalent(ds[0], ds[1]);
            else if (mode == "topo") e = topologically_equivalent(ds[0], ds[1]);
            else if (mode == "diagram") e = diagram_equivalent(ds[0], ds[1]);
            else throw CLI::ValidationError("--mode", "must be link, topo or diagram");
            out << to_string(e) << "\n";
        } else if (c_opt->parsed()) {
            std::ifstream in(opt_config, std::ios::binary);
            if (!in) throw Error("cannot open " + opt_config);
            std::ostringstream buf;
            buf << in.rdbuf();
            OptimizationConfig cfg = config_from_json(buf.str());
            if (seed_set) cfg.rng_seed = seed;
            OptimizationResult r;
            try {
                r = minimize_ribbonlength(cfg);
            } catch (const Error& e) {
                err << e.what() << "\n";
                res.exit_code = kExitInfeasible;
                res.out = out.str();
                res.err = err.str();
                return res;
            }
            const std::string json = result_to_json(r);
            if (!output.empty()) {
                std::ofstream of(output, std::ios::binary);
                if (!of) throw Error("cannot write " + output);
                of << json;
            }
            if (as_json || output.empty()) {
                out << json;
            } else {
                out << "best_value " << fmt(r.best_value) << (r.converged ? "" : " (not converged)")
                    << "\n";
            }
            if (!opt_svg.empty()) {
                const double w = max_width(r.best_diagram, cfg.width_tol);
                render_svg_file(r.best_diagram, r.best_diagram.folds, w * 0.999, opt_svg,
                                cfg.width_tol);
            }
        } else if (c_render->parsed()) {
            const KnotDiagram d = load_valid_source(src_render, tol);
            try {
                const bool allowed = render_svg_file(d, d.folds, width, output, tol);
                out << output << "\n";
                if (!allowed) {
                    err << "width " << fmt(width) << " is not allowed; conflicts highlighted\n";
                    res.exit_code = kExitValidation;
                }
            } catch (const WidthError& e) {
                err << e.what() << "\n";
                res.exit_code = kExitValidation;
            }
        } else if (c_samples->parsed()) {
            for (const std::string& name : sample_names()) {
                const KnotDiagram d = sample_diagram(name);
                out << name << "  n=" << d.size() << "  crossings=" << d.crossings.size()
                    << "  Lk=" << ribbon_linking_number(d) << "  "
                    << to_string(topological_type(d)) << "\n";
            }
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        res.exit_code = kExitUsage;
    } catch (const InvalidDiagramError& e) {
        err << e.what() << "\n";
        res.exit_code = kExitValidation;
    } catch (const Error& e) {
        err << e.what() << "\n";
        res.exit_code = kExitUsage;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        res.exit_code = kExitUsage;
    }

    res.out = out.str();
    res.err = err.str();
    return res;
}

}  // namespace ribbonknot
