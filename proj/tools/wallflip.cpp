#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "wallflip/report.hpp"
#include "wallflip/svg.hpp"

using namespace wallflip;

namespace {

struct Options {
    std::string spec_path;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;
    int max_depth = kDefaultMaxDepth;
    int threads = 1;
};

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw Error("output_io", "cannot open output file: " + opt.out);
    f << payload;
}

void emit_report(const Options& opt, const Json& report) {
    if (opt.format == "json")
        emit(opt, report.dump(2) + "\n");
    else
        emit(opt, render_text(report));
}

Json run_walls(const ProblemSpec& ps, const Options& opt) {
    const auto& lat = ps.need_lattice();
    lat.validate();
    const auto& e = ps.need_chern();
    if (ps.nef_generators)
        return to_json(enumerate_walls_nef_heuristic(e, *ps.nef_generators, lat, ps.shrink_steps,
                                                     opt.max_depth));
    const auto& cone = ps.need_cone();
    cone.validate(lat);
    return to_json(enumerate_walls(e, cone, lat, opt.max_depth, opt.threads));
}

Json run_chambers(const ProblemSpec& ps, const Options& opt) {
    const auto& lat = ps.need_lattice();
    lat.validate();
    const auto& e = ps.need_chern();
    const auto& cone = ps.need_cone();
    cone.validate(lat);
    if (!ps.path_start || !ps.path_end) throw Error("spec_parse", "chambers needs a path block");
    WallSet ws = enumerate_walls(e, cone, lat, opt.max_depth, opt.threads);
    Json j = to_json(chamber_path(e, cone, ws, *ps.path_start, *ps.path_end, lat));
    j["walls"] = to_json(ws);
    return j;
}

Json run_strata(const ProblemSpec& ps, const Options& opt) {
    const auto& lat = ps.need_lattice();
    lat.validate();
    const auto& e = ps.need_chern();
    const auto& cone = ps.need_cone();
    cone.validate(lat);
    if (!ps.wall_point || !ps.twist_start || !ps.twist_end)
        throw Error("spec_parse", "strata needs a twist block");
    WallSet ws = enumerate_walls(e, cone, lat, opt.max_depth, opt.threads);
    return to_json(twist_strata(e, ws, *ps.wall_point, *ps.twist_start, *ps.twist_end, lat), lat);
}

Json run_flipseq(const ProblemSpec& ps, const Options& opt) {
    const auto& lat = ps.need_lattice();
    lat.validate();
    const auto& e = ps.need_chern();
    const auto& cone = ps.need_cone();
    cone.validate(lat);
    if (!ps.path_start || !ps.path_end) throw Error("spec_parse", "flipseq needs a path block");
    return to_json(flip_sequence(e, cone, *ps.path_start, *ps.path_end, lat, opt.seed,
                                 opt.max_depth),
                   lat);
}

Json run_classify(const ProblemSpec& ps) {
    const auto& lat = ps.need_lattice();
    lat.validate();
    const auto& e = ps.need_chern();
    if (!ps.wall_point || !ps.polarization)
        throw Error("spec_parse", "classify needs a classify block");
    Json j = Json::object();
    j["refined_semistable"] =
        classify_at_wall(e, ps.candidates, *ps.wall_point, *ps.polarization, lat);
    j["candidate_count"] = ps.candidates.size();
    return j;
}

Json run_counterexample(const ProblemSpec& ps) {
    if (!ps.probe || ps.family_count < 1)
        throw Error("spec_parse", "counterexample needs a counterexample block");
    return to_json(remark17_family(ps.family_count, *ps.probe));
}

Json run_approx(const ProblemSpec& ps) {
    if (ps.approx_d == 0 || ps.approx_count < 1)
        throw Error("spec_parse", "approx needs an approx block");
    return to_json(approximate_surd(ps.approx_d, ps.approx_count));
}

std::string run_plot(const ProblemSpec& ps, const Options& opt) {
    const auto& lat = ps.need_lattice();
    lat.validate();
    const auto& e = ps.need_chern();
    const auto& cone = ps.need_cone();
    cone.validate(lat);
    WallSet ws = enumerate_walls(e, cone, lat, opt.max_depth, opt.threads);
    SlicePlot plot;
    if (ps.plot_basis) {
        plot.basis1 = ps.plot_basis->first;
        plot.basis2 = ps.plot_basis->second;
    } else {
        if (cone.generators.size() < 2)
            throw Error("plot_plane", "plot needs two cone generators or an explicit basis");
        plot.basis1 = cone.generators[0];
        plot.basis2 = cone.generators[1];
    }
    if (ps.path_start && ps.path_end) plot.path = {*ps.path_start, *ps.path_end};
    plot.coords = ps.plot_coords;
    return render_slice_svg(cone, ws, lat, plot);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wall-and-chamber computations for surface sheaf moduli"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--spec", opt.spec_path, "problem spec JSON file")->required();
    app.add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", opt.out, "output file (default stdout)");
    app.add_option("--seed", opt.seed, "seed for generic wall point selection");
    app.add_option("--max-depth", opt.max_depth, "cone subdivision depth limit");
    app.add_option("--threads", opt.threads, "worker threads for wall enumeration");

    const char* names[] = {"walls",    "chambers",       "strata", "flipseq",
                           "classify", "counterexample", "approx", "plot"};
    const char* descs[] = {"enumerate potential walls over the cone",
                           "wall crossings along a path of polarizations",
                           "twist-line stratification at a wall point",
                           "flip diagram between two polarizations",
                           "refined semistability at a wall point",
                           "unbounded family of destabilized split bundles",
                           "rational approximations of a square root from above",
                           "SVG slice plot of the cone and its walls"};
    // global options may follow the subcommand name
    for (int i = 0; i < 8; ++i) app.add_subcommand(names[i], descs[i])->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors are exit 1
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        ProblemSpec ps = parse_spec_file(opt.spec_path);
        if (cmd == "plot") {
            emit(opt, run_plot(ps, opt));
        } else {
            Json report;
            if (cmd == "walls")
                report = run_walls(ps, opt);
            else if (cmd == "chambers")
                report = run_chambers(ps, opt);
            else if (cmd == "strata")
                report = run_strata(ps, opt);
            else if (cmd == "flipseq")
                report = run_flipseq(ps, opt);
            else if (cmd == "classify")
                report = run_classify(ps);
            else if (cmd == "counterexample")
                report = run_counterexample(ps);
            else
                report = run_approx(ps);
            emit_report(opt, report);
        }
    } catch (const Error& e) {
        Json err = Json::object({{"error", e.code()}, {"message", e.what()}});
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err = Json::object({{"error", "internal"}, {"message", e.what()}});
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 0;
}
