#include "irrlat/errors.hpp"
#include "irrlat/render.hpp"
#include "irrlat/scene.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace irrlat;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + out_path + "'");
    out << content;
}

BuiltTarget load_target(const std::string& path) {
    return build_target(parse_scene(read_input(path)));
}

int run(int argc, char** argv) {
    CLI::App app{"Exact lattice-point counting and Ehrhart period-collapse checks for "
                 "polygons with quadratic-irrational vertices"};
    app.require_subcommand(1);

    std::string scene_path, out_path;
    long long t = 1;
    size_t t_max = 36;
    long long p_max = 6;
    unsigned degree = 2;
    bool oracle = false;

    auto* construct = app.add_subcommand(
        "construct", "Parse, validate and normalize a scene file");
    construct->add_option("scene", scene_path, "scene JSON file ('-' for stdin)")->required();
    construct->add_option("--out", out_path, "write the normalized scene here");

    auto* count = app.add_subcommand("count", "Count lattice points of the t-dilate");
    count->add_option("scene", scene_path)->required();
    count->add_option("--t", t, "dilation factor")->check(CLI::PositiveNumber);
    count->add_flag("--oracle", oracle, "force the brute-force counter");

    auto* series = app.add_subcommand("series", "Exact count series as CSV");
    series->add_option("scene", scene_path)->required();
    series->add_option("--t-max", t_max, "sample t = 1..t_max")->check(CLI::PositiveNumber);
    series->add_option("--out", out_path, "write CSV here");

    std::string fit_input;
    auto* fit = app.add_subcommand("fit", "Fit an exact (quasi-)polynomial to a series");
    fit->add_option("input", fit_input, "scene JSON or CSV series file")->required();
    fit->add_option("--degree", degree)->check(CLI::Range(0u, 3u));
    fit->add_option("--p-max", p_max, "largest period to try")->check(CLI::PositiveNumber);
    fit->add_option("--t-max", t_max, "samples when the input is a scene")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Full period-collapse report");
    verify->add_option("scene", scene_path)->required();
    verify->add_option("--t-max", t_max)->check(CLI::PositiveNumber);
    verify->add_option("--p-max", p_max)->check(CLI::PositiveNumber);
    verify->add_option("--degree", degree)->check(CLI::Range(0u, 3u));

    long long edges = 0, vertices = 0, beta = 5;
    auto* seed = app.add_subcommand("seed", "Emit fan data for a target edge/vertex count");
    auto* eopt = seed->add_option("--edges", edges, "outer edge count (>= 4, != 5)");
    auto* vopt = seed->add_option("--vertices", vertices, "vertex count (even, >= 4)");
    seed->add_option("--beta", beta, "h0 + k0 (default 5)")->check(CLI::PositiveNumber);
    seed->add_option("--out", out_path, "write fan data here");
    eopt->excludes(vopt);

    int width = 720;
    bool no_lattice = false, no_pieces = false;
    auto* render = app.add_subcommand("render", "Render a scene as SVG (display only)");
    render->add_option("scene", scene_path)->required();
    render->add_option("--t", t, "render the t-dilate")->check(CLI::PositiveNumber);
    render->add_option("--width", width, "image width in pixels")->check(CLI::PositiveNumber);
    render->add_flag("--no-lattice", no_lattice, "skip lattice dots");
    render->add_flag("--no-pieces", no_pieces, "skip piece boundaries");
    render->add_option("--out", out_path, "write SVG here");

    CLI11_PARSE(app, argc, argv);

    if (construct->parsed()) {
        Scene scene = parse_scene(read_input(scene_path));
        BuiltTarget target = build_target(scene);
        const Polygon& outline = target_outline(target);
        std::string summary = "ok: " + target.label + "\n";
        summary += "canonical edges: " + std::to_string(canonical_edges(outline).size()) + "\n";
        summary += "area: " + to_literal(area(outline)) + "\n";
        write_output(out_path, print_scene(scene) + summary);
        return 0;
    }
    if (count->parsed()) {
        BuiltTarget target = load_target(scene_path);
        CountResult r = count_target(target, Int(t), oracle);
        std::cout << r.count.str() << "\n";
        return 0;
    }
    if (series->parsed()) {
        BuiltTarget target = load_target(scene_path);
        write_output(out_path, emit_csv(sample_target(target, t_max)));
        return 0;
    }
    if (fit->parsed()) {
        std::string text = read_input(fit_input);
        size_t first = text.find_first_not_of(" \t\r\n");
        EhrhartSeries data =
            (first != std::string::npos && text[first] == '{')
                ? sample_target(build_target(parse_scene(text)), t_max)
                : parse_csv(text);
        CollapseReport rep = detect_quasi(data, degree, Int(p_max));
        std::cout << rep.render();
        return 0;
    }
    if (verify->parsed()) {
        BuiltTarget target = load_target(scene_path);
        CollapseReport rep = verify_target(target, t_max, Int(p_max), degree);
        std::cout << rep.render();
        return 0;
    }
    if (seed->parsed()) {
        if ((edges == 0) == (vertices == 0))
            throw DomainError("seed needs exactly one of --edges or --vertices");
        SectorData data = edges != 0 ? seed_data(static_cast<size_t>(edges), Int(beta))
                                     : seed_vertex_data(static_cast<size_t>(vertices), Int(beta));
        write_output(out_path, fan_scene_json(data));
        return 0;
    }
    if (render->parsed()) {
        BuiltTarget target = load_target(scene_path);
        SvgOptions options;
        options.dilation = Int(t);
        options.width_px = width;
        options.show_lattice = !no_lattice;
        options.show_pieces = !no_pieces;
        std::string svg = std::holds_alternative<Polygon>(target.shape)
                              ? emit_svg(std::get<Polygon>(target.shape), options)
                              : emit_svg(std::get<AssembledPolygon>(target.shape), options);
        write_output(out_path, svg);
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const irrlat::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const irrlat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
