// Integration checks for the command-line surface: spawns the real binary
// and asserts outputs and exit codes (0 ok, 1 constraint failure, 2 parse
// error).

#include "irrlat/constructions.hpp"
#include "irrlat/scene.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
}

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run(const std::string& args, const fs::path& dir) {
    fs::path out_file = dir / "stdout.txt";
    std::string cmd = std::string(IRRLAT_CLI_PATH) + " " + args + " > " +
                      out_file.string() + " 2> " + (dir / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {code, buf.str()};
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

}  // namespace

int main() {
    fs::path dir = fs::temp_directory_path() / "irrlat_cli_check";
    fs::create_directories(dir);

    write_file(dir / "quad.json",
               R"({"kind":"quad","d":5,"h":"5/2+1/2*s5","k":"5/2-1/2*s5"})");
    write_file(dir / "bad_constraint.json",
               R"({"kind":"quad","d":5,"h":"5/2+1/2*s5","k":"3-1/2*s5"})");
    write_file(dir / "bad_json.json", "{not json");
    write_file(dir / "bowtie.json",
               R"({"kind":"polygon","d":5,"vertices":[["0","0"],["1","1"],["1","0"],["0","1"]]})");
    write_file(dir / "counter.json", R"({"kind":"counterexample","beta":5})");

    RunResult count = run("count " + (dir / "quad.json").string() + " --t 2", dir);
    expect(count.exit_code == 0 && count.output == "16\n", "count --t 2 prints 16");

    RunResult oracle = run("count " + (dir / "quad.json").string() + " --t 3 --oracle", dir);
    expect(oracle.exit_code == 0 && oracle.output == "31\n", "count --oracle prints 31");

    RunResult series = run("series " + (dir / "quad.json").string() + " --t-max 3", dir);
    expect(series.exit_code == 0 && series.output == "t,count\n1,6\n2,16\n3,31\n",
           "series emits exact CSV bytes");

    RunResult construct = run("construct " + (dir / "quad.json").string(), dir);
    expect(construct.exit_code == 0 &&
               construct.output.find("\"kind\": \"quad\"") != std::string::npos &&
               construct.output.find("area: 5/2") != std::string::npos,
           "construct normalizes and summarizes");

    RunResult verify = run("verify " + (dir / "quad.json").string() + " --t-max 12 --p-max 2",
                           dir);
    expect(verify.exit_code == 0 &&
               verify.output.find("verdict: polynomial") != std::string::npos &&
               verify.output.find("5/2*t^2 + 5/2*t + 1") != std::string::npos,
           "verify reports the collapse polynomial");

    RunResult verify_bad =
        run("verify " + (dir / "counter.json").string() + " --t-max 36 --p-max 6", dir);
    expect(verify_bad.exit_code == 0 &&
               verify_bad.output.find("no quasi-polynomial") != std::string::npos,
           "verify reports the bounded-search negative");

    RunResult fit_csv_prep = run(
        "series " + (dir / "quad.json").string() + " --t-max 16 --out " +
            (dir / "series.csv").string(),
        dir);
    RunResult fit = run("fit " + (dir / "series.csv").string() + " --p-max 2", dir);
    expect(fit_csv_prep.exit_code == 0 && fit.exit_code == 0 &&
               fit.output.find("polynomial") != std::string::npos,
           "fit consumes CSV series");

    RunResult seed = run("seed --edges 9 --out " + (dir / "fan9.json").string(), dir);
    std::ifstream fan_in(dir / "fan9.json");
    std::ostringstream fan_buf;
    fan_buf << fan_in.rdbuf();
    bool seed_ok = seed.exit_code == 0;
    if (seed_ok) {
        irrlat::BuiltTarget t = irrlat::build_target(irrlat::parse_scene(fan_buf.str()));
        const auto& a = std::get<irrlat::AssembledPolygon>(t.shape);
        seed_ok = irrlat::canonical_edges(a.outer).size() == 9;
    }
    expect(seed_ok, "seed --edges 9 emits fan data that assembles to 9 edges");

    RunResult render = run("render " + (dir / "counter.json").string() + " --t 2 --out " +
                               (dir / "out.svg").string(),
                           dir);
    std::ifstream svg_in(dir / "out.svg");
    std::string svg_head;
    std::getline(svg_in, svg_head);
    expect(render.exit_code == 0 && svg_head.find("<svg") == 0, "render writes SVG");

    RunResult parse_err = run("count " + (dir / "bad_json.json").string(), dir);
    expect(parse_err.exit_code == 2, "malformed JSON exits 2");

    RunResult constraint_err = run("count " + (dir / "bad_constraint.json").string(), dir);
    expect(constraint_err.exit_code == 1, "violated constraint exits 1");

    RunResult bowtie_err = run("construct " + (dir / "bowtie.json").string(), dir);
    expect(bowtie_err.exit_code == 1, "non-simple polygon exits 1");

    RunResult seed_bad = run("seed --edges 5", dir);
    expect(seed_bad.exit_code == 1, "seed --edges 5 is rejected");

    if (failures != 0) {
        std::cout << failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
