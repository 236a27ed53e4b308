#include "irrlat/scene.hpp"

#include "irrlat/errors.hpp"
#include "irrlat/render.hpp"
#include "oracle_utils.hpp"

#include <doctest.h>

using namespace irrlat;

namespace {

FieldContext f5() { return FieldContext(5); }
QuadraticNumber h0() { return {Rational(5, 2), Rational(1, 2), f5()}; }
QuadraticNumber k0() { return {Rational(5, 2), Rational(-1, 2), f5()}; }

}  // namespace

TEST_CASE("the spec'd quad scene maps to Q(h0+1, k0)") {
    Scene scene = parse_scene(R"({"d":5,"kind":"quad","h":"7/2+1/2*s5","k":"5/2-1/2*s5"})");
    BuiltTarget target = build_target(scene);
    const Polygon& p = std::get<Polygon>(target.shape);
    CHECK(same_cycle(p, quad_qhk(h0() + Rational(1), k0())));
}

TEST_CASE("scene round-trips for every kind") {
    const char* scenes[] = {
        R"({"kind":"cgls","alpha":3,"beta":3})",
        R"({"kind":"quad","d":5,"h":"5/2+1/2*s5","k":"7/2-1/2*s5"})",
        R"({"kind":"pyramid","d":2,"a":"0-1*s2","b":"3-1*s2"})",
        R"({"kind":"cutpaste","d":5,"h":"5/2+1/2*s5","k":"5/2-1/2*s5"})",
        R"({"kind":"counterexample","beta":5})",
        R"({"kind":"fan","beta":5,"entries":[
            {"ray":[1,0],"base":"H","offset":0},{"ray":[0,1],"base":"K","offset":0},
            {"ray":[-1,0],"base":"H","offset":0},{"ray":[0,-1],"base":"K","offset":1}]})",
        R"({"kind":"polygon","d":5,"vertices":[["0","0"],["2","0"],["0","3"]]})",
    };
    for (const char* text : scenes) {
        Scene scene = parse_scene(text);
        std::string printed = print_scene(scene);
        Scene reparsed = parse_scene(printed);
        CHECK(print_scene(reparsed) == printed);  // canonical form is a fixed point
        // Builds agree exactly.
        BuiltTarget a = build_target(scene);
        BuiltTarget b = build_target(reparsed);
        CHECK(same_cycle(target_outline(a), target_outline(b)));
        CHECK(count_target(a, 2).count == count_target(b, 2).count);
    }
}

TEST_CASE("fan data file for the rhombus matches seed_data(4)") {
    Scene scene = parse_scene(R"({"beta":5,"entries":[
        {"ray":[1,0],"base":"H","offset":0},{"ray":[0,1],"base":"K","offset":0},
        {"ray":[-1,0],"base":"H","offset":0},{"ray":[0,-1],"base":"K","offset":0}]})");
    BuiltTarget target = build_target(scene);  // bare fan data, no "kind"
    const AssembledPolygon& a = std::get<AssembledPolygon>(target.shape);
    CHECK(same_cycle(a.outer, assemble(seed_data(4)).outer));

    std::string emitted = fan_scene_json(seed_data(4));
    Scene back = parse_scene(emitted);
    CHECK(same_cycle(std::get<AssembledPolygon>(build_target(back).shape).outer, a.outer));
}

TEST_CASE("scene errors carry the right category") {
    CHECK_THROWS_AS(parse_scene("not json"), ParseError);
    CHECK_THROWS_AS(parse_scene(R"({"kind":"quad","d":5,"h":"1/0","k":"1/1"})"), ParseError);
    CHECK_THROWS_AS(parse_scene(R"({"kind":"nope"})"), ParseError);
    CHECK_THROWS_AS(parse_scene(R"({"d":5,"h":"1/2","k":"1/2"})"), ParseError);
    CHECK_THROWS_AS(parse_scene(R"({"kind":"quad","d":5,"h":"1/2+1/2*s7","k":"1/2"})"),
                    ValidationError);  // literal field disagrees with scene field
    // Valid syntax, invalid constraint: h + k not an integer.
    Scene s = parse_scene(R"({"kind":"quad","d":5,"h":"5/2+1/2*s5","k":"3-1/2*s5"})");
    CHECK_THROWS_AS(build_target(s), ValidationError);
    // Raw polygon with a crossing.
    Scene bow = parse_scene(
        R"({"kind":"polygon","d":5,"vertices":[["0","0"],["1","1"],["1","0"],["0","1"]]})");
    CHECK_THROWS_AS(build_target(bow), ValidationError);
}

TEST_CASE("csv output is byte-stable") {
    EhrhartSeries q = sample_target(
        build_target(parse_scene(R"({"kind":"quad","d":5,"h":"5/2+1/2*s5","k":"5/2-1/2*s5"})")),
        3);
    CHECK(emit_csv(q) == "t,count\n1,6\n2,16\n3,31\n");

    Scene square = parse_scene(
        R"({"kind":"polygon","d":5,"vertices":[["0","0"],["1","0"],["1","1"],["0","1"]]})");
    CHECK(emit_csv(sample_target(build_target(square), 3)) == "t,count\n1,4\n2,9\n3,16\n");

    CHECK_THROWS_AS(emit_csv(EhrhartSeries{"empty", {}}), DomainError);

    EhrhartSeries parsed = parse_csv("t,count\n1,6\n2,16\n3,31\n");
    CHECK(parsed.counts == q.counts);
    CHECK_THROWS_AS(parse_csv("bogus\n1,2\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("t,count\n2,6\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("t,count\n1,x\n"), ParseError);
}

TEST_CASE("svg rendering") {
    AssembledPolygon rhombus = assemble(seed_data(4));
    std::string svg = emit_svg(rhombus);
    CHECK(svg.rfind("<svg", 0) == 0);
    // 13 contained lattice points at t = 1 are highlighted.
    size_t highlights = 0;
    for (size_t pos = svg.find("#c0392b"); pos != std::string::npos;
         pos = svg.find("#c0392b", pos + 1))
        ++highlights;
    CHECK(highlights == 13);

    std::string svg_q = emit_svg(quad_qhk(h0(), k0()));
    CHECK(svg_q.find("<path") != std::string::npos);
    // The path walks the 3 canonical corners; the collinear vertex still
    // gets a marker dot.
    size_t moves = 0;
    for (size_t pos = svg_q.find("L "); pos != std::string::npos;
         pos = svg_q.find("L ", pos + 1))
        ++moves;
    CHECK(moves == 2);  // M + 2 L for a triangle path

    std::string svg9 = emit_svg(assemble(seed_data(9)), {1, 400, false, false});
    size_t moves9 = 0;
    for (size_t pos = svg9.find("L "); pos != std::string::npos;
         pos = svg9.find("L ", pos + 1))
        ++moves9;
    CHECK(moves9 == 8);  // 9-edge path
}
