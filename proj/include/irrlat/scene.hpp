#pragma once

#include "irrlat/constructions.hpp"
#include "irrlat/ehrhart.hpp"

#include <string>
#include <variant>
#include <vector>

namespace irrlat {

struct CglsScene {
    Int alpha, beta;
};
struct QuadScene {
    QuadraticNumber h, k;
};
struct PyramidScene {
    QuadraticNumber a, b;
};
struct CutPasteScene {
    QuadraticNumber h, k;
};
struct CounterexampleScene {
    Int beta;
};
struct FanScene {
    SectorData data;
};
struct PolygonScene {
    std::vector<Point> vertices;  // raw, validated at build time
};

struct Scene {
    std::variant<CglsScene, QuadScene, PyramidScene, CutPasteScene, CounterexampleScene,
                 FanScene, PolygonScene>
        payload;

    std::string kind_name() const;
};

// JSON scene files. Rationals are coordinate literals ("p/q",
// "5/2+1/2*s5"), never floats. parse(print(s)) is the identity on values;
// print(parse(text)) normalizes the encoding.
Scene parse_scene(const std::string& json_text);
std::string print_scene(const Scene& scene);

// Fan data as a scene file; this is what `seed` emits.
std::string fan_scene_json(const SectorData& data);

struct BuiltTarget {
    std::variant<Polygon, AssembledPolygon> shape;
    ClosedFormRef closed_form;
    std::string label;
};

// Constructs and validates the scene's target; throws ValidationError with
// the violated constraint.
BuiltTarget build_target(const Scene& scene);

const Polygon& target_outline(const BuiltTarget& t);

// Fastest valid counter (scanline / inclusion-exclusion); `oracle` forces
// the brute-force scan of the outline.
CountResult count_target(const BuiltTarget& t, const Int& dilation, bool oracle = false);

EhrhartSeries sample_target(const BuiltTarget& t, size_t t_max);

CollapseReport verify_target(const BuiltTarget& t, size_t t_max, const Int& p_max,
                             unsigned degree);

}  // namespace irrlat
