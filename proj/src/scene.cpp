#include "irrlat/scene.hpp"

#include "irrlat/errors.hpp"

#include <json.hpp>

#include <utility>

namespace irrlat {

using json = nlohmann::ordered_json;

namespace {

const json& require_key(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("scene is missing key \"") + key + "\"");
    return *it;
}

Int get_int(const json& j, const char* key) {
    const json& v = require_key(j, key);
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError(std::string("key \"") + key + "\" is not an integer");
        }
    }
    throw ParseError(std::string("key \"") + key + "\" must be an integer");
}

std::string get_str(const json& j, const char* key) {
    const json& v = require_key(j, key);
    if (!v.is_string()) throw ParseError(std::string("key \"") + key + "\" must be a string");
    return v.get<std::string>();
}

FieldContext context_from_d(const json& j) { return FieldContext(get_int(j, "d")); }

// For kinds whose field is derived from beta, an explicit "d" must agree.
void check_declared_d(const json& j, const FieldContext& derived) {
    if (!j.contains("d")) return;
    Int d = get_int(j, "d");
    if (d != derived.d())
        throw ValidationError("declared d = " + d.str() + " but the construction lives in sqrt(" +
                              derived.d().str() + ")");
}

SectorData parse_fan_payload(const json& j) {
    Int beta = get_int(j, "beta");
    const json& entries = require_key(j, "entries");
    if (!entries.is_array() || entries.empty())
        throw ParseError("fan \"entries\" must be a nonempty array");
    std::vector<SectorDatum> data;
    data.reserve(entries.size());
    for (const json& e : entries) {
        const json& ray = require_key(e, "ray");
        if (!ray.is_array() || ray.size() != 2 || !ray[0].is_number_integer() ||
            !ray[1].is_number_integer())
            throw ParseError("fan entry \"ray\" must be [u, v] with integer components");
        std::string base = get_str(e, "base");
        if (base != "H" && base != "K")
            throw ParseError("fan entry \"base\" must be \"H\" or \"K\"");
        Int offset = e.contains("offset") ? get_int(e, "offset") : Int(0);
        data.push_back({LatticeVector{Int(ray[0].get<long long>()), Int(ray[1].get<long long>())},
                        base == "H" ? LabelBase::H : LabelBase::K, offset});
    }
    SectorData result(beta, std::move(data));
    check_declared_d(j, result.context());
    return result;
}

}  // namespace

std::string Scene::kind_name() const {
    struct Visitor {
        std::string operator()(const CglsScene&) const { return "cgls"; }
        std::string operator()(const QuadScene&) const { return "quad"; }
        std::string operator()(const PyramidScene&) const { return "pyramid"; }
        std::string operator()(const CutPasteScene&) const { return "cutpaste"; }
        std::string operator()(const CounterexampleScene&) const { return "counterexample"; }
        std::string operator()(const FanScene&) const { return "fan"; }
        std::string operator()(const PolygonScene&) const { return "polygon"; }
    };
    return std::visit(Visitor{}, payload);
}

Scene parse_scene(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scene is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("scene must be a JSON object");

    std::string kind;
    if (j.contains("kind"))
        kind = get_str(j, "kind");
    else if (j.contains("entries") && j.contains("beta"))
        kind = "fan";  // bare fan data file
    else
        throw ParseError("scene is missing key \"kind\"");

    if (kind == "cgls") {
        CglsScene s{get_int(j, "alpha"), get_int(j, "beta")};
        if (j.contains("d"))
            check_declared_d(j, cgls_legs({s.alpha, s.beta}).h.context());
        return {std::move(s)};
    }
    if (kind == "quad" || kind == "cutpaste") {
        FieldContext ctx = context_from_d(j);
        QuadraticNumber h = parse_qnum(get_str(j, "h"), ctx);
        QuadraticNumber k = parse_qnum(get_str(j, "k"), ctx);
        if (kind == "quad") return {QuadScene{std::move(h), std::move(k)}};
        return {CutPasteScene{std::move(h), std::move(k)}};
    }
    if (kind == "pyramid") {
        FieldContext ctx = context_from_d(j);
        return {PyramidScene{parse_qnum(get_str(j, "a"), ctx), parse_qnum(get_str(j, "b"), ctx)}};
    }
    if (kind == "counterexample") {
        Int beta = get_int(j, "beta");
        CounterexampleScene s{beta};
        check_declared_d(j, unit_alpha_legs(beta).h.context());
        return {std::move(s)};
    }
    if (kind == "fan") {
        return {FanScene{parse_fan_payload(j)}};
    }
    if (kind == "polygon") {
        FieldContext ctx = context_from_d(j);
        const json& verts = require_key(j, "vertices");
        if (!verts.is_array() || verts.size() < 3)
            throw ParseError("\"vertices\" must be an array of at least 3 [x, y] pairs");
        std::vector<Point> pts;
        pts.reserve(verts.size());
        for (const json& v : verts) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
                throw ParseError("each vertex must be a pair of coordinate literals");
            pts.emplace_back(parse_qnum(v[0].get<std::string>(), ctx),
                             parse_qnum(v[1].get<std::string>(), ctx));
        }
        return {PolygonScene{std::move(pts)}};
    }
    throw ParseError("unknown scene kind \"" + kind + "\"");
}

namespace {

json fan_to_json(const SectorData& data) {
    json j;
    j["kind"] = "fan";
    j["d"] = data.context().d().convert_to<long long>();
    j["beta"] = data.beta().convert_to<long long>();
    json entries = json::array();
    for (const SectorDatum& e : data.entries()) {
        json entry;
        entry["ray"] = {e.ray.u.convert_to<long long>(), e.ray.v.convert_to<long long>()};
        entry["base"] = e.base == LabelBase::H ? "H" : "K";
        entry["offset"] = e.offset.convert_to<long long>();
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    return j;
}

}  // namespace

std::string print_scene(const Scene& scene) {
    json j;
    struct Visitor {
        json& j;
        void operator()(const CglsScene& s) const {
            j["kind"] = "cgls";
            j["alpha"] = s.alpha.convert_to<long long>();
            j["beta"] = s.beta.convert_to<long long>();
        }
        void operator()(const QuadScene& s) const {
            j["kind"] = "quad";
            j["d"] = s.h.d().convert_to<long long>();
            j["h"] = to_literal(s.h);
            j["k"] = to_literal(s.k);
        }
        void operator()(const PyramidScene& s) const {
            j["kind"] = "pyramid";
            j["d"] = s.a.d().convert_to<long long>();
            j["a"] = to_literal(s.a);
            j["b"] = to_literal(s.b);
        }
        void operator()(const CutPasteScene& s) const {
            j["kind"] = "cutpaste";
            j["d"] = s.h.d().convert_to<long long>();
            j["h"] = to_literal(s.h);
            j["k"] = to_literal(s.k);
        }
        void operator()(const CounterexampleScene& s) const {
            j["kind"] = "counterexample";
            j["beta"] = s.beta.convert_to<long long>();
        }
        void operator()(const FanScene& s) const { j = fan_to_json(s.data); }
        void operator()(const PolygonScene& s) const {
            j["kind"] = "polygon";
            j["d"] = s.vertices.front().context().d().convert_to<long long>();
            json verts = json::array();
            for (const Point& p : s.vertices)
                verts.push_back({to_literal(p.x), to_literal(p.y)});
            j["vertices"] = std::move(verts);
        }
    };
    std::visit(Visitor{j}, scene.payload);
    return j.dump(2) + "\n";
}

std::string fan_scene_json(const SectorData& data) { return fan_to_json(data).dump(2) + "\n"; }

BuiltTarget build_target(const Scene& scene) {
    struct Visitor {
        BuiltTarget operator()(const CglsScene& s) const {
            return {cgls_triangle({s.alpha, s.beta}), CglsForm{s.alpha, s.beta},
                    "T(alpha=" + s.alpha.str() + ", beta=" + s.beta.str() + ")"};
        }
        BuiltTarget operator()(const QuadScene& s) const {
            Polygon q = quad_qhk(s.h, s.k);
            Int sum = quad_leg_sum(s.h, s.k);
            return {std::move(q), LegSumForm{sum},
                    "Q(h=" + to_literal(s.h) + ", k=" + to_literal(s.k) + ")"};
        }
        BuiltTarget operator()(const PyramidScene& s) const {
            Polygon p = pyramid_over(s.a, s.b);
            Int len = numerator((s.b - s.a).a());
            return {std::move(p), LegSumForm{len},
                    "pyramid over [" + to_literal(s.a) + ", " + to_literal(s.b) + "]"};
        }
        BuiltTarget operator()(const CutPasteScene& s) const {
            CutPasteResult r = cut_and_paste(s.h, s.k);
            Int sum = quad_leg_sum(s.h, s.k);
            return {std::move(r.glued), LegSumForm{sum},
                    "glued Q(h=" + to_literal(s.h) + ", k=" + to_literal(s.k) + ")"};
        }
        BuiltTarget operator()(const CounterexampleScene& s) const {
            AssembledPolygon a = counterexample_union(s.beta);
            CounterexampleForm cf{*a.gluing_h, s.beta};
            return {std::move(a), std::move(cf),
                    "counterexample union, beta=" + s.beta.str()};
        }
        BuiltTarget operator()(const FanScene& s) const {
            AssembledPolygon a = assemble(s.data);
            std::string label = "fan assembly, 2k=" + std::to_string(s.data.size()) +
                                ", n_total=" + a.n_total.str();
            return {std::move(a), FanForm{}, std::move(label)};
        }
        BuiltTarget operator()(const PolygonScene& s) const {
            ValidationReport rep = validate_simple(s.vertices);
            if (!rep.ok()) throw ValidationError("polygon is not simple/CCW: " + rep.summary());
            return {Polygon(s.vertices), NoClosedForm{},
                    "polygon with " + std::to_string(s.vertices.size()) + " vertices"};
        }
    };
    return std::visit(Visitor{}, scene.payload);
}

const Polygon& target_outline(const BuiltTarget& t) {
    if (const Polygon* p = std::get_if<Polygon>(&t.shape)) return *p;
    return std::get<AssembledPolygon>(t.shape).outer;
}

CountResult count_target(const BuiltTarget& t, const Int& dilation, bool oracle) {
    if (oracle) return count_bruteforce(target_outline(t), dilation);
    if (const Polygon* p = std::get_if<Polygon>(&t.shape)) {
        if (is_convex(*p)) return count_scanline(*p, dilation);
        return count_bruteforce(*p, dilation);
    }
    return count_assembled(std::get<AssembledPolygon>(t.shape), dilation);
}

EhrhartSeries sample_target(const BuiltTarget& t, size_t t_max) {
    if (const Polygon* p = std::get_if<Polygon>(&t.shape))
        return sample_series(*p, t_max, t.label);
    return sample_series(std::get<AssembledPolygon>(t.shape), t_max, t.label);
}

CollapseReport verify_target(const BuiltTarget& t, size_t t_max, const Int& p_max,
                             unsigned degree) {
    if (const Polygon* p = std::get_if<Polygon>(&t.shape))
        return verify_collapse(*p, t.closed_form, t_max, p_max, degree, t.label);
    return verify_collapse(std::get<AssembledPolygon>(t.shape), t.closed_form, t_max, p_max,
                           degree, t.label);
}

}  // namespace irrlat
