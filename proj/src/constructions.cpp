#include "irrlat/constructions.hpp"

#include "irrlat/errors.hpp"

#include <algorithm>
#include <utility>

namespace irrlat {

namespace {

Point make_point(const QuadraticNumber& x, const QuadraticNumber& y) { return {x, y}; }

Point int_point(const Int& x, const Int& y, const FieldContext& ctx) {
    return {QuadraticNumber::from_int(x, ctx), QuadraticNumber::from_int(y, ctx)};
}

QuadraticNumber ray_coord(const QuadraticNumber& c, const Int& component) {
    return c * Rational(component);
}

}  // namespace

CGLSLegs cgls_legs(const CGLSParams& params) {
    if (params.alpha < 1 || params.beta < 1)
        throw DomainError("CGLS parameters must be positive integers");
    // x^2 - beta*x + beta/alpha = 0, scaled: alpha*x^2 - alpha*beta*x + beta.
    const Int p = params.alpha * params.beta;
    const Int disc = p * (p - 4);
    if (disc < 0) throw DomainError("CGLS discriminant negative: no real legs");
    if (disc == 0)
        throw ValidationError("CGLS discriminant is a perfect square: legs are rational");
    auto [square, free] = split_square(disc);
    if (free == 1)
        throw ValidationError("CGLS discriminant is a perfect square: legs are rational");
    FieldContext ctx(free);
    const Rational half_sum(p, 2 * params.alpha);
    const Rational half_rad(square, 2 * params.alpha);
    QuadraticNumber h(half_sum, half_rad, ctx);
    QuadraticNumber k(half_sum, -half_rad, ctx);
    if (sign(k) <= 0 || sign(h) <= 0) throw DomainError("CGLS legs must be positive");
    return {std::move(h), std::move(k)};
}

Polygon cgls_triangle(const CGLSParams& params) {
    CGLSLegs legs = cgls_legs(params);
    const FieldContext& ctx = legs.h.context();
    const QuadraticNumber zero = QuadraticNumber::from_int(0, ctx);
    return Polygon({make_point(zero, zero), make_point(legs.h, zero), make_point(zero, legs.k)});
}

CGLSLegs unit_alpha_legs(const Int& beta) { return cgls_legs({1, beta}); }

Int quad_leg_sum(const QuadraticNumber& h, const QuadraticNumber& k) {
    require_same_context(h, k);
    QuadraticNumber s = h + k;
    if (!s.is_integer())
        throw ValidationError("h + k must be an integer, got " + to_literal(s));
    return numerator(s.a());
}

Polygon quad_qhk(const QuadraticNumber& h, const QuadraticNumber& k) {
    require_same_context(h, k);
    if (h.is_rational() || k.is_rational())
        throw ValidationError("Q_{h,k} needs irrational h and k");
    if (sign(h) <= 0 || sign(k) <= 0) throw ValidationError("Q_{h,k} needs h, k > 0");
    quad_leg_sum(h, k);
    const FieldContext& ctx = h.context();
    const QuadraticNumber one = QuadraticNumber::from_int(1, ctx);
    int cmp = sign(one - h.inverse() - k.inverse());
    if (cmp < 0) throw ValidationError("1/h + 1/k exceeds 1");
    const QuadraticNumber zero = QuadraticNumber::from_int(0, ctx);
    // cmp > 0 makes (1,1) a reflex vertex; cmp == 0 puts it on the hypotenuse,
    // where the vertex stays in the list and canonical_edges reports 3 edges.
    return Polygon({make_point(zero, zero), make_point(h, zero), make_point(one, one),
                    make_point(zero, k)});
}

Polygon pyramid_over(const QuadraticNumber& a, const QuadraticNumber& b) {
    require_same_context(a, b);
    if (a.is_rational() || b.is_rational())
        throw ValidationError("pyramid base endpoints must be irrational");
    QuadraticNumber len = b - a;
    if (!len.is_integer() || sign(len) <= 0)
        throw ValidationError("pyramid base length b - a must be a positive integer, got " +
                              to_literal(len));
    const FieldContext& ctx = a.context();
    const QuadraticNumber zero = QuadraticNumber::from_int(0, ctx);
    const QuadraticNumber one = QuadraticNumber::from_int(1, ctx);
    return Polygon({make_point(zero, zero), make_point(b, one), make_point(a, one)});
}

CutPasteResult cut_and_paste(const QuadraticNumber& h, const QuadraticNumber& k) {
    quad_leg_sum(h, k);  // validates integrality early for a clear error
    Polygon expected_shape = quad_qhk(h, k);  // validates the full precondition set
    (void)expected_shape;

    const FieldContext& ctx = h.context();
    const QuadraticNumber zero = QuadraticNumber::from_int(0, ctx);
    const QuadraticNumber one = QuadraticNumber::from_int(1, ctx);

    Polygon pyramid = pyramid_over(-h, k);
    Polygon half_left({make_point(zero, zero), make_point(zero, one), make_point(-h, one)});
    Polygon half_right({make_point(zero, zero), make_point(k, one), make_point(zero, one)});

    IntegralAffineMap phi1(-1, -1, 0, -1, 1, 1);
    IntegralAffineMap phi2(0, -1, 1, -1, 1, 1);

    Polygon image_left = apply_map(phi1, half_left);
    Polygon image_right = apply_map(phi2, half_right);

    Segment cut_edge(make_point(zero, zero), make_point(zero, one));
    Segment glued_edge = apply_map(phi1, cut_edge);

    Polygon glued = glue_two(image_left, image_right);
    return {std::move(pyramid), std::move(half_left), std::move(half_right),
            std::move(image_left), std::move(image_right), std::move(cut_edge),
            std::move(glued_edge), std::move(glued), phi1, phi2};
}

SectorData::SectorData(Int beta, std::vector<SectorDatum> entries)
    : beta_(std::move(beta)),
      h0_(unit_alpha_legs(beta_).h),
      k0_(unit_alpha_legs(beta_).k),
      entries_(std::move(entries)) {
    const size_t m = entries_.size();
    if (m < 4 || m % 2 != 0)
        throw ValidationError("fan data needs an even number >= 4 of rays, got " +
                              std::to_string(m));
    for (size_t i = 0; i < m; ++i) {
        if (!entries_[i].ray.is_primitive())
            throw ValidationError("ray " + std::to_string(i) + " = " + entries_[i].ray.str() +
                                  " is not primitive");
        if (entries_[i].offset < 0)
            throw ValidationError("ray " + std::to_string(i) + " has negative offset");
        if (entries_[i].base == entries_[(i + 1) % m].base)
            throw ValidationError("labels do not alternate at rays " + std::to_string(i) +
                                  ", " + std::to_string((i + 1) % m));
        Int dt = det(entries_[i].ray, entries_[(i + 1) % m].ray);
        if (dt != 1)
            throw ValidationError("det(V_" + std::to_string(i) + ", V_" +
                                  std::to_string((i + 1) % m) + ") = " + dt.str() +
                                  ", expected +1");
    }
    // The sectors must wind around the origin exactly once: exactly one
    // half-open sector [V_i, V_{i+1}) contains the direction (1, 0).
    const LatticeVector e1{1, 0};
    int hits = 0;
    for (size_t i = 0; i < m; ++i) {
        const LatticeVector& a = entries_[i].ray;
        const LatticeVector& b = entries_[(i + 1) % m].ray;
        Int da = det(a, e1);
        if (da == 0 && a.u > 0)
            ++hits;
        else if (da > 0 && det(e1, b) > 0)
            ++hits;
    }
    if (hits != 1)
        throw ValidationError("rays do not wind around the origin exactly once");
    // Adjacent value constraint: 1/c_i + 1/c_{i+1} <= 1, equality only when
    // both offsets are 0.
    const QuadraticNumber one = QuadraticNumber::from_int(1, context());
    for (size_t i = 0; i < m; ++i) {
        size_t j = (i + 1) % m;
        QuadraticNumber ci = value(i);
        QuadraticNumber cj = value(j);
        int cmp = sign(one - ci.inverse() - cj.inverse());
        if (cmp < 0)
            throw ValidationError("1/c_" + std::to_string(i) + " + 1/c_" + std::to_string(j) +
                                  " exceeds 1");
        if (cmp == 0 && (entries_[i].offset != 0 || entries_[j].offset != 0))
            throw InternalError("unit reciprocal sum with nonzero offsets at rays " +
                                std::to_string(i) + ", " + std::to_string(j));
    }
}

QuadraticNumber SectorData::value(size_t i) const {
    const SectorDatum& e = entries_.at(i);
    const QuadraticNumber& base = e.base == LabelBase::H ? h0_ : k0_;
    return base + Rational(e.offset);
}

Int SectorData::n_total() const {
    Int n = 0;
    for (const SectorDatum& e : entries_) n += e.offset;
    return n;
}

AssembledPolygon assemble(const SectorData& data) {
    const size_t m = data.size();
    const FieldContext& ctx = data.context();
    const Point origin = int_point(0, 0, ctx);

    std::vector<Polygon> pieces;
    std::vector<SharedEdge> shared;
    std::vector<Int> sums;
    std::vector<Point> outer_raw;
    pieces.reserve(m);
    shared.reserve(m);
    outer_raw.reserve(2 * m);

    for (size_t i = 0; i < m; ++i) {
        const size_t j = (i + 1) % m;
        const LatticeVector& vi = data.entries()[i].ray;
        const LatticeVector& vj = data.entries()[j].ray;
        QuadraticNumber ci = data.value(i);
        QuadraticNumber cj = data.value(j);

        IntegralAffineMap m_ij = IntegralAffineMap::from_columns(vi, vj);
        pieces.push_back(apply_map(m_ij, quad_qhk(ci, cj)));
        sums.push_back(quad_leg_sum(ci, cj));

        Point tip(ray_coord(ci, vi.u), ray_coord(ci, vi.v));
        shared.push_back({vi, ci, Segment(origin, tip)});

        outer_raw.push_back(tip);
        outer_raw.push_back(int_point(vi.u + vj.u, vi.v + vj.v, ctx));
    }

    Polygon outer(std::move(outer_raw));
    return {AssemblyKind::Fan,
            std::move(pieces),
            std::move(shared),
            std::move(outer),
            data.n_total(),
            Int(m / 2),
            data.beta(),
            std::move(sums),
            std::nullopt};
}

AssembledPolygon counterexample_union(const Int& beta) {
    if (beta < 5) throw DomainError("counterexample needs beta >= 5");
    CGLSLegs legs = unit_alpha_legs(beta);
    Polygon upper = cgls_triangle({1, beta});
    IntegralAffineMap reflect_x = IntegralAffineMap::linear(1, 0, 0, -1);
    Polygon lower = apply_map(reflect_x, upper);
    Polygon outer = glue_two(upper, lower);

    const FieldContext& ctx = legs.h.context();
    const Point origin = int_point(0, 0, ctx);
    Point tip(legs.h, QuadraticNumber::from_int(0, ctx));
    SharedEdge edge{LatticeVector{1, 0}, legs.h, Segment(origin, tip)};

    return {AssemblyKind::Gluing,
            {std::move(upper), std::move(lower)},
            {std::move(edge)},
            std::move(outer),
            Int(0),
            Int(0),
            beta,
            {beta, beta},
            legs.h};
}

std::vector<LatticeVector> fan_subdivide(std::vector<LatticeVector> rays, size_t target) {
    if (rays.size() < 3) throw DomainError("fan subdivision needs at least 3 rays");
    if (target < rays.size())
        throw DomainError("target ray count below current count");
    if (target % 2 != 0) throw DomainError("fan data needs an even ray count");
    for (size_t i = 0; i < rays.size(); ++i) {
        if (!rays[i].is_primitive())
            throw ValidationError("ray " + rays[i].str() + " is not primitive");
        if (det(rays[i], rays[(i + 1) % rays.size()]) != 1)
            throw ValidationError("input rays are not consecutive unimodular sectors");
    }
    while (rays.size() < target) {
        size_t best = 0;
        Int best_norm = -1;
        for (size_t i = 0; i < rays.size(); ++i) {
            LatticeVector med = rays[i] + rays[(i + 1) % rays.size()];
            Int n2 = med.norm2();
            if (best_norm < 0 || n2 < best_norm) {
                best_norm = n2;
                best = i;
            }
        }
        LatticeVector med = rays[best] + rays[(best + 1) % rays.size()];
        rays.insert(rays.begin() + static_cast<long>(best) + 1, med);
    }
    return rays;
}

SectorData refine_step0(const SectorData& data, size_t index, const Int& new_offset) {
    if (index >= data.size()) throw DomainError("refine index out of range");
    if (new_offset < 1)
        throw DomainError("replacement value must come from the strict set (offset >= 1)");
    const auto& es = data.entries();
    const size_t m = es.size();
    const SectorDatum& prev = es[(index + m - 1) % m];
    const SectorDatum& cur = es[index];
    const SectorDatum& next = es[(index + 1) % m];
    LabelBase opposite = cur.base == LabelBase::H ? LabelBase::K : LabelBase::H;

    std::vector<SectorDatum> out;
    out.reserve(m + 2);
    for (size_t i = 0; i < m; ++i) {
        if (i != index) {
            out.push_back(es[i]);
            continue;
        }
        out.push_back({prev.ray + cur.ray, cur.base, cur.offset});
        out.push_back({cur.ray, opposite, new_offset});
        out.push_back({cur.ray + next.ray, cur.base, cur.offset});
    }
    try {
        return SectorData(data.beta(), std::move(out));
    } catch (const ValidationError& e) {
        throw InternalError(std::string("refinement broke fan invariants: ") + e.what());
    }
}

namespace {

SectorData base_seed(size_t n_edges, const Int& beta) {
    const LatticeVector e1{1, 0}, e2{0, 1};
    switch (n_edges) {
        case 4:
            return SectorData(beta, {{e1, LabelBase::H, 0},
                                     {e2, LabelBase::K, 0},
                                     {-e1, LabelBase::H, 0},
                                     {-e2, LabelBase::K, 0}});
        case 6:
            return SectorData(beta, {{e1, LabelBase::H, 0},
                                     {e2, LabelBase::K, 0},
                                     {-e1, LabelBase::H, 0},
                                     {-e2, LabelBase::K, 1}});
        case 7:
            return SectorData(beta, {{e1, LabelBase::H, 0},
                                     {e2, LabelBase::K, 0},
                                     {-e1, LabelBase::H, 1},
                                     {-e2, LabelBase::K, 1}});
        case 9:
            return SectorData(beta, {{e1, LabelBase::H, 0},
                                     {e1 + e2, LabelBase::K, 0},
                                     {e2, LabelBase::H, 0},
                                     {-e1, LabelBase::K, 0},
                                     {-(e1 + e2), LabelBase::H, 1},
                                     {-e2, LabelBase::K, 1}});
        default:
            throw InternalError("no base seed for " + std::to_string(n_edges));
    }
}

}  // namespace

SectorData seed_data(size_t n_edges, const Int& beta) {
    if (n_edges < 4 || n_edges == 5)
        throw DomainError("edge count " + std::to_string(n_edges) +
                          " unsupported: need n >= 4, n != 5");
    size_t base;
    switch (n_edges % 4) {
        case 0: base = 4; break;
        case 2: base = 6; break;
        case 3: base = 7; break;
        default: base = 9; break;  // n odd, n % 4 == 1, n >= 9
    }
    SectorData data = base_seed(base, beta);
    for (size_t step = 0; step < (n_edges - base) / 4; ++step)
        data = refine_step0(data, 0, 1);
    return data;
}

SectorData seed_vertex_data(size_t n_vertices, const Int& beta) {
    if (n_vertices < 4 || n_vertices % 2 != 0)
        throw DomainError("vertex count must be even and >= 4");
    std::vector<LatticeVector> rays =
        fan_subdivide({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, n_vertices);
    std::vector<SectorDatum> entries;
    entries.reserve(rays.size());
    for (size_t i = 0; i < rays.size(); ++i)
        entries.push_back({rays[i], i % 2 == 0 ? LabelBase::H : LabelBase::K, 0});
    return SectorData(beta, std::move(entries));
}

}  // namespace irrlat
