#include "irrlat/counting.hpp"

#include "irrlat/errors.hpp"

#include <optional>

namespace irrlat {

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::BruteForce: return "bruteforce";
        case CountMethod::Scanline: return "scanline";
        case CountMethod::Assembled: return "assembled";
    }
    return "?";
}

Int count_segment(const QuadraticNumber& a, const QuadraticNumber& b, const Int& t) {
    require_same_context(a, b);
    if (t < 1) throw DomainError("dilation factor must be a positive integer");
    if (sign(b - a) <= 0) throw DomainError("count_segment needs a < b");
    Rational tf(t);
    return floor_int(b * tf) - ceil_int(a * tf) + 1;
}

CountResult count_bruteforce(const Polygon& p, const Int& t) {
    Polygon big = dilate(p, t);
    PreparedPolygon prepared(big);
    return {t, prepared.count_lattice_points(), CountMethod::BruteForce};
}

CountResult count_scanline(const Polygon& p, const Int& t) {
    if (!is_convex(p)) throw DomainError("count_scanline requires a convex polygon");
    Polygon big = dilate(p, t);
    const size_t n = big.size();
    const FieldContext& ctx = big.context();

    QuadraticNumber miny = big[0].y, maxy = big[0].y;
    for (const Point& v : big.vertices()) {
        if (v.y < miny) miny = v.y;
        if (v.y > maxy) maxy = v.y;
    }

    Int total = 0;
    for (Int row = ceil_int(miny); row <= floor_int(maxy); ++row) {
        QuadraticNumber yq = QuadraticNumber::from_int(row, ctx);
        std::optional<QuadraticNumber> xlo, xhi;
        auto take = [&](const QuadraticNumber& x) {
            if (!xlo || x < *xlo) xlo = x;
            if (!xhi || x > *xhi) xhi = x;
        };
        for (size_t i = 0; i < n; ++i) {
            const Point& v1 = big[i];
            const Point& v2 = big[(i + 1) % n];
            int s1 = sign(v1.y - yq);
            int s2 = sign(v2.y - yq);
            if (s1 == 0 && s2 == 0) {  // horizontal edge on the row
                take(v1.x);
                take(v2.x);
            } else if (s1 == 0) {
                take(v1.x);
            } else if (s2 == 0) {
                take(v2.x);
            } else if (s1 * s2 < 0) {
                QuadraticNumber x =
                    v1.x + (v2.x - v1.x) * ((yq - v1.y) / (v2.y - v1.y));
                take(x);
            }
        }
        if (!xlo) continue;
        Int lo = ceil_int(*xlo);
        Int hi = floor_int(*xhi);
        if (hi >= lo) total += hi - lo + 1;
    }
    return {t, total, CountMethod::Scanline};
}

namespace {

// A proper Q_{h,k} piece is a nonconvex quadrilateral with its reflex
// vertex at the image of (1,1); splitting along the integral diagonal from
// the origin image gives two triangles sharing that lattice segment.
Int count_piece(const Polygon& piece, const Int& t) {
    if (is_convex(piece)) return count_scanline(piece, t).count;
    const auto& v = piece.vertices();
    if (v.size() == 4 && v[0].x.is_integer() && v[0].y.is_integer() &&
        v[2].x.is_integer() && v[2].y.is_integer()) {
        Polygon tri1({v[0], v[1], v[2]});
        Polygon tri2({v[0], v[2], v[3]});
        Int du = abs(numerator(v[2].x.a()) - numerator(v[0].x.a()));
        Int dv = abs(numerator(v[2].y.a()) - numerator(v[0].y.a()));
        Int diagonal = boost::multiprecision::gcd(du, dv) * t + 1;
        return count_scanline(tri1, t).count + count_scanline(tri2, t).count - diagonal;
    }
    return count_bruteforce(piece, t).count;
}

}  // namespace

CountResult count_assembled(const AssembledPolygon& a, const Int& t) {
    if (t < 1) throw DomainError("dilation factor must be a positive integer");
    Int total = 0;
    for (const Polygon& piece : a.pieces) total += count_piece(piece, t);
    // A shared edge conv{O, c*V} with V primitive holds as many lattice
    // points as the 1-d segment [0, c] holds integers.
    for (const SharedEdge& e : a.shared_edges) {
        QuadraticNumber zero = QuadraticNumber::from_int(0, e.length.context());
        total -= count_segment(zero, e.length, t);
    }
    if (a.kind == AssemblyKind::Fan) total += 1;  // the origin, common to all pieces
    return {t, total, CountMethod::Assembled};
}

}  // namespace irrlat
