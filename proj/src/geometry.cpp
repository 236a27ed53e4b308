#include "irrlat/geometry.hpp"

#include "irrlat/errors.hpp"

#include <algorithm>
#include <utility>

namespace irrlat {

namespace {

Rational rat(const Int& n) { return Rational(n); }

QuadraticNumber scaled(const QuadraticNumber& x, const Int& f) { return x * rat(f); }

}  // namespace

Point::Point(QuadraticNumber px, QuadraticNumber py) : x(std::move(px)), y(std::move(py)) {
    if (x.context() != y.context())
        throw ValidationError("point coordinates live in different fields");
}

std::string to_literal(const Point& p) {
    return "(" + to_literal(p.x) + ", " + to_literal(p.y) + ")";
}

bool LatticeVector::is_primitive() const {
    if (is_zero()) return false;
    return boost::multiprecision::gcd(abs(u), abs(v)) == 1;
}

Int det(const LatticeVector& a, const LatticeVector& b) { return a.u * b.v - a.v * b.u; }

Segment::Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {
    if (a.context() != b.context())
        throw ValidationError("segment endpoints live in different fields");
    if (a == b) throw ValidationError("segment endpoints must be distinct");
}

IntegralAffineMap::IntegralAffineMap(Int m00, Int m01, Int m10, Int m11, Int t0, Int t1)
    : m00_(std::move(m00)),
      m01_(std::move(m01)),
      m10_(std::move(m10)),
      m11_(std::move(m11)),
      t0_(std::move(t0)),
      t1_(std::move(t1)) {
    Int dt = det();
    if (dt != 1 && dt != -1)
        throw ValidationError("integral affine map must have determinant +-1, got " + dt.str());
}

IntegralAffineMap IntegralAffineMap::identity() { return {1, 0, 0, 1, 0, 0}; }

IntegralAffineMap IntegralAffineMap::linear(Int m00, Int m01, Int m10, Int m11) {
    return {std::move(m00), std::move(m01), std::move(m10), std::move(m11), 0, 0};
}

IntegralAffineMap IntegralAffineMap::from_columns(const LatticeVector& c0,
                                                  const LatticeVector& c1) {
    return linear(c0.u, c1.u, c0.v, c1.v);
}

Point IntegralAffineMap::apply(const Point& p) const {
    QuadraticNumber nx = p.x * rat(m00_) + p.y * rat(m01_) + rat(t0_);
    QuadraticNumber ny = p.x * rat(m10_) + p.y * rat(m11_) + rat(t1_);
    return {std::move(nx), std::move(ny)};
}

LatticeVector IntegralAffineMap::apply_vector(const LatticeVector& v) const {
    return {m00_ * v.u + m01_ * v.v, m10_ * v.u + m11_ * v.v};
}

IntegralAffineMap IntegralAffineMap::operator*(const IntegralAffineMap& r) const {
    return {m00_ * r.m00_ + m01_ * r.m10_, m00_ * r.m01_ + m01_ * r.m11_,
            m10_ * r.m00_ + m11_ * r.m10_, m10_ * r.m01_ + m11_ * r.m11_,
            m00_ * r.t0_ + m01_ * r.t1_ + t0_, m10_ * r.t0_ + m11_ * r.t1_ + t1_};
}

QuadraticNumber cross(const QuadraticNumber& ax, const QuadraticNumber& ay,
                      const QuadraticNumber& bx, const QuadraticNumber& by) {
    return ax * by - ay * bx;
}

namespace {

QuadraticNumber edge_cross(const Point& a, const Point& b, const Point& c) {
    // cross(b - a, c - a)
    return cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y);
}

QuadraticNumber twice_signed_area(const std::vector<Point>& v) {
    const FieldContext& ctx = v.front().context();
    QuadraticNumber acc = QuadraticNumber::from_int(0, ctx);
    for (size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        acc = acc + cross(p.x, p.y, q.x, q.y);
    }
    return acc;
}

}  // namespace

Polygon::Polygon(std::vector<Point> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3) throw ValidationError("polygon needs at least 3 vertices");
    const FieldContext& ctx = verts_.front().context();
    for (const Point& p : verts_)
        if (p.context() != ctx) throw ValidationError("polygon mixes field contexts");
    for (size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i] == verts_[(i + 1) % verts_.size()])
            throw ValidationError("polygon has equal consecutive vertices");
    int s = sign(twice_signed_area(verts_));
    if (s == 0) throw ValidationError("polygon has zero area");
    if (s < 0) std::reverse(verts_.begin() + 1, verts_.end());
}

QuadraticNumber area(const Polygon& p) {
    return twice_signed_area(p.vertices()) * Rational(1, 2);
}

Point dilate(const Point& p, const Int& t) { return {scaled(p.x, t), scaled(p.y, t)}; }

Polygon dilate(const Polygon& p, const Int& t) {
    if (t < 1) throw DomainError("dilation factor must be a positive integer");
    std::vector<Point> out;
    out.reserve(p.size());
    for (const Point& v : p.vertices()) out.push_back(dilate(v, t));
    return Polygon(std::move(out));
}

Point apply_map(const IntegralAffineMap& m, const Point& p) { return m.apply(p); }

Segment apply_map(const IntegralAffineMap& m, const Segment& s) {
    return {m.apply(s.a), m.apply(s.b)};
}

Polygon apply_map(const IntegralAffineMap& m, const Polygon& p) {
    std::vector<Point> out;
    out.reserve(p.size());
    for (const Point& v : p.vertices()) out.push_back(m.apply(v));
    return Polygon(std::move(out));  // constructor restores CCW when det = -1
}

std::vector<CanonicalEdge> canonical_edges(const Polygon& p) {
    const size_t n = p.size();
    std::vector<int> corner(n, 0);
    size_t corners = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point& prev = p[(i + n - 1) % n];
        const Point& here = p[i];
        const Point& next = p[(i + 1) % n];
        QuadraticNumber turn =
            cross(here.x - prev.x, here.y - prev.y, next.x - here.x, next.y - here.y);
        if (sign(turn) != 0) {
            corner[i] = 1;
            ++corners;
        }
    }
    if (corners < 3) throw InternalError("polygon with fewer than 3 corners");

    std::vector<Point> cpts;
    cpts.reserve(corners);
    for (size_t i = 0; i < n; ++i)
        if (corner[i]) cpts.push_back(p[i]);

    std::vector<CanonicalEdge> out;
    out.reserve(corners);
    for (size_t i = 0; i < cpts.size(); ++i) {
        const Point& a = cpts[i];
        const Point& b = cpts[(i + 1) % cpts.size()];
        QuadraticNumber dx = b.x - a.x;
        QuadraticNumber dy = b.y - a.y;
        SlopeClass cls;
        if (dx.is_zero())
            cls = SlopeClass::Vertical;
        else
            cls = (dy / dx).is_rational() ? SlopeClass::Rational : SlopeClass::Irrational;
        out.push_back({Segment(a, b), cls});
    }
    return out;
}

namespace {

bool value_in_closed_box(const QuadraticNumber& v, const QuadraticNumber& lo,
                         const QuadraticNumber& hi) {
    return sign(v - lo) >= 0 && sign(v - hi) <= 0;
}

bool point_on_segment(const Point& a, const Point& b, const Point& q) {
    if (sign(edge_cross(a, b, q)) != 0) return false;
    const QuadraticNumber& xlo = sign(a.x - b.x) <= 0 ? a.x : b.x;
    const QuadraticNumber& xhi = sign(a.x - b.x) <= 0 ? b.x : a.x;
    const QuadraticNumber& ylo = sign(a.y - b.y) <= 0 ? a.y : b.y;
    const QuadraticNumber& yhi = sign(a.y - b.y) <= 0 ? b.y : a.y;
    return value_in_closed_box(q.x, xlo, xhi) && value_in_closed_box(q.y, ylo, yhi);
}

// Any contact between closed segments, including collinear overlap.
bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = sign(edge_cross(a, b, c));
    int o2 = sign(edge_cross(a, b, d));
    int o3 = sign(edge_cross(c, d, a));
    int o4 = sign(edge_cross(c, d, b));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && point_on_segment(a, b, c)) return true;
    if (o2 == 0 && point_on_segment(a, b, d)) return true;
    if (o3 == 0 && point_on_segment(c, d, a)) return true;
    if (o4 == 0 && point_on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

std::string ValidationReport::summary() const {
    if (defects.empty()) return "ok";
    std::string s;
    for (const Defect& d : defects) {
        if (!s.empty()) s += "; ";
        s += d.message;
    }
    return s;
}

ValidationReport validate_simple(const std::vector<Point>& v) {
    ValidationReport rep;
    const size_t n = v.size();
    if (n < 3) {
        rep.defects.push_back({Defect::Kind::TooFewVertices, 0, 0,
                               "polygon needs at least 3 vertices, got " + std::to_string(n)});
        return rep;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (v[i] == v[j])
                rep.defects.push_back({Defect::Kind::RepeatedVertex, i, j,
                                       "vertex " + std::to_string(i) + " repeats at " +
                                           std::to_string(j)});
    if (!rep.defects.empty()) return rep;

    // Edge i runs v[i] -> v[i+1].
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % n];
            const Point& c = v[j];
            const Point& d = v[(j + 1) % n];
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Shared endpoint contact is fine; a collinear backtrack is not.
                const Point& shared = (j == i + 1) ? b : a;
                const Point& tip1 = (j == i + 1) ? a : b;
                const Point& tip2 = (j == i + 1) ? d : c;
                if (point_on_segment(shared, tip1, tip2) ||
                    point_on_segment(shared, tip2, tip1))
                    rep.defects.push_back({Defect::Kind::Crossing, i, j,
                                           "edges " + std::to_string(i) + " and " +
                                               std::to_string(j) + " backtrack"});
            } else if (segments_touch(a, b, c, d)) {
                rep.defects.push_back({Defect::Kind::Crossing, i, j,
                                       "edges " + std::to_string(i) + " and " +
                                           std::to_string(j) + " intersect"});
            }
        }
    }
    if (!rep.defects.empty()) return rep;

    int s = sign(twice_signed_area(v));
    if (s == 0)
        rep.defects.push_back({Defect::Kind::ZeroArea, 0, 0, "polygon has zero area"});
    else if (s < 0)
        rep.defects.push_back(
            {Defect::Kind::WrongOrientation, 0, 0, "polygon is clockwise, expected CCW"});
    return rep;
}

ValidationReport validate_simple(const Polygon& p) { return validate_simple(p.vertices()); }

bool is_convex(const Polygon& p) {
    const size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& prev = p[(i + n - 1) % n];
        const Point& here = p[i];
        const Point& next = p[(i + 1) % n];
        if (sign(edge_cross(prev, here, next)) < 0) return false;
    }
    return true;
}

bool star_shaped_about_origin(const Polygon& p) {
    const size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = p[i];
        const Point& b = p[(i + 1) % n];
        // cross(b - a, O - a) >= 0: origin on the inner closed side.
        if (sign(cross(b.x - a.x, b.y - a.y, -a.x, -a.y)) < 0) return false;
    }
    return true;
}

bool same_cycle(const Polygon& a, const Polygon& b) {
    if (a.size() != b.size()) return false;
    const size_t n = a.size();
    for (size_t off = 0; off < n; ++off) {
        bool all = true;
        for (size_t i = 0; i < n && all; ++i) all = a[(off + i) % n] == b[i];
        if (all) return true;
    }
    return false;
}

Polygon glue_two(const Polygon& p1, const Polygon& p2) {
    const size_t n1 = p1.size();
    const size_t n2 = p2.size();
    size_t found_i = 0, found_j = 0;
    int found = 0;
    for (size_t i = 0; i < n1; ++i) {
        for (size_t j = 0; j < n2; ++j) {
            if (p1[i] == p2[(j + 1) % n2] && p1[(i + 1) % n1] == p2[j]) {
                found_i = i;
                found_j = j;
                ++found;
            }
        }
    }
    if (found == 0) throw ValidationError("pieces share no reversed edge; cannot glue");
    if (found > 1) throw ValidationError("pieces share more than one edge; cannot glue");

    std::vector<Point> out;
    out.reserve(n1 + n2 - 2);
    for (size_t k = 1; k <= n1; ++k) out.push_back(p1[(found_i + k) % n1]);
    for (size_t k = 2; k < n2; ++k) out.push_back(p2[(found_j + k) % n2]);
    return Polygon(std::move(out));
}

PreparedPolygon::PreparedPolygon(const Polygon& p) : d_(p.context().d()) {
    const size_t n = p.size();
    edges_.reserve(n);

    bool first = true;
    QuadraticNumber minx = p[0].x, maxx = p[0].x, miny = p[0].y, maxy = p[0].y;
    for (const Point& v : p.vertices()) {
        if (!first) {
            if (v.x < minx) minx = v.x;
            if (v.x > maxx) maxx = v.x;
            if (v.y < miny) miny = v.y;
            if (v.y > maxy) maxy = v.y;
        }
        first = false;
    }
    lo_x_ = ceil_int(minx);
    hi_x_ = floor_int(maxx);
    lo_y_ = ceil_int(miny);
    hi_y_ = floor_int(maxy);

    using boost::multiprecision::lcm;
    for (size_t i = 0; i < n; ++i) {
        const Point& v1 = p[i];
        const Point& v2 = p[(i + 1) % n];
        Int c = lcm(lcm(denominator(v1.x.a()), denominator(v1.x.b())),
                    lcm(denominator(v1.y.a()), denominator(v1.y.b())));
        c = lcm(c, lcm(denominator(v2.x.a()), denominator(v2.x.b())));
        c = lcm(c, lcm(denominator(v2.y.a()), denominator(v2.y.b())));

        auto num = [&c](const Rational& r) -> Int {
            return numerator(r) * (c / denominator(r));
        };
        Int ax1 = num(v1.x.a()), bx1 = num(v1.x.b());
        Int ay1 = num(v1.y.a()), by1 = num(v1.y.b());
        Int ax2 = num(v2.x.a()), bx2 = num(v2.x.b());
        Int ay2 = num(v2.y.a()), by2 = num(v2.y.b());

        Int dax = ax2 - ax1, dbx = bx2 - bx1;
        Int day = ay2 - ay1, dby = by2 - by1;

        Edge e;
        e.pqy = dax * c;
        e.pqx = -day * c;
        e.pc = -dax * ay1 - dbx * by1 * d_ + day * ax1 + dby * bx1 * d_;
        e.qqy = dbx * c;
        e.qqx = -dby * c;
        e.qc = -dax * by1 - dbx * ay1 + day * bx1 + dby * ax1;
        e.ay1 = ay1;
        e.nby1 = -by1;
        e.ay2 = ay2;
        e.nby2 = -by2;
        e.c = c;
        e.xlo = ceil_int(v1.x < v2.x ? v1.x : v2.x);
        e.xhi = floor_int(v1.x < v2.x ? v2.x : v1.x);
        e.ylo = ceil_int(v1.y < v2.y ? v1.y : v2.y);
        e.yhi = floor_int(v1.y < v2.y ? v2.y : v1.y);
        edges_.push_back(std::move(e));
    }
}

std::vector<PreparedPolygon::RowEntry> PreparedPolygon::classify_row(const Int& qy) const {
    std::vector<RowEntry> row;
    row.reserve(8);
    for (const Edge& e : edges_) {
        Int yc = qy * e.c;
        int s1 = sign_pair(yc - e.ay1, e.nby1, d_);
        int s2 = sign_pair(yc - e.ay2, e.nby2, d_);
        int dir = 0;
        if (s1 >= 0 && s2 < 0)
            dir = 1;
        else if (s1 < 0 && s2 >= 0)
            dir = -1;
        bool band = qy >= e.ylo && qy <= e.yhi;
        if (dir != 0 || band) row.push_back({&e, dir, band, Int(0), Int(0)});
    }
    return row;
}

bool PreparedPolygon::row_test(const std::vector<RowEntry>& row, const Int& qx,
                               const Int& d) {
    // Unused entries carry dir == 0 && !band filtered out already.
    for (const RowEntry& r : row) {
        if (!r.on_boundary_band) continue;
        if (qx < r.edge->xlo || qx > r.edge->xhi) continue;
        Int pv = r.edge->pqx * qx + r.p_row;
        Int qv = r.edge->qqx * qx + r.q_row;
        if (pv == 0 && qv == 0) return true;  // boundary point, closed polygon
    }
    bool inside = false;
    for (const RowEntry& r : row) {
        if (r.dir == 0) continue;
        Int pv = r.edge->pqx * qx + r.p_row;
        Int qv = r.edge->qqx * qx + r.q_row;
        int s = sign_pair(pv, qv, d);
        if (s == 0) throw InternalError("boundary point leaked into crossing test");
        if (s == r.dir) inside = !inside;
    }
    return inside;
}

bool PreparedPolygon::contains(const Int& qx, const Int& qy) const {
    std::vector<RowEntry> row = classify_row(qy);
    for (RowEntry& r : row) {
        r.p_row = r.edge->pqy * qy + r.edge->pc;
        r.q_row = r.edge->qqy * qy + r.edge->qc;
    }
    return row_test(row, qx, d_);
}

Int PreparedPolygon::count_lattice_points() const {
    Int total = 0;
    for (Int qy = lo_y_; qy <= hi_y_; ++qy) {
        std::vector<RowEntry> row = classify_row(qy);
        if (row.empty()) continue;
        for (RowEntry& r : row) {
            r.p_row = r.edge->pqy * qy + r.edge->pc;
            r.q_row = r.edge->qqy * qy + r.edge->qc;
        }
        for (Int qx = lo_x_; qx <= hi_x_; ++qx)
            if (row_test(row, qx, d_)) ++total;
    }
    return total;
}

bool contains(const Polygon& p, const Int& qx, const Int& qy) {
    return PreparedPolygon(p).contains(qx, qy);
}

}  // namespace irrlat
