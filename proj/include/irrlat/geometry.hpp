#pragma once

#include "irrlat/quadratic.hpp"

#include <string>
#include <vector>

namespace irrlat {

struct Point {
    QuadraticNumber x;
    QuadraticNumber y;

    Point(QuadraticNumber px, QuadraticNumber py);

    const FieldContext& context() const { return x.context(); }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

std::string to_literal(const Point& p);

// Primitive integer directions for rays and unimodular sectors.
struct LatticeVector {
    Int u;
    Int v;

    bool operator==(const LatticeVector& o) const { return u == o.u && v == o.v; }
    bool operator!=(const LatticeVector& o) const { return !(*this == o); }
    LatticeVector operator+(const LatticeVector& o) const { return {u + o.u, v + o.v}; }
    LatticeVector operator-() const { return {-u, -v}; }
    bool is_zero() const { return u == 0 && v == 0; }
    bool is_primitive() const;
    Int norm2() const { return u * u + v * v; }
    std::string str() const { return "(" + u.str() + "," + v.str() + ")"; }
};

Int det(const LatticeVector& a, const LatticeVector& b);

struct Segment {
    Point a;
    Point b;

    Segment(Point pa, Point pb);
};

// x -> Ax + t with A an integer matrix, |det A| = 1; preserves the lattice
// and hence all lattice-point counts.
class IntegralAffineMap {
public:
    IntegralAffineMap(Int m00, Int m01, Int m10, Int m11, Int t0, Int t1);

    static IntegralAffineMap identity();
    static IntegralAffineMap linear(Int m00, Int m01, Int m10, Int m11);
    // Columns are the images of e1, e2.
    static IntegralAffineMap from_columns(const LatticeVector& c0, const LatticeVector& c1);

    Int det() const { return m00_ * m11_ - m01_ * m10_; }

    Point apply(const Point& p) const;
    LatticeVector apply_vector(const LatticeVector& v) const;
    IntegralAffineMap operator*(const IntegralAffineMap& rhs) const;  // composition

    Int m00() const { return m00_; }
    Int m01() const { return m01_; }
    Int m10() const { return m10_; }
    Int m11() const { return m11_; }
    Int t0() const { return t0_; }
    Int t1() const { return t1_; }

private:
    Int m00_, m01_, m10_, m11_, t0_, t1_;
};

// Closed simple polygon with exact vertices, stored counterclockwise.
// Construction normalizes orientation and checks the cheap invariants
// (>= 3 vertices, consecutive vertices distinct, one field context,
// nonzero signed area); full self-intersection scanning is validate_simple's
// job. Collinear vertices are retained: a degenerate quadrilateral keeps its
// vertex on the hypotenuse and canonical_edges() reports the merged edges.
class Polygon {
public:
    explicit Polygon(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return verts_; }
    size_t size() const { return verts_.size(); }
    const Point& operator[](size_t i) const { return verts_[i]; }
    const FieldContext& context() const { return verts_.front().context(); }

private:
    std::vector<Point> verts_;
};

QuadraticNumber cross(const QuadraticNumber& ax, const QuadraticNumber& ay,
                      const QuadraticNumber& bx, const QuadraticNumber& by);

// Exact shoelace area; positive because polygons are CCW.
QuadraticNumber area(const Polygon& p);

Polygon dilate(const Polygon& p, const Int& t);
Point dilate(const Point& p, const Int& t);

Polygon apply_map(const IntegralAffineMap& m, const Polygon& p);
Segment apply_map(const IntegralAffineMap& m, const Segment& s);
Point apply_map(const IntegralAffineMap& m, const Point& p);

enum class SlopeClass { Rational, Irrational, Vertical };

struct CanonicalEdge {
    Segment segment;
    SlopeClass slope;
};

// Merges consecutive collinear edges; the result has one edge per true
// corner and vertex count equals edge count.
std::vector<CanonicalEdge> canonical_edges(const Polygon& p);

struct Defect {
    enum class Kind { TooFewVertices, RepeatedVertex, Crossing, ZeroArea, WrongOrientation };
    Kind kind;
    size_t i = 0;
    size_t j = 0;
    std::string message;
};

struct ValidationReport {
    std::vector<Defect> defects;
    bool ok() const { return defects.empty(); }
    std::string summary() const;
};

// Pairwise exact edge-intersection scan over a raw vertex list (O(n^2),
// fine at desk scale). Runs on raw input so it can report the defects a
// normalizing Polygon constructor would reject or silently fix.
ValidationReport validate_simple(const std::vector<Point>& vertices);
ValidationReport validate_simple(const Polygon& p);

bool is_convex(const Polygon& p);

// True iff the origin belongs to the kernel: it is on the inner closed side
// of every edge.
bool star_shaped_about_origin(const Polygon& p);

// Equality of vertex cycles up to rotation (not reflection).
bool same_cycle(const Polygon& a, const Polygon& b);

// Union of two CCW polygons that share exactly one edge, traversed in
// opposite directions. Shared-edge endpoints stay in the vertex list even
// when collinear with their neighbors.
Polygon glue_two(const Polygon& p1, const Polygon& p2);

// Exact point-in-closed-polygon test for lattice points, precomputed per
// polygon: all per-edge data is reduced to integers over a common positive
// denominator so the per-point work is a handful of big-int multiplies.
// Boundary membership is tested first; interior uses the crossing rule with
// half-open edges (one endpoint at-or-below the ray, the other strictly
// above), which needs no perturbation constants.
class PreparedPolygon {
public:
    explicit PreparedPolygon(const Polygon& p);

    bool contains(const Int& qx, const Int& qy) const;

    // Integer scan box: ceil(min) .. floor(max) per axis.
    const Int& box_lo_x() const { return lo_x_; }
    const Int& box_hi_x() const { return hi_x_; }
    const Int& box_lo_y() const { return lo_y_; }
    const Int& box_hi_y() const { return hi_y_; }

    // Lattice points of the closed polygon inside the scan box, i.e. all of
    // them. Row-level edge classification is hoisted out of the inner loop.
    Int count_lattice_points() const;

private:
    struct Edge {
        // S(q) = cross(v2 - v1, q - v1) has the sign of P + Q*sqrt(d) with
        // P = pqx*qx + pqy*qy + pc and Q likewise (common denominator > 0).
        Int pqx, pqy, pc;
        Int qqx, qqy, qc;
        // sign(qy - y_k) = sign_pair(qy*c - ay_k, nby_k) per endpoint.
        Int ay1, nby1, ay2, nby2, c;
        // Integer bounding box of the edge.
        Int xlo, xhi, ylo, yhi;
    };

    struct RowEntry {
        const Edge* edge;
        int dir;                // +1 upward straddle, -1 downward, 0 none
        bool on_boundary_band;  // qy within the edge's y box
        Int p_row, q_row;       // row-constant parts of P and Q
    };

    std::vector<RowEntry> classify_row(const Int& qy) const;
    static bool row_test(const std::vector<RowEntry>& row, const Int& qx, const Int& d);

    std::vector<Edge> edges_;
    Int d_;
    Int lo_x_, hi_x_, lo_y_, hi_y_;
};

// Convenience wrapper over PreparedPolygon for one-off queries.
bool contains(const Polygon& p, const Int& qx, const Int& qy);

}  // namespace irrlat
