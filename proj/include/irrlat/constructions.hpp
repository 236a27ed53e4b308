#pragma once

#include "irrlat/geometry.hpp"

#include <optional>
#include <vector>

namespace irrlat {

// Parameters of the triangle family T_{alpha,beta}: legs h, k > 0 with
// 1/h + 1/k = alpha and h + k = beta, h/k irrational.
struct CGLSParams {
    Int alpha;
    Int beta;
};

struct CGLSLegs {
    QuadraticNumber h;  // larger root
    QuadraticNumber k;  // conjugate, smaller root
};

// Roots of x^2 - beta*x + beta/alpha in the appropriate Q(sqrt(d)).
// Rejects perfect-square discriminants (rational slope) and nonpositive
// roots.
CGLSLegs cgls_legs(const CGLSParams& params);

// conv{(0,0), (h,0), (0,k)}.
Polygon cgls_triangle(const CGLSParams& params);

// The irrational legs h0 > k0 with 1/h0 + 1/k0 = 1 and h0 + k0 = beta,
// i.e. the legs of T_{1,beta}.
CGLSLegs unit_alpha_legs(const Int& beta);

// The quadrilateral with vertex cycle (0,0), (h,0), (1,1), (0,k) for
// irrational h, k > 0 with h + k an integer and 1/h + 1/k <= 1. Strict
// inequality makes (1,1) a reflex vertex (the union of the two glued
// triangles is nonconvex); equality puts it on the hypotenuse, where the
// quadrilateral degenerates to a triangle and the collinear vertex is
// retained.
Polygon quad_qhk(const QuadraticNumber& h, const QuadraticNumber& k);

// Validated integer h + k of a Q_{h,k} pair.
Int quad_leg_sum(const QuadraticNumber& h, const QuadraticNumber& k);

// conv{(0,0), (a,1), (b,1)} for irrational a < b with b - a a positive
// integer.
Polygon pyramid_over(const QuadraticNumber& a, const QuadraticNumber& b);

struct CutPasteResult {
    Polygon pyramid;      // conv{(0,0), (-h,1), (k,1)}
    Polygon half_left;    // H1, the piece left of the cut
    Polygon half_right;   // H2
    Polygon image_left;   // phi1(H1)
    Polygon image_right;  // phi2(H2)
    Segment cut_edge;     // E = conv{(0,0),(0,1)}
    Segment glued_edge;   // phi1(E) = phi2(E) = conv{(0,0),(1,1)}
    Polygon glued;        // union of the images
    IntegralAffineMap phi1;
    IntegralAffineMap phi2;
};

// Cuts the pyramid over [-h, k] along the vertical lattice edge and
// reassembles the halves into Q_{h,k} with two unimodular maps.
CutPasteResult cut_and_paste(const QuadraticNumber& h, const QuadraticNumber& k);

enum class LabelBase { H, K };

// One ray of the fan data: primitive direction plus its assigned value
// c = h0 + offset or k0 + offset.
struct SectorDatum {
    LatticeVector ray;
    LabelBase base;
    Int offset;
};

// Cyclic fan data: an even number 2k >= 4 of rays in CCW order with
// det(V_i, V_{i+1}) = +1, H/K labels alternating, and every adjacent value
// pair satisfying 1/c_i + 1/c_{i+1} <= 1 with equality only at zero
// offsets. Construction validates everything and reports the failing pair.
class SectorData {
public:
    SectorData(Int beta, std::vector<SectorDatum> entries);

    const Int& beta() const { return beta_; }
    const QuadraticNumber& h0() const { return h0_; }
    const QuadraticNumber& k0() const { return k0_; }
    const FieldContext& context() const { return h0_.context(); }
    const std::vector<SectorDatum>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }

    QuadraticNumber value(size_t i) const;  // c_i
    Int n_total() const;

private:
    Int beta_;
    QuadraticNumber h0_;
    QuadraticNumber k0_;
    std::vector<SectorDatum> entries_;
};

// An edge of the assembly lying on a ray: conv{O, length * ray}.
struct SharedEdge {
    LatticeVector ray;
    QuadraticNumber length;
    Segment segment;
};

enum class AssemblyKind { Fan, Gluing };

// A polygon kept together with the pieces it was assembled from, so the
// inclusion-exclusion count can subtract the shared edges exactly.
struct AssembledPolygon {
    AssemblyKind kind;
    std::vector<Polygon> pieces;
    std::vector<SharedEdge> shared_edges;
    Polygon outer;
    Int n_total;                      // sum of ray offsets (fans)
    Int half_sectors;                 // k where the fan has 2k rays; 0 for gluings
    Int beta;                         // h0 + k0
    std::vector<Int> piece_leg_sums;  // integer h + k per piece
    std::optional<QuadraticNumber> gluing_h;  // x-axis leg of a two-piece union
};

// Fills each sector (V_i, V_{i+1}) with M(V_i,V_{i+1}) * Q_{c_i,c_{i+1}};
// the value c_i sits on ray r_i in both sectors flanking it, so the piece
// edges on the rays match.
AssembledPolygon assemble(const SectorData& data);

// T_{1,beta} glued with its reflection across the x-axis along the shared
// irrational-length edge. Its count is not even a quasi-polynomial.
AssembledPolygon counterexample_union(const Int& beta);

// Mediant subdivision: inserts V_i + V_{i+1} (always primitive, both new
// determinants +1) until the ray count reaches `target`.
std::vector<LatticeVector> fan_subdivide(std::vector<LatticeVector> rays, size_t target);

// Replaces entry i by (V_{i-1}+V_i, c_i), (V_i, c'_i), (V_i+V_{i+1}, c_i)
// where c'_i takes the opposite label base with offset new_offset >= 1.
// Adds two sectors and exactly 4 outer edges.
SectorData refine_step0(const SectorData& data, size_t index, const Int& new_offset);

// Fan data whose assembly has exactly n_edges outer edges, all with
// irrational slopes. Supported for n >= 4, n != 5.
SectorData seed_data(size_t n_edges, const Int& beta = 5);

// Fan of n rays, all offsets zero: the assembly is a union of n triangles
// with exactly n vertices, each having an irrational coordinate. n even.
SectorData seed_vertex_data(size_t n_vertices, const Int& beta = 5);

}  // namespace irrlat
