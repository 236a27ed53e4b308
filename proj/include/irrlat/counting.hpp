#pragma once

#include "irrlat/constructions.hpp"
#include "irrlat/geometry.hpp"

#include <string>
#include <vector>

namespace irrlat {

enum class CountMethod { BruteForce, Scanline, Assembled };

std::string to_string(CountMethod m);

struct CountResult {
    Int t;
    Int count;
    CountMethod method;
};

// Closed 1-d count: #([t*a, t*b] cap Z) = floor(t*b) - ceil(t*a) + 1, which
// reduces to floor(t*b) - floor(t*a) for irrational t*a.
Int count_segment(const QuadraticNumber& a, const QuadraticNumber& b, const Int& t);

// The trusted oracle: dilate, scan the integer bounding box, test every
// point against the closed polygon. Everything else must match this.
CountResult count_bruteforce(const Polygon& p, const Int& t);

// Fast path for convex polygons: exact per-row x-interval cut by the
// boundary. Rejects nonconvex input.
CountResult count_scanline(const Polygon& p, const Int& t);

// Inclusion-exclusion over the pieces: sum of piece counts minus the shared
// edges on the rays, plus one origin term when all pieces of a fan meet
// there. Two-piece gluings have no origin term.
CountResult count_assembled(const AssembledPolygon& a, const Int& t);

}  // namespace irrlat
