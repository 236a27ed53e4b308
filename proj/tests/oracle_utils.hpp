#pragma once

// Test-only helpers: an independent high-precision interval oracle for
// sign/floor checks, and deterministic random generators for property
// tests. Nothing here is visible to the library.

#include "irrlat/constructions.hpp"
#include "irrlat/counting.hpp"
#include "irrlat/geometry.hpp"
#include "irrlat/quadratic.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace testutil {

using irrlat::FieldContext;
using irrlat::Int;
using irrlat::IntegralAffineMap;
using irrlat::LatticeVector;
using irrlat::Point;
using irrlat::Polygon;
using irrlat::QuadraticNumber;
using irrlat::Rational;

using BigFloat = boost::multiprecision::cpp_bin_float_100;

// Value of a + b*sqrt(d) at ~100 decimal digits. The guard band below is
// astronomically wider than the worst-case rounding error for the operand
// sizes used in tests.
inline BigFloat approx(const QuadraticNumber& x) {
    BigFloat a = BigFloat(numerator(x.a())) / BigFloat(denominator(x.a()));
    BigFloat b = BigFloat(numerator(x.b())) / BigFloat(denominator(x.b()));
    return a + b * sqrt(BigFloat(x.d()));
}

inline const BigFloat& oracle_guard() {
    static const BigFloat g("1e-40");
    return g;
}

// Sign by interval arithmetic; refuses to answer when the value is inside
// the guard band (nonzero test inputs never are).
inline int oracle_sign(const QuadraticNumber& x) {
    if (x.a() == 0 && x.b() == 0) return 0;
    BigFloat v = approx(x);
    if (abs(v) <= oracle_guard())
        throw std::runtime_error("oracle_sign: value too close to zero to certify");
    return v > 0 ? 1 : -1;
}

inline Int oracle_floor(const QuadraticNumber& x) {
    BigFloat v = approx(x);
    BigFloat fl = floor(v);
    if (v - fl <= oracle_guard() && !(x.b() == 0 && denominator(x.a()) == 1))
        throw std::runtime_error("oracle_floor: too close to an integer to certify");
    Int n;
    // cpp_bin_float -> cpp_int conversion truncates toward zero; fl is exact.
    n = fl.convert_to<Int>();
    return n;
}

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(uint64_t seed) : engine(seed) {}

    long long uniform(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(engine);
    }

    Rational rational(long long max_num, long long max_den) {
        return Rational(Int(uniform(-max_num, max_num)), Int(uniform(1, max_den)));
    }

    QuadraticNumber qnum(const FieldContext& ctx, long long max_num = 1000,
                         long long max_den = 60) {
        return {rational(max_num, max_den), rational(max_num, max_den), ctx};
    }

    QuadraticNumber nonzero_qnum(const FieldContext& ctx, long long max_num = 1000,
                                 long long max_den = 60) {
        for (;;) {
            QuadraticNumber x = qnum(ctx, max_num, max_den);
            if (!x.is_zero()) return x;
        }
    }

    // Product of a few elementary shears and quarter turns plus a small
    // translation; entries stay desk scale so sheared boxes stay small.
    IntegralAffineMap unimodular_map() {
        IntegralAffineMap m = IntegralAffineMap::identity();
        int steps = static_cast<int>(uniform(1, 4));
        for (int i = 0; i < steps; ++i) {
            long long n = uniform(-2, 2);
            switch (uniform(0, 2)) {
                case 0: m = m * IntegralAffineMap::linear(1, Int(n), 0, 1); break;
                case 1: m = m * IntegralAffineMap::linear(1, 0, Int(n), 1); break;
                default: m = m * IntegralAffineMap::linear(0, -1, 1, 0); break;
            }
        }
        return IntegralAffineMap(m.m00(), m.m01(), m.m10(), m.m11(), Int(uniform(-3, 3)),
                                 Int(uniform(-3, 3)));
    }

    // Convex hull of a handful of random exact points; retries until the
    // hull is a real polygon.
    Polygon convex_polygon(const FieldContext& ctx) {
        for (;;) {
            size_t n = static_cast<size_t>(uniform(4, 8));
            std::vector<Point> pts;
            for (size_t i = 0; i < n; ++i) {
                QuadraticNumber x(rational(4, 3), rational(2, 3), ctx);
                QuadraticNumber y(rational(4, 3), rational(2, 3), ctx);
                pts.emplace_back(std::move(x), std::move(y));
            }
            std::vector<Point> hull = convex_hull(pts);
            if (hull.size() >= 3) return Polygon(std::move(hull));
        }
    }

    static std::vector<Point> convex_hull(std::vector<Point> pts) {
        auto less = [](const Point& p, const Point& q) {
            int sx = irrlat::sign(p.x - q.x);
            if (sx != 0) return sx < 0;
            return irrlat::sign(p.y - q.y) < 0;
        };
        std::sort(pts.begin(), pts.end(), less);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 3) return {};
        auto turn = [](const Point& a, const Point& b, const Point& c) {
            return irrlat::sign(
                irrlat::cross(b.x - a.x, b.y - a.y, c.x - a.x, c.y - a.y));
        };
        std::vector<Point> hull;
        for (const Point& p : pts) {  // lower chain
            while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        size_t lower = hull.size() + 1;
        for (size_t i = pts.size() - 1; i-- > 0;) {  // upper chain
            while (hull.size() >= lower && turn(hull[hull.size() - 2], hull.back(), pts[i]) <= 0)
                hull.pop_back();
            hull.push_back(pts[i]);
        }
        hull.pop_back();
        return hull;
    }
};

// Strictly inside a convex CCW polygon: strictly left of every edge.
inline bool strictly_inside_convex(const Polygon& poly, const Point& q) {
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        if (irrlat::sign(irrlat::cross(b.x - a.x, b.y - a.y, q.x - a.x, q.y - a.y)) <= 0)
            return false;
    }
    return true;
}

}  // namespace testutil
