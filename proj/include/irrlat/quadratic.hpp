#pragma once

#include "irrlat/numeric.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace irrlat {

// The real quadratic field Q(sqrt(d)) all coordinates of a scene live in.
// One scene, one radicand; mixing radicands is rejected at operation level.
class FieldContext {
public:
    explicit FieldContext(Int d);

    const Int& d() const { return d_; }
    bool operator==(const FieldContext& o) const { return d_ == o.d_; }
    bool operator!=(const FieldContext& o) const { return d_ != o.d_; }

private:
    Int d_;
};

// Exact element a + b*sqrt(d). The (a, b) pair is a unique representation:
// two values are equal iff their components are equal, and b = 0 iff the
// value is rational.
class QuadraticNumber {
public:
    QuadraticNumber(Rational a, Rational b, FieldContext ctx);

    static QuadraticNumber from_rational(Rational a, const FieldContext& ctx);
    static QuadraticNumber from_int(const Int& n, const FieldContext& ctx);
    static QuadraticNumber sqrt_d(const FieldContext& ctx);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const FieldContext& context() const { return ctx_; }
    const Int& d() const { return ctx_.d(); }

    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && denominator(a_) == 1; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadraticNumber operator-() const;
    QuadraticNumber conjugate() const;  // a - b*sqrt(d)

    // Multiplicative inverse via the conjugate; throws DomainError on zero.
    QuadraticNumber inverse() const;

    bool operator==(const QuadraticNumber& o) const;
    bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }

private:
    Rational a_, b_;
    FieldContext ctx_;
};

void require_same_context(const QuadraticNumber& x, const QuadraticNumber& y);

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);

QuadraticNumber operator+(const QuadraticNumber& x, const Rational& r);
QuadraticNumber operator-(const QuadraticNumber& x, const Rational& r);
QuadraticNumber operator*(const QuadraticNumber& x, const Rational& r);
QuadraticNumber operator*(const Rational& r, const QuadraticNumber& x);
QuadraticNumber operator+(const Rational& r, const QuadraticNumber& x);
QuadraticNumber operator-(const Rational& r, const QuadraticNumber& x);

// Exact sign with no floating point. Opposite-sign components are resolved
// by comparing a^2 against b^2*d and attributing the result to whichever
// component dominates.
int sign(const QuadraticNumber& x);

// Exact sign of an integer pair value p + q*sqrt(d); shared with the
// counting hot path.
int sign_pair(const Int& p, const Int& q, const Int& d);

// The unique n with n <= x < n+1. Candidates come from integer-square-root
// bracketing of b^2*d scaled by denominators; the result is certified by two
// exact sign() calls.
Int floor_int(const QuadraticNumber& x);
Int ceil_int(const QuadraticNumber& x);

bool operator<(const QuadraticNumber& x, const QuadraticNumber& y);
bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y);
bool operator>(const QuadraticNumber& x, const QuadraticNumber& y);
bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y);

// Canonical coordinate literal: RAT or RAT(+|-)RAT*s<d>, e.g. "5/2+1/2*s5".
// parse_qnum(to_literal(x), x.context()) == x exactly.
std::string to_literal(const QuadraticNumber& x);

// Parses a coordinate literal. A literal without a *s<d> tail is rational
// and takes its context from `ctx`; a literal with one must agree with it.
QuadraticNumber parse_qnum(std::string_view text, const FieldContext& ctx);

// Parses just the radicand out of a literal, if present.
std::optional<Int> literal_radicand(std::string_view text);

// Display-only conversion (SVG rendering); never used in predicates.
double to_double(const QuadraticNumber& x);

}  // namespace irrlat
