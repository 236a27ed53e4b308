#include "irrlat/quadratic.hpp"

#include "irrlat/errors.hpp"

#include <cctype>
#include <cmath>

namespace irrlat {

FieldContext::FieldContext(Int d) : d_(std::move(d)) {
    if (d_ < 2) throw ValidationError("field radicand must be >= 2, got " + d_.str());
    if (!is_squarefree(d_))
        throw ValidationError("field radicand must be squarefree, got " + d_.str());
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, FieldContext ctx)
    : a_(std::move(a)), b_(std::move(b)), ctx_(std::move(ctx)) {}

QuadraticNumber QuadraticNumber::from_rational(Rational a, const FieldContext& ctx) {
    return {std::move(a), Rational(0), ctx};
}

QuadraticNumber QuadraticNumber::from_int(const Int& n, const FieldContext& ctx) {
    return {Rational(n), Rational(0), ctx};
}

QuadraticNumber QuadraticNumber::sqrt_d(const FieldContext& ctx) {
    return {Rational(0), Rational(1), ctx};
}

QuadraticNumber QuadraticNumber::operator-() const { return {-a_, -b_, ctx_}; }

QuadraticNumber QuadraticNumber::conjugate() const { return {a_, -b_, ctx_}; }

QuadraticNumber QuadraticNumber::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(sqrt(d))");
    // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2*d). The norm vanishes
    // only at zero: a^2 = b^2*d with b != 0 would make sqrt(d) rational.
    Rational norm = a_ * a_ - b_ * b_ * Rational(ctx_.d());
    if (norm == 0) throw InternalError("zero norm for nonzero quadratic number");
    return {a_ / norm, -b_ / norm, ctx_};
}

bool QuadraticNumber::operator==(const QuadraticNumber& o) const {
    return ctx_ == o.ctx_ && a_ == o.a_ && b_ == o.b_;
}

void require_same_context(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.context() != y.context())
        throw ValidationError("context mismatch: sqrt(" + x.d().str() + ") vs sqrt(" +
                              y.d().str() + ")");
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    require_same_context(x, y);
    return {x.a() + y.a(), x.b() + y.b(), x.context()};
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    require_same_context(x, y);
    return {x.a() - y.a(), x.b() - y.b(), x.context()};
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    require_same_context(x, y);
    Rational d(x.d());
    return {x.a() * y.a() + x.b() * y.b() * d, x.a() * y.b() + x.b() * y.a(), x.context()};
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x * y.inverse();
}

QuadraticNumber operator+(const QuadraticNumber& x, const Rational& r) {
    return {x.a() + r, x.b(), x.context()};
}
QuadraticNumber operator-(const QuadraticNumber& x, const Rational& r) {
    return {x.a() - r, x.b(), x.context()};
}
QuadraticNumber operator*(const QuadraticNumber& x, const Rational& r) {
    return {x.a() * r, x.b() * r, x.context()};
}
QuadraticNumber operator*(const Rational& r, const QuadraticNumber& x) { return x * r; }
QuadraticNumber operator+(const Rational& r, const QuadraticNumber& x) { return x + r; }
QuadraticNumber operator-(const Rational& r, const QuadraticNumber& x) {
    return {r - x.a(), -x.b(), x.context()};
}

int sign_pair(const Int& p, const Int& q, const Int& d) {
    int sp = p.sign();
    int sq = q.sign();
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    Int lhs = p * p;
    Int rhs = q * q * d;
    if (lhs > rhs) return sp;
    if (lhs < rhs) return sq;
    return 0;  // unreachable for squarefree d >= 2
}

int sign(const QuadraticNumber& x) {
    int sa = sign_of(x.a());
    int sb = sign_of(x.b());
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational lhs = x.a() * x.a();
    Rational rhs = x.b() * x.b() * Rational(x.d());
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;  // unreachable for squarefree d >= 2
}

Int floor_int(const QuadraticNumber& x) {
    if (x.is_rational()) return rational_floor(x.a());
    // Common-denominator form x = (A + B*sqrt(d)) / C with C > 0.
    const Int qa = denominator(x.a());
    const Int qb = denominator(x.b());
    const Int c = qa * qb;
    const Int big_a = numerator(x.a()) * qb;
    const Int big_b = numerator(x.b()) * qa;
    // T <= B*sqrt(d) < T + 1; strict on the left for B < 0 because B*sqrt(d)
    // is irrational here.
    Int t = isqrt_floor(big_b * big_b * x.d());
    if (big_b < 0) t = -t - 1;
    Int n = floor_div(big_a + t, c);
    const QuadraticNumber one = QuadraticNumber::from_int(1, x.context());
    QuadraticNumber rest = x - Rational(n);
    if (sign(rest - one) >= 0) {
        ++n;
        rest = rest - Rational(1);
    }
    // Certification: n <= x < n + 1 via two exact sign() evaluations.
    if (sign(rest) < 0 || sign(rest - one) >= 0)
        throw InternalError("floor bracketing failed for " + to_literal(x));
    return n;
}

Int ceil_int(const QuadraticNumber& x) { return -floor_int(-x); }

bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return sign(x - y) < 0; }
bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y) { return sign(x - y) <= 0; }
bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return sign(x - y) > 0; }
bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y) { return sign(x - y) >= 0; }

std::string to_literal(const QuadraticNumber& x) {
    if (x.is_rational()) return format_rational(x.a());
    std::string s = format_rational(x.a());
    s += sign_of(x.b()) < 0 ? '-' : '+';
    s += format_rational(abs(x.b()));
    s += "*s";
    s += x.d().str();
    return s;
}

namespace {

struct LiteralCursor {
    std::string_view text;
    size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("bad coordinate literal '" + std::string(text) + "' at column " +
                         std::to_string(pos + 1) + ": " + what);
    }

    Int parse_uint() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a digit");
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        return Int(std::string(text.substr(start, pos - start)));
    }

    Rational parse_rat(bool allow_sign) {
        bool negative = false;
        if (allow_sign && !done() && peek() == '-') {
            negative = true;
            ++pos;
        }
        Int num = parse_uint();
        Int den = 1;
        if (!done() && peek() == '/') {
            ++pos;
            den = parse_uint();
            if (den == 0) fail("zero denominator");
        }
        if (negative) num = -num;
        return Rational(num, den);
    }
};

}  // namespace

std::optional<Int> literal_radicand(std::string_view text) {
    size_t p = text.find("*s");
    if (p == std::string_view::npos) return std::nullopt;
    LiteralCursor cur{text, p + 2};
    Int d = cur.parse_uint();
    if (!cur.done()) cur.fail("trailing characters after radicand");
    return d;
}

QuadraticNumber parse_qnum(std::string_view text, const FieldContext& ctx) {
    LiteralCursor cur{text, 0};
    Rational a = cur.parse_rat(/*allow_sign=*/true);
    if (cur.done()) return QuadraticNumber::from_rational(a, ctx);

    char op = cur.peek();
    if (op != '+' && op != '-') cur.fail("expected '+', '-' or end of literal");
    ++cur.pos;
    Rational b = cur.parse_rat(/*allow_sign=*/false);
    if (op == '-') b = -b;
    if (cur.done() || cur.peek() != '*') cur.fail("expected '*s<d>' radical suffix");
    ++cur.pos;
    if (cur.done() || cur.peek() != 's') cur.fail("expected 's' in radical suffix");
    ++cur.pos;
    Int d = cur.parse_uint();
    if (!cur.done()) cur.fail("trailing characters");
    if (d != ctx.d())
        throw ValidationError("context mismatch: literal '" + std::string(text) +
                              "' uses sqrt(" + d.str() + ") but the scene field is sqrt(" +
                              ctx.d().str() + ")");
    return {std::move(a), std::move(b), ctx};
}

double to_double(const QuadraticNumber& x) {
    return x.a().convert_to<double>() +
           x.b().convert_to<double>() * std::sqrt(x.d().convert_to<double>());
}

}  // namespace irrlat
