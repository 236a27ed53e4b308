#include "irrlat/numeric.hpp"

#include "irrlat/errors.hpp"

namespace irrlat {

Int floor_div(const Int& num, const Int& den) {
    if (den <= 0) throw DomainError("floor_div: denominator must be positive");
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

Int rational_floor(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

Int rational_ceil(const Rational& q) {
    return -floor_div(-numerator(q), denominator(q));
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int isqrt_floor(const Int& n) {
    if (n < 0) throw DomainError("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

std::pair<Int, Int> split_square(const Int& n) {
    if (n <= 0) throw DomainError("split_square: argument must be positive");
    Int square_part = 1;
    Int free_part = 1;
    Int rest = n;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int exp = 0;
        while (rest % p == 0) {
            rest /= p;
            ++exp;
        }
        for (int i = 0; i < exp / 2; ++i) square_part *= p;
        if (exp % 2 != 0) free_part *= p;
    }
    free_part *= rest;
    return {square_part, free_part};
}

bool is_squarefree(const Int& n) {
    if (n <= 0) return false;
    return split_square(n).first == 1;
}

std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/";
        s += denominator(q).str();
    }
    return s;
}

}  // namespace irrlat
