#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace baker {

// Exact rational scalar. All geometry in this project is exact; there are
// no floating-point comparisons anywhere on a certified path.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "n", "n/d", a plain decimal like "0.13", or e-notation like "1e-10".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat r(s);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        r.canonicalize();
        return r;
    }
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
        Rat mant = parse_rat(s.substr(0, e));
        long exp = std::stol(s.substr(e + 1));
        Int ten = 1;
        for (long i = 0; i < (exp < 0 ? -exp : exp); ++i) ten *= 10;
        return exp < 0 ? Rat(mant / Rat(ten)) : Rat(mant * Rat(ten));
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rat r(s);
        r.canonicalize();
        return r;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    Int num(digits.empty() ? "0" : digits, 10);  // base forced: "012" is not octal here
    Int den = 1;
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return rat(num, den);
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double rat_double(const Rat& r) { return r.get_d(); }

// 2^e as an exact rational, e may be negative.
inline Rat pow2(long e) {
    Int p = 1;
    p <<= (e < 0 ? -e : e);
    return e < 0 ? rat(Int(1), p) : Rat(p);
}

struct Point {
    Rat x;
    Rat y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

}  // namespace baker
