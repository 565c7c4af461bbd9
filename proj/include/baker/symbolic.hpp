#pragma once

#include <string>
#include <vector>

#include "baker/geometry.hpp"
#include "baker/words.hpp"

namespace baker {

// Eventually periodic bi-infinite binary sequence ...x_{-1} x_0 . x_1 x_2...
// The left side x_0 x_{-1} x_{-2}... is left_transient then left_period^inf,
// read outward from the origin; the right side x_1 x_2... likewise.
// Canonical form: primitive periods, transients carry no trailing copy of
// the (rotated) period, so equality of values is string equality.
struct BiSeq {
    Word left_period;
    Word left_transient;
    Word right_transient;
    Word right_period;

    bool operator==(const BiSeq& o) const = default;
};

BiSeq make_biseq(Word left_period, Word left_transient, Word right_transient, Word right_period);

// digit x_i; i >= 1 on the right of the dot, i <= 0 on the left
char biseq_digit(const BiSeq& s, long i);

Point pi_point(const BiSeq& s);

BiSeq shift(const BiSeq& s, long n);

// time reversal r_i = x_{1-i}; swaps the two coordinates under pi
BiSeq reflect(const BiSeq& s);

// Central window [u_{-k}...u_0 . u_1...u_m]. left holds u_{-k}...u_0 as
// displayed (last character sits at the origin); either side may be empty.
struct Window {
    Word left;
    Word right;

    static Window parse(const std::string& text);  // "u·v" or "u.v"
    std::string str() const;
    bool operator==(const Window& o) const = default;
};

Box cylinder_box(const Window& w);

// Primitive periodic orbit, named by its lexicographically least rotation.
struct Cycle {
    Word word;
};

std::vector<Point> cycle_orbit(const Cycle& c);

std::vector<Cycle> lyndon_words(int max_p);

Point baker_step(const Point& p, bool forward);

}  // namespace baker
