#pragma once

#include <string>
#include <utility>
#include <vector>

#include "baker/geometry.hpp"

namespace baker {

// A hole: finite union of convex polygon parts. The open hole is the union
// of the open parts, its closure the union of the closed parts.
struct Hole {
    std::vector<ConvexPoly> parts;
    std::string name;
    bool convex = true;

    bool contains(const Point& p, bool open_mode) const;
};

// spec strings: "delta", "delta1", "delta2", "hull-dd", "p:<p>/<q>",
// "pk:<k>", "h-script", "empty", "poly:<json>"
Hole named_hole(const std::string& spec);

// hexagon 2x-1 <= y <= 2x, 2-4x <= y <= 3-4x, tau <= x <= 1-tau
ConvexPoly tm_hexagon(const Rat& tau);

// rational sandwich around the Thue-Morse-limit hexagon: inner uses the
// upper bound on the Thue-Morse constant, outer the lower bound
std::pair<Hole, Hole> p_infty_bounds(int k);

struct TrapBoxes {
    std::vector<Box> boxes;
    int level = 1;
};

TrapBoxes complete_trap(int k);

}  // namespace baker
