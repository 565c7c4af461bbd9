#pragma once

#include <string>
#include <vector>

#include "baker/rat.hpp"

namespace baker {

// Classification of a closed axis box against a convex polygon and its closure.
enum class BoxClass {
    InsideOpen,          // box subset of the open polygon
    InsideClosed,        // box subset of the closed polygon
    DisjointFromOpen,    // box does not meet the open polygon
    DisjointFromClosed,  // box does not meet the closed polygon
    Straddles,
};

const char* to_string(BoxClass c);

struct Box {
    Rat x_lo, x_hi, y_lo, y_hi;

    std::vector<Point> corners() const;
    Rat width() const { return x_hi - x_lo; }
    Rat height() const { return y_hi - y_lo; }
    bool operator==(const Box& o) const = default;
};

// Half-plane a*x + b*y >= c with integer coefficients (inside of one edge).
struct Edge {
    Int a, b;
    Rat c;  // kept rational; integer after scaling by the vertex denominators
};

// Convex polygon, vertices counter-clockwise, starting at the
// lexicographically least vertex. Segments and single points are permitted
// as degenerate values (flagged); they only arise as search intermediates.
struct ConvexPoly {
    std::vector<Point> vertices;
    bool degenerate = false;

    static ConvexPoly hull(std::vector<Point> pts);

    Rat area() const;
    bool contains(const Point& p, bool open_mode) const;
    // closed containment of every vertex of q (used for dominance pruning)
    bool contains_poly(const ConvexPoly& q) const;
    std::vector<Edge> edges() const;  // empty for degenerate polygons

    bool operator==(const ConvexPoly& o) const { return vertices == o.vertices; }
    bool operator<(const ConvexPoly& o) const { return vertices < o.vertices; }
};

enum class Sym { identity, mirror, rotation, diagonal };

Point apply_sym(const Point& p, Sym s);
ConvexPoly transform(const ConvexPoly& poly, Sym s);

BoxClass classify_box(const Box& box, const ConvexPoly& poly);

// Keep the part of poly with a*x + b*y >= c.
ConvexPoly clip_halfplane(const ConvexPoly& poly, const Rat& a, const Rat& b, const Rat& c);

Rat union_area_boxes(const std::vector<Box>& boxes);

}  // namespace baker
