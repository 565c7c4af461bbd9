#include "baker/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace baker {

const char* to_string(BoxClass c) {
    switch (c) {
        case BoxClass::InsideOpen: return "InsideOpen";
        case BoxClass::InsideClosed: return "InsideClosed";
        case BoxClass::DisjointFromOpen: return "DisjointFromOpen";
        case BoxClass::DisjointFromClosed: return "DisjointFromClosed";
        case BoxClass::Straddles: return "Straddles";
    }
    return "?";
}

std::vector<Point> Box::corners() const {
    return {{x_lo, y_lo}, {x_hi, y_lo}, {x_hi, y_hi}, {x_lo, y_hi}};
}

namespace {

Rat cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

ConvexPoly ConvexPoly::hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    ConvexPoly out;
    if (pts.empty()) throw std::invalid_argument("hull of empty point set");
    if (pts.size() == 1) {
        out.vertices = pts;
        out.degenerate = true;
        return out;
    }
    // Andrew monotone chain; strict turns only, so collinear points collapse.
    std::vector<Point> h;
    auto build = [&h](const Point& p) {
        while (h.size() >= 2 && cross(h[h.size() - 2], h[h.size() - 1], p) <= 0) h.pop_back();
        h.push_back(p);
    };
    for (const auto& p : pts) build(p);
    std::size_t lower = h.size();
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        const Point& p = *it;
        while (h.size() > lower && cross(h[h.size() - 2], h[h.size() - 1], p) <= 0) h.pop_back();
        h.push_back(p);
    }
    h.pop_back();  // last point repeats the first
    out.vertices = std::move(h);
    out.degenerate = out.vertices.size() < 3;
    // Starts at the lexicographically least point already (sort order), which
    // is the canonical form.
    return out;
}

Rat ConvexPoly::area() const {
    if (degenerate) return 0;
    Rat s = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % vertices.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return s / 2;
}

bool ConvexPoly::contains(const Point& p, bool open_mode) const {
    if (degenerate) {
        if (open_mode) return false;
        if (vertices.size() == 1) return p == vertices[0];
        const Point& a = vertices[0];
        const Point& b = vertices[1];
        if (cross(a, b, p) != 0) return false;
        Rat lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
        Rat lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
        return lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y;
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Rat c = cross(vertices[i], vertices[(i + 1) % vertices.size()], p);
        if (open_mode ? c <= 0 : c < 0) return false;
    }
    return true;
}

bool ConvexPoly::contains_poly(const ConvexPoly& q) const {
    for (const auto& v : q.vertices)
        if (!contains(v, false)) return false;
    return true;
}

std::vector<Edge> ConvexPoly::edges() const {
    std::vector<Edge> out;
    if (degenerate) return out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& u = vertices[i];
        const Point& v = vertices[(i + 1) % vertices.size()];
        Rat ar = u.y - v.y;  // inside: ar*x + br*y >= cr
        Rat br = v.x - u.x;
        Int scale;
        mpz_lcm(scale.get_mpz_t(), ar.get_den().get_mpz_t(), br.get_den().get_mpz_t());
        Edge e;
        Rat sa = ar * Rat(scale);
        Rat sb = br * Rat(scale);
        e.a = sa.get_num();
        e.b = sb.get_num();
        e.c = sa * u.x + sb * u.y;
        out.push_back(e);
    }
    return out;
}

Point apply_sym(const Point& p, Sym s) {
    switch (s) {
        case Sym::identity: return p;
        case Sym::mirror: return {1 - p.y, 1 - p.x};
        case Sym::rotation: return {1 - p.x, 1 - p.y};
        case Sym::diagonal: return {p.y, p.x};
    }
    return p;
}

ConvexPoly transform(const ConvexPoly& poly, Sym s) {
    std::vector<Point> pts;
    pts.reserve(poly.vertices.size());
    for (const auto& v : poly.vertices) pts.push_back(apply_sym(v, s));
    return ConvexPoly::hull(std::move(pts));
}

ConvexPoly clip_halfplane(const ConvexPoly& poly, const Rat& a, const Rat& b, const Rat& c) {
    std::vector<Point> out;
    const auto& vs = poly.vertices;
    std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& u = vs[i];
        const Point& v = vs[(i + 1) % n];
        Rat fu = a * u.x + b * u.y - c;
        Rat fv = a * v.x + b * v.y - c;
        if (fu >= 0) out.push_back(u);
        if ((fu > 0 && fv < 0) || (fu < 0 && fv > 0)) {
            Rat t = fu / (fu - fv);
            out.push_back({u.x + t * (v.x - u.x), u.y + t * (v.y - u.y)});
        }
    }
    if (out.empty()) {
        ConvexPoly empty;
        return empty;  // no vertices: empty intersection
    }
    return ConvexPoly::hull(std::move(out));
}

namespace {

// box ∩ closed poly as a (possibly degenerate or empty) polygon
ConvexPoly clip_to_box(const ConvexPoly& poly, const Box& box) {
    ConvexPoly k = clip_halfplane(poly, 1, 0, box.x_lo);
    if (k.vertices.empty()) return k;
    k = clip_halfplane(k, -1, 0, -box.x_hi);
    if (k.vertices.empty()) return k;
    k = clip_halfplane(k, 0, 1, box.y_lo);
    if (k.vertices.empty()) return k;
    return clip_halfplane(k, 0, -1, -box.y_hi);
}

}  // namespace

BoxClass classify_box(const Box& box, const ConvexPoly& poly) {
    if (poly.degenerate) throw std::invalid_argument("classify_box: degenerate polygon");
    auto cs = box.corners();
    bool all_open = true, all_closed = true;
    for (const auto& p : cs) {
        if (!poly.contains(p, true)) all_open = false;
        if (!poly.contains(p, false)) all_closed = false;
    }
    if (all_open) return BoxClass::InsideOpen;
    if (all_closed) return BoxClass::InsideClosed;
    ConvexPoly k = clip_to_box(poly, box);
    if (k.vertices.empty()) return BoxClass::DisjointFromClosed;
    bool meets_open;
    if (!k.degenerate) {
        meets_open = true;  // positive-area overlap must contain interior points
    } else {
        // overlap is a point or segment; its relative midpoint decides
        Point c{0, 0};
        for (const auto& v : k.vertices) {
            c.x += v.x;
            c.y += v.y;
        }
        c.x /= (long)k.vertices.size();
        c.y /= (long)k.vertices.size();
        meets_open = poly.contains(c, true);
    }
    return meets_open ? BoxClass::Straddles : BoxClass::DisjointFromOpen;
}

Rat union_area_boxes(const std::vector<Box>& boxes) {
    std::vector<Rat> xs;
    for (const auto& b : boxes) {
        xs.push_back(b.x_lo);
        xs.push_back(b.x_hi);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Rat total = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        Rat w = xs[i + 1] - xs[i];
        if (w == 0) continue;
        std::vector<std::pair<Rat, Rat>> ys;
        for (const auto& b : boxes)
            if (b.x_lo <= xs[i] && xs[i + 1] <= b.x_hi && b.y_lo < b.y_hi)
                ys.emplace_back(b.y_lo, b.y_hi);
        std::sort(ys.begin(), ys.end());
        Rat len = 0;
        std::size_t j = 0;
        while (j < ys.size()) {
            Rat lo = ys[j].first, hi = ys[j].second;
            while (++j < ys.size() && ys[j].first <= hi) hi = std::max(hi, ys[j].second);
            len += hi - lo;
        }
        total += w * len;
    }
    return total;
}

}  // namespace baker
