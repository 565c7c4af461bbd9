#include "baker/holes.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

#include "baker/symbolic.hpp"
#include "baker/words.hpp"

namespace baker {

bool Hole::contains(const Point& p, bool open_mode) const {
    for (const auto& part : parts)
        if (part.contains(p, open_mode)) return true;
    return false;
}

namespace {

ConvexPoly poly_of(std::vector<Point> pts) { return ConvexPoly::hull(std::move(pts)); }

Hole one_part(ConvexPoly poly, std::string name) {
    Hole h;
    h.parts.push_back(std::move(poly));
    h.name = std::move(name);
    h.convex = true;
    return h;
}

ConvexPoly delta_poly() {
    return poly_of({{rat(0), rat(1, 2)}, {rat(1, 3), rat(2, 3)}, {rat(1, 2), rat(1)}, {rat(0), rat(1)}});
}

ConvexPoly delta1_poly() {
    return poly_of({{rat(0), rat(1, 2)}, {rat(5, 24), rat(2, 3)}, {rat(1, 2), rat(1)}, {rat(0), rat(1)}});
}

Hole parse_poly_spec(const std::string& body) {
    auto j = nlohmann::json::parse(body);
    std::vector<Point> pts;
    for (const auto& v : j.at("vertices")) {
        Rat x = rat(Int(v.at(0).at(0).get<std::string>()), Int(v.at(0).at(1).get<std::string>()));
        Rat y = rat(Int(v.at(1).at(0).get<std::string>()), Int(v.at(1).at(1).get<std::string>()));
        pts.push_back({x, y});
    }
    return one_part(poly_of(std::move(pts)), "poly");
}

}  // namespace

ConvexPoly tm_hexagon(const Rat& tau) {
    ConvexPoly p = poly_of({{rat(0), rat(0)}, {rat(1), rat(0)}, {rat(1), rat(1)}, {rat(0), rat(1)}});
    p = clip_halfplane(p, 2, -1, 0);    // y <= 2x
    p = clip_halfplane(p, -2, 1, -1);   // y >= 2x - 1
    p = clip_halfplane(p, 4, 1, 2);     // y >= 2 - 4x
    p = clip_halfplane(p, -4, -1, -3);  // y <= 3 - 4x
    p = clip_halfplane(p, 1, 0, tau);   // x >= tau
    p = clip_halfplane(p, -1, 0, tau - 1);
    return p;
}

Hole named_hole(const std::string& spec) {
    if (spec == "delta") return one_part(delta_poly(), "delta");
    if (spec == "delta1") return one_part(delta1_poly(), "delta1");
    if (spec == "delta2") return one_part(transform(delta1_poly(), Sym::mirror), "delta2");
    if (spec == "hull-dd") {
        ConvexPoly d1 = delta1_poly();
        ConvexPoly d2 = transform(d1, Sym::mirror);
        std::vector<Point> pts = d1.vertices;
        pts.insert(pts.end(), d2.vertices.begin(), d2.vertices.end());
        return one_part(poly_of(std::move(pts)), "hull-dd");
    }
    if (spec == "h-script") {
        Hole h;
        h.name = "h-script";
        h.convex = false;
        // |x - y| > 1/2, two corner triangles
        h.parts.push_back(poly_of({{rat(1, 2), rat(0)}, {rat(1), rat(1, 2)}, {rat(1), rat(0)}}));
        h.parts.push_back(poly_of({{rat(0), rat(1, 2)}, {rat(1, 2), rat(1)}, {rat(0), rat(1)}}));
        return h;
    }
    if (spec == "empty") {
        Hole h;
        h.name = "empty";
        return h;
    }
    if (spec.rfind("p:", 0) == 0) {
        Frac r = parse_frac(spec.substr(2));
        if (2 * r.p > r.q) throw std::domain_error("slope must be in (0,1/2]");
        auto [z, o] = extremal_words(r);
        Rat a = periodic_value(z);
        Rat b = periodic_value(o);
        return one_part(
            poly_of({{rat(1, 2), rat(0)}, {a, 2 * a}, {rat(1, 2), rat(1)}, {b, 2 * b - 1}}),
            spec);
    }
    if (spec.rfind("pk:", 0) == 0) {
        int k = std::stoi(spec.substr(3));
        if (k < 1 || k > 16) throw std::domain_error("hexagon index out of range");
        return one_part(tm_hexagon(periodic_value(thue_morse(k))), spec);
    }
    if (spec.rfind("poly:", 0) == 0) return parse_poly_spec(spec.substr(5));
    throw std::invalid_argument("unknown hole spec: " + spec);
}

std::pair<Hole, Hole> p_infty_bounds(int k) {
    if (k < 2 || k > 16) throw std::length_error("sandwich index out of range");
    Word t = thue_morse(k);
    Rat tau_lo = periodic_value(t);
    Rat tau_hi = rat(word_val(t) + 1, 1) * pow2(-(long)t.size());
    Hole inner = one_part(tm_hexagon(tau_hi), "pinfty-inner");
    Hole outer = one_part(tm_hexagon(tau_lo), "pinfty-outer");
    return {inner, outer};
}

TrapBoxes complete_trap(int k) {
    if (k < 1 || k > 4) throw std::length_error("trap level out of range");
    std::vector<Box> boxes{{rat(1, 2), rat(1), rat(0), rat(1, 2)}};
    for (int level = 2; level <= k; ++level) {
        // finest dyadic resolution of the current boxes
        long n = 1;
        for (const auto& b : boxes)
            for (const Rat& c : {b.x_lo, b.x_hi, b.y_lo, b.y_hi}) {
                long bits = (long)mpz_sizeinbase(c.get_den().get_mpz_t(), 2) - 1;
                n = std::max(n, bits);
            }
        auto collect = [&boxes](long n) {
            std::set<std::pair<long, long>> cells;
            Rat scale = pow2(n);
            for (const auto& b : boxes) {
                long px0 = (long)Rat(b.x_lo * scale).get_num().get_si();
                long px1 = (long)Rat(b.x_hi * scale).get_num().get_si();
                long qy0 = (long)Rat(b.y_lo * scale).get_num().get_si();
                long qy1 = (long)Rat(b.y_hi * scale).get_num().get_si();
                for (long p = px0; p < px1; ++p)
                    for (long q = qy0; q < qy1; ++q) cells.insert({p, q});
            }
            return cells;
        };
        auto cells = collect(n);
        if (cells.size() % 2) {
            ++n;
            cells = collect(n);
        }
        auto bits_of = [&n](long v) {
            Word w((std::size_t)n, '0');
            for (long i = n - 1; i >= 0; --i, v >>= 1)
                if (v & 1) w[(std::size_t)i] = '1';
            return w;
        };
        // canonical order: lexicographic by cylinder label [u·v]
        std::vector<std::pair<Word, Word>> labels;
        for (auto [p, q] : cells) labels.emplace_back(reverse_word(bits_of(q)), bits_of(p));
        std::sort(labels.begin(), labels.end());
        std::vector<Box> next;
        std::size_t half = labels.size() / 2;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const Word uv = labels[i].first + labels[i].second;
            // first half shifts fully left (horizontal strips), second half
            // fully right (vertical strips)
            Window w = i < half ? Window{uv, ""} : Window{"", uv};
            next.push_back(cylinder_box(w));
        }
        boxes = std::move(next);
    }
    return TrapBoxes{std::move(boxes), k};
}

}  // namespace baker
