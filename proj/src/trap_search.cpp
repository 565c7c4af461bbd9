#include "baker/trap_search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "baker/words.hpp"

namespace baker {

namespace {

Rat sup_dist(const Point& a, const Point& b) {
    return std::max(abs(a.x - b.x), abs(a.y - b.y));
}

}  // namespace

ConstraintSet cantor_orbit(const Word& a, const Word& b, const Rat& eps,
                           const std::optional<Box>& region) {
    if (a.empty() || b.empty()) throw std::invalid_argument("blocks must be nonempty");
    if (eps <= 0) throw std::domain_error("epsilon must be positive");
    if (compare_streams("", a, "", b) == 0)
        throw std::domain_error("periodic closures of the blocks coincide");

    ConstraintSet cs;
    cs.a = a;
    cs.b = b;
    cs.epsilon = eps;
    {
        std::set<Point> lim;
        for (const auto& p : cycle_orbit(Cycle{primitive_root(b)})) lim.insert(p);
        cs.limit_points.assign(lim.begin(), lim.end());
    }
    std::vector<char> claimed(cs.limit_points.size(), 0);
    BiSeq base = make_biseq(reverse_word(b), "", a, b);
    long per = (long)primitive_root(b).size();

    auto visit = [&](const BiSeq& s) -> bool {
        Point pt = pi_point(s);
        std::size_t nearest = 0;
        Rat dmin = -1;
        for (std::size_t i = 0; i < cs.limit_points.size(); ++i) {
            Rat d = sup_dist(pt, cs.limit_points[i]);
            if (dmin < 0 || d < dmin) {
                dmin = d;
                nearest = i;
            }
        }
        if (dmin > eps) {
            cs.points.push_back(pt);
            return false;
        }
        if (!claimed[nearest]) {
            claimed[nearest] = 1;
            cs.points.push_back(pt);
        }
        return true;
    };

    for (int dir : {+1, -1}) {
        BiSeq s = dir > 0 ? base : shift(base, -1);
        long settle = (long)a.size() + (long)b.size();
        long consec = 0, n = 0;
        while (true) {
            bool close = visit(s);
            consec = close ? consec + 1 : 0;
            ++n;
            if (n > settle && consec >= per) break;
            s = shift(s, dir);
        }
    }
    if (region) {
        std::vector<Point> kept;
        for (const auto& p : cs.points)
            if (region->x_lo <= p.x && p.x <= region->x_hi && region->y_lo <= p.y &&
                p.y <= region->y_hi)
                kept.push_back(p);
        cs.points = std::move(kept);
    }
    return cs;
}

namespace {

Sym sym_of(SymMode m) {
    switch (m) {
        case SymMode::mirror: return Sym::mirror;
        case SymMode::rotational: return Sym::rotation;
        default: return Sym::identity;
    }
}

bool poly_contains(const ConvexPoly& poly, const Point& p) {
    if (poly.vertices.empty()) return false;
    return poly.contains(p, false);
}

// drop every polygon that strictly contains another candidate
std::vector<ConvexPoly> antichain(std::set<ConvexPoly> polys) {
    std::vector<ConvexPoly> v(polys.begin(), polys.end());
    std::vector<char> dead(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (i == j || dead[i]) continue;
            if (!(v[j] == v[i]) && v[i].contains_poly(v[j])) {
                dead[i] = 1;
                break;
            }
        }
    std::vector<ConvexPoly> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!dead[i]) out.push_back(v[i]);
    return out;
}

}  // namespace

Family search(const SearchConfig& cfg, const std::vector<ConstraintSet>& constraints) {
    if (constraints.empty()) throw std::invalid_argument("no constraints given");
    Sym sym = sym_of(cfg.symmetry);

    std::vector<ConvexPoly> family;
    {
        std::vector<Point> pts = cfg.anchors;
        if (cfg.symmetry != SymMode::none)
            for (const auto& p : cfg.anchors) pts.push_back(apply_sym(p, sym));
        if (pts.empty()) {
            ConvexPoly empty;
            empty.degenerate = true;
            family.push_back(empty);
        } else {
            family.push_back(ConvexPoly::hull(std::move(pts)));
        }
    }

    for (const auto& cs : constraints) {
        std::vector<Point> branch_points = cs.points;
        std::sort(branch_points.begin(), branch_points.end());
        std::set<ConvexPoly> next;
        for (const auto& poly : family) {
            bool satisfied = false;
            for (const auto& p : cs.points)
                if (poly_contains(poly, p)) {
                    satisfied = true;
                    break;
                }
            if (satisfied) {
                next.insert(poly);
                continue;
            }
            for (const auto& p : branch_points) {
                std::vector<Point> pts = poly.vertices;
                pts.push_back(p);
                if (cfg.symmetry != SymMode::none) pts.push_back(apply_sym(p, sym));
                ConvexPoly grown = ConvexPoly::hull(std::move(pts));
                if (grown.area() < cfg.area_threshold) next.insert(grown);
            }
        }
        family = antichain(std::move(next));
    }
    return Family{std::move(family)};
}

Rat lower_bound(const Family& f, const Rat& eps) {
    if (f.polygons.empty()) throw std::domain_error("empty family");
    Rat best = -1;
    for (const auto& p : f.polygons) {
        Rat a = p.area();
        if (best < 0 || a < best) best = a;
    }
    return best - 4 * eps;
}

std::vector<ConstraintSet> campaign_constraints(const SearchConfig& cfg) {
    std::vector<Word> words;
    for (int len = 1; len <= cfg.max_word_len; ++len)
        for (long bits = 0; bits < (1L << len); ++bits) {
            Word w((std::size_t)len, '0');
            for (int i = 0; i < len; ++i)
                if (bits & (1L << (len - 1 - i))) w[(std::size_t)i] = '1';
            words.push_back(w);
        }
    std::vector<std::pair<Word, Word>> pairs;
    for (const auto& a : words)
        for (const auto& b : words)
            if (compare_streams("", a, "", b) != 0) pairs.push_back({a, b});
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& l, const auto& r) {
        auto key = [](const auto& p) {
            return std::tuple(p.first.size() + p.second.size(), p.first.size(), p.first, p.second);
        };
        return key(l) < key(r);
    });
    std::vector<ConstraintSet> out;
    std::set<std::vector<Point>> seen;
    for (const auto& [a, b] : pairs) {
        ConstraintSet cs = cantor_orbit(a, b, cfg.epsilon);
        std::vector<Point> key = cs.points;
        std::sort(key.begin(), key.end());
        if (seen.insert(std::move(key)).second) out.push_back(std::move(cs));
    }
    return out;
}

SearchConfig parse_campaign(const std::string& text,
                            std::vector<std::pair<Word, Word>>& explicit_pairs) {
    SearchConfig cfg;
    cfg.area_threshold = rat(13, 100);
    cfg.epsilon = parse_rat("1e-10");
    explicit_pairs.clear();
    std::istringstream in(text);
    std::string line;
    auto trim = [](std::string s) {
        auto a = s.find_first_not_of(" \t\r");
        auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad config line: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "anchors") {
            // "x1/y1 x2/y2 ..." with each coordinate pair as "x,y"
            std::istringstream vs(val);
            std::string tok;
            while (vs >> tok) {
                auto comma = tok.find(',');
                if (comma == std::string::npos)
                    throw std::invalid_argument("anchor needs x,y: " + tok);
                cfg.anchors.push_back(
                    {parse_rat(tok.substr(0, comma)), parse_rat(tok.substr(comma + 1))});
            }
        } else if (key == "symmetry") {
            if (val == "none")
                cfg.symmetry = SymMode::none;
            else if (val == "mirror")
                cfg.symmetry = SymMode::mirror;
            else if (val == "rotational")
                cfg.symmetry = SymMode::rotational;
            else
                throw std::invalid_argument("unknown symmetry: " + val);
        } else if (key == "threshold") {
            cfg.area_threshold = parse_rat(val);
        } else if (key == "epsilon") {
            cfg.epsilon = parse_rat(val);
        } else if (key == "word_length") {
            cfg.max_word_len = std::stoi(val);
        } else if (key == "constraint") {
            auto comma = val.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("constraint needs a,b: " + val);
            explicit_pairs.push_back({trim(val.substr(0, comma)), trim(val.substr(comma + 1))});
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    return cfg;
}

}  // namespace baker
