#include "baker/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace baker {

const char* to_string(CycleStatus s) {
    switch (s) {
        case CycleStatus::HitsOpen: return "HitsOpen";
        case CycleStatus::OnBoundaryOnly: return "OnBoundaryOnly";
        case CycleStatus::AvoidsClosed: return "AvoidsClosed";
    }
    return "?";
}

bool certify_forbidden(const Window& w, const Hole& h, bool strict) {
    Box box = cylinder_box(w);
    for (const auto& part : h.parts) {
        BoxClass c = classify_box(box, part);
        if (c == BoxClass::InsideOpen) return true;
        if (!strict && c == BoxClass::InsideClosed) return true;
    }
    return false;
}

Window h_witness(const Word& w, int m) {
    if (w != reverse_word(w)) throw std::domain_error("witness word must be a palindrome");
    if (m < 0) throw std::domain_error("m must be nonnegative");
    Word left = "0" + repeat_word(w + "01", m) + w + "0";
    Word right = "1" + w + repeat_word("10" + w, m) + "1";
    return Window{left, right};
}

namespace {

template <typename F>
void parallel_for(std::size_t n, int jobs, F&& body) {
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>((std::size_t)jobs, n);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += workers) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

CycleReport scan_cycles(const Hole& h, int max_p, int jobs) {
    if (max_p < 1 || max_p > 20) throw std::length_error("max period out of range");
    auto cycles = lyndon_words(max_p);
    CycleReport rep;
    rep.entries.resize(cycles.size());
    parallel_for(cycles.size(), jobs, [&](std::size_t i) {
        const Cycle& c = cycles[i];
        bool hits_open = false, hits_closed = false;
        for (const auto& pt : cycle_orbit(c)) {
            if (h.contains(pt, true)) hits_open = true;
            if (h.contains(pt, false)) hits_closed = true;
        }
        CycleStatus st = hits_open      ? CycleStatus::HitsOpen
                         : hits_closed ? CycleStatus::OnBoundaryOnly
                                       : CycleStatus::AvoidsClosed;
        rep.entries[i] = CycleEntry{c, st, c.word == "0" || c.word == "1"};
    });
    rep.cycle_trap = true;
    for (const auto& e : rep.entries)
        if (!e.boundary_fixed && e.status == CycleStatus::AvoidsClosed) rep.cycle_trap = false;
    return rep;
}

namespace {

// grid flags over the 2^L x 2^L dyadic squares, filled by quadtree descent
struct GridFlags {
    int L;
    std::vector<char> in_closed;   // cell inside the closed hole (some part)
    std::vector<char> meets_open;  // cell meets the open hole (some part)

    std::size_t idx(long ix, long iy) const { return ((std::size_t)iy << L) | (std::size_t)ix; }
};

void fill(GridFlags& g, long ix0, long iy0, long cells, bool closed, bool open) {
    for (long iy = iy0; iy < iy0 + cells; ++iy)
        for (long ix = ix0; ix < ix0 + cells; ++ix) {
            std::size_t i = g.idx(ix, iy);
            if (closed) g.in_closed[i] = 1;
            if (open) g.meets_open[i] = 1;
        }
}

void descend(GridFlags& g, const ConvexPoly& part, int depth, long ix, long iy) {
    long cells = 1L << (g.L - depth);
    Rat side = pow2(-depth);
    Box box{Rat(ix * cells) * pow2(-g.L), Rat((ix + 1) * cells) * pow2(-g.L),
            Rat(iy * cells) * pow2(-g.L), Rat((iy + 1) * cells) * pow2(-g.L)};
    BoxClass c = classify_box(box, part);
    switch (c) {
        case BoxClass::InsideOpen:
        case BoxClass::InsideClosed:
            fill(g, ix * cells, iy * cells, cells, true, true);
            return;
        case BoxClass::DisjointFromOpen:
        case BoxClass::DisjointFromClosed:
            return;
        case BoxClass::Straddles:
            if (depth == g.L) {
                fill(g, ix * cells, iy * cells, 1, false, true);
                return;
            }
            for (int dy = 0; dy < 2; ++dy)
                for (int dx = 0; dx < 2; ++dx)
                    descend(g, part, depth + 1, 2 * ix + dx, 2 * iy + dy);
    }
}

std::uint32_t bit_reverse(std::uint32_t v, int bits) {
    std::uint32_t r = 0;
    for (int i = 0; i < bits; ++i) {
        r = (r << 1) | (v & 1);
        v >>= 1;
    }
    return r;
}

double log2_int(const Int& n) {
    if (mpz_popcount(n.get_mpz_t()) == 1) return (double)(mpz_sizeinbase(n.get_mpz_t(), 2) - 1);
    long exp;
    double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return (double)exp + std::log2(d);
}

double log2_rat(const Rat& r) { return log2_int(r.get_num()) - log2_int(r.get_den()); }

// iterative Tarjan over the de Bruijn successor structure restricted to a set
std::vector<std::int64_t> scc_ids(const std::vector<char>& allowed, int twoL, std::size_t& scc_count) {
    std::size_t n = allowed.size();
    std::uint32_t mask = (twoL >= 32) ? 0xffffffffu : ((1u << twoL) - 1);
    std::vector<std::int64_t> comp(n, -1);
    std::vector<std::int64_t> low(n, -1), num(n, -1);
    std::vector<std::uint32_t> stk;
    std::vector<char> on_stack(n, 0);
    std::int64_t counter = 0;
    scc_count = 0;
    struct Frame {
        std::uint32_t v;
        int edge;
    };
    std::vector<Frame> call;
    for (std::size_t root = 0; root < n; ++root) {
        if (!allowed[root] || num[root] >= 0) continue;
        call.push_back({(std::uint32_t)root, 0});
        num[root] = low[root] = counter++;
        stk.push_back((std::uint32_t)root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < 2) {
                std::uint32_t w = ((f.v << 1) | (std::uint32_t)f.edge) & mask;
                ++f.edge;
                if (!allowed[w]) continue;
                if (num[w] < 0) {
                    num[w] = low[w] = counter++;
                    stk.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                std::uint32_t v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == num[v]) {
                    while (true) {
                        std::uint32_t w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        comp[w] = (std::int64_t)scc_count;
                        if (w == v) break;
                    }
                    ++scc_count;
                }
            }
        }
    }
    return comp;
}

}  // namespace

DimBounds dim_bounds(const Hole& h, int L, int m, int jobs) {
    (void)jobs;  // deterministic single pass; scans here are cheap enough
    if (L < 1 || L > 14) throw std::length_error("window half-length out of range");
    if (m < 2 * L) throw std::invalid_argument("walk length must be at least 2L");
    int twoL = 2 * L;
    std::size_t n_nodes = (std::size_t)1 << twoL;
    std::uint32_t mask = (std::uint32_t)(n_nodes - 1);
    std::uint32_t xmask = (1u << L) - 1;

    GridFlags grid{L, std::vector<char>((std::size_t)1 << twoL, 0),
                   std::vector<char>((std::size_t)1 << twoL, 0)};
    for (const auto& part : h.parts) descend(grid, part, 0, 0, 0);

    std::vector<char> up(n_nodes), lo(n_nodes);
    for (std::size_t s = 0; s < n_nodes; ++s) {
        std::uint32_t ix = (std::uint32_t)s & xmask;
        std::uint32_t iy = bit_reverse(((std::uint32_t)s >> L) & xmask, L);
        std::size_t cell = grid.idx(ix, iy);
        up[s] = !grid.in_closed[cell];
        lo[s] = !grid.meets_open[cell];
    }

    DimBounds out;
    out.L = L;
    out.m = m;

    // upper bound: exact count of allowed walks of length m - 2L
    {
        std::vector<Int> v(n_nodes);
        for (std::size_t s = 0; s < n_nodes; ++s) v[s] = up[s] ? 1 : 0;
        for (int step = 0; step < m - twoL; ++step) {
            std::vector<Int> nv(n_nodes);
            for (std::size_t s = 0; s < n_nodes; ++s) {
                if (!up[s]) continue;
                std::uint32_t t0 = ((std::uint32_t)(s << 1)) & mask;
                std::uint32_t t1 = t0 | 1;
                if (up[t0]) nv[s] += v[t0];
                if (up[t1]) nv[s] += v[t1];
            }
            v = std::move(nv);
        }
        Int total = 0;
        for (std::size_t s = 0; s < n_nodes; ++s) total += v[s];
        out.upper = total == 0 ? 0.0 : std::min(2.0, 2.0 * log2_int(total) / (double)m);
    }

    // lower bound: best Collatz-Wielandt ratio over nontrivial SCCs
    {
        std::size_t scc_count = 0;
        auto comp = scc_ids(lo, twoL, scc_count);
        std::vector<std::uint32_t> size(scc_count, 0);
        std::vector<char> nontrivial(scc_count, 0);
        for (std::size_t s = 0; s < n_nodes; ++s) {
            if (comp[s] < 0) continue;
            ++size[(std::size_t)comp[s]];
            std::uint32_t t0 = ((std::uint32_t)(s << 1)) & mask;
            std::uint32_t t1 = t0 | 1;
            if ((lo[t0] && comp[t0] == comp[s] && t0 == s) ||
                (lo[t1] && comp[t1] == comp[s] && t1 == s))
                nontrivial[(std::size_t)comp[s]] = 1;
        }
        for (std::size_t c = 0; c < scc_count; ++c)
            if (size[c] > 1) nontrivial[c] = 1;
        Rat best = 0;
        std::int64_t best_comp = -1;
        for (std::size_t c = 0; c < scc_count; ++c) {
            if (!nontrivial[c]) continue;
            std::vector<std::uint32_t> nodes;
            for (std::size_t s = 0; s < n_nodes; ++s)
                if (comp[s] == (std::int64_t)c) nodes.push_back((std::uint32_t)s);
            std::vector<Int> u(nodes.size(), 1), nu(nodes.size());
            std::vector<std::array<std::int64_t, 2>> succ(nodes.size(), {-1, -1});
            for (std::size_t i = 0; i < nodes.size(); ++i)
                for (int b = 0; b < 2; ++b) {
                    std::uint32_t t = ((nodes[i] << 1) | (std::uint32_t)b) & mask;
                    if (lo[t] && comp[t] == (std::int64_t)c) {
                        auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
                        succ[i][b] = it - nodes.begin();
                    }
                }
            auto apply = [&](const std::vector<Int>& src, std::vector<Int>& dst) {
                for (std::size_t i = 0; i < nodes.size(); ++i) {
                    dst[i] = 0;
                    for (int b = 0; b < 2; ++b)
                        if (succ[i][b] >= 0) dst[i] += src[(std::size_t)succ[i][b]];
                }
            };
            for (int step = 0; step < m; ++step) {
                apply(u, nu);
                std::swap(u, nu);
            }
            apply(u, nu);
            Rat r = -1;
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                Rat q = rat(nu[i], u[i]);
                if (r < 0 || q < r) r = q;
            }
            if (r > best) {
                best = r;
                best_comp = (std::int64_t)c;
            }
        }
        if (best > 1) {
            out.lower = std::max(0.0, 2.0 * log2_rat(best));
            for (std::size_t s = 0; s < n_nodes; ++s)
                if (comp[s] == best_comp) out.core_nodes.push_back((std::uint32_t)s);
        } else if (best == 1) {
            out.lower = 0.0;
            for (std::size_t s = 0; s < n_nodes; ++s)
                if (comp[s] == best_comp) out.core_nodes.push_back((std::uint32_t)s);
        }
        out.lower = std::min(out.lower, out.upper);
    }
    return out;
}

int interior_witness(const Hole& h) {
    if (h.parts.empty()) throw std::domain_error("empty hole has no clearance");
    Rat eps = 1;
    for (const auto& part : h.parts)
        for (const auto& v : part.vertices) {
            if (v.x <= 0 || v.x >= 1 || v.y <= 0 || v.y >= 1)
                throw std::domain_error("hole closure touches the boundary");
            eps = std::min(eps, std::min(v.x, v.y));
        }
    for (int n = 1;; ++n) {
        Word head(n / 2, '0');
        Word body(n, '0');
        Rat v = stream_value(head + "1", body + "1");
        if (v < eps) return n;
        if (n > 4096) throw std::runtime_error("no witness found");
    }
}

namespace {

using Runs = std::vector<std::pair<char, int>>;

Runs run_decompose(const Word& w) {
    Runs runs;
    for (char c : w) {
        if (!runs.empty() && runs.back().first == c)
            ++runs.back().second;
        else
            runs.push_back({c, 1});
    }
    return runs;
}

// all-1 region: 0-runs are single separators, complete 1-runs nondecreasing
bool one_region_factor(const Runs& runs) {
    int first_complete = -1, prev = -1;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].first == '0') {
            if (runs[i].second != 1) return false;
            continue;
        }
        bool complete = i != 0 && i + 1 != runs.size();
        if (!complete) continue;
        if (first_complete < 0) first_complete = runs[i].second;
        if (prev >= 0 && runs[i].second < prev) return false;
        prev = runs[i].second;
    }
    if (!runs.empty() && runs.front().first == '1' && first_complete >= 0 &&
        runs.front().second > first_complete)
        return false;
    return true;
}

// all-0 region, mirror-complement of the above
bool zero_region_factor(const Runs& runs) {
    int last_complete = -1, prev = -1;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].first == '1') {
            if (runs[i].second != 1) return false;
            continue;
        }
        bool complete = i != 0 && i + 1 != runs.size();
        if (!complete) continue;
        if (prev >= 0 && runs[i].second > prev) return false;
        prev = runs[i].second;
        last_complete = runs[i].second;
    }
    if (runs.size() > 1 && runs.back().first == '0' && last_complete >= 0 &&
        runs.back().second > last_complete)
        return false;
    return true;
}

// suffix of the 0-region ending exactly at the region boundary
bool left_piece_ok(const Word& a) {
    Runs runs = run_decompose(a);
    int prev = -1;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].first == '1') {
            if (runs[i].second != 1) return false;
            continue;
        }
        if (i == 0) continue;  // leading 0-run may be truncated arbitrarily
        if (prev >= 0 && runs[i].second > prev) return false;
        prev = runs[i].second;
    }
    return true;
}

// prefix of the 1-region starting exactly at the region boundary
bool right_piece_ok(const Word& b) {
    Runs runs = run_decompose(b);
    int prev = -1;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (runs[i].first == '0') {
            if (runs[i].second != 1) return false;
            continue;
        }
        if (i + 1 == runs.size()) continue;  // trailing 1-run may be truncated
        if (prev >= 0 && runs[i].second < prev) return false;
        prev = runs[i].second;
    }
    return true;
}

bool omega_factor(const Word& w) {
    Runs runs = run_decompose(w);
    if (one_region_factor(runs)) return true;
    if (zero_region_factor(runs)) return true;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] == '0' && w[i] == '1' && left_piece_ok(w.substr(0, i)) &&
            right_piece_ok(w.substr(i)))
            return true;
    return false;
}

}  // namespace

OmegaCount omega_count(int n) {
    if (n < 1 || n > 12) throw std::length_error("window radius out of range");
    std::size_t len = (std::size_t)(2 * n + 1);
    Int count = 0;
    Word w(len, '0');
    for (std::uint64_t bits = 0; bits < ((std::uint64_t)1 << len); ++bits) {
        for (std::size_t i = 0; i < len; ++i) w[i] = (bits >> i) & 1 ? '1' : '0';
        if (omega_factor(w)) count += 1;
    }
    Int p = partitions(2 * n);
    Int bound = Int(2 * n + 1) * n * n * p * p;
    return OmegaCount{count, bound};
}

namespace {

// every forward shift keeps |x - y| <= 1/2
bool avoid_forward(const BiSeq& s) {
    const Word& rp = s.right_period;
    long rtl = (long)s.right_transient.size();
    long per = (long)rp.size();
    Rat half = rat(1, 2);

    // sign of the deviation between the actual past and the hypothetical
    // fully periodic past, anchored at the end of the right transient
    int esign = 0;
    long span = rtl + (long)s.left_transient.size() +
                (long)std::lcm((std::size_t)per, s.left_period.size()) + 2 * per + 2;
    for (long j = 0; j < span; ++j) {
        long p = rtl - j;
        char act = biseq_digit(s, p);
        char hyp = rp[(std::size_t)(((p - 1 - rtl) % per + per) % per)];
        if (act != hyp) {
            esign = act > hyp ? 1 : -1;
            break;
        }
    }

    long maxbits = 0;
    bool need_nonneg = false, need_nonpos = false;
    for (long phi = 0; phi < per; ++phi) {
        Word u = rp.substr((std::size_t)phi) + rp.substr(0, (std::size_t)phi);
        Rat x = periodic_value(u);
        Rat yh = periodic_value(reverse_word(u));
        Rat diff = x - yh;
        Rat margin = half - abs(diff);
        if (margin < 0) return false;
        if (margin == 0) {
            (diff == half ? need_nonneg : need_nonpos) = true;
        } else {
            long hbits = 1;
            while (pow2(-hbits) > margin) ++hbits;
            maxbits = std::max(maxbits, hbits);
        }
    }
    if (need_nonneg && esign < 0) return false;
    if (need_nonpos && esign > 0) return false;

    BiSeq t = s;
    long horizon = rtl + maxbits + per + 2;
    for (long i = 0; i <= horizon; ++i) {
        Point pt = pi_point(t);
        if (abs(pt.x - pt.y) > half) return false;
        t = shift(t, 1);
    }
    return true;
}

}  // namespace

bool balanced_survivor(const BiSeq& s) { return avoid_forward(s) && avoid_forward(reflect(s)); }

std::optional<Window> avoidance_sample(const Word& u, const Word& v, const Hole& h, int L) {
    if (u.empty() || v.empty()) throw std::invalid_argument("blocks must be nonempty");
    if (u.size() > 16 || v.size() > 16 || L < 0 || L > 64)
        throw std::length_error("sampler limits exceeded");
    std::size_t min_len = std::min(u.size(), v.size());
    for (std::size_t k = 0; k * min_len <= (std::size_t)L; ++k) {
        std::vector<int> choice(k, 0);
        while (true) {
            Word w;
            for (std::size_t i = 0; i < k; ++i) w += choice[i] ? v : u;
            if (w.size() <= (std::size_t)L) {
                for (std::size_t i = 0; i <= w.size(); ++i) {
                    Word w1 = w.substr(0, i), w2 = w.substr(i);
                    BiSeq s = make_biseq(reverse_word(v), reverse_word(w1), w2, v);
                    if (h.contains(pi_point(s), true)) return Window{w1, w2};
                }
            }
            // next {u,v}-tuple in lex order, u before v
            std::size_t j = k;
            while (j > 0 && choice[j - 1] == 1) --j;
            if (j == 0) break;
            choice[j - 1] = 1;
            for (std::size_t i = j; i < k; ++i) choice[i] = 0;
        }
        if (k == 0 && min_len == 0) break;
    }
    return std::nullopt;
}

std::vector<Point> pinfty_probe(int k) {
    if (k < 1 || k > 10) throw std::length_error("probe index out of range");
    Word t = thue_morse(k);
    Word tb = complement_word(t);
    Rat a = stream_value(tb, t);
    Rat b = 1 - a;
    return {{a, b}, {b, a}, {a, a}, {b, b}};
}

}  // namespace baker
