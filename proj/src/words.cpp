#include "baker/words.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace baker {

Frac make_frac(long p, long q) {
    if (q <= 0 || p <= 0) throw std::domain_error("fraction must be positive");
    long g = std::gcd(p, q);
    return Frac{p / g, q / g};
}

Frac parse_frac(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("expected p/q: " + s);
    long p = std::stol(s.substr(0, slash));
    long q = std::stol(s.substr(slash + 1));
    return make_frac(p, q);
}

Int word_val(const Word& w) {
    Int v = 0;
    for (char c : w) {
        v <<= 1;
        if (c == '1') v += 1;
    }
    return v;
}

Rat periodic_value(const Word& w) {
    if (w.empty()) return 0;
    Int den = 1;
    den <<= w.size();
    den -= 1;
    return rat(word_val(w), den);
}

Rat stream_value(const Word& transient, const Word& period) {
    Rat head = rat(word_val(transient), 1) * pow2(-(long)transient.size());
    return head + periodic_value(period) * pow2(-(long)transient.size());
}

Word reverse_word(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

Word complement_word(Word w) {
    for (char& c : w) c = (c == '0') ? '1' : '0';
    return w;
}

Word repeat_word(const Word& w, int times) {
    Word out;
    out.reserve(w.size() * times);
    for (int i = 0; i < times; ++i) out += w;
    return out;
}

Word primitive_root(const Word& w) {
    std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return w.substr(0, d);
    }
    return w;
}

int compare_streams(const Word& t1, const Word& p1, const Word& t2, const Word& p2) {
    std::size_t lcm = std::lcm(std::max<std::size_t>(p1.size(), 1),
                               std::max<std::size_t>(p2.size(), 1));
    std::size_t n = t1.size() + t2.size() + lcm + 1;
    auto digit = [](const Word& t, const Word& p, std::size_t i) -> char {
        if (i < t.size()) return t[i];
        if (p.empty()) return '0';
        return p[(i - t.size()) % p.size()];
    };
    for (std::size_t i = 0; i < n; ++i) {
        char a = digit(t1, p1, i), b = digit(t2, p2, i);
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

bool is_balanced(const Word& w, bool cyclic) {
    if (cyclic) return is_balanced(w + w, false);
    std::size_t len = w.size();
    std::vector<int> pre(len + 1, 0);
    for (std::size_t i = 0; i < len; ++i) pre[i + 1] = pre[i] + (w[i] == '1');
    for (std::size_t n = 1; n <= len; ++n) {
        int lo = (int)n + 1, hi = -1;
        for (std::size_t i = 0; i + n <= len; ++i) {
            int ones = pre[i + n] - pre[i];
            lo = std::min(lo, ones);
            hi = std::max(hi, ones);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

std::pair<Word, Word> extremal_words(Frac r) {
    long p = r.p, q = r.q;
    if (p <= 0 || p >= q) throw std::domain_error("slope must be in (0,1)");
    // lower mechanical word of slope p/q
    Word base(q, '0');
    for (long i = 0; i < q; ++i)
        base[i] = char('0' + ((i + 1) * p / q - i * p / q));
    Word zero_max, one_min;
    for (long s = 0; s < q; ++s) {
        Word rot = base.substr(s) + base.substr(0, s);
        if (rot[0] == '0' && (zero_max.empty() || rot > zero_max)) zero_max = rot;
        if (rot[0] == '1' && (one_min.empty() || rot < one_min)) one_min = rot;
    }
    return {zero_max, one_min};
}

Word substitution_words(const std::vector<Frac>& rv, int symbol) {
    if (rv.empty()) throw std::invalid_argument("empty substitution vector");
    Word w(1, char('0' + symbol));
    for (auto it = rv.rbegin(); it != rv.rend(); ++it) {
        auto [z, o] = extremal_words(*it);
        Word next;
        for (char c : w) next += (c == '0') ? z : o;
        w = std::move(next);
    }
    return w;
}

Word thue_morse(int k) {
    if (k < 0 || k > 24) throw std::length_error("thue_morse: k out of range");
    Word w = "0";
    for (int i = 0; i < k; ++i) w += complement_word(w);
    return w;
}

Frac farey_parent(Frac r) {
    if (r.q < 2) throw std::domain_error("no Farey neighbour for q < 2");
    for (long d0 = 1; d0 < r.q; ++d0)
        for (long c0 = 0; c0 <= d0; ++c0)
            if (std::abs(r.p * d0 - c0 * r.q) == 1 && c0 * r.q > r.p * d0)
                return Frac{c0, d0};
    throw std::domain_error("no Farey neighbour found");
}

Frac farey_seq(Frac r, int k) {
    Frac rk = farey_parent(r);
    for (int i = 0; i < k; ++i) rk = Frac{rk.p + r.p, rk.q + r.q};
    return rk;
}

bool farey_word_identities(Frac r, int k) {
    if (k < 1 || k > 8) throw std::length_error("identity check: k out of range");
    if (2 * r.p >= r.q) throw std::domain_error("identity check needs r < 1/2");
    Word zr = extremal_words(r).first;
    Word zk = extremal_words(farey_seq(r, k)).first;
    // 0-max(r_k) = 0-max(r_i) 0-max(r)^{k-i}; the dual prefix form
    // 0-max(r)^{k-i} 1-min(r_i) only holds at i = k-1
    for (int i = 0; i < k; ++i) {
        auto [zi, oi] = extremal_words(farey_seq(r, i));
        if (zk != zi + repeat_word(zr, k - i)) return false;
        if (i == k - 1 && zk != zr + oi) return false;
    }
    // strict lexicographic chains of the periodic closures
    Word prev_z = extremal_words(farey_seq(r, 0)).first;
    Word prev_o = extremal_words(farey_seq(r, 0)).second;
    for (int i = 1; i <= k; ++i) {
        auto [zi, oi] = extremal_words(farey_seq(r, i));
        if (compare_streams("", zi, "", prev_z) >= 0) return false;
        if (compare_streams("", oi, "", prev_o) >= 0) return false;
        prev_z = zi;
        prev_o = oi;
    }
    auto [zlim, olim] = extremal_words(r);
    if (compare_streams("", zlim, "", prev_z) >= 0) return false;
    if (compare_streams("", olim, "", prev_o) >= 0) return false;
    return true;
}

Int partitions(long n) {
    if (n < 0) return 0;
    if (n > 10000) throw std::length_error("partitions: n out of range");
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    static std::vector<Int> cache{1};
    for (long m = (long)cache.size(); m <= n; ++m) {
        Int total = 0;
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2;
            long g2 = j * (3 * j + 1) / 2;
            if (g1 > m && g2 > m) break;
            Int term = 0;
            if (g1 <= m) term += cache[m - g1];
            if (g2 <= m) term += cache[m - g2];
            if (j % 2)
                total += term;
            else
                total -= term;
        }
        cache.push_back(total);
    }
    return cache[n];
}

Rat doubling_constant(int terms) {
    if (terms < 1 || terms > 16) throw std::length_error("doubling_constant: terms out of range");
    Rat prod = rat(1, 4);
    for (int n = 1; n <= terms; ++n) prod *= 1 - pow2(-(1L << n));
    return prod;
}

}  // namespace baker
