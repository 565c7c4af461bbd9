#include "baker/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace baker {

namespace {

void check_bits(const Word& w) {
    for (char c : w)
        if (c != '0' && c != '1') throw std::invalid_argument("word must be over {0,1}");
}

Word rotate_right(Word w) {
    if (w.size() > 1) std::rotate(w.begin(), w.end() - 1, w.end());
    return w;
}

Word rotate_left(Word w) {
    if (w.size() > 1) std::rotate(w.begin(), w.begin() + 1, w.end());
    return w;
}

// absorb a trailing transient digit equal to the period's last digit
void trim_side(Word& transient, Word& period) {
    period = primitive_root(period);
    while (!transient.empty() && transient.back() == period.back()) {
        period = rotate_right(period);
        transient.pop_back();
    }
}

}  // namespace

BiSeq make_biseq(Word left_period, Word left_transient, Word right_transient, Word right_period) {
    if (left_period.empty() || right_period.empty())
        throw std::invalid_argument("periods must be nonempty");
    check_bits(left_period);
    check_bits(left_transient);
    check_bits(right_transient);
    check_bits(right_period);
    BiSeq s{std::move(left_period), std::move(left_transient), std::move(right_transient),
            std::move(right_period)};
    trim_side(s.left_transient, s.left_period);
    trim_side(s.right_transient, s.right_period);
    return s;
}

char biseq_digit(const BiSeq& s, long i) {
    if (i >= 1) {
        std::size_t j = (std::size_t)(i - 1);
        if (j < s.right_transient.size()) return s.right_transient[j];
        return s.right_period[(j - s.right_transient.size()) % s.right_period.size()];
    }
    std::size_t j = (std::size_t)(-i);
    if (j < s.left_transient.size()) return s.left_transient[j];
    return s.left_period[(j - s.left_transient.size()) % s.left_period.size()];
}

Point pi_point(const BiSeq& s) {
    return {stream_value(s.right_transient, s.right_period),
            stream_value(s.left_transient, s.left_period)};
}

BiSeq shift(const BiSeq& s, long n) {
    BiSeq t = s;
    for (; n > 0; --n) {
        char d;
        if (!t.right_transient.empty()) {
            d = t.right_transient.front();
            t.right_transient.erase(t.right_transient.begin());
        } else {
            d = t.right_period.front();
            t.right_period = rotate_left(t.right_period);
        }
        t.left_transient.insert(t.left_transient.begin(), d);
    }
    for (; n < 0; ++n) {
        char d;
        if (!t.left_transient.empty()) {
            d = t.left_transient.front();
            t.left_transient.erase(t.left_transient.begin());
        } else {
            d = t.left_period.front();
            t.left_period = rotate_left(t.left_period);
        }
        t.right_transient.insert(t.right_transient.begin(), d);
    }
    return make_biseq(t.left_period, t.left_transient, t.right_transient, t.right_period);
}

BiSeq reflect(const BiSeq& s) {
    return make_biseq(s.right_period, s.right_transient, s.left_transient, s.left_period);
}

Window Window::parse(const std::string& text) {
    // the separator is "·" (UTF-8 c2 b7) or a plain '.'
    std::string sep = "\xc2\xb7";
    auto pos = text.find(sep);
    std::size_t sep_len = sep.size();
    if (pos == std::string::npos) {
        pos = text.find('.');
        sep_len = 1;
    }
    if (pos == std::string::npos) throw std::invalid_argument("window needs a separator: " + text);
    Window w{text.substr(0, pos), text.substr(pos + sep_len)};
    check_bits(w.left);
    check_bits(w.right);
    return w;
}

std::string Window::str() const { return left + "\xc2\xb7" + right; }

Box cylinder_box(const Window& w) {
    Box b{0, 1, 0, 1};
    if (!w.right.empty()) {
        b.x_lo = rat(word_val(w.right), 1) * pow2(-(long)w.right.size());
        b.x_hi = b.x_lo + pow2(-(long)w.right.size());
    }
    if (!w.left.empty()) {
        b.y_lo = rat(word_val(reverse_word(w.left)), 1) * pow2(-(long)w.left.size());
        b.y_hi = b.y_lo + pow2(-(long)w.left.size());
    }
    return b;
}

std::vector<Point> cycle_orbit(const Cycle& c) {
    std::size_t p = c.word.size();
    if (p == 0 || p > 30) throw std::length_error("cycle period out of range");
    check_bits(c.word);
    Int den = 1;
    den <<= p;
    den -= 1;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < p; ++i) {
        Word u = c.word.substr(i) + c.word.substr(0, i);
        pts.push_back({rat(word_val(u), den), rat(word_val(reverse_word(u)), den)});
    }
    return pts;
}

std::vector<Cycle> lyndon_words(int max_p) {
    if (max_p < 1 || max_p > 24) throw std::length_error("max period out of range");
    std::vector<Cycle> out;
    Word w = "0";
    while (true) {
        out.push_back(Cycle{w});
        Word t;
        for (int i = 0; i < max_p; ++i) t += w[i % w.size()];
        while (!t.empty() && t.back() == '1') t.pop_back();
        if (t.empty()) break;
        t.back() = '1';
        w = t;
    }
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
    return out;
}

Point baker_step(const Point& p, bool forward) {
    Rat half = rat(1, 2);
    if (forward) {
        if (p.x == half) throw std::domain_error("itinerary undefined at x = 1/2");
        if (p.x < half) return {2 * p.x, p.y / 2};
        return {2 * p.x - 1, (p.y + 1) / 2};
    }
    if (p.y == half) throw std::domain_error("itinerary undefined at y = 1/2");
    if (p.y < half) return {p.x / 2, 2 * p.y};
    return {(p.x + 1) / 2, 2 * p.y - 1};
}

}  // namespace baker
