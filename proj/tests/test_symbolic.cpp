#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "baker/symbolic.hpp"

using namespace baker;

namespace {

Word random_word(std::mt19937& rng, int len) {
    Word w;
    for (int i = 0; i < len; ++i) w += char('0' + (rng() & 1));
    return w;
}

BiSeq random_biseq(std::mt19937& rng) {
    return make_biseq(random_word(rng, 1 + (int)(rng() % 4)), random_word(rng, (int)(rng() % 4)),
                      random_word(rng, (int)(rng() % 4)), random_word(rng, 1 + (int)(rng() % 4)));
}

}  // namespace

TEST_CASE("biseq canonical form") {
    // periods reduced to primitive roots
    BiSeq s = make_biseq("0101", "", "", "1010");
    CHECK(s.left_period == "01");
    CHECK(s.right_period == "10");
    // transient ending in a period copy is absorbed
    CHECK(make_biseq("01", "", "10110", "10") == make_biseq("01", "", "101", "10"));
    CHECK(make_biseq("0", "00", "", "1") == make_biseq("0", "", "", "1"));
    // equal values hash to equal canonical forms
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        Word lp = random_word(rng, 1 + (int)(rng() % 3));
        Word lt = random_word(rng, (int)(rng() % 3));
        Word rt = random_word(rng, (int)(rng() % 3));
        Word rp = random_word(rng, 1 + (int)(rng() % 3));
        BiSeq a = make_biseq(lp, lt, rt, rp);
        // pad both sides with explicit period copies; same sequence of digits
        BiSeq b = make_biseq(lp + lp, lt + lp, rt + rp, rp);
        CHECK(a == b);
        for (long i = -8; i <= 8; ++i) CHECK(biseq_digit(a, i) == biseq_digit(b, i));
    }
}

TEST_CASE("digits read off the stored words") {
    BiSeq s = make_biseq("10", "0", "11", "0");
    // left side outward from origin: x_0=0 then (10)^inf gives x_{-1}=1, x_{-2}=0...
    CHECK(biseq_digit(s, 0) == '0');
    CHECK(biseq_digit(s, -1) == '1');
    CHECK(biseq_digit(s, -2) == '0');
    CHECK(biseq_digit(s, -3) == '1');
    CHECK(biseq_digit(s, 1) == '1');
    CHECK(biseq_digit(s, 2) == '1');
    CHECK(biseq_digit(s, 3) == '0');
    CHECK(biseq_digit(s, 4) == '0');
}

TEST_CASE("pi coding of fixed and periodic points") {
    CHECK(pi_point(make_biseq("0", "", "", "0")) == Point{rat(0), rat(0)});
    CHECK(pi_point(make_biseq("1", "", "", "1")) == Point{rat(1), rat(1)});
    BiSeq two = make_biseq("10", "", "", "01");
    CHECK(pi_point(two) == Point{rat(1, 3), rat(2, 3)});
    CHECK(shift(two, 2) == two);  // genuinely shift-periodic
    // transients shift the value as binary digits
    CHECK(pi_point(make_biseq("0", "", "1", "0")) == Point{rat(1, 2), rat(0)});
    CHECK(pi_point(make_biseq("0", "1", "", "0")) == Point{rat(0), rat(1, 2)});
}

TEST_CASE("shift conjugates pi with the baker map") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        BiSeq s = random_biseq(rng);
        Point p = pi_point(s);
        BiSeq fwd = shift(s, 1);
        // baker_step throws on the discontinuity line; skip those samples
        if (p.x != rat(1, 2)) CHECK(pi_point(fwd) == baker_step(p, true));
        if (p.y != rat(1, 2)) CHECK(pi_point(shift(s, -1)) == baker_step(p, false));
        CHECK(shift(shift(s, 3), -3) == s);
        CHECK(shift(s, 0) == s);
        for (long i = -6; i <= 6; ++i) CHECK(biseq_digit(fwd, i) == biseq_digit(s, i + 1));
    }
}

TEST_CASE("reflect swaps coordinates") {
    std::mt19937 rng(78);
    for (int trial = 0; trial < 200; ++trial) {
        BiSeq s = random_biseq(rng);
        Point p = pi_point(s);
        CHECK(pi_point(reflect(s)) == Point{p.y, p.x});
        CHECK(reflect(reflect(s)) == s);
        for (long i = -6; i <= 6; ++i) CHECK(biseq_digit(reflect(s), i) == biseq_digit(s, 1 - i));
    }
}

TEST_CASE("baker map on rationals") {
    CHECK(baker_step({rat(1, 3), rat(1, 3)}, true) == Point{rat(2, 3), rat(1, 6)});
    CHECK(baker_step({rat(2, 3), rat(1, 6)}, true) == Point{rat(1, 3), rat(7, 12)});
    CHECK(baker_step({rat(2, 3), rat(1, 6)}, false) == Point{rat(1, 3), rat(1, 3)});
    CHECK_THROWS(baker_step({rat(1, 2), rat(0)}, true));
    CHECK_THROWS(baker_step({rat(0), rat(1, 2)}, false));
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> num(0, 92);
    for (int trial = 0; trial < 200; ++trial) {
        Point p{rat(num(rng), 93), rat(num(rng), 93)};
        Point q = baker_step(p, true);
        if (q.y != rat(1, 2)) CHECK(baker_step(q, false) == p);
    }
}

TEST_CASE("window parsing and printing") {
    Window w = Window::parse("10\xc2\xb7" "01");
    CHECK(w.left == "10");
    CHECK(w.right == "01");
    CHECK(Window::parse("10.01") == w);
    CHECK(w.str() == "10\xc2\xb7" "01");
    CHECK(Window::parse(".1").left.empty());
    CHECK(Window::parse("1.").right.empty());
    CHECK_THROWS(Window::parse("0101"));
    CHECK_THROWS(Window::parse("1.2"));
}

TEST_CASE("cylinder boxes") {
    Box b = cylinder_box(Window::parse("1\xc2\xb7" "0"));
    CHECK(b == Box{rat(0), rat(1, 2), rat(1, 2), rat(1)});
    CHECK(cylinder_box(Window::parse("\xc2\xb7" "01")) == Box{rat(1, 4), rat(1, 2), rat(0), rat(1)});
    CHECK(cylinder_box(Window::parse("10\xc2\xb7")) == Box{rat(0), rat(1), rat(1, 4), rat(1, 2)});
    CHECK(cylinder_box(Window{"", ""}) == Box{rat(0), rat(1), rat(0), rat(1)});
    // a biseq matching the window lands inside the box
    std::mt19937 rng(400);
    for (int trial = 0; trial < 200; ++trial) {
        Word u = random_word(rng, 1 + (int)(rng() % 3));
        Word v = random_word(rng, 1 + (int)(rng() % 3));
        Box box = cylinder_box(Window{u, v});
        CHECK(box.width() == pow2(-(long)v.size()));
        CHECK(box.height() == pow2(-(long)u.size()));
        BiSeq s = make_biseq("01", reverse_word(u), v, "01");
        Point p = pi_point(s);
        CHECK(p.x >= box.x_lo);
        CHECK(p.x <= box.x_hi);
        CHECK(p.y >= box.y_lo);
        CHECK(p.y <= box.y_hi);
    }
}

TEST_CASE("cycle orbits") {
    std::vector<Point> orbit = cycle_orbit(Cycle{"001"});
    REQUIRE(orbit.size() == 3);
    CHECK(orbit[0] == Point{rat(1, 7), rat(4, 7)});
    CHECK(orbit[1] == Point{rat(2, 7), rat(2, 7)});
    CHECK(orbit[2] == Point{rat(4, 7), rat(1, 7)});
    CHECK(cycle_orbit(Cycle{"0"}) == std::vector<Point>{{rat(0), rat(0)}});
    CHECK(cycle_orbit(Cycle{"01"}).size() == 2);
    // orbits are genuine baker cycles
    for (const Word& w : {Word("0011"), Word("01011"), Word("0010111")}) {
        std::vector<Point> o = cycle_orbit(Cycle{w});
        REQUIRE(o.size() == w.size());
        for (std::size_t i = 0; i < o.size(); ++i)
            CHECK(baker_step(o[i], true) == o[(i + 1) % o.size()]);
    }
}

TEST_CASE("lyndon word enumeration") {
    std::vector<Cycle> all = lyndon_words(5);
    std::set<Word> words;
    for (const Cycle& c : all) words.insert(c.word);
    CHECK(words.count("0"));
    CHECK(words.count("1"));
    CHECK(words.count("01"));
    CHECK(words.count("00101"));
    CHECK_FALSE(words.count("0101"));  // not primitive
    CHECK_FALSE(words.count("10"));    // not least rotation
    int len5 = 0, len6 = 0;
    for (const Cycle& c : lyndon_words(6)) {
        len5 += c.word.size() == 5;
        len6 += c.word.size() == 6;
    }
    CHECK(len5 == 6);
    CHECK(len6 == 9);
    // every word is primitive and minimal among rotations
    for (const Cycle& c : all) {
        CHECK(primitive_root(c.word) == c.word);
        for (std::size_t s = 1; s < c.word.size(); ++s)
            CHECK(c.word < c.word.substr(s) + c.word.substr(0, s));
    }
}
