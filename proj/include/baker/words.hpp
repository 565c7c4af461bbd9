#pragma once

#include <string>
#include <utility>
#include <vector>

#include "baker/rat.hpp"

namespace baker {

// Binary word over {0,1}, stored as a plain string.
using Word = std::string;

struct Frac {
    long p, q;  // reduced, 0 < p/q < 1 except where noted

    Rat to_rat() const { return rat(p, q); }
    bool operator==(const Frac& o) const = default;
};

Frac make_frac(long p, long q);
Frac parse_frac(const std::string& s);

// value of w read as a binary integer (empty word -> 0)
Int word_val(const Word& w);
// 0.(w)^inf as an exact rational
Rat periodic_value(const Word& w);
// 0.t p^inf
Rat stream_value(const Word& transient, const Word& period);

Word reverse_word(Word w);
Word complement_word(Word w);
Word repeat_word(const Word& w, int times);
// shortest u with w = u^k
Word primitive_root(const Word& w);

// lexicographic comparison of t1 p1^inf vs t2 p2^inf; returns -1/0/+1
int compare_streams(const Word& t1, const Word& p1, const Word& t2, const Word& p2);

bool is_balanced(const Word& w, bool cyclic);

// zero_max: lexicographically largest cyclically balanced word of length q
// with p ones starting with 0; one_min: smallest such starting with 1.
std::pair<Word, Word> extremal_words(Frac r);

// letterwise substitution 0 -> zero_max(r), 1 -> one_min(r), composed
// innermost-first over the vector entries
Word substitution_words(const std::vector<Frac>& rv, int symbol);

Word thue_morse(int k);

// the unique fraction c0/d0 with |p*d0 - c0*q| = 1, c0/d0 > p/q, d0 < q
Frac farey_parent(Frac r);
// mediant iteration r_k = (c_{k-1} + c)/(d_{k-1} + d)
Frac farey_seq(Frac r, int k);

// Checks the extremal-word identities along the mediant sequence of r:
// 0-max(r_k) = 0-max(r_i) 0-max(r)^{k-i} for i = 0..k-1, with the dual
// prefix form 0-max(r) 1-min(r_{k-1}) at i = k-1, plus the strict
// lexicographic chains of the periodic closures.
bool farey_word_identities(Frac r, int k);

Int partitions(long n);

// (1/4) * prod_{n=1..terms} (1 - 2^{-2^n})
Rat doubling_constant(int terms);

}  // namespace baker
