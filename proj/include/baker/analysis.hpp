#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "baker/holes.hpp"
#include "baker/symbolic.hpp"

namespace baker {

enum class CycleStatus { HitsOpen, OnBoundaryOnly, AvoidsClosed };

const char* to_string(CycleStatus s);

struct CycleEntry {
    Cycle cycle;
    CycleStatus status;
    bool boundary_fixed;  // the two fixed orbits "0" and "1"
};

struct CycleReport {
    std::vector<CycleEntry> entries;
    bool cycle_trap;  // no nontrivial cycle avoids the closed hole
};

// strict: cylinder box inside the open hole; essential: inside the closure.
// An essential certificate forbids the factor for every survivor orbit
// except ones meeting the hole only on its boundary.
bool certify_forbidden(const Window& w, const Hole& h, bool strict);

// window [0(w01)^m w0 · 1w(10w)^m 1]; w must be a palindrome
Window h_witness(const Word& w, int m);

CycleReport scan_cycles(const Hole& h, int max_p, int jobs = 1);

struct DimBounds {
    double lower = 0;
    double upper = 0;
    int L = 0;
    int m = 0;
    // nodes of the strongly connected certificate subgraph behind `lower`
    std::vector<std::uint32_t> core_nodes;
};

// Transfer-graph dimension bounds on windows with |left| = |right| = L,
// walk length m (m >= 2L). Upper graph drops windows inside the closed
// hole; lower graph keeps only windows disjoint from the open hole.
DimBounds dim_bounds(const Hole& h, int L, int m, int jobs = 1);

// least n with 0.0^{floor(n/2)} 1 (0^n 1)^inf below the hole's clearance
// from the coordinate axes; the closure must avoid the square's boundary
int interior_witness(const Hole& h);

struct OmegaCount {
    Int count;
    Int bound;  // (2n+1) n^2 p(2n)^2
};

// count of length-(2n+1) binary windows realized as factors of the
// monotone-run-length survivor grammar
OmegaCount omega_count(int n);

// whether every shift of s (both directions) avoids open |x-y| > 1/2
bool balanced_survivor(const BiSeq& s);

// finite evidence sampler: pi-points of v^inf w1 · w2 v^inf over all
// {u,v}-concatenations w1 w2 of total length <= L; first open-hole hit
std::optional<Window> avoidance_sample(const Word& u, const Word& v, const Hole& h, int L);

// four extremal orbit points of the Cantor set over the level-k Thue-Morse
// word and its complement
std::vector<Point> pinfty_probe(int k);

}  // namespace baker
