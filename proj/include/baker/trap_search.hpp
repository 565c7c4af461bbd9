#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baker/holes.hpp"
#include "baker/symbolic.hpp"

namespace baker {

// Exact points harvested from the doubly-asymptotic orbit ...b^inf a b^inf...
struct ConstraintSet {
    Word a, b;
    std::vector<Point> points;
    std::vector<Point> limit_points;  // the cycle of b^inf
    Rat epsilon;
};

enum class SymMode { none, mirror, rotational };

struct SearchConfig {
    std::vector<Point> anchors;
    SymMode symmetry = SymMode::none;
    Rat area_threshold;
    Rat epsilon;
    int max_word_len = 3;
};

// Antichain of minimal convex polygons meeting every constraint.
struct Family {
    std::vector<ConvexPoly> polygons;
};

ConstraintSet cantor_orbit(const Word& a, const Word& b, const Rat& eps,
                           const std::optional<Box>& region = std::nullopt);

Family search(const SearchConfig& cfg, const std::vector<ConstraintSet>& constraints);

Rat lower_bound(const Family& f, const Rat& eps);

// all block pairs up to the configured word length, deduplicated by their
// harvested point sets, in canonical order
std::vector<ConstraintSet> campaign_constraints(const SearchConfig& cfg);

// line-oriented key=value campaign file
SearchConfig parse_campaign(const std::string& text,
                            std::vector<std::pair<Word, Word>>& explicit_pairs);

}  // namespace baker
