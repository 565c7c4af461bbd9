#pragma once

#include <string>
#include <vector>

#include "baker/geometry.hpp"

namespace baker {

// unit square mapped to a 1000x1000 viewport, y axis pointing up
std::string svg_document(const std::vector<ConvexPoly>& polys, const std::vector<Box>& boxes);

void svg_write(const std::string& path, const std::vector<ConvexPoly>& polys,
               const std::vector<Box>& boxes);

}  // namespace baker
