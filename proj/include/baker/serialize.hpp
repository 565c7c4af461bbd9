#pragma once

#include <json.hpp>

#include "baker/geometry.hpp"

namespace baker {

using Json = nlohmann::ordered_json;

inline Json rat_json(const Rat& r) { return r.get_str(); }

inline Json point_json(const Point& p) {
    return Json::array({rat_json(p.x), rat_json(p.y)});
}

// external polygon format: decimal-string integer pairs per coordinate
inline Json poly_json(const ConvexPoly& poly) {
    Json verts = Json::array();
    for (const auto& v : poly.vertices)
        verts.push_back(Json::array(
            {Json::array({v.x.get_num().get_str(), v.x.get_den().get_str()}),
             Json::array({v.y.get_num().get_str(), v.y.get_den().get_str()})}));
    return Json{{"vertices", verts}};
}

}  // namespace baker
