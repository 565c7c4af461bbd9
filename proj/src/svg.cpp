#include "baker/svg.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace baker {

namespace {

double sx(const Rat& x) { return 1000.0 * rat_double(x); }
double sy(const Rat& y) { return 1000.0 * (1.0 - rat_double(y)); }

}  // namespace

std::string svg_document(const std::vector<ConvexPoly>& polys, const std::vector<Box>& boxes) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\" "
           "stroke=\"black\"/>\n";
    for (const auto& p : polys) {
        if (p.vertices.size() < 2) continue;
        out << "<polygon points=\"";
        for (const auto& v : p.vertices) out << sx(v.x) << "," << sy(v.y) << " ";
        out << "\" fill=\"#8888cc\" fill-opacity=\"0.55\" stroke=\"#333388\"/>\n";
    }
    for (const auto& b : boxes) {
        out << "<rect x=\"" << sx(b.x_lo) << "\" y=\"" << sy(b.y_hi) << "\" width=\""
            << sx(b.x_hi) - sx(b.x_lo) << "\" height=\"" << sy(b.y_lo) - sy(b.y_hi)
            << "\" fill=\"#cc8888\" fill-opacity=\"0.55\" stroke=\"#883333\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void svg_write(const std::string& path, const std::vector<ConvexPoly>& polys,
               const std::vector<Box>& boxes) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << svg_document(polys, boxes);
}

}  // namespace baker
