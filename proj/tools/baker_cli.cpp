#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "baker/analysis.hpp"
#include "baker/serialize.hpp"
#include "baker/svg.hpp"
#include "baker/trap_search.hpp"

namespace {

using baker::Json;

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Json rat_pair(const baker::Rat& r) {
    return Json{{"exact", baker::rat_json(r)}, {"decimal", baker::rat_double(r)}};
}

int run_hole(const std::string& spec, const std::string& svg_path) {
    std::vector<baker::ConvexPoly> polys;
    std::vector<baker::Box> boxes;
    if (spec.rfind("trap:", 0) == 0) {
        auto trap = baker::complete_trap(std::stoi(spec.substr(5)));
        boxes = trap.boxes;
        for (const auto& b : boxes)
            emit(Json{{"box",
                       Json{{"x", Json::array({baker::rat_json(b.x_lo), baker::rat_json(b.x_hi)})},
                            {"y", Json::array({baker::rat_json(b.y_lo), baker::rat_json(b.y_hi)})}}}});
        emit(Json{{"spec", spec},
                  {"boxes", boxes.size()},
                  {"measure", rat_pair(baker::union_area_boxes(boxes))}});
    } else {
        baker::Hole h = baker::named_hole(spec);
        polys = h.parts;
        baker::Rat total = 0;
        for (std::size_t i = 0; i < h.parts.size(); ++i) {
            Json j = baker::poly_json(h.parts[i]);
            j["part"] = i;
            j["area"] = rat_pair(h.parts[i].area());
            total += h.parts[i].area();
            emit(j);
        }
        emit(Json{{"spec", spec},
                  {"name", h.name},
                  {"parts", h.parts.size()},
                  {"convex", h.convex},
                  {"area", rat_pair(total)}});
    }
    if (!svg_path.empty()) baker::svg_write(svg_path, polys, boxes);
    return 0;
}

int run_forbidden(const std::string& window, const std::string& hole, const std::string& mode,
                  const std::string& expect) {
    if (mode != "strict" && mode != "essential") throw CLI::ValidationError("--mode", "strict|essential");
    baker::Window w = baker::Window::parse(window);
    baker::Hole h = baker::named_hole(hole);
    bool res = baker::certify_forbidden(w, h, mode == "strict");
    Json j{{"window", w.str()}, {"hole", hole}, {"mode", mode}, {"result", res}};
    if (mode == "essential")
        j["note"] = "closure certificate; orbits meeting the hole only on its boundary excepted";
    emit(j);
    if (!expect.empty() && ((expect == "true") != res)) return 1;
    return 0;
}

int run_cycles(const std::string& hole, int max_period, int jobs, const std::string& expect) {
    baker::Hole h = baker::named_hole(hole);
    auto rep = baker::scan_cycles(h, max_period, jobs);
    for (const auto& e : rep.entries)
        emit(Json{{"cycle", e.cycle.word},
                  {"status", baker::to_string(e.status)},
                  {"boundary_fixed", e.boundary_fixed}});
    emit(Json{{"hole", hole},
              {"max_period", max_period},
              {"verdict", rep.cycle_trap ? "cycle trap" : "not a cycle trap"}});
    if (!expect.empty() && ((expect == "trap") != rep.cycle_trap)) return 1;
    return 0;
}

int run_dim(const std::string& hole, int L, int m, int jobs) {
    baker::Hole h = baker::named_hole(hole);
    auto b = baker::dim_bounds(h, L, m, jobs);
    emit(Json{{"hole", hole},
              {"L", b.L},
              {"m", b.m},
              {"lower", b.lower},
              {"upper", b.upper},
              {"core_size", b.core_nodes.size()}});
    return 0;
}

int run_search(const std::string& config_path, const std::string& svg_path, int jobs) {
    (void)jobs;
    std::ifstream f(config_path);
    if (!f) throw CLI::ValidationError("--config", "cannot open " + config_path);
    std::stringstream buf;
    buf << f.rdbuf();
    std::vector<std::pair<baker::Word, baker::Word>> pairs;
    baker::SearchConfig cfg = baker::parse_campaign(buf.str(), pairs);
    std::vector<baker::ConstraintSet> constraints;
    if (!pairs.empty())
        for (const auto& [a, b] : pairs)
            constraints.push_back(baker::cantor_orbit(a, b, cfg.epsilon));
    else
        constraints = baker::campaign_constraints(cfg);
    baker::Family fam = baker::search(cfg, constraints);
    baker::Rat min_area = -1;
    for (const auto& p : fam.polygons) {
        Json j = baker::poly_json(p);
        j["area"] = rat_pair(p.area());
        emit(j);
        if (min_area < 0 || p.area() < min_area) min_area = p.area();
    }
    emit(Json{{"constraints", constraints.size()},
              {"count", fam.polygons.size()},
              {"min_area", rat_pair(min_area)},
              {"lower_bound", rat_pair(baker::lower_bound(fam, cfg.epsilon))}});
    if (!svg_path.empty()) baker::svg_write(svg_path, fam.polygons, {});
    return 0;
}

int run_appendix(const std::string& check, const std::string& word, int m) {
    if (check == "balanced") {
        baker::BiSeq s =
            baker::make_biseq(baker::reverse_word(word), "", "", word);
        bool surv = baker::balanced_survivor(s);
        bool bal = baker::is_balanced(word, true);
        emit(Json{{"word", word},
                  {"survivor", surv},
                  {"cyclically_balanced", bal},
                  {"agrees", surv == bal}});
        return surv == bal ? 0 : 1;
    }
    if (check == "witness") {
        baker::Window w = baker::h_witness(word, m);
        bool ok = baker::certify_forbidden(w, baker::named_hole("h-script"), false);
        emit(Json{{"word", word}, {"m", m}, {"window", w.str()}, {"certified", ok}});
        return ok ? 0 : 1;
    }
    throw CLI::ValidationError("--check", "balanced|witness");
}

int run_constants(const std::string& which) {
    if (which == "gs") {
        emit(Json{{"constant", "gs"}, {"terms", 8}, {"value", rat_pair(baker::doubling_constant(8))}});
        return 0;
    }
    if (which == "pinfty-area") {
        auto [inner, outer] = baker::p_infty_bounds(8);
        emit(Json{{"constant", "pinfty-area"},
                  {"inner_area", rat_pair(inner.parts[0].area())},
                  {"outer_area", rat_pair(outer.parts[0].area())}});
        return 0;
    }
    throw CLI::ValidationError("--which", "gs|pinfty-area");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic dynamics of the baker's map with a hole"};
    app.require_subcommand(1);
    int jobs = 1;
    if (const char* env = std::getenv("BAKER_JOBS")) jobs = std::atoi(env);
    app.add_option("--jobs", jobs, "worker threads for scans");

    std::string spec, svg_path, window, hole, mode = "essential", expect, config_path;
    std::string check, word;
    int max_period = 12, L = 6, m = 24, wm = 0;

    auto* c_hole = app.add_subcommand("hole", "emit a hole's geometry");
    c_hole->add_option("--spec", spec)->required();
    c_hole->add_option("--svg", svg_path);

    auto* c_forb = app.add_subcommand("forbidden", "certify a forbidden window");
    c_forb->add_option("--window", window)->required();
    c_forb->add_option("--hole", hole)->required();
    c_forb->add_option("--mode", mode);
    c_forb->add_option("--expect", expect);

    auto* c_cyc = app.add_subcommand("cycles", "classify periodic orbits against a hole");
    c_cyc->add_option("--hole", hole)->required();
    c_cyc->add_option("--max-period", max_period)->required();
    c_cyc->add_option("--expect", expect);

    auto* c_dim = app.add_subcommand("dim", "dimension bounds from the transfer graph");
    c_dim->add_option("--hole", hole)->required();
    c_dim->add_option("-L", L)->required();
    c_dim->add_option("-m", m)->required();

    auto* c_search = app.add_subcommand("search", "minimal-area trap family search");
    c_search->add_option("--config", config_path)->required();
    c_search->add_option("--svg", svg_path);

    auto* c_app = app.add_subcommand("appendix", "balanced-survivor and witness checks");
    c_app->add_option("--check", check)->required();
    c_app->add_option("--word", word)->required();
    c_app->add_option("-m", wm);

    auto* c_const = app.add_subcommand("constants", "named numeric constants");
    c_const->add_option("--which", check)->required();

    try {
        app.parse(argc, argv);
        if (c_hole->parsed()) return run_hole(spec, svg_path);
        if (c_forb->parsed()) return run_forbidden(window, hole, mode, expect);
        if (c_cyc->parsed()) return run_cycles(hole, max_period, jobs, expect);
        if (c_dim->parsed()) return run_dim(hole, L, m, jobs);
        if (c_search->parsed()) return run_search(config_path, svg_path, jobs);
        if (c_app->parsed()) return run_appendix(check, word, wm);
        if (c_const->parsed()) return run_constants(check);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return 2;
}
