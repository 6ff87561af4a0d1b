#include "support/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "systolic/errors.hpp"

namespace fixtures {

using namespace systolic;

SkeletonGraph path_graph(int n) {
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return SkeletonGraph::from_edges(std::move(vs), es);
}

SkeletonGraph cycle_graph(int n) {
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back(i);
        es.emplace_back(i, (i + 1) % n);
    }
    return SkeletonGraph::from_edges(std::move(vs), es);
}

SkeletonGraph complete_graph(int n) {
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back(i);
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    }
    return SkeletonGraph::from_edges(std::move(vs), es);
}

SkeletonGraph wheel_graph(int rim) {
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < rim; ++i) {
        vs.push_back(i);
        es.emplace_back(i, (i + 1) % rim);
        es.emplace_back(i, rim);
    }
    vs.push_back(rim);
    return SkeletonGraph::from_edges(std::move(vs), es);
}

SkeletonGraph octahedron() {
    std::vector<int> vs{0, 1, 2, 3, 4, 5};
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (j == (i ^ 1)) continue;  // antipodal pair
            es.emplace_back(i, j);
        }
    return SkeletonGraph::from_edges(std::move(vs), es);
}

SkeletonGraph pentagon_fan() {
    std::vector<int> vs{0, 1, 2, 3, 4, 5};
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, 5);
    }
    return SkeletonGraph::from_edges(std::move(vs), es);
}

int hex_distance(Axial a, Axial b) {
    int dx = a.first - b.first;
    int dy = a.second - b.second;
    if ((dx >= 0 && dy >= 0) || (dx <= 0 && dy <= 0))
        return std::max(std::abs(dx), std::abs(dy));
    return std::abs(dx) + std::abs(dy);
}

Axial rotate60(Axial v) { return {v.first - v.second, v.first}; }

LatticePatch lattice_patch(int radius) {
    LatticePatch out;
    out.radius = radius;
    for (int x = -radius; x <= radius; ++x)
        for (int y = -radius; y <= radius; ++y)
            if (hex_distance({x, y}, {0, 0}) <= radius) {
                int id = static_cast<int>(out.coord.size());
                out.id_at[{x, y}] = id;
                out.coord.push_back({x, y});
            }
    static const Axial steps[6] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int id = 0; id < static_cast<int>(out.coord.size()); ++id) {
        vs.push_back(id);
        Axial c = out.coord[static_cast<size_t>(id)];
        if (hex_distance(c, {0, 0}) == radius) out.boundary_ids.push_back(id);
        for (const Axial& s : steps) {
            auto it = out.id_at.find({c.first + s.first, c.second + s.second});
            if (it != out.id_at.end() && it->second > id) es.emplace_back(id, it->second);
        }
    }
    out.graph = SkeletonGraph::from_edges(std::move(vs), es);
    return out;
}

json Fixture::config() const {
    return json{{"rho", rho},
                {"interior_margin", interior_margin},
                {"nullhomotopy_budget", 0},
                {"max_moves", 64},
                {"complex", complex_to_json(*patch, boundary_ids)},
                {"presentation", presentation_to_json(*presentation)},
                {"action", action_to_json(*action)},
                {"paths", path_data_to_json(paths, *presentation, *patch)}};
}

Fixture line_fixture() {
    Fixture f;
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = -8; i <= 8; ++i) {
        vs.push_back(i);
        if (i < 8) es.emplace_back(i, i + 1);
    }
    f.patch = std::make_unique<SkeletonGraph>(SkeletonGraph::from_edges(std::move(vs), es));
    f.presentation = std::make_unique<Presentation>(symmetrize(RawPresentation{{"u"}, {}, {}}));
    std::map<std::string, std::vector<std::pair<int, int>>> maps;
    for (int i = -8; i <= 6; ++i) maps["u"].emplace_back(i, i + 2);
    f.action = std::make_unique<VertexAction>(*f.presentation, *f.patch, maps);
    f.paths = make_path_data(*f.presentation, *f.action, 0, {{"u", {0, 1, 2}}});
    f.rho = 2;
    f.interior_margin = 0;
    return f;
}

namespace {

Fixture c6_base(int patch_radius, Axial x0, const std::vector<Axial>& gamma_r) {
    Fixture f;
    LatticePatch patch = lattice_patch(patch_radius);
    f.patch = std::make_unique<SkeletonGraph>(patch.graph);
    f.boundary_ids = patch.boundary_ids;
    f.presentation = std::make_unique<Presentation>(
        symmetrize(RawPresentation{{"r"}, {}, {{"r", "r", "r", "r", "r", "r"}}}));
    std::map<std::string, std::vector<std::pair<int, int>>> maps;
    for (int id = 0; id < static_cast<int>(patch.coord.size()); ++id)
        maps["r"].emplace_back(id, patch.id_at.at(rotate60(patch.coord[static_cast<size_t>(id)])));
    f.action = std::make_unique<VertexAction>(*f.presentation, *f.patch, maps);
    std::vector<int> gamma_ids;
    for (const Axial& c : gamma_r) gamma_ids.push_back(patch.id_at.at(c));
    f.paths = make_path_data(*f.presentation, *f.action, patch.id_at.at(x0), {{"r", gamma_ids}});
    f.rho = 3;
    f.interior_margin = 1;
    return f;
}

}  // namespace

Fixture c6_fixture() { return c6_base(4, {1, 0}, {{1, 0}, {1, 1}}); }

Fixture c6_center_fixture() {
    // gamma_r is a closed triangle through the fixed base vertex; the loop
    // radii push R to 5, so the patch must hold the 5-ball with margin.
    return c6_base(7, {0, 0}, {{0, 0}, {1, 0}, {1, 1}, {0, 0}});
}

Fixture z2_fixture(int patch_radius) {
    Fixture f;
    LatticePatch patch = lattice_patch(patch_radius);
    f.patch = std::make_unique<SkeletonGraph>(patch.graph);
    f.boundary_ids = patch.boundary_ids;
    f.presentation = std::make_unique<Presentation>(
        symmetrize(RawPresentation{{"a", "b"}, {}, {{"a", "b", "a^-1", "b^-1"}}}));
    std::map<std::string, std::vector<std::pair<int, int>>> maps;
    for (int id = 0; id < static_cast<int>(patch.coord.size()); ++id) {
        Axial c = patch.coord[static_cast<size_t>(id)];
        auto ia = patch.id_at.find({c.first + 2, c.second});
        if (ia != patch.id_at.end()) maps["a"].emplace_back(id, ia->second);
        auto ib = patch.id_at.find({c.first + 1, c.second + 1});
        if (ib != patch.id_at.end()) maps["b"].emplace_back(id, ib->second);
    }
    f.action = std::make_unique<VertexAction>(*f.presentation, *f.patch, maps);
    int o = patch.id_at.at({0, 0});
    int e1 = patch.id_at.at({1, 0});
    f.paths = make_path_data(
        *f.presentation, *f.action, o,
        {{"a", {o, e1, patch.id_at.at({2, 0})}}, {"b", {o, e1, patch.id_at.at({1, 1})}}});
    f.rho = 2;
    f.interior_margin = 1;
    return f;
}

namespace {

ExtensionCase make_case(SkeletonGraph X, std::vector<int> f_images) {
    auto p = std::make_unique<Presentation>(symmetrize(RawPresentation{}));
    auto Xp = std::make_unique<SkeletonGraph>(std::move(X));
    auto a = std::make_unique<VertexAction>(
        *p, *Xp, std::map<std::string, std::vector<std::pair<int, int>>>{});
    Ball ball = enumerate_ball(*p, *a, 0);
    FExtension W(cycle_graph(4), std::move(f_images), {}, 0);
    return ExtensionCase{std::move(p), std::move(Xp), std::move(a), std::move(ball),
                         std::move(W)};
}

}  // namespace

ExtensionCase bijective_square_case() {
    // X: square 0-1-2-3 with the diagonal 0-2; the cycle embeds onto it.
    SkeletonGraph X = SkeletonGraph::from_edges({0, 1, 2, 3},
                                                {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    return make_case(std::move(X), {0, 1, 2, 3});
}

ExtensionCase non_consecutive_case() {
    // X: star 1-0-2; opposite cycle corners both map to the hub 0.
    SkeletonGraph X = SkeletonGraph::from_edges({0, 1, 2}, {{0, 1}, {0, 2}});
    return make_case(std::move(X), {0, 1, 0, 2});
}

ExtensionCase consecutive_case() {
    // X: triangle; two adjacent cycle corners share the image 0.
    return make_case(complete_graph(3), {0, 0, 1, 2});
}

namespace {

struct NamedComplex {
    const char* name;
    json body;
};

std::vector<NamedComplex> standalone_complexes() {
    std::vector<NamedComplex> out;
    out.push_back({"pentagon", complex_to_json(cycle_graph(5), {})});
    out.push_back({"hexagon", complex_to_json(cycle_graph(6), {})});
    out.push_back({"octahedron", complex_to_json(octahedron(), {})});
    out.push_back({"w6", complex_to_json(wheel_graph(6), {})});
    out.push_back({"triangle", complex_to_json(complete_graph(3), {})});
    out.push_back({"path5", complex_to_json(path_graph(5), {})});
    out.push_back({"empty", complex_to_json(SkeletonGraph::from_edges({}, {}), {})});
    json nonflag = complex_to_json(complete_graph(3), {});
    nonflag["simplices"] = json::array({json::array({0, 1}), json::array({1, 2}),
                                        json::array({0, 2})});
    out.push_back({"nonflag_triangle", nonflag});
    return out;
}

json file_config(const Fixture& f) {
    return json{{"rho", f.rho},
                {"interior_margin", f.interior_margin},
                {"nullhomotopy_budget", 0},
                {"max_moves", 64},
                {"complex", "complex.json"},
                {"presentation", "presentation.json"},
                {"action", "action.json"},
                {"paths", "paths.json"}};
}

void write_fixture_dir(const std::string& dir, const std::string& name, const Fixture& f) {
    const std::string base = dir + "/" + name + "/";
    write_json_file(base + "config.json", file_config(f));
    write_json_file(base + "complex.json", complex_to_json(*f.patch, f.boundary_ids));
    write_json_file(base + "presentation.json", presentation_to_json(*f.presentation));
    write_json_file(base + "action.json", action_to_json(*f.action));
    write_json_file(base + "paths.json", path_data_to_json(f.paths, *f.presentation, *f.patch));
}

}  // namespace

void write_fixture_data(const std::string& dir) {
    write_fixture_dir(dir, "line", line_fixture());
    write_fixture_dir(dir, "c6", c6_fixture());
    write_fixture_dir(dir, "c6_center", c6_center_fixture());
    write_fixture_dir(dir, "z2", z2_fixture());
    for (const NamedComplex& c : standalone_complexes())
        write_json_file(dir + "/complexes/" + c.name + ".json", c.body);

    // Fault injections: a line run on a patch short enough that the outermost
    // ball center sits next to a declared boundary vertex (u.u lands at 4, and
    // the 2-ball there touches 5); and a C6 run whose R override undercuts the
    // certificate.
    {
        std::vector<int> vs;
        std::vector<std::pair<int, int>> es;
        for (int i = -5; i <= 5; ++i) {
            vs.push_back(i);
            if (i < 5) es.emplace_back(i, i + 1);
        }
        SkeletonGraph patch = SkeletonGraph::from_edges(std::move(vs), es);
        Presentation p = symmetrize(RawPresentation{{"u"}, {}, {}});
        std::map<std::string, std::vector<std::pair<int, int>>> maps;
        for (int i = -5; i <= 3; ++i) maps["u"].emplace_back(i, i + 2);
        VertexAction a(p, patch, maps);
        EquivariantPathData paths = make_path_data(p, a, 0, {{"u", {0, 1, 2}}});
        json fault1{{"rho", 2},
                    {"interior_margin", 0},
                    {"nullhomotopy_budget", 0},
                    {"max_moves", 64},
                    {"complex", complex_to_json(patch, {-5, 5})},
                    {"presentation", presentation_to_json(p)},
                    {"action", action_to_json(a)},
                    {"paths", path_data_to_json(paths, p, patch)}};
        write_json_file(dir + "/faults/line_patch_too_small.json", fault1);
    }
    json fault2{{"rho", 3},
                {"interior_margin", 1},
                {"nullhomotopy_budget", 0},
                {"max_moves", 64},
                {"R_override", 2},
                {"complex", "../c6/complex.json"},
                {"presentation", "../c6/presentation.json"},
                {"action", "../c6/action.json"},
                {"paths", "../c6/paths.json"}};
    write_json_file(dir + "/faults/c6_r_override_low.json", fault2);
}

std::vector<std::string> fixture_data_files() {
    std::vector<std::string> out;
    for (const char* fixture : {"line", "c6", "c6_center", "z2"})
        for (const char* part : {"config", "complex", "presentation", "action", "paths"})
            out.push_back(std::string(fixture) + "/" + part + ".json");
    for (const NamedComplex& c : standalone_complexes())
        out.push_back(std::string("complexes/") + c.name + ".json");
    out.push_back("faults/line_patch_too_small.json");
    out.push_back("faults/c6_r_override_low.json");
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fixtures
