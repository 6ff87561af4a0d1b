#include <cstdlib>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "systolic/errors.hpp"
#include "systolic/group_ball.hpp"
#include "systolic/io.hpp"

using namespace systolic;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("systo-io-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

// Replaces $SYSTO_DATA for one scope; the ctest harness sets it globally.
struct ScopedEnv {
    std::string key, old;
    bool had;
    ScopedEnv(const char* k, const std::string& value) : key(k) {
        const char* prev = std::getenv(k);
        had = prev != nullptr;
        if (had) old = prev;
        setenv(k, value.c_str(), 1);
    }
    ~ScopedEnv() {
        if (had)
            setenv(key.c_str(), old.c_str(), 1);
        else
            unsetenv(key.c_str());
    }
};

}  // namespace

TEST_CASE("canonical text is sorted, indented and reparsable") {
    json j = json::parse(R"({"zeta": 1, "alpha": [3, {"y": 2, "x": 1}], "mid": null})");
    std::string text = canonical_text(j);
    CHECK(text.back() == '\n');
    CHECK(json::parse(text) == j);
    CHECK(text.find("\"alpha\"") < text.find("\"mid\""));
    CHECK(text.find("\"mid\"") < text.find("\"zeta\""));
    CHECK(text.find("\"x\"") < text.find("\"y\""));
    // Two-space indentation, no tabs.
    CHECK(text.find("  \"alpha\"") != std::string::npos);
    CHECK(text.find('\t') == std::string::npos);
}

TEST_CASE("digests hash the compact form, not the formatting") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(json_digest(json()) == "5b9bc4ba528108e4");
    CHECK(json_digest(json::object()) == "08f44b07b5901a25");
    CHECK(json_digest(json::parse("[1,2]")) == "6a12f12d4705a9b6");
    json j = json::parse(R"({"b": [1, 2], "a": true})");
    CHECK(json_digest(j) == json_digest(json::parse(canonical_text(j))));
    CHECK(json_digest(j) != json_digest(json::parse(R"({"b": [2, 1], "a": true})")));
}

TEST_CASE("json files round trip and failures carry the path") {
    TempDir tmp;
    json j{{"k", 7}};
    write_json_file(tmp.file("x.json"), j);
    CHECK(load_json_file(tmp.file("x.json")) == j);
    CHECK(read_text_file(tmp.file("x.json")) == canonical_text(j));

    try {
        load_json_file(tmp.file("missing.json"));
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("missing.json") != std::string::npos);
    }
    write_text_file(tmp.file("broken.json"), "{ nope");
    try {
        load_json_file(tmp.file("broken.json"));
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("invalid JSON") != std::string::npos);
    }
}

TEST_CASE("complexes round trip through json") {
    SkeletonGraph g = fixtures::octahedron();
    json j = complex_to_json(g, {0, 5});
    ComplexInput back = complex_from_json(j);
    CHECK(back.graph.ids() == g.ids());
    CHECK(back.graph.edge_list_ids() == g.edge_list_ids());
    CHECK(back.boundary_ids == std::vector<int>{0, 5});

    json bad = j;
    bad["boundary_vertices"] = {99};
    CHECK_THROWS_AS(complex_from_json(bad), InputError);
    bad = j;
    bad["edges"].push_back({1, 2, 3});
    CHECK_THROWS_AS(complex_from_json(bad), InputError);
    bad = j;
    bad.erase("vertices");
    CHECK_THROWS_AS(complex_from_json(bad), InputError);
}

TEST_CASE("presentations round trip through json") {
    fixtures::Fixture f = fixtures::c6_fixture();
    json j = presentation_to_json(*f.presentation);
    Presentation back = symmetrize(raw_presentation_from_json(j));
    CHECK(back.symbol_count() == f.presentation->symbol_count());
    for (int s = 0; s < back.symbol_count(); ++s)
        CHECK(back.symbol(s) == f.presentation->symbol(s));
    CHECK(presentation_to_json(back) == j);

    json bad = j;
    bad["relators"] = 3;
    CHECK_THROWS_AS(raw_presentation_from_json(bad), InputError);
}

TEST_CASE("actions round trip through json") {
    fixtures::Fixture f = fixtures::line_fixture();
    json j = action_to_json(*f.action);
    VertexAction back(*f.presentation, *f.patch, action_maps_from_json(j));
    for (int s = 0; s < f.presentation->symbol_count(); ++s)
        for (int v = 0; v < f.patch->size(); ++v)
            CHECK(back.apply_symbol(s, v) == f.action->apply_symbol(s, v));
    CHECK(action_to_json(back) == j);

    json bad = j;
    bad["maps"]["u"].push_back({7});
    CHECK_THROWS_AS(action_maps_from_json(bad), InputError);
    CHECK_THROWS_AS(action_maps_from_json(json{{"maps", 3}}), InputError);
}

TEST_CASE("path data round trips through json") {
    fixtures::Fixture f = fixtures::z2_fixture();
    json j = path_data_to_json(f.paths, *f.presentation, *f.patch);
    int x0_id = -1;
    auto raw = raw_paths_from_json(j, &x0_id);
    CHECK(x0_id == f.patch->id_of(f.paths.x0));
    EquivariantPathData back = make_path_data(*f.presentation, *f.action, x0_id, raw);
    CHECK(path_data_to_json(back, *f.presentation, *f.patch) == j);
    CHECK(back.L == f.paths.L);
}

TEST_CASE("run configs default, validate and round trip") {
    RunConfig dflt = run_config_from_json(json::object(), ".");
    CHECK(dflt.rho == 1);
    CHECK(dflt.R_override == -1);
    CHECK(dflt.interior_margin == 1);
    CHECK(dflt.nullhomotopy_budget == 0);
    CHECK(dflt.max_moves == 128);
    CHECK(!dflt.emit_timestamps);
    CHECK(dflt.complex.is_null());

    CHECK_THROWS_AS(run_config_from_json(json::parse("[]"), "."), InputError);
    CHECK_THROWS_AS(run_config_from_json(json{{"rho", -1}}, "."), InputError);
    CHECK_THROWS_AS(run_config_from_json(json{{"max_moves", -2}}, "."), InputError);
    CHECK_THROWS_AS(run_config_from_json(json{{"complex", 17}}, "."), InputError);
    CHECK_THROWS_AS(run_config_from_json(json{{"emit_timestamps", "yes"}}, "."), InputError);

    fixtures::Fixture f = fixtures::line_fixture();
    RunConfig cfg = run_config_from_json(f.config(), ".");
    CHECK(cfg.rho == 2);
    CHECK(cfg.interior_margin == 0);
    json round = run_config_to_json(cfg);
    CHECK(round.at("R_override").is_null());
    RunConfig again = run_config_from_json(round, ".");
    CHECK(again.rho == cfg.rho);
    CHECK(again.complex == cfg.complex);
    CHECK(again.paths == cfg.paths);
}

TEST_CASE("config sections resolve locally, then via the data root") {
    TempDir local;
    TempDir shared;
    json complex = complex_to_json(fixtures::path_graph(3), {});
    write_json_file(local.file("complex.json"), complex);
    write_json_file(shared.file("shared.json"), complex);

    RunConfig from_local =
        run_config_from_json(json{{"complex", "complex.json"}}, local.str());
    CHECK(from_local.complex == complex);

    {
        ScopedEnv env("SYSTO_DATA", shared.str());
        RunConfig via_data =
            run_config_from_json(json{{"complex", "shared.json"}}, local.str());
        CHECK(via_data.complex == complex);
        // A local file of the same name wins over the data root.
        json other = complex_to_json(fixtures::path_graph(2), {});
        write_json_file(local.file("shared.json"), other);
        CHECK(run_config_from_json(json{{"complex", "shared.json"}}, local.str()).complex ==
              other);
    }
    try {
        run_config_from_json(json{{"complex", "nowhere.json"}}, local.str());
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("cannot find input file") != std::string::npos);
    }

    // Absolute paths bypass both roots.
    RunConfig abs = run_config_from_json(json{{"complex", local.file("complex.json")}}, "/");
    CHECK(abs.complex == complex);

    // An inline object is taken as is.
    CHECK(run_config_from_json(json{{"complex", complex}}, "/").complex == complex);

    write_json_file(local.file("config.json"),
                    json{{"rho", 3}, {"complex", "complex.json"}});
    RunConfig loaded = load_run_config(local.file("config.json"));
    CHECK(loaded.rho == 3);
    CHECK(loaded.complex == complex);
}

TEST_CASE("a config bundles into a working setup") {
    fixtures::Fixture f = fixtures::c6_fixture();
    RunConfig cfg = run_config_from_json(f.config(), ".");
    Setup s = load_setup(cfg);
    CHECK(s.patch->edge_list_ids() == f.patch->edge_list_ids());
    CHECK(s.boundary_ids == f.boundary_ids);
    CHECK(s.presentation->symbol_count() == 2);
    CHECK(s.paths.x0 == f.paths.x0);
    CHECK(s.paths.L == 1);
    CHECK(enumerate_ball(*s.presentation, *s.action, cfg.rho).size() == 6);

    RunConfig missing = cfg;
    missing.action = json();
    CHECK_THROWS_AS(load_setup(missing), InputError);
}

TEST_CASE("dot export is deterministic text") {
    SkeletonGraph g = fixtures::complete_graph(3);
    std::vector<int> labels{10, 11, 12};
    std::string dot = export_dot(g, &labels, {{0, 2}}, "T");
    CHECK(dot ==
          "graph T {\n"
          "  node [shape=circle fontsize=10];\n"
          "  n0 [label=\"0/10\"];\n"
          "  n1 [label=\"1/11\"];\n"
          "  n2 [label=\"2/12\"];\n"
          "  n0 -- n1;\n"
          "  n0 -- n2 [style=dashed];\n"
          "  n1 -- n2;\n"
          "}\n");
    CHECK(export_dot(g, nullptr, {}, "") ==
          "graph G {\n"
          "  node [shape=circle fontsize=10];\n"
          "  n0 [label=\"0\"];\n"
          "  n1 [label=\"1\"];\n"
          "  n2 [label=\"2\"];\n"
          "  n0 -- n1;\n"
          "  n0 -- n2;\n"
          "  n1 -- n2;\n"
          "}\n");
}

TEST_CASE("cli binary ships byte-identical fixture data") {
    const char* data = std::getenv("SYSTO_DATA");
    if (!data) return;  // exercised by the ctest harness, which sets the root
    TempDir tmp;
    fixtures::write_fixture_data(tmp.str());
    std::vector<std::string> files = fixtures::fixture_data_files();
    REQUIRE(!files.empty());
    for (const std::string& rel : files) {
        CAPTURE(rel);
        REQUIRE(fs::exists(fs::path(data) / rel));
        CHECK(read_text_file((fs::path(data) / rel).string()) ==
              read_text_file((tmp.path / rel).string()));
    }
}
