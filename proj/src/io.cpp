#include "systolic/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "systolic/errors.hpp"

namespace systolic {

namespace fs = std::filesystem;

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string json_digest(const json& j) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(j.dump())));
    return std::string(buf);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw InputError("invalid JSON in " + path);
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    fs::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write file: " + path);
    out << text;
    if (!out) throw InputError("write failed: " + path);
}

void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, canonical_text(j));
}

json complex_to_json(const SkeletonGraph& g, const std::vector<int>& boundary_ids) {
    json edges = json::array();
    for (auto [u, v] : g.edge_list_ids()) edges.push_back(json::array({u, v}));
    std::vector<int> boundary = boundary_ids;
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
    return json{{"vertices", g.ids()}, {"edges", edges}, {"boundary_vertices", boundary}};
}

namespace {

const json& expect_member(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string(what) + ": missing \"" + key + "\"");
    return j.at(key);
}

int expect_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw InputError(std::string(what) + ": expected an integer");
    return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(expect_int(e, what));
    return out;
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_string()) throw InputError(std::string(what) + ": expected strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

ComplexInput complex_from_json(const json& j) {
    ComplexInput out;
    std::vector<int> vertices = int_list(expect_member(j, "vertices", "complex"), "complex.vertices");
    std::vector<std::pair<int, int>> edges;
    const json& ej = expect_member(j, "edges", "complex");
    if (!ej.is_array()) throw InputError("complex.edges: expected an array");
    for (const json& e : ej) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("complex.edges: each edge is a [u, v] pair");
        edges.emplace_back(expect_int(e[0], "complex.edges"), expect_int(e[1], "complex.edges"));
    }
    out.graph = SkeletonGraph::from_edges(std::move(vertices), edges);
    if (j.contains("boundary_vertices")) {
        out.boundary_ids = int_list(j.at("boundary_vertices"), "complex.boundary_vertices");
        for (int id : out.boundary_ids)
            if (!out.graph.has_vertex(id))
                throw InputError("complex.boundary_vertices: unknown vertex " + std::to_string(id));
        std::sort(out.boundary_ids.begin(), out.boundary_ids.end());
        out.boundary_ids.erase(std::unique(out.boundary_ids.begin(), out.boundary_ids.end()),
                               out.boundary_ids.end());
    }
    return out;
}

json presentation_to_json(const Presentation& p) {
    json generators = json::array();
    json involutions = json::array();
    for (int s = 0; s < p.symbol_count(); ++s) {
        const std::string& name = p.symbol(s);
        if (name.size() >= 3 && name.compare(name.size() - 3, 3, "^-1") == 0) continue;
        generators.push_back(name);
        if (p.is_involution(s)) involutions.push_back(name);
    }
    json relators = json::array();
    for (const Word& r : p.relators()) relators.push_back(p.word_symbols(r));
    return json{{"generators", generators}, {"involutions", involutions}, {"relators", relators}};
}

RawPresentation raw_presentation_from_json(const json& j) {
    RawPresentation raw;
    raw.generators = string_list(expect_member(j, "generators", "presentation"),
                                 "presentation.generators");
    if (j.contains("involutions"))
        raw.involutions = string_list(j.at("involutions"), "presentation.involutions");
    if (j.contains("relators")) {
        const json& rj = j.at("relators");
        if (!rj.is_array()) throw InputError("presentation.relators: expected an array");
        for (const json& r : rj) raw.relator_words.push_back(string_list(r, "presentation.relators"));
    }
    return raw;
}

json action_to_json(const VertexAction& a) {
    const Presentation& p = a.presentation();
    const SkeletonGraph& g = a.patch();
    json maps = json::object();
    for (int s = 0; s < p.symbol_count(); ++s) {
        json pairs = json::array();
        for (int v = 0; v < g.size(); ++v) {
            int w = a.apply_symbol(s, v);
            if (w >= 0) pairs.push_back(json::array({g.id_of(v), g.id_of(w)}));
        }
        maps[p.symbol(s)] = std::move(pairs);
    }
    return json{{"maps", maps}};
}

std::map<std::string, std::vector<std::pair<int, int>>> action_maps_from_json(const json& j) {
    std::map<std::string, std::vector<std::pair<int, int>>> out;
    const json& maps = expect_member(j, "maps", "action");
    if (!maps.is_object()) throw InputError("action.maps: expected an object");
    for (auto it = maps.begin(); it != maps.end(); ++it) {
        std::vector<std::pair<int, int>> pairs;
        if (!it.value().is_array()) throw InputError("action.maps: expected pair arrays");
        for (const json& e : it.value()) {
            if (!e.is_array() || e.size() != 2)
                throw InputError("action.maps: each entry is a [from, to] pair");
            pairs.emplace_back(expect_int(e[0], "action.maps"), expect_int(e[1], "action.maps"));
        }
        out[it.key()] = std::move(pairs);
    }
    return out;
}

json path_data_to_json(const EquivariantPathData& d, const Presentation& p,
                       const SkeletonGraph& X) {
    json gamma = json::object();
    for (int s = 0; s < p.symbol_count(); ++s) {
        json ids = json::array();
        for (int v : d.gamma[static_cast<size_t>(s)]) ids.push_back(X.id_of(v));
        gamma[p.symbol(s)] = std::move(ids);
    }
    return json{{"x0", X.id_of(d.x0)}, {"gamma", gamma}};
}

std::map<std::string, std::vector<int>> raw_paths_from_json(const json& j, int* x0_id) {
    *x0_id = expect_int(expect_member(j, "x0", "paths"), "paths.x0");
    std::map<std::string, std::vector<int>> out;
    const json& gamma = expect_member(j, "gamma", "paths");
    if (!gamma.is_object()) throw InputError("paths.gamma: expected an object");
    for (auto it = gamma.begin(); it != gamma.end(); ++it)
        out[it.key()] = int_list(it.value(), "paths.gamma");
    return out;
}

namespace {

json resolve_section(const json& cfg, const char* key, const std::string& base_dir) {
    if (!cfg.contains(key)) return json();
    const json& v = cfg.at(key);
    if (v.is_null()) return json();
    if (v.is_object()) return v;
    if (!v.is_string())
        throw InputError(std::string("config.") + key + ": expected a file path or an object");
    std::string name = v.get<std::string>();
    fs::path p(name);
    if (p.is_absolute()) return load_json_file(p.string());
    fs::path local = fs::path(base_dir) / p;
    if (fs::exists(local)) return load_json_file(local.string());
    if (const char* data = std::getenv("SYSTO_DATA")) {
        fs::path shared = fs::path(data) / p;
        if (fs::exists(shared)) return load_json_file(shared.string());
    }
    throw InputError(std::string("config.") + key + ": cannot find input file \"" + name + "\"");
}

int int_or(const json& j, const char* key, int dflt) {
    if (!j.contains(key) || j.at(key).is_null()) return dflt;
    return expect_int(j.at(key), key);
}

}  // namespace

RunConfig run_config_from_json(const json& j, const std::string& base_dir) {
    if (!j.is_object()) throw InputError("config: expected an object");
    RunConfig cfg;
    cfg.rho = int_or(j, "rho", cfg.rho);
    cfg.R_override = int_or(j, "R_override", cfg.R_override);
    cfg.interior_margin = int_or(j, "interior_margin", cfg.interior_margin);
    cfg.nullhomotopy_budget = int_or(j, "nullhomotopy_budget", cfg.nullhomotopy_budget);
    cfg.max_moves = int_or(j, "max_moves", cfg.max_moves);
    if (cfg.rho < 0) throw InputError("config.rho: must be >= 0");
    if (cfg.interior_margin < 0) throw InputError("config.interior_margin: must be >= 0");
    if (cfg.max_moves < 0) throw InputError("config.max_moves: must be >= 0");
    cfg.complex = resolve_section(j, "complex", base_dir);
    cfg.presentation = resolve_section(j, "presentation", base_dir);
    cfg.action = resolve_section(j, "action", base_dir);
    cfg.paths = resolve_section(j, "paths", base_dir);
    if (j.contains("output_dir")) {
        if (!j.at("output_dir").is_string()) throw InputError("config.output_dir: expected a string");
        cfg.output_dir = j.at("output_dir").get<std::string>();
    }
    if (j.contains("emit_timestamps")) {
        if (!j.at("emit_timestamps").is_boolean())
            throw InputError("config.emit_timestamps: expected a boolean");
        cfg.emit_timestamps = j.at("emit_timestamps").get<bool>();
    }
    if (j.contains("allow_unknown"))
        cfg.allow_unknown = string_list(j.at("allow_unknown"), "config.allow_unknown");
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    json j = load_json_file(path);
    std::string base = fs::path(path).parent_path().string();
    if (base.empty()) base = ".";
    return run_config_from_json(j, base);
}

json run_config_to_json(const RunConfig& cfg) {
    json j{{"rho", cfg.rho},
           {"interior_margin", cfg.interior_margin},
           {"nullhomotopy_budget", cfg.nullhomotopy_budget},
           {"max_moves", cfg.max_moves},
           {"emit_timestamps", cfg.emit_timestamps}};
    if (cfg.R_override >= 0)
        j["R_override"] = cfg.R_override;
    else
        j["R_override"] = nullptr;
    j["complex"] = cfg.complex;
    j["presentation"] = cfg.presentation;
    j["action"] = cfg.action;
    j["paths"] = cfg.paths;
    if (!cfg.output_dir.empty()) j["output_dir"] = cfg.output_dir;
    if (!cfg.allow_unknown.empty()) j["allow_unknown"] = cfg.allow_unknown;
    return j;
}

Setup load_setup(const RunConfig& cfg) {
    if (cfg.complex.is_null()) throw InputError("config: a \"complex\" section is required");
    if (cfg.presentation.is_null()) throw InputError("config: a \"presentation\" section is required");
    if (cfg.action.is_null()) throw InputError("config: an \"action\" section is required");
    if (cfg.paths.is_null()) throw InputError("config: a \"paths\" section is required");

    Setup s;
    ComplexInput ci = complex_from_json(cfg.complex);
    s.patch = std::make_unique<SkeletonGraph>(std::move(ci.graph));
    s.boundary_ids = std::move(ci.boundary_ids);
    s.presentation = std::make_unique<Presentation>(symmetrize(raw_presentation_from_json(cfg.presentation)));
    s.action = std::make_unique<VertexAction>(*s.presentation, *s.patch,
                                              action_maps_from_json(cfg.action));
    int x0_id = 0;
    std::map<std::string, std::vector<int>> raw = raw_paths_from_json(cfg.paths, &x0_id);
    s.paths = make_path_data(*s.presentation, *s.action, x0_id, raw);
    return s;
}

std::string export_dot(const SkeletonGraph& g, const std::vector<int>* label_ids,
                       const std::set<std::pair<int, int>>& added_edges,
                       const std::string& graph_name) {
    std::ostringstream out;
    out << "graph " << (graph_name.empty() ? "G" : graph_name) << " {\n";
    out << "  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < g.size(); ++v) {
        out << "  n" << v << " [label=\"" << g.id_of(v);
        if (label_ids) out << "/" << (*label_ids)[static_cast<size_t>(v)];
        out << "\"];\n";
    }
    for (auto [u, v] : g.edge_list_ids()) {
        out << "  n" << g.index_of(u) << " -- n" << g.index_of(v);
        if (added_edges.count({u, v})) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace systolic
