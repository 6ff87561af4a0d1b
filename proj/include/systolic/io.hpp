#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "systolic/path_data.hpp"
#include "systolic/presentation.hpp"
#include "systolic/skeleton_graph.hpp"
#include "systolic/vertex_action.hpp"

namespace systolic {

using json = nlohmann::json;

// Canonical text: objects carry sorted keys (the parser's native order),
// two-space indentation, trailing newline. Digests are FNV-1a 64 over the
// compact dump of the same value, so formatting never moves a digest.
std::string canonical_text(const json& j);
std::uint64_t fnv1a64(std::string_view bytes);
std::string json_digest(const json& j);  // 16 lowercase hex digits

json load_json_file(const std::string& path);  // InputError with the path on any failure
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
void write_json_file(const std::string& path, const json& j);

// {"vertices": [...], "edges": [[u, v], ...], "boundary_vertices": [...]}
struct ComplexInput {
    SkeletonGraph graph;
    std::vector<int> boundary_ids;
};
json complex_to_json(const SkeletonGraph& g, const std::vector<int>& boundary_ids);
ComplexInput complex_from_json(const json& j);

// {"generators": [...], "involutions": [...], "relators": [["a","b",...], ...]}
json presentation_to_json(const Presentation& p);
RawPresentation raw_presentation_from_json(const json& j);

// {"maps": {"a": [[from, to], ...], ...}}; missing inverse maps are derived.
json action_to_json(const VertexAction& a);
std::map<std::string, std::vector<std::pair<int, int>>> action_maps_from_json(const json& j);

// {"x0": id, "gamma": {"a": [id, id, ...], ...}}
json path_data_to_json(const EquivariantPathData& d, const Presentation& p,
                       const SkeletonGraph& X);
std::map<std::string, std::vector<int>> raw_paths_from_json(const json& j, int* x0_id);

struct RunConfig {
    int rho = 1;
    int R_override = -1;  // < 0: use the computed certificate
    int interior_margin = 1;
    int nullhomotopy_budget = 0;  // <= 0: size-based default per loop
    int max_moves = 128;
    // Each section is either a file path (resolved against the config file's
    // directory, then against $SYSTO_DATA) or an inline object.
    json complex;
    json presentation;
    json action;
    json paths;
    std::string output_dir;
    bool emit_timestamps = false;
    std::vector<std::string> allow_unknown;  // stage names that may stay unresolved
};
RunConfig run_config_from_json(const json& j, const std::string& base_dir);
RunConfig load_run_config(const std::string& path);
json run_config_to_json(const RunConfig& cfg);

// Everything a run needs, with ownership: the action points into the
// presentation and the patch, so the bundle hands out stable addresses.
struct Setup {
    std::unique_ptr<Presentation> presentation;
    std::unique_ptr<SkeletonGraph> patch;
    std::vector<int> boundary_ids;
    std::unique_ptr<VertexAction> action;
    EquivariantPathData paths;
};
Setup load_setup(const RunConfig& cfg);

// Deterministic Graphviz text. `label_ids` (optional, by vertex index) adds
// "id/label" node labels; `added_edges` (id pairs, ascending) render dashed.
std::string export_dot(const SkeletonGraph& g, const std::vector<int>* label_ids,
                       const std::set<std::pair<int, int>>& added_edges,
                       const std::string& graph_name);

}  // namespace systolic
