#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "systolic/flag_complex.hpp"
#include "systolic/group_ball.hpp"
#include "systolic/presentation.hpp"
#include "systolic/vertex_action.hpp"

namespace systolic {

// Base vertex and one edge path per generator from x0 to s*x0; L is the
// maximum path length. Paths are stored by patch index.
struct EquivariantPathData {
    int x0 = -1;
    std::vector<std::vector<int>> gamma;  // per symbol
    int L = 0;
};

// Builds path data from per-generator-name id paths. Missing inverse paths
// are derived as the s^-1-translate of the reversed path of s.
EquivariantPathData make_path_data(const Presentation& p, const VertexAction& a, int x0_id,
                                   const std::map<std::string, std::vector<int>>& raw_gamma_ids);

// Report-only validation: every gamma_s is an edge path from x0 to s*x0 and
// gamma_{s^-1} is the inverse translate of reversed gamma_s.
std::vector<std::string> validate_path_data(const EquivariantPathData& d, const VertexAction& a);

// gamma_{s1...sm}: the concatenation of prefix-translated generator paths.
// Returned by patch index, starting at x0, ending at w*x0.
std::vector<int> concatenated_path(const EquivariantPathData& d, const VertexAction& a,
                                   const Word& w);

// One subdivided Cayley-graph edge piece mapped into the patch: element h,
// generator s, segment index along h*gamma_s.
struct GammaRecord {
    int elem;
    int sym;
    int seg;
};

struct GammaComplex {
    FlagComplex complex;  // subcomplex of the patch; vertex ids are patch ids
    std::map<std::pair<int, int>, std::vector<GammaRecord>> edge_records;  // key: sorted id pair
    std::map<int, std::vector<GammaRecord>> vertex_records;                // patch id -> records
};

// Union of the translated generator paths h*gamma_s over the Cayley edges
// induced on the ball (h and h*s both inside); at rho = 0 the star of the
// identity is used instead so the output is never empty of paths.
GammaComplex build_gamma(const EquivariantPathData& d, const VertexAction& a, const Ball& ball);

}  // namespace systolic
