#pragma once

#include <vector>

#include "systolic/group_ball.hpp"
#include "systolic/largeness.hpp"
#include "systolic/path_data.hpp"
#include "systolic/presentation.hpp"
#include "systolic/vertex_action.hpp"

namespace systolic {

// A generating null-homotopy witness: a relator loop, a loop traced by a
// nontrivial word fixing the base vertex, or a crossing of two translated
// generator paths at a vertex outside the base-vertex orbit.
struct ShortLoop {
    enum class Kind { Relator, StabilizerLoop, CrossingLoop };
    Kind kind = Kind::Relator;
    Word word;
    Cycle loop;  // closed walk in the patch, vertex ids, cyclic form
    Word replacement;         // CrossingLoop: the geodesic word p_1..p_k
    int crossing_vertex = -1;  // CrossingLoop: id of the crossing vertex
};

// All short loops on the truncation, deduplicated up to cyclic rotation and
// left translation by ball elements. Relator loops come first (presentation
// order), then stabilizer loops (ball order), then crossing loops.
std::vector<ShortLoop> enumerate_short_loops(const Presentation& p, const VertexAction& a,
                                             const EquivariantPathData& d, const Ball& ball);

}  // namespace systolic
