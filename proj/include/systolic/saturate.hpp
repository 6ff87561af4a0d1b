#pragma once

#include <optional>
#include <vector>

#include "systolic/f_extension.hpp"
#include "systolic/group_ball.hpp"
#include "systolic/vertex_action.hpp"
#include "systolic/y_complex.hpp"
#include "systolic/y_verify.hpp"

namespace systolic {

struct SaturationResult {
    FExtension W;
    std::vector<DiagonalMove> moves;  // copy of W.moves(), in order
    int edges_added = 0;
};

// Repeatedly resolve the least interior bad loop until none remains. Interior
// is measured once, against the untouched class images (the vertex set never
// changes). Throws BudgetExceeded, carrying the residual cycle, if a bad loop
// still exists after max_moves moves.
SaturationResult saturate(const YComplex& Y, const VertexAction& a, const Ball& ball,
                          const std::vector<int>& boundary_ids, int margin, int max_moves);

// Core loop on an explicit extension and interior mask; returns the moves it
// performed (also appended to W's log).
std::vector<DiagonalMove> saturate_in_place(FExtension& W, const Ball& ball,
                                            const SkeletonGraph& X,
                                            const std::vector<char>& interior, int max_moves);

struct HomotopyReport {
    CheckReport report;
    int replayed_edges = 0;
    HomologyH1 h1_interior;  // of the saturated interior
};

// Replays the move log on top of Y: every recorded edge must be new at its
// insertion time and close a triangle with two edges already present (so each
// move attaches cells without changing the homotopy type), and the replay
// must land exactly on `after`. Finishes with H1 of the saturated interior.
HomotopyReport verify_homotopy_preservation(const YComplex& before, const FExtension& after,
                                            const std::vector<DiagonalMove>& moves,
                                            const SkeletonGraph& X,
                                            const std::vector<int>& boundary_ids, int margin);

struct SystolicReport {
    CheckReport report;
    int interior_count = 0;
    bool flag = true;  // by construction: the complex is the flag hull of its skeleton
    std::optional<Cycle> largeness_witness;  // interior chordless 4/5-cycle, if any
    SimpleConnectivityReport connectivity;
    int max_valence = 0;
    int max_fiber = 0;
    int orbit_count = 0;     // orbits of classes under the (partial) ball action
    int max_stabilizer = 1;  // over classes: ball elements fixing the class
};

// Checks the systolicity evidence on the truncation: no interior chordless
// 4/5-cycle, trivial H1 and contracted fundamental-group generators on the
// interior, plus properness statistics (valence, fiber sizes) and
// orbit/stabilizer counts for the inherited action.
SystolicReport verify_systolic(const FExtension& W, const VertexAction& a, const Ball& ball,
                               const std::vector<int>& boundary_ids, int margin, int budget);

}  // namespace systolic
