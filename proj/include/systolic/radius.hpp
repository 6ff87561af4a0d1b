#pragma once

#include <vector>

#include "systolic/nullhomotopy.hpp"
#include "systolic/short_loops.hpp"

namespace systolic {

// Containment data: every short loop lies in the (R - L)-ball around each of
// its own vertices; R = R' + L.
struct RadiusCertificate {
    int L = 0;
    int R1 = 0;       // relator loops
    int R1prime = 0;  // stabilizer loops
    int R2 = 0;       // crossing loops
    int Rprime = 0;
    int R = 0;
    std::vector<int> loop_radius;  // per input loop: max pairwise distance
};

RadiusCertificate compute_R(const std::vector<ShortLoop>& loops, const SkeletonGraph& X, int L);

// Throws PatchTooSmall when N^R(h*x0) is not faithfully represented: some
// h*x0 escapes the patch outright, or a boundary vertex lies within R - 1 of
// it (so the true ball would contain vertices the patch does not carry).
void ensure_balls_inside_patch(const Presentation& p, const SkeletonGraph& X,
                               const std::vector<int>& boundary_ids, const Ball& ball,
                               int x0_index, int R);

// Optional certification that each loop contracts inside the radius-r ball
// around its least vertex. budget <= 0 selects a default.
struct LoopContraction {
    int loop_index = -1;
    int base_vertex = -1;  // id of the ball center
    NullHomotopy homotopy;
};

std::vector<LoopContraction> certify_loop_contractions(const std::vector<ShortLoop>& loops,
                                                       const SkeletonGraph& X, int r, int budget);

}  // namespace systolic
