#pragma once

#include <string>
#include <vector>

#include "systolic/group_ball.hpp"
#include "systolic/homology.hpp"
#include "systolic/path_data.hpp"
#include "systolic/vertex_action.hpp"
#include "systolic/y_complex.hpp"

namespace systolic {

struct CheckReport {
    bool pass = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        pass = false;
        failures.push_back(std::move(msg));
    }
};

// Every section i_h is a bijection of N^R(h*x0) onto its classes, preserves
// adjacency in both directions, satisfies f(i_h(v)) = v, and consecutive
// sections agree on overlaps.
CheckReport verify_sections(const YComplex& Y, const VertexAction& a, const Ball& ball);

// All piece records landing on one patch vertex (or edge) yield one class
// (or one class pair, adjacent in Y): the Cayley image factors through Y.
CheckReport verify_factorization(const YComplex& Y, const GammaComplex& gamma,
                                 const VertexAction& a, const Ball& ball);

// Classes whose image lies at distance >= margin from every boundary vertex.
std::vector<char> interior_classes(const YComplex& Y, const SkeletonGraph& X,
                                   const std::vector<int>& boundary_ids, int margin);

struct SimpleConnectivityReport {
    CheckReport report;
    int interior_count = 0;
    HomologyH1 h1;
    int generators = 0;
    int contracted = 0;
    std::vector<int> unresolved;  // generator indices the budget left open
};

// H1 of the subcomplex induced on the kept vertices (mask by index) plus
// contraction certificates for a spanning-tree generating set of its
// fundamental group, preferring base_id as basepoint when it is kept.
// budget <= 0 picks a size-based default per generator.
SimpleConnectivityReport simply_connected_report(const SkeletonGraph& g,
                                                 const std::vector<char>& keep, int base_id,
                                                 int budget);

// H1 of the interior plus contraction certificates for a spanning-tree
// generating set of its fundamental group. Report-only.
SimpleConnectivityReport verify_Y_simply_connected(const YComplex& Y, const SkeletonGraph& X,
                                                   const std::vector<int>& boundary_ids,
                                                   int margin, int budget);

struct PropernessStats {
    int max_fiber = 0;
    int max_valence = 0;
    std::vector<int> fiber_size;  // per patch index
};

PropernessStats f_properness_stats(const YComplex& Y, const SkeletonGraph& X);

}  // namespace systolic
