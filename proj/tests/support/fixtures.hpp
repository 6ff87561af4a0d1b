#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "systolic/f_extension.hpp"
#include "systolic/group_ball.hpp"
#include "systolic/io.hpp"
#include "systolic/path_data.hpp"
#include "systolic/presentation.hpp"
#include "systolic/skeleton_graph.hpp"
#include "systolic/vertex_action.hpp"

namespace fixtures {

// --- elementary graphs (ids 0..n-1 unless noted) ---
systolic::SkeletonGraph path_graph(int n);
systolic::SkeletonGraph cycle_graph(int n);
systolic::SkeletonGraph complete_graph(int n);
systolic::SkeletonGraph wheel_graph(int rim);  // rim 0..rim-1, hub id = rim
systolic::SkeletonGraph octahedron();          // K6 minus perfect matching (0,1),(2,3),(4,5)
systolic::SkeletonGraph pentagon_fan();        // pentagon 0..4 plus hub 5

// --- equilateral-triangulated plane, axial coordinates ---
// Neighbors of (x, y): (x±1, y), (x, y±1), (x+1, y+1), (x-1, y-1).
using Axial = std::pair<int, int>;
int hex_distance(Axial a, Axial b);
Axial rotate60(Axial v);  // rotation about the origin: (x, y) -> (x - y, x)

struct LatticePatch {
    systolic::SkeletonGraph graph;
    std::map<Axial, int> id_at;         // axial -> vertex id
    std::vector<Axial> coord;           // vertex id -> axial (ids are dense 0..n-1)
    std::vector<int> boundary_ids;      // hex distance exactly `radius` from origin
    int radius = 0;
};
LatticePatch lattice_patch(int radius);

// --- pipeline fixtures ---
struct Fixture {
    std::unique_ptr<systolic::Presentation> presentation;
    std::unique_ptr<systolic::SkeletonGraph> patch;
    std::vector<int> boundary_ids;
    std::unique_ptr<systolic::VertexAction> action;
    systolic::EquivariantPathData paths;
    int rho = 1;
    int interior_margin = 0;

    // Run config with the four sections inlined.
    systolic::json config() const;
};

// X = path -8..8, H = <u> acting by i -> i+2, gamma_u = 0-1-2, rho = 2.
Fixture line_fixture();
// X = radius-4 lattice patch, H = C6 = <r | r^6> rotating about the center,
// x0 = (1, 0), gamma_r = the ring edge (1,0)-(1,1), rho = 3, margin 1.
Fixture c6_fixture();
// The same action on a radius-7 patch, but x0 = the center: gamma_r is the
// closed triangle (0,0)-(1,0)-(1,1)-(0,0); every nontrivial power of r
// fixes x0.
Fixture c6_center_fixture();
// X = lattice patch of the given radius, H = Z^2 generated by the
// translations a = +(2,0) and b = +(1,1), gammas through (1,0), rho = 2.
Fixture z2_fixture(int patch_radius = 5);

// --- synthetic f-extensions exercising one saturation case each ---
struct ExtensionCase {
    std::unique_ptr<systolic::Presentation> presentation;  // no generators
    std::unique_ptr<systolic::SkeletonGraph> X;
    std::unique_ptr<systolic::VertexAction> action;
    systolic::Ball ball;  // just the identity
    systolic::FExtension W;
};
ExtensionCase bijective_square_case();
ExtensionCase non_consecutive_case();
ExtensionCase consecutive_case();

// Canonical fixture data as shipped in data/: per-fixture directories with a
// config referencing its sibling sections, plus standalone complexes and
// fault-injection configs. Writing is deterministic; tests regenerate into a
// scratch directory and compare bytes against the checked-in tree.
void write_fixture_data(const std::string& dir);
std::vector<std::string> fixture_data_files();  // relative paths, sorted

}  // namespace fixtures
