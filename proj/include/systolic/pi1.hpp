#pragma once

#include <utility>
#include <vector>

#include "systolic/flag_complex.hpp"
#include "systolic/homology.hpp"

namespace systolic {

// Spanning-tree presentation of the fundamental group of the flag 2-skeleton:
// one generator per non-tree edge, one relator per triangle.
struct Pi1Presentation {
    int basepoint = 0;                            // vertex index
    std::vector<int> parent;                      // BFS tree, -1 at the root
    std::vector<std::pair<int, int>> generators;  // non-tree edges (u, v), u < v, index pairs
    std::vector<std::vector<int>> relators;       // signed generator refs: +(g+1) / -(g+1)
};

Pi1Presentation pi1_presentation(const FlagComplex& c, int basepoint_index);

// The closed walk (vertex ids) representing one generator: tree path to u,
// the edge (u, v), tree path back from v.
std::vector<int> generator_loop_ids(const FlagComplex& c, const Pi1Presentation& p, int gen);

// Abelianized invariants, comparable against homology_h1.
HomologyH1 pi1_abelianization(const Pi1Presentation& p);

}  // namespace systolic
