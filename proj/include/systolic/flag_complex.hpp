#pragma once

#include <array>
#include <utility>
#include <vector>

#include "systolic/skeleton_graph.hpp"

namespace systolic {

// A flag complex is determined by its one-skeleton: the simplices are exactly
// the cliques. Higher-dimensional queries enumerate cliques on demand.
class FlagComplex {
public:
    FlagComplex() = default;
    explicit FlagComplex(SkeletonGraph skeleton) : skel_(std::move(skeleton)) {}

    const SkeletonGraph& skeleton() const { return skel_; }
    SkeletonGraph& skeleton() { return skel_; }
    int vertex_count() const { return skel_.size(); }
    int edge_count() const { return skel_.edge_count(); }

    // Index triples i < j < k, lexicographically ordered.
    std::vector<std::array<int, 3>> triangles() const;

    // Full subcomplex spanned by the given vertex ids.
    FlagComplex span_ids(const std::vector<int>& ids) const;

private:
    SkeletonGraph skel_;
};

// Explicit complex form: declared maximal simplices over a vertex set, the
// input to the flagness test. Extra edges may be listed separately.
struct SimplicialComplexInput {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> maximal_simplices;

    // One-skeleton derived from listed edges plus the edges of every simplex.
    SkeletonGraph derived_skeleton() const;
};

struct FlagWitness {
    bool pass = false;
    std::vector<int> missing_clique;  // sorted vertex ids; empty on pass
};

// Pass iff every clique of the derived one-skeleton is contained in some
// listed maximal simplex. On failure the witness is the first missing clique
// in (size, lex) order; since all smaller cliques were verified before it,
// it is a minimal non-face.
FlagWitness check_flag(const SimplicialComplexInput& input);

// Maximal cliques of a skeleton as sorted id lists, canonically ordered.
std::vector<std::vector<int>> maximal_cliques(const SkeletonGraph& g);

// Full subcomplex spanned by all vertices within distance r of Z.
FlagComplex r_neighborhood(const SkeletonGraph& g, const std::vector<int>& z_ids, int r);

}  // namespace systolic
