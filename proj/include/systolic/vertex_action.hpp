#pragma once

#include <map>
#include <string>
#include <vector>

#include "systolic/presentation.hpp"
#include "systolic/skeleton_graph.hpp"

namespace systolic {

// Each generator realized as a partial vertex bijection of a finite patch of
// the ambient complex. Maps are stored densely by vertex index; -1 means
// undefined. Words act with the rightmost letter applied first.
class VertexAction {
public:
    // raw_maps: symbol name -> (from id, to id) pairs. Missing inverses are
    // derived by inverting; explicitly given ones are kept as given.
    VertexAction(const Presentation& p, const SkeletonGraph& patch,
                 const std::map<std::string, std::vector<std::pair<int, int>>>& raw_maps);

    const SkeletonGraph& patch() const { return *patch_; }
    const Presentation& presentation() const { return *pres_; }

    // -1 when undefined.
    int apply_symbol(int sym, int vertex_index) const {
        return maps_[static_cast<size_t>(sym)][static_cast<size_t>(vertex_index)];
    }

    // Throws DomainEscape naming the failing letter (index in w as written).
    int word_apply(const Word& w, int vertex_index) const;
    // -1 when any step is undefined.
    int try_word_apply(const Word& w, int vertex_index) const;

    // Report-only validation: partial bijectivity, adjacency preservation,
    // inverse consistency, and relators acting as the identity wherever the
    // full composite is defined.
    std::vector<std::string> validate() const;

private:
    const Presentation* pres_;
    const SkeletonGraph* patch_;
    std::vector<std::vector<int>> maps_;  // per symbol, by vertex index
};

}  // namespace systolic
