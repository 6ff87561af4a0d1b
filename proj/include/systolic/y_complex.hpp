#pragma once

#include <utility>
#include <vector>

#include "systolic/flag_complex.hpp"
#include "systolic/group_ball.hpp"
#include "systolic/vertex_action.hpp"

namespace systolic {

// Disjoint copies of the R-balls around the h*x0, glued along v^h ~ v^{hs}.
// Every member of a class carries the same patch vertex, so the projection f
// is defined per class. Class ids are ranks of the lexicographically least
// (ball element, patch vertex) member.
class YComplex {
public:
    int R = 0;
    int x0 = -1;  // patch index of the base vertex

    const FlagComplex& complex() const { return complex_; }
    int class_count() const { return static_cast<int>(rep_.size()); }
    std::pair<int, int> rep(int c) const { return rep_[static_cast<size_t>(c)]; }
    int f(int c) const { return f_[static_cast<size_t>(c)]; }  // patch index
    const std::vector<std::pair<int, int>>& members(int c) const {
        return members_[static_cast<size_t>(c)];
    }

    // Vertices of N^R(h*x0) as sorted patch indices, and their classes.
    const std::vector<int>& ball_vertices(int h) const {
        return ball_verts_[static_cast<size_t>(h)];
    }
    const std::vector<int>& section(int h) const { return section_[static_cast<size_t>(h)]; }
    int class_of(int h, int v) const;  // -1 when v is outside N^R(h*x0)

    // Generator action on classes: s * (v^h) = (s*v)^{s*h}; -1 when the
    // image leaves the truncation.
    int act(int sym, int c) const { return action_[static_cast<size_t>(sym)][static_cast<size_t>(c)]; }
    const std::vector<std::vector<int>>& action() const { return action_; }

    friend YComplex build_Y(const Ball& ball, int R, const VertexAction& a, int x0_index);

private:
    FlagComplex complex_;
    std::vector<std::pair<int, int>> rep_;
    std::vector<int> f_;
    std::vector<std::vector<std::pair<int, int>>> members_;
    std::vector<std::vector<int>> ball_verts_;
    std::vector<std::vector<int>> section_;
    std::vector<std::vector<int>> action_;
};

// Throws PatchTooSmall when some h*x0 itself escapes the patch. The caller is
// responsible for the boundary-margin check (ensure_balls_inside_patch).
YComplex build_Y(const Ball& ball, int R, const VertexAction& a, int x0_index);

}  // namespace systolic
