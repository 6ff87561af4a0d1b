#pragma once

#include <vector>

#include "systolic/presentation.hpp"
#include "systolic/vertex_action.hpp"

namespace systolic {

// A group element as seen on the truncation: its canonical word (shortest,
// then lexicographically least by symbol index) and the partial vertex map
// that word induces on the patch (-1 = undefined).
struct GroupElement {
    Word word;
    std::vector<int> map;
};

// All elements of word length <= rho, breadth-first, deduplicated by equality
// of the induced maps on (nonempty) common domains. Element 0 is the identity.
class Ball {
public:
    int rho = 0;
    const std::vector<GroupElement>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const GroupElement& element(int i) const { return elems_[static_cast<size_t>(i)]; }

    // Index of elem*s / s*elem / elem^-1; -1 when the product certifiably
    // lies outside the ball.
    int mult_right(int elem, int sym) const {
        return right_[static_cast<size_t>(elem)][static_cast<size_t>(sym)];
    }
    int mult_left(int sym, int elem) const {
        return left_[static_cast<size_t>(sym)][static_cast<size_t>(elem)];
    }
    int inverse(int elem) const { return inv_[static_cast<size_t>(elem)]; }

    friend Ball enumerate_ball(const Presentation& p, const VertexAction& a, int rho);

private:
    std::vector<GroupElement> elems_;
    std::vector<std::vector<int>> right_;  // [elem][sym]
    std::vector<std::vector<int>> left_;   // [sym][elem]
    std::vector<int> inv_;
};

Ball enumerate_ball(const Presentation& p, const VertexAction& a, int rho);

// Elements (indices) fixing the given patch vertex. Throws DomainEscape when
// some element map is undefined there.
std::vector<int> stabilizer_of(const VertexAction& a, const Ball& ball, int vertex_index);

// e.map[v] per element; DomainEscape when undefined.
std::vector<int> orbit_of(const Ball& ball, const VertexAction& a, int vertex_index);

}  // namespace systolic
