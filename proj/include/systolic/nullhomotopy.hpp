#pragma once

#include <vector>

#include "systolic/flag_complex.hpp"
#include "systolic/largeness.hpp"

namespace systolic {

// Elementary homotopy moves on a closed edge walk in a flag complex:
//   Backtrack  — delete a spur (a, b, a) -> (a)
//   Shrink     — (a, b, c) with edge a-c -> (a, c)      [across the triangle]
//   Expand     — (a, b) with x adjacent to both -> (a, x, b)
//   Collapse   — a closed triangle -> a point
// Positions refer to the canonical rotation (lexicographically least) of the
// cyclic walk at the time the move is applied.
struct LoopMove {
    enum class Kind { Backtrack, Shrink, Expand, Collapse };
    Kind kind;
    int position = 0;
    int vertex = -1;  // id inserted (Expand) / removed (Backtrack, Shrink); -1 for Collapse
};

struct NullHomotopy {
    bool contractible = false;
    std::vector<LoopMove> moves;  // replayable certificate
    long long states_explored = 0;
};

// Budgeted certified contraction: searches for at most `budget` moves taking
// the walk to a constant path. Returns a non-contractible (unknown) result if
// the budget or the internal state cap runs out — never a false positive.
NullHomotopy bounded_nullhomotopy(const FlagComplex& c, const std::vector<int>& closed_walk_ids,
                                  int budget);
NullHomotopy bounded_nullhomotopy(const FlagComplex& c, const Cycle& loop, int budget);

// Re-applies a certificate move by move, validating each against the complex;
// throws Error on any invalid move. Returns the final walk (vertex ids).
std::vector<int> replay_nullhomotopy(const FlagComplex& c, const std::vector<int>& closed_walk_ids,
                                     const std::vector<LoopMove>& moves);

// 4 * diameter * length — the default contraction budget.
int default_nullhomotopy_budget(const SkeletonGraph& g, int loop_length);

}  // namespace systolic
