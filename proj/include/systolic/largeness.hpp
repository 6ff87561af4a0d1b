#pragma once

#include <optional>
#include <vector>

#include "systolic/flag_complex.hpp"

namespace systolic {

// Simplicially embedded cycle: pairwise distinct vertices, consecutive pairs
// adjacent, last adjacent to first. Stored as vertex ids.
struct Cycle {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

struct LargenessWitness {
    bool pass = false;
    std::optional<Cycle> bad_cycle;  // on fail: a chordless cycle, length in [4, m-1]
};

// Deterministic search for an embedded cycle without a diagonal, of length in
// [4, m-1]: shortest length first, then the lexicographically least vertex
// sequence in index order, written starting at its least vertex. `allowed`
// (by index, optional) restricts the search to a vertex subset.
std::optional<Cycle> find_chordless_cycle(const SkeletonGraph& g, int m,
                                          const std::vector<char>* allowed = nullptr);

// Public wrapper; rejects m < 6 (the largeness threshold of interest starts
// there).
std::optional<Cycle> find_short_cycle_no_diagonal(const FlagComplex& c, int m);

// Pass iff no chordless cycle of length in [4, m-1] exists; m >= 4 accepted
// (the check is vacuous below 5).
LargenessWitness is_m_large(const FlagComplex& c, int m);

}  // namespace systolic
