#pragma once

#include <cstdint>
#include <vector>

#include "systolic/flag_complex.hpp"

namespace systolic {

struct HomologyH1 {
    long long rank = 0;
    std::vector<long long> torsion;  // invariant factors > 1, divisibility order
};

// Invariant factors of an integer matrix (diagonal of its Smith normal form,
// nonnegative, each dividing the next, zeros dropped). Throws on int64
// overflow during reduction.
std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> mat);

// First homology of the flag 2-skeleton over the integers: rank and torsion
// computed from the boundary maps d2 (triangles -> edges) and d1.
HomologyH1 homology_h1(const FlagComplex& c);

}  // namespace systolic
