#include "systolic/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>

#include "systolic/errors.hpp"

namespace systolic {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error("integer overflow in Smith normal form reduction");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error("integer overflow in Smith normal form reduction");
    return r;
}

}  // namespace

std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    std::vector<long long> diag;

    size_t t = 0;  // current pivot slot
    while (t < rows && t < cols) {
        // Smallest nonzero entry (by absolute value) in the remaining block
        // as pivot keeps coefficient growth tame.
        size_t pr = t, pc = t;
        long long best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                    best = std::llabs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0)
            break;
        std::swap(m[t], m[pr]);
        for (size_t i = 0; i < rows; ++i)
            std::swap(m[i][t], m[i][pc]);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] % m[t][t] != 0) {
                long long q = m[i][t] / m[t][t];
                for (size_t j = t; j < cols; ++j)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
                clean = false;
            } else if (m[i][t] != 0) {
                long long q = m[i][t] / m[t][t];
                for (size_t j = t; j < cols; ++j)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
            }
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] % m[t][t] != 0) {
                long long q = m[t][j] / m[t][t];
                for (size_t i = t; i < rows; ++i)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
                clean = false;
            } else if (m[t][j] != 0) {
                long long q = m[t][j] / m[t][t];
                for (size_t i = t; i < rows; ++i)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
            }
        }
        if (!clean)
            continue;  // leftover remainders become new, smaller pivots

        // Divisibility fix-up: the pivot must divide every remaining entry.
        bool divides_all = true;
        for (size_t i = t + 1; i < rows && divides_all; ++i)
            for (size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    // Fold row i into row t and restart this pivot slot.
                    for (size_t k = t; k < cols; ++k)
                        m[t][k] = checked_sub(m[t][k], checked_mul(-1, m[i][k]));
                    divides_all = false;
                    break;
                }
        if (!divides_all)
            continue;
        diag.push_back(std::llabs(m[t][t]));
        ++t;
    }
    return diag;
}

HomologyH1 homology_h1(const FlagComplex& c) {
    const SkeletonGraph& g = c.skeleton();
    const int V = g.size();

    // Canonical edge order: (u, v) index pairs, u < v.
    std::map<std::pair<int, int>, int> edge_index;
    for (int u = 0; u < V; ++u)
        for (int v : g.neighbors(u))
            if (u < v) {
                int next = static_cast<int>(edge_index.size());
                edge_index[{u, v}] = next;
            }
    const int E = static_cast<int>(edge_index.size());

    int components = 0;
    {
        std::vector<char> seen(static_cast<size_t>(V), 0);
        for (int v = 0; v < V; ++v) {
            if (seen[static_cast<size_t>(v)])
                continue;
            ++components;
            const int src[] = {v};
            auto dist = g.distances_from(src);
            for (int u = 0; u < V; ++u)
                if (dist[static_cast<size_t>(u)] >= 0)
                    seen[static_cast<size_t>(u)] = 1;
        }
    }

    auto tris = c.triangles();
    std::vector<std::vector<long long>> d2(tris.size(), std::vector<long long>(static_cast<size_t>(E), 0));
    for (size_t t = 0; t < tris.size(); ++t) {
        auto [i, j, k] = tris[t];  // i < j < k
        d2[t][static_cast<size_t>(edge_index[{j, k}])] += 1;  // face opposite i
        d2[t][static_cast<size_t>(edge_index[{i, k}])] -= 1;  // face opposite j
        d2[t][static_cast<size_t>(edge_index[{i, j}])] += 1;  // face opposite k
    }

    auto factors = smith_invariant_factors(std::move(d2));
    const long long rank_d2 = static_cast<long long>(factors.size());
    // rank ker d1 = E - rank d1 = E - (V - components).
    HomologyH1 h;
    h.rank = static_cast<long long>(E) - (V - components) - rank_d2;
    for (long long f : factors)
        if (f > 1)
            h.torsion.push_back(f);
    std::sort(h.torsion.begin(), h.torsion.end());
    return h;
}

}  // namespace systolic
