#include "systolic/pi1.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "systolic/errors.hpp"

namespace systolic {

Pi1Presentation pi1_presentation(const FlagComplex& c, int basepoint_index) {
    const SkeletonGraph& g = c.skeleton();
    if (basepoint_index < 0 || basepoint_index >= g.size())
        throw InputError("pi1 basepoint out of range");

    Pi1Presentation p;
    p.basepoint = basepoint_index;
    p.parent.assign(static_cast<size_t>(g.size()), -2);  // -2 = unreached
    p.parent[static_cast<size_t>(basepoint_index)] = -1;
    std::queue<int> q;
    q.push(basepoint_index);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (p.parent[static_cast<size_t>(v)] == -2) {
                p.parent[static_cast<size_t>(v)] = u;
                q.push(v);
            }
        }
    }
    for (int v = 0; v < g.size(); ++v)
        if (p.parent[static_cast<size_t>(v)] == -2)
            throw InputError("pi1_presentation requires a connected complex");

    auto is_tree_edge = [&](int u, int v) {
        return p.parent[static_cast<size_t>(u)] == v || p.parent[static_cast<size_t>(v)] == u;
    };
    std::map<std::pair<int, int>, int> gen_of_edge;
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && !is_tree_edge(u, v)) {
                int next = static_cast<int>(p.generators.size());
                gen_of_edge[{u, v}] = next;
                p.generators.emplace_back(u, v);
            }

    // Signed generator reference of the directed edge u -> v; 0 for tree edges.
    auto ref = [&](int u, int v) -> int {
        if (is_tree_edge(u, v))
            return 0;
        if (u < v)
            return gen_of_edge[{u, v}] + 1;
        return -(gen_of_edge[{v, u}] + 1);
    };
    for (const auto& [i, j, k] : c.triangles()) {
        std::vector<int> word;
        for (int r : {ref(i, j), ref(j, k), ref(k, i)})
            if (r != 0)
                word.push_back(r);
        // Free reduction (adjacent inverse pairs), cyclic form untouched.
        std::vector<int> reduced;
        for (int r : word) {
            if (!reduced.empty() && reduced.back() == -r)
                reduced.pop_back();
            else
                reduced.push_back(r);
        }
        if (!reduced.empty())
            p.relators.push_back(std::move(reduced));
    }
    return p;
}

std::vector<int> generator_loop_ids(const FlagComplex& c, const Pi1Presentation& p, int gen) {
    if (gen < 0 || gen >= static_cast<int>(p.generators.size()))
        throw InputError("generator index out of range");
    const SkeletonGraph& g = c.skeleton();
    auto path_from_base = [&](int v) {
        std::vector<int> path;  // basepoint .. v
        for (int cur = v; cur != -1; cur = p.parent[static_cast<size_t>(cur)])
            path.push_back(cur);
        std::reverse(path.begin(), path.end());
        return path;
    };
    auto [u, v] = p.generators[static_cast<size_t>(gen)];
    std::vector<int> walk = path_from_base(u);          // base .. u
    std::vector<int> back = path_from_base(v);          // base .. v
    for (auto it = back.rbegin(); it != back.rend(); ++it)
        walk.push_back(*it);                            // u, v, .. base
    walk.pop_back();                                    // cyclic form: drop repeated base
    std::vector<int> ids;
    ids.reserve(walk.size());
    for (int idx : walk)
        ids.push_back(g.id_of(idx));
    return ids;
}

HomologyH1 pi1_abelianization(const Pi1Presentation& p) {
    const size_t gens = p.generators.size();
    std::vector<std::vector<long long>> m(p.relators.size(), std::vector<long long>(gens, 0));
    for (size_t r = 0; r < p.relators.size(); ++r)
        for (int ref : p.relators[r]) {
            int gi = std::abs(ref) - 1;
            m[r][static_cast<size_t>(gi)] += ref > 0 ? 1 : -1;
        }
    auto factors = smith_invariant_factors(std::move(m));
    HomologyH1 h;
    h.rank = static_cast<long long>(gens) - static_cast<long long>(factors.size());
    for (long long f : factors)
        if (f > 1)
            h.torsion.push_back(f);
    std::sort(h.torsion.begin(), h.torsion.end());
    return h;
}

}  // namespace systolic
