#include "systolic/flag_complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "systolic/errors.hpp"

namespace systolic {

std::vector<std::array<int, 3>> FlagComplex::triangles() const {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < skel_.size(); ++u) {
        for (int v : skel_.neighbors(u)) {
            if (v <= u)
                continue;
            for (int w : skel_.neighbors(v)) {
                if (w > v && skel_.adjacent(u, w))
                    out.push_back({u, v, w});
            }
        }
    }
    return out;
}

FlagComplex FlagComplex::span_ids(const std::vector<int>& ids) const {
    std::vector<int> indices;
    indices.reserve(ids.size());
    for (int id : ids)
        indices.push_back(skel_.index_of(id));
    return FlagComplex(skel_.induced(indices));
}

SkeletonGraph SimplicialComplexInput::derived_skeleton() const {
    std::vector<std::pair<int, int>> all_edges = edges;
    for (const auto& simplex : maximal_simplices) {
        for (size_t i = 0; i < simplex.size(); ++i)
            for (size_t j = i + 1; j < simplex.size(); ++j)
                all_edges.emplace_back(simplex[i], simplex[j]);
    }
    return SkeletonGraph::from_edges(vertices, all_edges);
}

namespace {

// Expand cliques of size k in lexicographic index order, reporting each via
// the callback; the callback returns false to stop the whole enumeration.
template <typename F>
bool enumerate_cliques_of_size(const SkeletonGraph& g, int k, F&& report) {
    std::vector<int> clique;
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(clique.size()) == k)
            return report(clique);
        for (int v = from; v < g.size(); ++v) {
            bool ok = true;
            for (int u : clique) {
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            clique.push_back(v);
            if (!self(self, v + 1))
                return false;
            clique.pop_back();
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace

FlagWitness check_flag(const SimplicialComplexInput& input) {
    std::set<int> declared(input.vertices.begin(), input.vertices.end());
    for (const auto& simplex : input.maximal_simplices) {
        for (int v : simplex)
            if (!declared.count(v))
                throw InputError("simplex mentions unknown vertex " + std::to_string(v));
        std::set<int> dedup(simplex.begin(), simplex.end());
        if (dedup.size() != simplex.size())
            throw InputError("simplex lists a vertex twice");
    }

    SkeletonGraph g = input.derived_skeleton();

    // Faces as sorted id sets for containment tests.
    std::vector<std::vector<int>> faces;
    faces.reserve(input.maximal_simplices.size());
    for (const auto& simplex : input.maximal_simplices) {
        std::vector<int> s(simplex);
        std::sort(s.begin(), s.end());
        faces.push_back(std::move(s));
    }
    auto is_face = [&](const std::vector<int>& clique_ids) {
        for (const auto& f : faces)
            if (std::includes(f.begin(), f.end(), clique_ids.begin(), clique_ids.end()))
                return true;
        return false;
    };

    // Size-ascending search: the first missing clique found has all proper
    // sub-cliques already verified as faces, so it is minimal.
    FlagWitness witness;
    witness.pass = true;
    for (int k = 3; k <= g.size() && witness.pass; ++k) {
        enumerate_cliques_of_size(g, k, [&](const std::vector<int>& clique) {
            std::vector<int> ids;
            ids.reserve(clique.size());
            for (int idx : clique)
                ids.push_back(g.id_of(idx));
            std::sort(ids.begin(), ids.end());
            if (!is_face(ids)) {
                witness.pass = false;
                witness.missing_clique = ids;
                return false;
            }
            return true;
        });
    }
    return witness;
}

std::vector<std::vector<int>> maximal_cliques(const SkeletonGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> clique;
    // Every clique appears exactly once as its sorted vertex list; a clique is
    // reported when no vertex at all extends it. No pruning — complex sizes
    // here keep the full clique lattice small.
    auto rec = [&](auto&& self, int from) -> void {
        bool maximal = !clique.empty();
        for (int v = 0; v < g.size(); ++v) {
            bool extends = true;
            for (int u : clique) {
                if (u == v || !g.adjacent(u, v)) {
                    extends = false;
                    break;
                }
            }
            if (!extends)
                continue;
            maximal = false;
            if (v >= from) {
                clique.push_back(v);
                self(self, v + 1);
                clique.pop_back();
            }
        }
        if (maximal) {
            std::vector<int> ids;
            ids.reserve(clique.size());
            for (int idx : clique)
                ids.push_back(g.id_of(idx));
            std::sort(ids.begin(), ids.end());
            out.push_back(std::move(ids));
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

FlagComplex r_neighborhood(const SkeletonGraph& g, const std::vector<int>& z_ids, int r) {
    if (z_ids.empty())
        throw InputError("r_neighborhood requires a nonempty vertex set");
    if (r < 0)
        throw InputError("r_neighborhood requires r >= 0");
    std::vector<int> sources;
    sources.reserve(z_ids.size());
    for (int id : z_ids)
        sources.push_back(g.index_of(id));
    auto ball = g.ball_indices(sources, r);
    return FlagComplex(g.induced(ball));
}

}  // namespace systolic
