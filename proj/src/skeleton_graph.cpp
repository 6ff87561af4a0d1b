#include "systolic/skeleton_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "systolic/errors.hpp"

namespace systolic {

SkeletonGraph SkeletonGraph::from_edges(std::vector<int> vertices,
                                        const std::vector<std::pair<int, int>>& edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    SkeletonGraph g;
    g.ids_ = std::move(vertices);
    g.index_.reserve(g.ids_.size());
    for (size_t i = 0; i < g.ids_.size(); ++i)
        g.index_[g.ids_[i]] = static_cast<int>(i);

    const size_t n = g.ids_.size();
    const size_t words = (n + 63) / 64;
    g.nbr_.assign(n, {});
    g.bits_.assign(n, std::vector<std::uint64_t>(words, 0));

    for (const auto& [a, b] : edges) {
        if (a == b)
            throw InputError("self-loop on vertex " + std::to_string(a));
        auto ia = g.index_.find(a);
        auto ib = g.index_.find(b);
        if (ia == g.index_.end())
            throw InputError("edge endpoint " + std::to_string(a) + " is not a declared vertex");
        if (ib == g.index_.end())
            throw InputError("edge endpoint " + std::to_string(b) + " is not a declared vertex");
        g.add_edge_by_index(ia->second, ib->second);
    }
    for (auto& row : g.nbr_)
        std::sort(row.begin(), row.end());
    return g;
}

int SkeletonGraph::index_of(int id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw InputError("unknown vertex id " + std::to_string(id));
    return it->second;
}

bool SkeletonGraph::add_edge_by_index(int index_u, int index_v) {
    if (index_u == index_v)
        throw InputError("self-loop on vertex " + std::to_string(id_of(index_u)));
    if (adjacent(index_u, index_v))
        return false;
    bits_[static_cast<size_t>(index_u)][static_cast<size_t>(index_v) >> 6] |=
        std::uint64_t{1} << (static_cast<size_t>(index_v) & 63);
    bits_[static_cast<size_t>(index_v)][static_cast<size_t>(index_u) >> 6] |=
        std::uint64_t{1} << (static_cast<size_t>(index_u) & 63);
    // Keep neighbor rows sorted so canonical iteration order survives growth.
    auto& nu = nbr_[static_cast<size_t>(index_u)];
    nu.insert(std::lower_bound(nu.begin(), nu.end(), index_v), index_v);
    auto& nv = nbr_[static_cast<size_t>(index_v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), index_u), index_u);
    ++edge_count_;
    return true;
}

std::vector<std::pair<int, int>> SkeletonGraph::edge_list_ids() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < size(); ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(std::min(id_of(u), id_of(v)), std::max(id_of(u), id_of(v)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SkeletonGraph::distances_from(std::span<const int> source_indices) const {
    std::vector<int> dist(static_cast<size_t>(size()), -1);
    std::queue<int> q;
    for (int s : source_indices) {
        if (dist[static_cast<size_t>(s)] == -1) {
            dist[static_cast<size_t>(s)] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : neighbors(u)) {
            if (dist[static_cast<size_t>(v)] == -1) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

std::optional<int> SkeletonGraph::distance(int index_u, int index_v) const {
    const int src[] = {index_u};
    auto dist = distances_from(src);
    int d = dist[static_cast<size_t>(index_v)];
    if (d < 0)
        return std::nullopt;
    return d;
}

std::optional<int> SkeletonGraph::distance_ids(int id_u, int id_v) const {
    return distance(index_of(id_u), index_of(id_v));
}

std::vector<int> SkeletonGraph::ball_indices(std::span<const int> source_indices, int r) const {
    auto dist = distances_from(source_indices);
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (dist[static_cast<size_t>(v)] >= 0 && dist[static_cast<size_t>(v)] <= r)
            out.push_back(v);
    return out;
}

SkeletonGraph SkeletonGraph::induced(std::span<const int> indices) const {
    std::vector<int> verts;
    verts.reserve(indices.size());
    for (int i : indices)
        verts.push_back(id_of(i));
    std::vector<std::pair<int, int>> edges;
    std::vector<int> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    for (int u : sorted)
        for (int v : neighbors(u))
            if (u < v && std::binary_search(sorted.begin(), sorted.end(), v))
                edges.emplace_back(id_of(u), id_of(v));
    return from_edges(std::move(verts), edges);
}

bool SkeletonGraph::connected() const {
    if (size() == 0)
        return true;
    const int src[] = {0};
    auto dist = distances_from(src);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

}  // namespace systolic
