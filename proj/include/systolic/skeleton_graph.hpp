#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace systolic {

// One-skeleton of a simplicial complex: vertices carry arbitrary integer ids,
// adjacency is symmetric and irreflexive. Internally vertices are compressed
// to indices 0..n-1 in ascending id order; that order is the canonical order
// used by every deterministic search in the library.
class SkeletonGraph {
public:
    SkeletonGraph() = default;

    // Vertices are deduplicated and sorted; edges may be given in any order
    // or orientation. Self-loops and edges on unknown ids are rejected.
    static SkeletonGraph from_edges(std::vector<int> vertices,
                                    const std::vector<std::pair<int, int>>& edges);

    int size() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return edge_count_; }

    bool has_vertex(int id) const { return index_.count(id) > 0; }
    int index_of(int id) const;              // throws InputError on unknown id
    int id_of(int index) const { return ids_[static_cast<size_t>(index)]; }
    const std::vector<int>& ids() const { return ids_; }

    // Neighbor indices in ascending order.
    std::span<const int> neighbors(int index) const { return nbr_[static_cast<size_t>(index)]; }
    int degree(int index) const { return static_cast<int>(nbr_[static_cast<size_t>(index)].size()); }
    bool adjacent(int index_u, int index_v) const {
        return (bits_[static_cast<size_t>(index_u)][static_cast<size_t>(index_v) >> 6] >>
                (static_cast<size_t>(index_v) & 63)) & 1u;
    }
    bool adjacent_ids(int id_u, int id_v) const { return adjacent(index_of(id_u), index_of(id_v)); }

    // Edge growth is used by the saturation loop; the vertex set is fixed for
    // the lifetime of the graph. Returns false if the edge was already there.
    bool add_edge_by_index(int index_u, int index_v);

    // Edges as sorted (id,id) pairs with u < v, in canonical order.
    std::vector<std::pair<int, int>> edge_list_ids() const;

    // BFS distance in edge steps; nullopt when the vertices are in different
    // components.
    std::optional<int> distance(int index_u, int index_v) const;
    std::optional<int> distance_ids(int id_u, int id_v) const;

    // Distances from a set of source indices; -1 marks unreachable vertices.
    std::vector<int> distances_from(std::span<const int> source_indices) const;

    // Indices at distance <= r from the source set.
    std::vector<int> ball_indices(std::span<const int> source_indices, int r) const;

    // Induced subgraph on the given indices (ids are preserved).
    SkeletonGraph induced(std::span<const int> indices) const;

    // Connectivity of the whole vertex set.
    bool connected() const;

private:
    std::vector<int> ids_;
    std::unordered_map<int, int> index_;
    std::vector<std::vector<int>> nbr_;
    std::vector<std::vector<std::uint64_t>> bits_;
    int edge_count_ = 0;
};

}  // namespace systolic
