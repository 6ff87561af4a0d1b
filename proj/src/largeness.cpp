#include "systolic/largeness.hpp"

#include <string>

#include "systolic/errors.hpp"

namespace systolic {

namespace {

// DFS over paths (v0, v1, ..., vt) with v0 minimal in the cycle, all vertices
// distinct and > v0, consecutive pairs adjacent, and no chords among the path
// so far. Closing edge back to v0 completes a chordless cycle. Exploration is
// lexicographic, so the first cycle found for a given length is the least one;
// a cycle's two orientations both survive the chord pruning, and the lex-lesser
// of them is explored first, so returning the first closure is canonical.
class ChordlessSearch {
public:
    ChordlessSearch(const SkeletonGraph& g, const std::vector<char>* allowed)
        : g_(g), allowed_(allowed), on_path_(static_cast<size_t>(g.size()), 0) {}

    std::optional<std::vector<int>> find_of_length(int len) {
        len_ = len;
        for (int v0 = 0; v0 < g_.size(); ++v0) {
            if (!ok(v0))
                continue;
            path_.assign(1, v0);
            on_path_[static_cast<size_t>(v0)] = 1;
            bool found = extend();
            on_path_[static_cast<size_t>(v0)] = 0;
            if (found)
                return path_;
        }
        return std::nullopt;
    }

private:
    bool ok(int v) const { return allowed_ == nullptr || (*allowed_)[static_cast<size_t>(v)]; }

    bool extend() {
        const int t = static_cast<int>(path_.size());
        const int v0 = path_[0];
        const int tail = path_.back();
        if (t == len_) {
            return g_.adjacent(tail, v0);
        }
        for (int w : g_.neighbors(tail)) {
            if (w <= v0 || on_path_[static_cast<size_t>(w)] || !ok(w))
                continue;
            // Chord pruning: w may touch only its predecessor among path
            // vertices; the closing vertex may additionally touch v0.
            bool chord = false;
            const int limit = (t == len_ - 1) ? 1 : 0;  // allow v0-adjacency when closing
            for (int i = limit; i < t - 1; ++i) {
                if (g_.adjacent(path_[i], w)) {
                    chord = true;
                    break;
                }
            }
            if (chord)
                continue;
            if (t == len_ - 1 && !g_.adjacent(w, v0))
                continue;
            path_.push_back(w);
            on_path_[static_cast<size_t>(w)] = 1;
            if (extend())
                return true;
            on_path_[static_cast<size_t>(w)] = 0;
            path_.pop_back();
        }
        return false;
    }

    const SkeletonGraph& g_;
    const std::vector<char>* allowed_;
    std::vector<char> on_path_;
    std::vector<int> path_;
    int len_ = 0;
};

}  // namespace

std::optional<Cycle> find_chordless_cycle(const SkeletonGraph& g, int m,
                                          const std::vector<char>* allowed) {
    if (m < 4)
        throw InputError("chordless-cycle search requires m >= 4, got " + std::to_string(m));
    ChordlessSearch search(g, allowed);
    for (int len = 4; len < m; ++len) {
        if (len > g.size())
            break;
        if (auto found = search.find_of_length(len)) {
            Cycle cycle;
            cycle.vertices.reserve(found->size());
            for (int idx : *found)
                cycle.vertices.push_back(g.id_of(idx));
            return cycle;
        }
    }
    return std::nullopt;
}

std::optional<Cycle> find_short_cycle_no_diagonal(const FlagComplex& c, int m) {
    if (m < 6)
        throw InputError("find_short_cycle_no_diagonal requires m >= 6, got " + std::to_string(m));
    return find_chordless_cycle(c.skeleton(), m);
}

LargenessWitness is_m_large(const FlagComplex& c, int m) {
    if (m < 4)
        throw InputError("is_m_large requires m >= 4, got " + std::to_string(m));
    LargenessWitness w;
    w.bad_cycle = find_chordless_cycle(c.skeleton(), m);
    w.pass = !w.bad_cycle.has_value();
    return w;
}

}  // namespace systolic
