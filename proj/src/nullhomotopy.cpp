#include "systolic/nullhomotopy.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "systolic/errors.hpp"

namespace systolic {

namespace {

using Walk = std::vector<int>;  // vertex indices, cyclic

Walk canonical_rotation(const Walk& w) {
    if (w.size() <= 1)
        return w;
    size_t best = 0;
    const size_t n = w.size();
    for (size_t start = 1; start < n; ++start) {
        for (size_t k = 0; k < n; ++k) {
            int a = w[(start + k) % n];
            int b = w[(best + k) % n];
            if (a != b) {
                if (a < b)
                    best = start;
                break;
            }
        }
    }
    Walk out(n);
    for (size_t k = 0; k < n; ++k)
        out[k] = w[(best + k) % n];
    return out;
}

void validate_walk(const SkeletonGraph& g, const Walk& w, const char* what) {
    const size_t n = w.size();
    if (n <= 1)
        return;
    for (size_t i = 0; i < n; ++i) {
        int a = w[i];
        int b = w[(i + 1) % n];
        if (a == b)
            throw Error(std::string(what) + ": repeated consecutive vertex in walk");
        if (!g.adjacent(a, b))
            throw Error(std::string(what) + ": walk uses a non-edge");
    }
}

// Applies a move to a canonical walk; returns false if inapplicable.
bool apply_move(const SkeletonGraph& g, const Walk& w, const LoopMove& m, int vertex_index,
                Walk& out) {
    const int n = static_cast<int>(w.size());
    const int p = m.position;
    if (p < 0 || p >= std::max(n, 1))
        return false;
    auto at = [&](int i) { return w[static_cast<size_t>(((i % n) + n) % n)]; };
    switch (m.kind) {
        case LoopMove::Kind::Backtrack: {
            if (n < 2)
                return false;
            if (n == 2) {
                out = {at(p == 0 ? 1 : 0)};
                // Removed vertex must match the certificate.
                return at(p) == vertex_index;
            }
            if (at(p - 1) != at(p + 1) || at(p) != vertex_index)
                return false;
            out.clear();
            for (int i = 0; i < n; ++i)
                if (i != p && i != (p + 1) % n)
                    out.push_back(w[static_cast<size_t>(i)]);
            return true;
        }
        case LoopMove::Kind::Shrink: {
            if (n < 4)
                return false;  // n == 3 is handled by Collapse
            int a = at(p - 1), b = at(p), c = at(p + 1);
            if (b != vertex_index || a == c || !g.adjacent(a, c))
                return false;
            out.clear();
            for (int i = 0; i < n; ++i)
                if (i != p)
                    out.push_back(w[static_cast<size_t>(i)]);
            return true;
        }
        case LoopMove::Kind::Expand: {
            if (n < 2)
                return false;
            int a = at(p), b = at(p + 1), x = vertex_index;
            if (x == a || x == b || !g.adjacent(x, a) || !g.adjacent(x, b))
                return false;
            out.clear();
            for (int i = 0; i <= p; ++i)
                out.push_back(w[static_cast<size_t>(i)]);
            out.push_back(x);
            for (int i = p + 1; i < n; ++i)
                out.push_back(w[static_cast<size_t>(i)]);
            return true;
        }
        case LoopMove::Kind::Collapse: {
            if (n != 3 || p != 0)
                return false;
            out = {w[0]};
            return true;
        }
    }
    return false;
}

int heuristic(size_t n) {
    if (n <= 1)
        return 0;
    return static_cast<int>((n - 1 + 1) / 2);  // ceil((n-1)/2); each move removes at most 2
}

constexpr long long kStateCap = 300000;

}  // namespace

NullHomotopy bounded_nullhomotopy(const FlagComplex& c, const std::vector<int>& closed_walk_ids,
                                  int budget) {
    const SkeletonGraph& g = c.skeleton();
    if (budget < 0)
        throw InputError("nullhomotopy budget must be nonnegative");

    Walk start;
    start.reserve(closed_walk_ids.size());
    for (int id : closed_walk_ids)
        start.push_back(g.index_of(id));
    validate_walk(g, start, "bounded_nullhomotopy");
    start = canonical_rotation(start);

    NullHomotopy result;
    if (start.size() <= 1) {
        result.contractible = true;
        return result;
    }

    struct Node {
        int f;
        int gcost;
        Walk state;
        bool operator>(const Node& o) const {
            if (f != o.f)
                return f > o.f;
            if (gcost != o.gcost)
                return gcost > o.gcost;
            return state > o.state;  // total deterministic order
        }
    };
    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> open;
    std::map<Walk, int> best;
    std::map<Walk, std::pair<Walk, LoopMove>> parent;

    open.push({heuristic(start.size()), 0, start});
    best[start] = 0;

    auto emit = [&](const Walk& goal) {
        std::vector<LoopMove> moves;
        Walk cur = goal;
        while (cur != start) {
            auto it = parent.find(cur);
            moves.push_back(it->second.second);
            cur = it->second.first;
        }
        std::reverse(moves.begin(), moves.end());
        // Certificates carry vertex ids, not internal indices.
        for (auto& m : moves)
            if (m.kind != LoopMove::Kind::Collapse)
                m.vertex = g.id_of(m.vertex);
        result.contractible = true;
        result.moves = std::move(moves);
    };

    while (!open.empty()) {
        Node node = open.top();
        open.pop();
        auto it = best.find(node.state);
        if (it != best.end() && it->second < node.gcost)
            continue;
        if (node.state.size() <= 1) {
            emit(node.state);
            return result;
        }
        if (++result.states_explored > kStateCap)
            return result;  // unknown: cap reached

        const Walk& w = node.state;
        const int n = static_cast<int>(w.size());
        auto try_child = [&](const LoopMove& m) {
            Walk child;
            if (!apply_move(g, w, m, m.vertex, child))
                return;
            child = canonical_rotation(child);
            int gc = node.gcost + 1;
            int f = gc + heuristic(child.size());
            if (f > budget)
                return;
            auto bit = best.find(child);
            if (bit != best.end() && bit->second <= gc)
                return;
            best[child] = gc;
            parent[child] = {w, m};
            open.push({f, gc, child});
        };

        if (n == 3) {
            try_child({LoopMove::Kind::Collapse, 0, -1});
        }
        for (int p = 0; p < n; ++p) {
            auto at = [&](int i) { return w[static_cast<size_t>(((i % n) + n) % n)]; };
            if (n == 2) {
                try_child({LoopMove::Kind::Backtrack, p, at(p)});
                continue;
            }
            if (at(p - 1) == at(p + 1))
                try_child({LoopMove::Kind::Backtrack, p, at(p)});
            if (n >= 4 && at(p - 1) != at(p + 1) && g.adjacent(at(p - 1), at(p + 1)))
                try_child({LoopMove::Kind::Shrink, p, at(p)});
        }
        for (int p = 0; p < n; ++p) {
            int a = w[static_cast<size_t>(p)];
            int b = w[static_cast<size_t>((p + 1) % n)];
            for (int x : g.neighbors(a)) {
                if (x != b && x != a && g.adjacent(x, b))
                    try_child({LoopMove::Kind::Expand, p, x});
            }
        }
    }
    return result;  // search space exhausted under the budget: unknown
}

NullHomotopy bounded_nullhomotopy(const FlagComplex& c, const Cycle& loop, int budget) {
    return bounded_nullhomotopy(c, loop.vertices, budget);
}

std::vector<int> replay_nullhomotopy(const FlagComplex& c, const std::vector<int>& closed_walk_ids,
                                     const std::vector<LoopMove>& moves) {
    const SkeletonGraph& g = c.skeleton();
    Walk cur;
    cur.reserve(closed_walk_ids.size());
    for (int id : closed_walk_ids)
        cur.push_back(g.index_of(id));
    validate_walk(g, cur, "replay");
    cur = canonical_rotation(cur);
    int step = 0;
    for (const auto& m : moves) {
        LoopMove mi = m;
        if (mi.kind != LoopMove::Kind::Collapse)
            mi.vertex = g.index_of(m.vertex);
        Walk next;
        if (!apply_move(g, cur, mi, mi.vertex, next))
            throw Error("invalid nullhomotopy certificate at move " + std::to_string(step));
        validate_walk(g, next, "replay");
        cur = canonical_rotation(next);
        ++step;
    }
    std::vector<int> ids;
    ids.reserve(cur.size());
    for (int idx : cur)
        ids.push_back(g.id_of(idx));
    return ids;
}

int default_nullhomotopy_budget(const SkeletonGraph& g, int loop_length) {
    int diameter = 1;
    for (int v = 0; v < g.size(); ++v) {
        const int src[] = {v};
        auto dist = g.distances_from(src);
        for (int d : dist)
            diameter = std::max(diameter, d);
    }
    return 4 * diameter * std::max(1, loop_length);
}

}  // namespace systolic
