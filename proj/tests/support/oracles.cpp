#include "support/oracles.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace oracles {

using systolic::Ball;
using systolic::SkeletonGraph;
using systolic::VertexAction;

// ---- chordless cycles ----

namespace {

// Extends a path whose interior vertices are chord-free and never adjacent to
// the anchor; closing back to the anchor therefore yields a chordless cycle.
void extend(const SkeletonGraph& g, std::vector<int>& path, std::vector<char>& used, int min_len,
            int max_len, std::vector<std::vector<int>>& out) {
    int anchor = path.front();
    int last = path.back();
    int len = static_cast<int>(path.size());
    for (int w : g.neighbors(last)) {
        if (w <= anchor || used[static_cast<size_t>(w)]) continue;
        bool chord = false;
        for (int i = 1; i + 1 < len; ++i)
            if (g.adjacent(w, path[static_cast<size_t>(i)])) {
                chord = true;
                break;
            }
        if (chord) continue;
        // From the third vertex on, anchor adjacency forces the closure: any
        // longer completion would carry that adjacency as a chord. The second
        // vertex is anchor-adjacent by construction and must extend.
        if (len >= 2 && g.adjacent(w, anchor)) {
            if (len + 1 >= min_len && path[1] < w) {
                std::vector<int> cyc;
                for (int v : path) cyc.push_back(g.id_of(v));
                cyc.push_back(g.id_of(w));
                out.push_back(std::move(cyc));
            }
            continue;  // any longer completion would carry the chord to the anchor
        }
        if (len + 1 >= max_len) continue;
        used[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        extend(g, path, used, min_len, max_len, out);
        path.pop_back();
        used[static_cast<size_t>(w)] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> chordless_cycles(const SkeletonGraph& g, int min_len, int max_len) {
    std::vector<std::vector<int>> out;
    if (max_len < 3 || min_len > max_len) return out;
    min_len = std::max(min_len, 3);
    std::vector<char> used(static_cast<size_t>(g.size()), 0);
    for (int a = 0; a < g.size(); ++a) {
        std::vector<int> path{a};
        used[static_cast<size_t>(a)] = 1;
        extend(g, path, used, min_len, max_len, out);
        used[static_cast<size_t>(a)] = 0;
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

bool is_m_large_bruteforce(const SkeletonGraph& g, int m) {
    return chordless_cycles(g, 4, m - 1).empty();
}

// ---- homology by determinant divisors ----

namespace {

using Mat = std::vector<std::vector<long long>>;

// Bareiss fraction-free determinant; the matrix is consumed.
long long bareiss_det(Mat m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(k)]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c) {
                auto& e = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
                e = (e * m[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                     m[static_cast<size_t>(r)][static_cast<size_t>(k)] *
                         m[static_cast<size_t>(k)][static_cast<size_t>(c)]) /
                    prev;
            }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return sign * prev;
}

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - k + i) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// d_k = gcd of all k x k minors (0 when all vanish); fills divisors[k] for
// k = 1.. until the first zero, and returns the rank.
int determinant_divisors(const Mat& m, std::vector<long long>& divisors) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    divisors.assign(1, 1);  // d_0
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        long long prev = divisors.back();
        long long g = 0;
        std::vector<int> rc(static_cast<size_t>(k));
        std::iota(rc.begin(), rc.end(), 0);
        do {
            std::vector<int> cc(static_cast<size_t>(k));
            std::iota(cc.begin(), cc.end(), 0);
            do {
                Mat sub(static_cast<size_t>(k), std::vector<long long>(static_cast<size_t>(k)));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        sub[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                            m[static_cast<size_t>(rc[static_cast<size_t>(i)])]
                             [static_cast<size_t>(cc[static_cast<size_t>(j)])];
                g = std::gcd(g, bareiss_det(std::move(sub)));
                if (g == prev) break;  // d_{k-1} divides d_k, so no smaller gcd is possible
            } while (next_combination(cc, cols));
            if (g == prev) break;
        } while (next_combination(rc, rows));
        if (g == 0) return k - 1;
        divisors.push_back(g);
    }
    return static_cast<int>(divisors.size()) - 1;
}

}  // namespace

MinorH1 h1_minors(const SkeletonGraph& g) {
    int n = g.size();
    std::map<std::pair<int, int>, int> edge_index;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) edge_index[{i, j}] = static_cast<int>(edge_index.size());
    int e = static_cast<int>(edge_index.size());

    std::vector<std::array<int, 3>> triangles;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!g.adjacent(i, j)) continue;
            for (int k = j + 1; k < n; ++k)
                if (g.adjacent(i, k) && g.adjacent(j, k)) triangles.push_back({i, j, k});
        }
    int t = static_cast<int>(triangles.size());

    // Components by scratch DFS; rank of the vertex boundary is V - C.
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int components = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++components;
        std::vector<int> stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
    }
    int rank_d1 = n - components;

    Mat d2(static_cast<size_t>(e), std::vector<long long>(static_cast<size_t>(t), 0));
    for (int c = 0; c < t; ++c) {
        auto [i, j, k] = triangles[static_cast<size_t>(c)];
        d2[static_cast<size_t>(edge_index.at({i, j}))][static_cast<size_t>(c)] = 1;
        d2[static_cast<size_t>(edge_index.at({j, k}))][static_cast<size_t>(c)] = 1;
        d2[static_cast<size_t>(edge_index.at({i, k}))][static_cast<size_t>(c)] = -1;
    }
    std::vector<long long> divisors;
    int rank_d2 = determinant_divisors(d2, divisors);

    MinorH1 out;
    out.rank = (e - rank_d1) - rank_d2;
    for (int k = 1; k <= rank_d2; ++k) {
        long long s = divisors[static_cast<size_t>(k)] / divisors[static_cast<size_t>(k - 1)];
        if (s > 1) out.torsion.push_back(s);
    }
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

// ---- gluing partition ----

namespace {

std::vector<int> bfs_dist(const SkeletonGraph& g, int src) {
    std::vector<int> dist(static_cast<size_t>(g.size()), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
    }
    return dist;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(static_cast<size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<size_t>(x)] != x) {
            p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
            x = p[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

std::vector<std::vector<std::pair<int, int>>> gluing_classes(const Ball& ball, int R,
                                                             const VertexAction& a,
                                                             int x0_index) {
    const SkeletonGraph& g = a.patch();
    int n = g.size();
    int hn = ball.size();
    std::vector<std::vector<int>> node(static_cast<size_t>(hn),
                                       std::vector<int>(static_cast<size_t>(n), -1));
    std::vector<std::pair<int, int>> nodes;
    for (int h = 0; h < hn; ++h) {
        int c = ball.element(h).map[static_cast<size_t>(x0_index)];
        if (c < 0) throw std::runtime_error("gluing_classes: h*x0 escapes the patch");
        std::vector<int> dist = bfs_dist(g, c);
        for (int v = 0; v < n; ++v)
            if (dist[static_cast<size_t>(v)] >= 0 && dist[static_cast<size_t>(v)] <= R) {
                node[static_cast<size_t>(h)][static_cast<size_t>(v)] =
                    static_cast<int>(nodes.size());
                nodes.emplace_back(h, v);
            }
    }
    Dsu dsu(static_cast<int>(nodes.size()));
    int syms = a.presentation().symbol_count();
    for (int h = 0; h < hn; ++h)
        for (int s = 0; s < syms; ++s) {
            int h2 = ball.mult_right(h, s);
            if (h2 < 0) continue;
            for (int v = 0; v < n; ++v) {
                int x = node[static_cast<size_t>(h)][static_cast<size_t>(v)];
                int y = node[static_cast<size_t>(h2)][static_cast<size_t>(v)];
                if (x >= 0 && y >= 0) dsu.unite(x, y);
            }
        }
    std::map<int, std::vector<std::pair<int, int>>> by_root;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        by_root[dsu.find(i)].push_back(nodes[static_cast<size_t>(i)]);
    std::vector<std::vector<std::pair<int, int>>> out;
    for (auto& [root, members] : by_root) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- graphs up to isomorphism ----

namespace {

// Minimal upper-triangle adjacency code over all vertex orders, by DFS with
// prefix pruning. adj[v] is a neighbor bitmask; n <= 8 keeps codes in 28 bits.
struct Canonicalizer {
    int n;
    const std::array<std::uint8_t, 8>& adj;
    int total_bits;
    std::uint32_t best;
    std::array<int, 8> perm{};

    Canonicalizer(int n_, const std::array<std::uint8_t, 8>& adj_)
        : n(n_), adj(adj_), total_bits(n_ * (n_ - 1) / 2),
          best(total_bits >= 32 ? 0xffffffffu : (1u << total_bits) - 1u) {}

    void dfs(int i, std::uint8_t used, std::uint32_t code, int bits) {
        if (i == n) {
            best = code;  // pruning guarantees code <= best here
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            std::uint32_t row = 0;
            for (int j = 0; j < std::min(i, 8); ++j)
                row = (row << 1) | ((adj[static_cast<size_t>(v)] >>
                                     perm[static_cast<size_t>(j)]) & 1u);
            std::uint32_t next = (code << i) | row;
            int len = bits + i;
            if (next > (best >> (total_bits - len))) continue;
            perm[static_cast<size_t>(i)] = v;
            dfs(i + 1, static_cast<std::uint8_t>(used | (1u << v)), next, len);
        }
    }

    std::uint32_t run() {
        if (n <= 1) return 0;
        dfs(0, 0, 0, 0);
        return best;
    }
};

std::uint32_t canonical_code(int n, const std::array<std::uint8_t, 8>& adj) {
    return Canonicalizer(n, adj).run();
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> all_graphs_up_to_iso(int n) {
    if (n < 1 || n > 8) throw std::runtime_error("all_graphs_up_to_iso: n must be in 1..8");
    // Level k: canonical code -> adjacency masks of one representative.
    std::map<std::uint32_t, std::array<std::uint8_t, 8>> level;
    level[0] = {};
    for (int k = 2; k <= n; ++k) {
        std::map<std::uint32_t, std::array<std::uint8_t, 8>> next;
        for (const auto& [code, adj] : level) {
            (void)code;
            for (std::uint32_t subset = 0; subset < (1u << (k - 1)); ++subset) {
                std::array<std::uint8_t, 8> ext = adj;
                ext[static_cast<size_t>(k - 1)] = static_cast<std::uint8_t>(subset);
                for (int j = 0; j < k - 1; ++j)
                    if (subset & (1u << j))
                        ext[static_cast<size_t>(j)] |= static_cast<std::uint8_t>(1u << (k - 1));
                next.emplace(canonical_code(k, ext), ext);
            }
        }
        level = std::move(next);
    }
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& [code, adj] : level) {
        (void)code;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[static_cast<size_t>(i)] & (1u << j)) edges.emplace_back(i, j);
        out.push_back(std::move(edges));
    }
    return out;
}

}  // namespace oracles
