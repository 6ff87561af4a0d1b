#include "systolic/y_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "systolic/errors.hpp"

namespace systolic {

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

int YComplex::class_of(int h, int v) const {
    const std::vector<int>& verts = ball_verts_[static_cast<size_t>(h)];
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    if (it == verts.end() || *it != v) return -1;
    return section_[static_cast<size_t>(h)][static_cast<size_t>(it - verts.begin())];
}

YComplex build_Y(const Ball& ball, int R, const VertexAction& a, int x0_index) {
    if (R < 0) throw InputError("R must be nonnegative");
    const SkeletonGraph& g = a.patch();
    const Presentation& p = a.presentation();

    YComplex Y;
    Y.R = R;
    Y.x0 = x0_index;

    const int nh = ball.size();
    Y.ball_verts_.resize(static_cast<size_t>(nh));
    std::vector<size_t> offset(static_cast<size_t>(nh) + 1, 0);
    for (int h = 0; h < nh; ++h) {
        int c = ball.element(h).map[x0_index];
        if (c < 0)
            throw PatchTooSmall(p.word_string(ball.element(h).word), g.id_of(x0_index), R);
        std::vector<int> dist = g.distances_from(std::vector<int>{c});
        for (int v = 0; v < g.size(); ++v)
            if (dist[v] >= 0 && dist[v] <= R) Y.ball_verts_[static_cast<size_t>(h)].push_back(v);
        offset[static_cast<size_t>(h) + 1] =
            offset[static_cast<size_t>(h)] + Y.ball_verts_[static_cast<size_t>(h)].size();
    }
    const size_t total = offset[static_cast<size_t>(nh)];

    auto labeled = [&](int h, int v) -> int {
        const std::vector<int>& verts = Y.ball_verts_[static_cast<size_t>(h)];
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || *it != v) return -1;
        return static_cast<int>(offset[static_cast<size_t>(h)] +
                                static_cast<size_t>(it - verts.begin()));
    };

    // v^{gs} ~ v^g over generating pairs.
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    for (int e = 0; e < nh; ++e) {
        for (int s = 0; s < p.symbol_count(); ++s) {
            int h = ball.mult_right(e, s);
            if (h < 0) continue;
            const std::vector<int>& ve = Y.ball_verts_[static_cast<size_t>(e)];
            for (int v : ve) {
                int other = labeled(h, v);
                if (other >= 0) uf_union(parent, labeled(e, v), other);
            }
        }
    }

    // Class ids ranked by least (h, v) member. Unions always parent the
    // larger id to the smaller, and labeled ids increase with (h, v), so the
    // root of a class is its least member.
    std::vector<int> root_class(total, -1);
    int nc = 0;
    for (size_t i = 0; i < total; ++i)
        if (uf_find(parent, static_cast<int>(i)) == static_cast<int>(i))
            root_class[i] = nc++;
    Y.rep_.resize(static_cast<size_t>(nc));
    Y.f_.assign(static_cast<size_t>(nc), -1);
    Y.members_.resize(static_cast<size_t>(nc));
    Y.section_.resize(static_cast<size_t>(nh));

    for (int h = 0; h < nh; ++h) {
        const std::vector<int>& verts = Y.ball_verts_[static_cast<size_t>(h)];
        Y.section_[static_cast<size_t>(h)].resize(verts.size());
        for (size_t k = 0; k < verts.size(); ++k) {
            size_t lid = offset[static_cast<size_t>(h)] + k;
            int c = root_class[static_cast<size_t>(uf_find(parent, static_cast<int>(lid)))];
            Y.section_[static_cast<size_t>(h)][k] = c;
            Y.members_[static_cast<size_t>(c)].emplace_back(h, verts[k]);
        }
    }
    for (int c = 0; c < nc; ++c) {
        Y.rep_[static_cast<size_t>(c)] = Y.members_[static_cast<size_t>(c)].front();
        int v = Y.rep_[static_cast<size_t>(c)].second;
        Y.f_[static_cast<size_t>(c)] = v;
        for (const auto& [mh, mv] : Y.members_[static_cast<size_t>(c)])
            if (mv != v) throw Error("glued vertices with distinct images: gluing is corrupt");
    }

    // Edges: same copy, adjacent underlying vertices.
    std::set<std::pair<int, int>> edges;
    for (int h = 0; h < nh; ++h) {
        const std::vector<int>& verts = Y.ball_verts_[static_cast<size_t>(h)];
        std::vector<char> in_ball(static_cast<size_t>(g.size()), 0);
        for (int v : verts) in_ball[static_cast<size_t>(v)] = 1;
        for (size_t k = 0; k < verts.size(); ++k) {
            int u = verts[k];
            int cu = Y.section_[static_cast<size_t>(h)][k];
            for (int w : g.neighbors(u)) {
                if (w <= u || !in_ball[static_cast<size_t>(w)]) continue;
                int cw = Y.class_of(h, w);
                edges.insert({std::min(cu, cw), std::max(cu, cw)});
            }
        }
    }
    std::vector<int> class_ids(static_cast<size_t>(nc));
    std::iota(class_ids.begin(), class_ids.end(), 0);
    Y.complex_ = FlagComplex(SkeletonGraph::from_edges(
        class_ids, std::vector<std::pair<int, int>>(edges.begin(), edges.end())));

    // Generator action on classes. Members of one class can disagree near the
    // truncation boundary, when the gluing chain joining them leaves the ball
    // after translation; the action is honestly partial there, so conflicting
    // defined images collapse to undefined instead of an arbitrary pick.
    Y.action_.assign(static_cast<size_t>(p.symbol_count()), std::vector<int>(static_cast<size_t>(nc), -1));
    for (int s = 0; s < p.symbol_count(); ++s) {
        for (int c = 0; c < nc; ++c) {
            int image = -1;
            bool conflict = false;
            for (const auto& [h, v] : Y.members_[static_cast<size_t>(c)]) {
                int sh = ball.mult_left(s, h);
                int sv = a.apply_symbol(s, v);
                if (sh < 0 || sv < 0) continue;
                int sc = Y.class_of(sh, sv);
                if (sc < 0) continue;
                if (image >= 0 && image != sc) {
                    conflict = true;
                    break;
                }
                image = sc;
            }
            Y.action_[static_cast<size_t>(s)][static_cast<size_t>(c)] = conflict ? -1 : image;
        }
    }
    return Y;
}

}  // namespace systolic
