#include "systolic/f_extension.hpp"

#include <algorithm>
#include <set>

#include "systolic/errors.hpp"

namespace systolic {

FExtension::FExtension(const YComplex& Y)
    : skel_(Y.complex().skeleton()),
      action_(Y.action()),
      original_edges_(Y.complex().skeleton().edge_count()),
      x0_class_(Y.class_of(0, Y.x0)) {
    f_.resize(static_cast<size_t>(Y.class_count()));
    for (int c = 0; c < Y.class_count(); ++c) f_[static_cast<size_t>(c)] = Y.f(c);
}

FExtension::FExtension(SkeletonGraph skel, std::vector<int> f,
                       std::vector<std::vector<int>> action, int x0_class)
    : skel_(std::move(skel)),
      f_(std::move(f)),
      action_(std::move(action)),
      original_edges_(skel_.edge_count()),
      x0_class_(x0_class) {
    if (static_cast<int>(f_.size()) != skel_.size())
        throw InputError("f-extension: f must assign every class an image");
    for (const std::vector<int>& m : action_)
        if (static_cast<int>(m.size()) != skel_.size())
            throw InputError("f-extension: each symbol map must cover every class");
}

int FExtension::class_apply(const Word& w, int cls) const {
    for (auto it = w.rbegin(); it != w.rend() && cls >= 0; ++it) cls = act(*it, cls);
    return cls;
}

std::optional<Cycle> find_bad_loop(const FExtension& W, const std::vector<char>& interior) {
    return find_chordless_cycle(W.skeleton(), 6, &interior);
}

DiagonalMove resolve_bad_loop(FExtension& W, const Cycle& alpha, const Ball& ball,
                              const SkeletonGraph& X) {
    SkeletonGraph& g = W.skel_;
    const int n = alpha.length();
    if (n < 4 || n > 5) throw InputError("resolve_bad_loop: cycle length must be 4 or 5");

    std::vector<int> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = g.index_of(alpha.vertices[static_cast<size_t>(i)]);

    for (int i = 0; i < n; ++i)
        if (!g.adjacent(c[static_cast<size_t>(i)], c[static_cast<size_t>((i + 1) % n)]))
            throw InputError("resolve_bad_loop: vertex sequence is not a cycle");
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (g.adjacent(c[static_cast<size_t>(i)], c[static_cast<size_t>(j)]))
                throw InputError("resolve_bad_loop: cycle already has a diagonal");
        }

    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = W.f_[static_cast<size_t>(c[static_cast<size_t>(i)])];

    DiagonalMove mv;
    mv.bad_cycle = alpha;

    // Pick the diagonal as a position pair (pi, pj) of the cycle.
    int pi = -1, pj = -1;
    bool injective = true;
    for (int i = 0; i < n && injective; ++i)
        for (int j = i + 1; j < n; ++j)
            if (img[static_cast<size_t>(i)] == img[static_cast<size_t>(j)]) {
                injective = false;
                break;
            }

    if (injective) {
        // The image is an embedded short cycle in the patch, which is 6-large:
        // it must have a diagonal there, and we pull back the least one.
        mv.kind = DiagonalMove::Case::Bijective;
        for (int i = 0; i < n && pi < 0; ++i)
            for (int j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;
                if (X.adjacent(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)])) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        if (pi < 0) {
            std::vector<int> cyc;
            cyc.reserve(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) cyc.push_back(X.id_of(img[static_cast<size_t>(i)]));
            throw AmbientNotSixLarge(std::move(cyc));
        }
    } else {
        for (int i = 0; i < n && pi < 0; ++i)
            for (int j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;
                if (img[static_cast<size_t>(i)] == img[static_cast<size_t>(j)]) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        if (pi >= 0) {
            mv.kind = DiagonalMove::Case::NonConsecutiveSameImage;
        } else {
            // Only consecutive repeats remain: for the least such pair (v_k,
            // v_{k+1}), join v_k to the other cycle neighbor of v_{k+1}.
            mv.kind = DiagonalMove::Case::ConsecutiveSameImage;
            int k = -1;
            for (int i = 0; i < n && k < 0; ++i)
                if (img[static_cast<size_t>(i)] == img[static_cast<size_t>((i + 1) % n)]) k = i;
            pi = k;
            pj = (k + 2) % n;
        }
    }

    // Apex of the triangle certificate: the cycle vertex between the pair.
    int mid_pos = ((pj - pi + n) % n == 2) ? (pi + 1) % n : (pj + 1) % n;
    const int u = c[static_cast<size_t>(pi)];
    const int v = c[static_cast<size_t>(pj)];
    const int mid = c[static_cast<size_t>(mid_pos)];

    std::set<std::pair<int, int>> seen;
    for (int h = 0; h < ball.size(); ++h) {
        const Word& w = ball.element(h).word;
        int hu = W.class_apply(w, u);
        int hv = W.class_apply(w, v);
        int hm = W.class_apply(w, mid);
        // A translate is usable only when the whole certifying triangle
        // survives the truncation; everything else is skipped and recorded.
        if (hu < 0 || hv < 0 || hm < 0 || hu == hv || !g.adjacent(hu, hm) ||
            !g.adjacent(hm, hv)) {
            mv.skipped.push_back(h);
            continue;
        }
        std::pair<int, int> e{std::min(hu, hv), std::max(hu, hv)};
        if (!seen.insert(e).second) continue;  // coinciding translates: one edge
        if (g.adjacent(e.first, e.second)) continue;
        g.add_edge_by_index(e.first, e.second);
        mv.orbit.emplace_back(g.id_of(e.first), g.id_of(e.second));
        mv.mids.push_back(g.id_of(hm));
        mv.images.emplace_back(W.f_[static_cast<size_t>(e.first)], W.f_[static_cast<size_t>(e.second)]);
    }
    if (mv.orbit.empty())
        throw Error("resolve_bad_loop: no edge was added (identity translate failed)");
    mv.chosen = mv.orbit.front();

    W.moves_.push_back(mv);
    return mv;
}

}  // namespace systolic
