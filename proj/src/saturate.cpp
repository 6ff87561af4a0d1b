#include "systolic/saturate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "systolic/errors.hpp"
#include "systolic/homology.hpp"

namespace systolic {

namespace {

// Interior mask over classes: image at distance >= margin from every boundary
// vertex of the patch. Same rule as interior_classes, but against W's f.
std::vector<char> interior_mask(const FExtension& W, const SkeletonGraph& X,
                                const std::vector<int>& boundary_ids, int margin) {
    std::vector<char> interior(static_cast<size_t>(W.class_count()), 1);
    if (boundary_ids.empty() || margin <= 0) return interior;
    std::vector<int> sources;
    sources.reserve(boundary_ids.size());
    for (int id : boundary_ids) sources.push_back(X.index_of(id));
    std::vector<int> dist = X.distances_from(sources);
    for (int c = 0; c < W.class_count(); ++c) {
        int d = dist[static_cast<size_t>(W.f(c))];
        if (d >= 0 && d < margin) interior[static_cast<size_t>(c)] = 0;
    }
    return interior;
}

}  // namespace

std::vector<DiagonalMove> saturate_in_place(FExtension& W, const Ball& ball,
                                            const SkeletonGraph& X,
                                            const std::vector<char>& interior, int max_moves) {
    std::vector<DiagonalMove> done;
    for (;;) {
        std::optional<Cycle> bad = find_bad_loop(W, interior);
        if (!bad) break;
        if (static_cast<int>(done.size()) >= max_moves)
            throw BudgetExceeded("saturation budget of " + std::to_string(max_moves) +
                                     " move(s) exhausted with a bad loop remaining",
                                 bad->vertices);
        done.push_back(resolve_bad_loop(W, *bad, ball, X));
    }
    return done;
}

SaturationResult saturate(const YComplex& Y, const VertexAction& a, const Ball& ball,
                          const std::vector<int>& boundary_ids, int margin, int max_moves) {
    FExtension W(Y);
    const SkeletonGraph& X = a.patch();
    std::vector<char> interior = interior_mask(W, X, boundary_ids, margin);
    SaturationResult out{std::move(W), {}, 0};
    out.moves = saturate_in_place(out.W, ball, X, interior, max_moves);
    for (const DiagonalMove& m : out.moves) out.edges_added += static_cast<int>(m.orbit.size());
    return out;
}

HomotopyReport verify_homotopy_preservation(const YComplex& before, const FExtension& after,
                                            const std::vector<DiagonalMove>& moves,
                                            const SkeletonGraph& X,
                                            const std::vector<int>& boundary_ids, int margin) {
    HomotopyReport out;
    SkeletonGraph replay = before.complex().skeleton();

    for (size_t m = 0; m < moves.size(); ++m) {
        const DiagonalMove& mv = moves[m];
        const std::string tag = "move " + std::to_string(m);
        if (mv.orbit.size() != mv.mids.size()) {
            out.report.fail(tag + ": orbit and certificate lists disagree in length");
            continue;
        }
        const std::vector<int>& cyc = mv.bad_cycle.vertices;
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = replay.index_of(cyc[i]);
            int v = replay.index_of(cyc[(i + 1) % cyc.size()]);
            if (!replay.adjacent(u, v))
                out.report.fail(tag + ": recorded bad cycle is not a cycle at replay time");
        }
        for (size_t k = 0; k < mv.orbit.size(); ++k) {
            int u = replay.index_of(mv.orbit[k].first);
            int v = replay.index_of(mv.orbit[k].second);
            int w = replay.index_of(mv.mids[k]);
            if (replay.adjacent(u, v)) {
                out.report.fail(tag + ": edge (" + std::to_string(mv.orbit[k].first) + "," +
                                std::to_string(mv.orbit[k].second) +
                                ") was already present at insertion time");
                continue;
            }
            if (!replay.adjacent(u, w) || !replay.adjacent(w, v)) {
                out.report.fail(tag + ": edge (" + std::to_string(mv.orbit[k].first) + "," +
                                std::to_string(mv.orbit[k].second) +
                                ") has no triangle certificate through vertex " +
                                std::to_string(mv.mids[k]));
                continue;
            }
            replay.add_edge_by_index(u, v);
            ++out.replayed_edges;
        }
    }

    if (replay.edge_list_ids() != after.skeleton().edge_list_ids())
        out.report.fail("replayed edge set differs from the saturated complex");

    // The moves preserve the homotopy type, so the saturated interior must
    // still have trivial first homology.
    std::vector<char> interior = interior_mask(FExtension(before), X, boundary_ids, margin);
    std::vector<int> kept;
    for (int c = 0; c < after.class_count(); ++c)
        if (interior[static_cast<size_t>(c)]) kept.push_back(c);
    if (!kept.empty()) {
        FlagComplex inner(after.skeleton().induced(kept));
        out.h1_interior = homology_h1(inner);
        if (out.h1_interior.rank != 0 || !out.h1_interior.torsion.empty())
            out.report.fail("saturated interior has nontrivial first homology");
    }
    return out;
}

SystolicReport verify_systolic(const FExtension& W, const VertexAction& a, const Ball& ball,
                               const std::vector<int>& boundary_ids, int margin, int budget) {
    SystolicReport out;
    const SkeletonGraph& X = a.patch();
    const SkeletonGraph& g = W.skeleton();
    std::vector<char> interior = interior_mask(W, X, boundary_ids, margin);
    for (char b : interior) out.interior_count += b;

    out.largeness_witness = find_chordless_cycle(g, 6, &interior);
    if (out.largeness_witness)
        out.report.fail("interior chordless cycle of length " +
                        std::to_string(out.largeness_witness->length()) + " remains");

    out.connectivity = simply_connected_report(g, interior, W.x0_class(), budget);
    if (!out.connectivity.report.pass)
        for (const std::string& msg : out.connectivity.report.failures)
            out.report.fail("connectivity: " + msg);

    for (int v = 0; v < g.size(); ++v) out.max_valence = std::max(out.max_valence, g.degree(v));
    std::vector<int> fiber(static_cast<size_t>(X.size()), 0);
    for (int c = 0; c < W.class_count(); ++c) ++fiber[static_cast<size_t>(W.f(c))];
    for (int n : fiber) out.max_fiber = std::max(out.max_fiber, n);

    // Orbit/stabilizer bookkeeping for the partial ball action on classes.
    std::vector<int> parent(static_cast<size_t>(W.class_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (int c = 0; c < W.class_count(); ++c) {
        int fixing = 0;
        for (int h = 0; h < ball.size(); ++h) {
            int im = W.class_apply(ball.element(h).word, c);
            if (im < 0) continue;
            if (im == c) ++fixing;
            int ra = find(c), rb = find(im);
            if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
        }
        out.max_stabilizer = std::max(out.max_stabilizer, fixing);
    }
    for (int c = 0; c < W.class_count(); ++c)
        if (find(c) == c) ++out.orbit_count;

    return out;
}

}  // namespace systolic
