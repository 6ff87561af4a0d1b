#include "systolic/y_verify.hpp"

#include <algorithm>
#include <set>

#include "systolic/errors.hpp"
#include "systolic/nullhomotopy.hpp"
#include "systolic/pi1.hpp"

namespace systolic {

CheckReport verify_sections(const YComplex& Y, const VertexAction& a, const Ball& ball) {
    const SkeletonGraph& g = a.patch();
    const Presentation& p = a.presentation();
    const SkeletonGraph& ys = Y.complex().skeleton();
    CheckReport rep;

    for (int h = 0; h < ball.size(); ++h) {
        const std::string hw = p.word_string(ball.element(h).word);
        const std::vector<int>& verts = Y.ball_vertices(h);
        const std::vector<int>& sec = Y.section(h);

        std::set<int> image(sec.begin(), sec.end());
        if (image.size() != sec.size())
            rep.fail("section of " + hw + " is not injective");

        for (size_t k = 0; k < verts.size(); ++k) {
            if (Y.f(sec[k]) != verts[k]) {
                rep.fail("f(i_" + hw + "(" + std::to_string(g.id_of(verts[k])) +
                         ")) differs from the vertex itself");
                break;
            }
        }

        for (size_t i = 0; i < verts.size(); ++i) {
            for (size_t j = i + 1; j < verts.size(); ++j) {
                bool in_x = g.adjacent(verts[i], verts[j]);
                bool in_y = ys.adjacent(sec[i], sec[j]);
                if (in_x != in_y) {
                    rep.fail("section of " + hw + " breaks adjacency between vertices " +
                             std::to_string(g.id_of(verts[i])) + " and " +
                             std::to_string(g.id_of(verts[j])) + (in_x ? " (edge lost)" : " (edge invented)"));
                }
            }
        }
    }

    for (int e = 0; e < ball.size(); ++e) {
        for (int s = 0; s < p.symbol_count(); ++s) {
            int h = ball.mult_right(e, s);
            if (h < 0) continue;
            for (int v : Y.ball_vertices(e)) {
                int other = Y.class_of(h, v);
                if (other < 0) continue;
                if (Y.class_of(e, v) != other) {
                    rep.fail("sections of " + p.word_string(ball.element(e).word) + " and " +
                             p.word_string(ball.element(h).word) +
                             " disagree on shared vertex " + std::to_string(g.id_of(v)));
                }
            }
        }
    }
    return rep;
}

CheckReport verify_factorization(const YComplex& Y, const GammaComplex& gamma,
                                 const VertexAction& a, const Ball& ball) {
    const SkeletonGraph& g = a.patch();
    const Presentation& p = a.presentation();
    const SkeletonGraph& ys = Y.complex().skeleton();
    CheckReport rep;

    auto record_name = [&](const GammaRecord& r) {
        return p.word_string(ball.element(r.elem).word) + "*gamma_" + p.symbol(r.sym) +
               "[" + std::to_string(r.seg) + "]";
    };

    for (const auto& [id, records] : gamma.vertex_records) {
        int v = g.index_of(id);
        int cls = -2;
        const GammaRecord* first = nullptr;
        for (const GammaRecord& r : records) {
            int c = Y.class_of(r.elem, v);
            if (c < 0) {
                rep.fail("piece " + record_name(r) + " leaves its own section ball at vertex " +
                         std::to_string(id));
                continue;
            }
            if (cls == -2) {
                cls = c;
                first = &r;
            } else if (c != cls) {
                rep.fail("vertex " + std::to_string(id) + " splits in Y: " + record_name(*first) +
                         " and " + record_name(r) + " land in different classes");
            }
        }
    }

    for (const auto& [edge, records] : gamma.edge_records) {
        int u = g.index_of(edge.first);
        int v = g.index_of(edge.second);
        std::pair<int, int> expect{-2, -2};
        for (const GammaRecord& r : records) {
            int cu = Y.class_of(r.elem, u);
            int cv = Y.class_of(r.elem, v);
            if (cu < 0 || cv < 0) {
                rep.fail("piece " + record_name(r) + " leaves its own section ball on edge (" +
                         std::to_string(edge.first) + "," + std::to_string(edge.second) + ")");
                continue;
            }
            if (!ys.adjacent(cu, cv)) {
                rep.fail("edge (" + std::to_string(edge.first) + "," +
                         std::to_string(edge.second) + ") of piece " + record_name(r) +
                         " has no image edge in Y");
                continue;
            }
            std::pair<int, int> got{std::min(cu, cv), std::max(cu, cv)};
            if (expect.first == -2)
                expect = got;
            else if (got != expect)
                rep.fail("edge (" + std::to_string(edge.first) + "," +
                         std::to_string(edge.second) + ") splits in Y across its records");
        }
    }
    return rep;
}

std::vector<char> interior_classes(const YComplex& Y, const SkeletonGraph& X,
                                   const std::vector<int>& boundary_ids, int margin) {
    std::vector<char> interior(static_cast<size_t>(Y.class_count()), 1);
    if (boundary_ids.empty() || margin <= 0) return interior;
    std::vector<int> sources;
    sources.reserve(boundary_ids.size());
    for (int id : boundary_ids) sources.push_back(X.index_of(id));
    std::vector<int> dist = X.distances_from(sources);
    for (int c = 0; c < Y.class_count(); ++c) {
        int d = dist[static_cast<size_t>(Y.f(c))];
        if (d >= 0 && d < margin) interior[static_cast<size_t>(c)] = 0;
    }
    return interior;
}

SimpleConnectivityReport simply_connected_report(const SkeletonGraph& g,
                                                 const std::vector<char>& keep, int base_id,
                                                 int budget) {
    SimpleConnectivityReport out;
    std::vector<int> kept;
    for (int v = 0; v < g.size(); ++v)
        if (keep[static_cast<size_t>(v)]) kept.push_back(v);
    out.interior_count = static_cast<int>(kept.size());
    if (kept.empty()) {
        out.report.fail("interior is empty: margin leaves nothing to verify");
        return out;
    }

    SkeletonGraph inner = g.induced(kept);
    FlagComplex inner_complex(inner);
    out.h1 = homology_h1(inner_complex);
    if (out.h1.rank != 0 || !out.h1.torsion.empty())
        out.report.fail("interior has nontrivial first homology (rank " +
                        std::to_string(out.h1.rank) + ")");

    int base = 0;
    if (base_id >= 0 && inner.has_vertex(base_id)) base = inner.index_of(base_id);

    std::vector<int> dist = inner.distances_from(std::vector<int>{base});
    std::vector<int> comp;
    for (int v = 0; v < inner.size(); ++v)
        if (dist[static_cast<size_t>(v)] >= 0) comp.push_back(v);
    if (comp.size() != kept.size())
        out.report.fail("interior is disconnected: fundamental group verified on the base component only");

    SkeletonGraph comp_skel = inner.induced(comp);
    FlagComplex comp_complex(comp_skel);
    Pi1Presentation pres = pi1_presentation(comp_complex, comp_skel.index_of(inner.id_of(base)));
    out.generators = static_cast<int>(pres.generators.size());
    for (int gidx = 0; gidx < out.generators; ++gidx) {
        std::vector<int> loop = generator_loop_ids(comp_complex, pres, gidx);
        int b = budget > 0 ? budget
                           : default_nullhomotopy_budget(comp_skel, static_cast<int>(loop.size()));
        NullHomotopy nh = bounded_nullhomotopy(comp_complex, loop, b);
        if (nh.contractible)
            ++out.contracted;
        else
            out.unresolved.push_back(gidx);
    }
    if (!out.unresolved.empty())
        out.report.fail(std::to_string(out.unresolved.size()) +
                        " fundamental-group generator(s) not contracted within budget");
    return out;
}

SimpleConnectivityReport verify_Y_simply_connected(const YComplex& Y, const SkeletonGraph& X,
                                                   const std::vector<int>& boundary_ids,
                                                   int margin, int budget) {
    std::vector<char> interior = interior_classes(Y, X, boundary_ids, margin);
    // Base the fundamental group at i_1(x0) when that class is interior.
    return simply_connected_report(Y.complex().skeleton(), interior, Y.class_of(0, Y.x0), budget);
}

PropernessStats f_properness_stats(const YComplex& Y, const SkeletonGraph& X) {
    PropernessStats st;
    st.fiber_size.assign(static_cast<size_t>(X.size()), 0);
    for (int c = 0; c < Y.class_count(); ++c) ++st.fiber_size[static_cast<size_t>(Y.f(c))];
    for (int n : st.fiber_size) st.max_fiber = std::max(st.max_fiber, n);
    const SkeletonGraph& ys = Y.complex().skeleton();
    for (int v = 0; v < ys.size(); ++v) st.max_valence = std::max(st.max_valence, ys.degree(v));
    return st;
}

}  // namespace systolic
