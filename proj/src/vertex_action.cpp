#include "systolic/vertex_action.hpp"

#include <string>

#include "systolic/errors.hpp"

namespace systolic {

VertexAction::VertexAction(const Presentation& p, const SkeletonGraph& patch,
                           const std::map<std::string, std::vector<std::pair<int, int>>>& raw_maps)
    : pres_(&p), patch_(&patch) {
    const size_t n = static_cast<size_t>(patch.size());
    maps_.assign(static_cast<size_t>(p.symbol_count()), std::vector<int>(n, -1));
    std::vector<char> given(static_cast<size_t>(p.symbol_count()), 0);

    for (const auto& [name, pairs] : raw_maps) {
        auto sym = p.symbol_index(name);
        if (!sym)
            throw InputError("action file maps unknown generator \"" + name + "\"");
        given[static_cast<size_t>(*sym)] = 1;
        auto& m = maps_[static_cast<size_t>(*sym)];
        for (const auto& [from, to] : pairs) {
            int fi = patch.index_of(from);
            int ti = patch.index_of(to);
            if (m[static_cast<size_t>(fi)] != -1)
                throw InputError("generator \"" + name + "\" maps vertex " + std::to_string(from) +
                                 " twice");
            m[static_cast<size_t>(fi)] = ti;
        }
    }

    // Derive missing inverse maps from the given direction.
    for (int s = 0; s < p.symbol_count(); ++s) {
        int si = p.inverse(s);
        if (si == s || given[static_cast<size_t>(s)] || !given[static_cast<size_t>(si)])
            continue;
        auto& m = maps_[static_cast<size_t>(s)];
        const auto& fwd = maps_[static_cast<size_t>(si)];
        for (size_t v = 0; v < n; ++v) {
            int img = fwd[v];
            if (img == -1)
                continue;
            if (m[static_cast<size_t>(img)] != -1)
                throw InputError("generator \"" + p.symbol(si) + "\" is not injective; cannot derive " +
                                 p.symbol(s));
            m[static_cast<size_t>(img)] = static_cast<int>(v);
        }
        given[static_cast<size_t>(s)] = 1;
    }
    for (int s = 0; s < p.symbol_count(); ++s)
        if (!given[static_cast<size_t>(s)])
            throw InputError("no vertex map given or derivable for generator \"" + p.symbol(s) +
                             "\"");
}

int VertexAction::word_apply(const Word& w, int vertex_index) const {
    int v = vertex_index;
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        int next = apply_symbol(w[static_cast<size_t>(i)], v);
        if (next == -1)
            throw DomainEscape(patch_->id_of(v), i,
                               "applying generator " + pres_->symbol(w[static_cast<size_t>(i)]));
        v = next;
    }
    return v;
}

int VertexAction::try_word_apply(const Word& w, int vertex_index) const {
    int v = vertex_index;
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        v = apply_symbol(w[static_cast<size_t>(i)], v);
        if (v == -1)
            return -1;
    }
    return v;
}

std::vector<std::string> VertexAction::validate() const {
    std::vector<std::string> failures;
    const Presentation& p = *pres_;
    const SkeletonGraph& g = *patch_;

    for (int s = 0; s < p.symbol_count(); ++s) {
        const auto& m = maps_[static_cast<size_t>(s)];
        std::vector<char> hit(static_cast<size_t>(g.size()), 0);
        for (int v = 0; v < g.size(); ++v) {
            int img = m[static_cast<size_t>(v)];
            if (img == -1)
                continue;
            if (hit[static_cast<size_t>(img)])
                failures.push_back("generator " + p.symbol(s) + " is not injective at vertex " +
                                   std::to_string(g.id_of(img)));
            hit[static_cast<size_t>(img)] = 1;
            // Automorphism restriction: adjacent vertices map to adjacent ones.
            for (int u : g.neighbors(v)) {
                int uimg = m[static_cast<size_t>(u)];
                if (uimg != -1 && !g.adjacent(img, uimg))
                    failures.push_back("generator " + p.symbol(s) + " breaks the edge " +
                                       std::to_string(g.id_of(v)) + "-" + std::to_string(g.id_of(u)));
            }
        }
        // Inverse consistency on the overlap.
        const auto& mi = maps_[static_cast<size_t>(p.inverse(s))];
        for (int v = 0; v < g.size(); ++v) {
            int img = m[static_cast<size_t>(v)];
            if (img != -1 && mi[static_cast<size_t>(img)] != -1 &&
                mi[static_cast<size_t>(img)] != v)
                failures.push_back("generator " + p.symbol(p.inverse(s)) + " does not invert " +
                                   p.symbol(s) + " at vertex " + std::to_string(g.id_of(v)));
        }
    }

    for (const auto& r : p.relators()) {
        for (int v = 0; v < g.size(); ++v) {
            int img = try_word_apply(r, v);
            if (img != -1 && img != v) {
                failures.push_back("relator " + p.word_string(r) + " moves vertex " +
                                   std::to_string(g.id_of(v)) + " to " + std::to_string(g.id_of(img)));
                break;  // one witness per relator keeps the report short
            }
        }
    }
    return failures;
}

}  // namespace systolic
