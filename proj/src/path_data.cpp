#include "systolic/path_data.hpp"

#include <algorithm>
#include <set>

#include "systolic/errors.hpp"

namespace systolic {

namespace {

// Translate a patch-index path by one symbol map, throwing when the image
// leaves the patch.
std::vector<int> translate_by_symbol(const VertexAction& a, int sym, const std::vector<int>& path,
                                     const std::string& context) {
    std::vector<int> out;
    out.reserve(path.size());
    for (size_t i = 0; i < path.size(); ++i) {
        int v = a.apply_symbol(sym, path[i]);
        if (v < 0)
            throw DomainEscape(a.patch().id_of(path[i]), static_cast<int>(i), context);
        out.push_back(v);
    }
    return out;
}

}  // namespace

EquivariantPathData make_path_data(const Presentation& p, const VertexAction& a, int x0_id,
                                   const std::map<std::string, std::vector<int>>& raw_gamma_ids) {
    const SkeletonGraph& g = a.patch();
    EquivariantPathData d;
    d.x0 = g.index_of(x0_id);
    d.gamma.assign(p.symbol_count(), {});

    std::vector<bool> given(p.symbol_count(), false);
    for (const auto& [name, ids] : raw_gamma_ids) {
        auto sym = p.symbol_index(name);
        if (!sym) throw InputError("path given for unknown generator '" + name + "'");
        if (ids.empty()) throw InputError("empty path for generator '" + name + "'");
        std::vector<int> path;
        path.reserve(ids.size());
        for (int id : ids) path.push_back(g.index_of(id));
        d.gamma[*sym] = std::move(path);
        given[*sym] = true;
    }

    for (int s = 0; s < p.symbol_count(); ++s) {
        if (given[s]) continue;
        int si = p.inverse(s);
        if (!given[si])
            throw InputError("no path given for generator '" + p.symbol(s) + "' or its inverse");
        std::vector<int> rev(d.gamma[si].rbegin(), d.gamma[si].rend());
        d.gamma[s] = translate_by_symbol(a, s, rev,
                                         "deriving path for generator " + p.symbol(s));
        given[s] = true;
    }

    d.L = 0;
    for (const auto& path : d.gamma)
        d.L = std::max(d.L, static_cast<int>(path.size()) - 1);
    return d;
}

std::vector<std::string> validate_path_data(const EquivariantPathData& d, const VertexAction& a) {
    const SkeletonGraph& g = a.patch();
    const Presentation& p = a.presentation();
    std::vector<std::string> failures;

    if (d.x0 < 0 || d.x0 >= g.size()) {
        failures.push_back("base vertex index out of range");
        return failures;
    }
    if (static_cast<int>(d.gamma.size()) != p.symbol_count()) {
        failures.push_back("path table size does not match generator count");
        return failures;
    }

    for (int s = 0; s < p.symbol_count(); ++s) {
        const std::string& name = p.symbol(s);
        const std::vector<int>& path = d.gamma[s];
        if (path.empty()) {
            failures.push_back("gamma_" + name + " is empty");
            continue;
        }
        if (path.front() != d.x0)
            failures.push_back("gamma_" + name + " does not start at the base vertex");
        int end = a.apply_symbol(s, d.x0);
        if (end < 0)
            failures.push_back(name + "*x0 is undefined on the patch");
        else if (path.back() != end)
            failures.push_back("gamma_" + name + " does not end at " + name + "*x0");
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            if (!g.adjacent(path[i], path[i + 1])) {
                failures.push_back("gamma_" + name + " is not an edge path (segment " +
                                   std::to_string(i) + ")");
                break;
            }
        }
    }

    // Consistency of a path with the path of its inverse generator:
    // gamma_{s^-1} must equal s^-1 * reverse(gamma_s) wherever defined.
    for (int s = 0; s < p.symbol_count(); ++s) {
        int si = p.inverse(s);
        if (si < s) continue;  // check each pair once; involutions have si == s
        const std::vector<int>& fwd = d.gamma[s];
        const std::vector<int>& bwd = d.gamma[si];
        if (fwd.empty() || bwd.empty()) continue;
        if (fwd.size() != bwd.size()) {
            failures.push_back("gamma_" + p.symbol(si) + " has different length from gamma_" +
                               p.symbol(s));
            continue;
        }
        for (size_t i = 0; i < fwd.size(); ++i) {
            int u = fwd[fwd.size() - 1 - i];
            int v = a.apply_symbol(si, u);
            if (v < 0) continue;  // outside the patch: nothing to compare
            if (v != bwd[i]) {
                failures.push_back("gamma_" + p.symbol(si) + " is not the " + p.symbol(si) +
                                   "-translate of reversed gamma_" + p.symbol(s));
                break;
            }
        }
    }
    return failures;
}

std::vector<int> concatenated_path(const EquivariantPathData& d, const VertexAction& a,
                                   const Word& w) {
    const Presentation& p = a.presentation();
    std::vector<int> out{d.x0};
    Word prefix;
    for (size_t i = 0; i < w.size(); ++i) {
        int s = w[i];
        if (s < 0 || s >= p.symbol_count()) throw InputError("word contains an unknown generator");
        std::vector<int> piece;
        piece.reserve(d.gamma[s].size());
        for (int u : d.gamma[s]) piece.push_back(a.word_apply(prefix, u));
        if (piece.front() != out.back())
            throw Error("path concatenation mismatch at letter " + std::to_string(i) +
                        ": action data is inconsistent");
        out.insert(out.end(), piece.begin() + 1, piece.end());
        prefix.push_back(s);
    }
    return out;
}

GammaComplex build_gamma(const EquivariantPathData& d, const VertexAction& a, const Ball& ball) {
    const SkeletonGraph& g = a.patch();
    const Presentation& p = a.presentation();

    GammaComplex out;
    std::set<int> vertex_ids;
    std::set<std::pair<int, int>> edge_ids;

    auto add_piece = [&](int h, int s) {
        const GroupElement& elem = ball.element(h);
        std::vector<int> path;
        path.reserve(d.gamma[s].size());
        for (size_t i = 0; i < d.gamma[s].size(); ++i) {
            int u = d.gamma[s][i];
            int v = elem.map[u];
            if (v < 0)
                throw DomainEscape(g.id_of(u), static_cast<int>(i),
                                   "translating gamma_" + p.symbol(s) + " by " +
                                       p.word_string(elem.word));
            path.push_back(v);
        }
        for (size_t i = 0; i < path.size(); ++i) {
            int id = g.id_of(path[i]);
            vertex_ids.insert(id);
            out.vertex_records[id].push_back({h, s, static_cast<int>(i)});
            if (i + 1 < path.size()) {
                int id2 = g.id_of(path[i + 1]);
                std::pair<int, int> key{std::min(id, id2), std::max(id, id2)};
                edge_ids.insert(key);
                out.edge_records[key].push_back({h, s, static_cast<int>(i)});
            }
        }
    };

    if (ball.rho == 0) {
        for (int s = 0; s < p.symbol_count(); ++s) add_piece(0, s);
    } else {
        for (int h = 0; h < ball.size(); ++h)
            for (int s = 0; s < p.symbol_count(); ++s)
                if (ball.mult_right(h, s) >= 0) add_piece(h, s);
    }

    std::vector<int> vertices(vertex_ids.begin(), vertex_ids.end());
    std::vector<std::pair<int, int>> edges(edge_ids.begin(), edge_ids.end());
    out.complex = FlagComplex(SkeletonGraph::from_edges(vertices, edges));
    return out;
}

}  // namespace systolic
