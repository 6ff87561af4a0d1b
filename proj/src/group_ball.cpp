#include "systolic/group_ball.hpp"

#include <numeric>
#include <string>

#include "systolic/errors.hpp"

namespace systolic {

namespace {

enum class MapCompare { Equal, Differs, Unknown };

// Agreement of two partial maps on their common domain; Unknown when the
// common domain is empty and nothing can be certified.
MapCompare compare_maps(const std::vector<int>& a, const std::vector<int>& b) {
    size_t overlap = 0;
    for (size_t v = 0; v < a.size(); ++v) {
        if (a[v] == -1 || b[v] == -1)
            continue;
        if (a[v] != b[v])
            return MapCompare::Differs;
        ++overlap;
    }
    return overlap ? MapCompare::Equal : MapCompare::Unknown;
}

std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> out(inner.size(), -1);
    for (size_t v = 0; v < inner.size(); ++v) {
        int mid = inner[v];
        if (mid != -1)
            out[v] = outer[static_cast<size_t>(mid)];
    }
    return out;
}

// Index of the element the map belongs to, or -1 if it certifiably differs
// from every element. Throws DomainEscape when any comparison is inconclusive
// and no match was found.
int find_element(const std::vector<GroupElement>& elems, const std::vector<int>& map,
                 const std::string& context) {
    bool inconclusive = false;
    for (size_t i = 0; i < elems.size(); ++i) {
        switch (compare_maps(elems[i].map, map)) {
            case MapCompare::Equal:
                return static_cast<int>(i);
            case MapCompare::Differs:
                break;
            case MapCompare::Unknown:
                inconclusive = true;
                break;
        }
    }
    if (inconclusive)
        throw DomainEscape(-1, -1, "empty common domain while identifying " + context);
    return -1;
}

}  // namespace

Ball enumerate_ball(const Presentation& p, const VertexAction& a, int rho) {
    if (rho < 0)
        throw InputError("ball radius rho must be nonnegative");
    const int n = a.patch().size();
    const int syms = p.symbol_count();

    Ball ball;
    ball.rho = rho;
    GroupElement identity;
    identity.map.resize(static_cast<size_t>(n));
    std::iota(identity.map.begin(), identity.map.end(), 0);
    ball.elems_.push_back(std::move(identity));
    ball.right_.push_back(std::vector<int>(static_cast<size_t>(syms), -2));  // -2 = not yet known

    size_t layer_begin = 0;
    for (int len = 1; len <= rho; ++len) {
        size_t layer_end = ball.elems_.size();
        for (size_t e = layer_begin; e < layer_end; ++e) {
            for (int s = 0; s < syms; ++s) {
                std::vector<int> map;
                {
                    std::vector<int> sym_map(static_cast<size_t>(n));
                    for (int v = 0; v < n; ++v)
                        sym_map[static_cast<size_t>(v)] = a.apply_symbol(s, v);
                    map = compose(ball.elems_[e].map, sym_map);
                }
                Word w = ball.elems_[e].word;
                w.push_back(s);
                int found = find_element(ball.elems_, map, "word " + p.word_string(w));
                if (found == -1) {
                    GroupElement fresh;
                    fresh.word = std::move(w);
                    fresh.map = std::move(map);
                    found = static_cast<int>(ball.elems_.size());
                    ball.elems_.push_back(std::move(fresh));
                    ball.right_.push_back(std::vector<int>(static_cast<size_t>(syms), -2));
                }
                ball.right_[e][static_cast<size_t>(s)] = found;
            }
        }
        layer_begin = layer_end;
    }

    // Close the right-multiplication table for the outermost layer: products
    // may fold back into the ball.
    for (size_t e = 0; e < ball.elems_.size(); ++e) {
        for (int s = 0; s < syms; ++s) {
            if (ball.right_[e][static_cast<size_t>(s)] != -2)
                continue;
            std::vector<int> sym_map(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v)
                sym_map[static_cast<size_t>(v)] = a.apply_symbol(s, v);
            auto map = compose(ball.elems_[e].map, sym_map);
            Word w = ball.elems_[e].word;
            w.push_back(s);
            ball.right_[e][static_cast<size_t>(s)] =
                find_element(ball.elems_, map, "word " + p.word_string(w));
        }
    }

    // Left multiplication and inverses by map matching.
    ball.left_.assign(static_cast<size_t>(syms), std::vector<int>(ball.elems_.size(), -1));
    for (int s = 0; s < syms; ++s) {
        std::vector<int> sym_map(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
            sym_map[static_cast<size_t>(v)] = a.apply_symbol(s, v);
        for (size_t e = 0; e < ball.elems_.size(); ++e) {
            auto map = compose(sym_map, ball.elems_[e].map);
            ball.left_[static_cast<size_t>(s)][e] = find_element(
                ball.elems_, map, "word " + p.symbol(s) + "." + p.word_string(ball.elems_[e].word));
        }
    }
    ball.inv_.assign(ball.elems_.size(), -1);
    for (size_t e = 0; e < ball.elems_.size(); ++e) {
        std::vector<int> inv_map(static_cast<size_t>(n), -1);
        for (int v = 0; v < n; ++v) {
            int img = ball.elems_[e].map[static_cast<size_t>(v)];
            if (img != -1)
                inv_map[static_cast<size_t>(img)] = v;
        }
        ball.inv_[e] = find_element(ball.elems_, inv_map,
                                    "inverse of " + p.word_string(ball.elems_[e].word));
    }
    return ball;
}

std::vector<int> stabilizer_of(const VertexAction& a, const Ball& ball, int vertex_index) {
    std::vector<int> out;
    for (int e = 0; e < ball.size(); ++e) {
        int img = ball.element(e).map[static_cast<size_t>(vertex_index)];
        if (img == -1)
            throw DomainEscape(a.patch().id_of(vertex_index), 0,
                               "stabilizer test for element " +
                                   a.presentation().word_string(ball.element(e).word));
        if (img == vertex_index)
            out.push_back(e);
    }
    return out;
}

std::vector<int> orbit_of(const Ball& ball, const VertexAction& a, int vertex_index) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(ball.size()));
    for (int e = 0; e < ball.size(); ++e) {
        int img = ball.element(e).map[static_cast<size_t>(vertex_index)];
        if (img == -1)
            throw DomainEscape(a.patch().id_of(vertex_index), 0,
                               "orbit of the base vertex under " +
                                   a.presentation().word_string(ball.element(e).word));
        out.push_back(img);
    }
    return out;
}

}  // namespace systolic
