#include "systolic/short_loops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "systolic/errors.hpp"

namespace systolic {

namespace {

// Cyclic form of a closed index walk: drop the repeated endpoint, squash
// consecutive duplicates (also across the wrap), convert to ids.
Cycle cycle_from_walk(const SkeletonGraph& g, std::vector<int> walk) {
    if (walk.size() > 1 && walk.front() == walk.back()) walk.pop_back();
    std::vector<int> squashed;
    for (int v : walk)
        if (squashed.empty() || squashed.back() != v) squashed.push_back(v);
    while (squashed.size() > 1 && squashed.back() == squashed.front()) squashed.pop_back();
    Cycle c;
    c.vertices.reserve(squashed.size());
    for (int v : squashed) c.vertices.push_back(g.id_of(v));
    return c;
}

std::vector<int> lex_least_rotation(const std::vector<int>& v) {
    if (v.empty()) return v;
    std::vector<int> best = v;
    std::vector<int> cur = v;
    for (size_t i = 1; i < v.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

// h1^-1 * h2 by walking h2's canonical word through the multiplication table.
int left_quotient(const Ball& ball, int h1, int h2, const Presentation& p) {
    int idx = ball.inverse(h1);
    if (idx < 0)
        throw BallTooSmall("inverse of " + p.word_string(ball.element(h1).word) +
                           " not present while normalizing a crossing");
    for (int s : ball.element(h2).word) {
        idx = ball.mult_right(idx, s);
        if (idx < 0)
            throw BallTooSmall("product " + p.word_string(ball.element(h1).word) + "^-1 * " +
                               p.word_string(ball.element(h2).word) +
                               " not present while normalizing a crossing");
    }
    return idx;
}

}  // namespace

std::vector<ShortLoop> enumerate_short_loops(const Presentation& p, const VertexAction& a,
                                             const EquivariantPathData& d, const Ball& ball) {
    const SkeletonGraph& g = a.patch();
    std::vector<ShortLoop> out;

    auto closed_walk = [&](const Word& w, const char* what) {
        std::vector<int> walk = concatenated_path(d, a, w);
        if (walk.front() != walk.back())
            throw Error(std::string(what) + " " + p.word_string(w) +
                        " does not return to the base vertex: action data is inconsistent");
        return walk;
    };

    for (const Word& r : p.relators()) {
        ShortLoop l;
        l.kind = ShortLoop::Kind::Relator;
        l.word = r;
        l.loop = cycle_from_walk(g, closed_walk(r, "relator"));
        out.push_back(std::move(l));
    }

    for (int idx : stabilizer_of(a, ball, d.x0)) {
        if (idx == 0) continue;  // identity
        const GroupElement& e = ball.element(idx);
        ShortLoop l;
        l.kind = ShortLoop::Kind::StabilizerLoop;
        l.word = e.word;
        l.loop = cycle_from_walk(g, closed_walk(e.word, "stabilizer word"));
        out.push_back(std::move(l));
    }

    // Crossing loops. Work with undirected Cayley-edge pieces, canonically
    // oriented as the lesser of (h, s) and (h*s, s^-1).
    std::set<std::pair<int, int>> piece_set;
    for (int h = 0; h < ball.size(); ++h) {
        for (int s = 0; s < p.symbol_count(); ++s) {
            int hs = ball.mult_right(h, s);
            if (hs < 0) continue;
            piece_set.insert(std::min(std::make_pair(h, s), std::make_pair(hs, p.inverse(s))));
        }
    }
    std::vector<std::pair<int, int>> pieces(piece_set.begin(), piece_set.end());

    auto piece_path = [&](int h, int s) {
        std::vector<int> path;
        path.reserve(d.gamma[s].size());
        for (size_t i = 0; i < d.gamma[s].size(); ++i) {
            int v = ball.element(h).map[d.gamma[s][i]];
            if (v < 0)
                throw DomainEscape(g.id_of(d.gamma[s][i]), static_cast<int>(i),
                                   "translating gamma_" + p.symbol(s) + " by " +
                                       p.word_string(ball.element(h).word));
            path.push_back(v);
        }
        return path;
    };

    std::vector<char> in_orbit(g.size(), 0);
    for (const GroupElement& e : ball.elements()) {
        int v = e.map[d.x0];
        if (v >= 0) in_orbit[v] = 1;
    }

    std::vector<std::vector<int>> paths;
    paths.reserve(pieces.size());
    for (auto [h, s] : pieces) paths.push_back(piece_path(h, s));

    // One loop per translation-normalized configuration (s1, g2, s2, x):
    // first piece based at the identity, crossing vertex x off the orbit.
    std::map<std::tuple<int, int, int, int>, ShortLoop> crossing;
    for (size_t i = 0; i < pieces.size(); ++i) {
        std::set<int> set_i(paths[i].begin(), paths[i].end());
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            for (int x : paths[j]) {
                if (!set_i.count(x) || in_orbit[x]) continue;
                auto [h1, s1] = pieces[i];
                auto [h2, s2] = pieces[j];
                int g2, xn;
                if (h1 == 0) {
                    g2 = h2;
                    xn = x;
                } else {
                    g2 = left_quotient(ball, h1, h2, p);
                    int hinv = ball.inverse(h1);
                    xn = ball.element(hinv).map[x];
                    if (xn < 0)
                        throw DomainEscape(g.id_of(x), -1,
                                           "translating a crossing vertex by " +
                                               p.word_string(ball.element(hinv).word));
                }
                auto key = std::make_tuple(s1, g2, s2, xn);
                if (crossing.count(key)) continue;

                int target = ball.mult_right(g2, s2);
                if (target < 0)
                    throw BallTooSmall("replacement word for a crossing at vertex " +
                                       std::to_string(g.id_of(xn)) + " not found");
                const Word& repl = ball.element(target).word;

                std::vector<int> walk = concatenated_path(d, a, repl);
                std::vector<int> bpath = (g2 == 0) ? d.gamma[s2] : piece_path(g2, s2);
                if (walk.back() != bpath.back())
                    throw Error("crossing pieces disagree at " + p.word_string(repl) +
                                "*x0: action data is inconsistent");
                auto bit = std::find(bpath.rbegin(), bpath.rend(), xn);
                if (bit == bpath.rend())
                    throw DomainEscape(g.id_of(xn), -1,
                                       "crossing vertex missing from its translated piece");
                size_t jb = bpath.size() - 1 - static_cast<size_t>(bit - bpath.rbegin());
                for (size_t k = bpath.size() - 1; k > jb; --k) walk.push_back(bpath[k - 1]);
                auto ait = std::find(d.gamma[s1].begin(), d.gamma[s1].end(), xn);
                if (ait == d.gamma[s1].end())
                    throw DomainEscape(g.id_of(xn), -1,
                                       "crossing vertex missing from the base piece");
                size_t ja = static_cast<size_t>(ait - d.gamma[s1].begin());
                for (size_t k = ja; k > 0; --k) walk.push_back(d.gamma[s1][k - 1]);
                if (walk.back() != walk.front())
                    throw Error("crossing loop does not close up: action data is inconsistent");

                ShortLoop l;
                l.kind = ShortLoop::Kind::CrossingLoop;
                l.word = repl;
                l.replacement = repl;
                l.crossing_vertex = g.id_of(xn);
                l.loop = cycle_from_walk(g, std::move(walk));
                crossing.emplace(key, std::move(l));
            }
        }
    }

    // Distinct configurations can still trace one walk; keep the first.
    std::set<std::vector<int>> seen;
    for (auto& [key, l] : crossing)
        if (seen.insert(lex_least_rotation(l.loop.vertices)).second) out.push_back(std::move(l));
    return out;
}

}  // namespace systolic
