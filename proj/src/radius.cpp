#include "systolic/radius.hpp"

#include <algorithm>

#include "systolic/errors.hpp"
#include "systolic/flag_complex.hpp"

namespace systolic {

RadiusCertificate compute_R(const std::vector<ShortLoop>& loops, const SkeletonGraph& X, int L) {
    if (L < 0) throw InputError("L must be nonnegative");
    RadiusCertificate cert;
    cert.L = L;
    for (const ShortLoop& l : loops) {
        std::vector<int> verts;
        for (int id : l.loop.vertices) verts.push_back(X.index_of(id));
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        int radius = 0;
        for (int z : verts) {
            std::vector<int> dist = X.distances_from(std::vector<int>{z});
            for (int w : verts) {
                if (dist[w] < 0)
                    throw InputError("short loop spans disconnected patch vertices");
                radius = std::max(radius, dist[w]);
            }
        }
        cert.loop_radius.push_back(radius);
        switch (l.kind) {
            case ShortLoop::Kind::Relator: cert.R1 = std::max(cert.R1, radius); break;
            case ShortLoop::Kind::StabilizerLoop:
                cert.R1prime = std::max(cert.R1prime, radius);
                break;
            case ShortLoop::Kind::CrossingLoop: cert.R2 = std::max(cert.R2, radius); break;
        }
    }
    cert.Rprime = std::max({cert.R1, cert.R1prime, cert.R2});
    cert.R = cert.Rprime + L;
    return cert;
}

void ensure_balls_inside_patch(const Presentation& p, const SkeletonGraph& X,
                               const std::vector<int>& boundary_ids, const Ball& ball,
                               int x0_index, int R) {
    if (R < 0) throw InputError("R must be nonnegative");
    std::vector<int> boundary;
    boundary.reserve(boundary_ids.size());
    for (int id : boundary_ids) boundary.push_back(X.index_of(id));
    for (const GroupElement& e : ball.elements()) {
        int c = e.map[x0_index];
        if (c < 0) throw PatchTooSmall(p.word_string(e.word), X.id_of(x0_index), R);
        std::vector<int> dist = X.distances_from(std::vector<int>{c});
        for (int b : boundary)
            if (dist[b] >= 0 && dist[b] <= R - 1)
                throw PatchTooSmall(p.word_string(e.word), X.id_of(c), R);
    }
}

std::vector<LoopContraction> certify_loop_contractions(const std::vector<ShortLoop>& loops,
                                                       const SkeletonGraph& X, int r, int budget) {
    if (r < 0) throw InputError("radius must be nonnegative");
    std::vector<LoopContraction> out;
    for (size_t i = 0; i < loops.size(); ++i) {
        LoopContraction lc;
        lc.loop_index = static_cast<int>(i);
        const std::vector<int>& verts = loops[i].loop.vertices;
        lc.base_vertex = *std::min_element(verts.begin(), verts.end());
        if (verts.size() <= 1) {
            lc.homotopy.contractible = true;
            out.push_back(std::move(lc));
            continue;
        }
        FlagComplex ambient = r_neighborhood(X, {lc.base_vertex}, r);
        int b = budget > 0 ? budget
                           : default_nullhomotopy_budget(ambient.skeleton(),
                                                         static_cast<int>(verts.size()));
        lc.homotopy = bounded_nullhomotopy(ambient, verts, b);
        out.push_back(std::move(lc));
    }
    return out;
}

}  // namespace systolic
