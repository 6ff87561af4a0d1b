#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "systolic/flag_complex.hpp"
#include "systolic/group_ball.hpp"
#include "systolic/largeness.hpp"
#include "systolic/presentation.hpp"
#include "systolic/y_complex.hpp"

namespace systolic {

// One saturation move: the offending cycle, the diagonal picked by the case
// analysis, and the set of edges actually added — the orbit of the chosen
// pair under the ball action, restricted to translates that stay inside the
// truncation and keep their triangle certificate.
struct DiagonalMove {
    enum class Case {
        Bijective,                // cycle embeds in the patch; diagonal pulled back
        NonConsecutiveSameImage,  // two non-consecutive vertices share an image
        ConsecutiveSameImage      // two consecutive vertices share an image
    };

    Case kind = Case::Bijective;
    Cycle bad_cycle;                          // class ids, cyclically ordered
    std::pair<int, int> chosen{-1, -1};       // base diagonal (class ids), = orbit.front()
    std::vector<std::pair<int, int>> orbit;   // edges added, ascending pairs, base first
    std::vector<int> mids;                    // per orbit edge: apex of its triangle certificate
    std::vector<std::pair<int, int>> images;  // per orbit edge: patch indices of the endpoints
    std::vector<int> skipped;                 // ball elements whose translate left the truncation
};

// Y's classes with diagonals added move by move. The vertex set, the
// projection to the patch and the generator action are all inherited from Y
// unchanged; only the edge set grows.
class FExtension {
public:
    explicit FExtension(const YComplex& Y);

    // An f-extension given directly: a skeleton on class ids, the image in
    // the patch per class (by patch index), and a per-symbol class action
    // (-1 = undefined). Sizes must agree.
    FExtension(SkeletonGraph skel, std::vector<int> f, std::vector<std::vector<int>> action,
               int x0_class);

    const SkeletonGraph& skeleton() const { return skel_; }
    FlagComplex complex() const { return FlagComplex(skel_); }

    int class_count() const { return skel_.size(); }
    int f(int cls) const { return f_[static_cast<size_t>(cls)]; }
    int x0_class() const { return x0_class_; }

    // Generator action on classes, inherited from Y; -1 = undefined.
    int act(int sym, int cls) const {
        return action_[static_cast<size_t>(sym)][static_cast<size_t>(cls)];
    }
    // Rightmost letter first, like the vertex action; -1 once any step escapes.
    int class_apply(const Word& w, int cls) const;

    int original_edge_count() const { return original_edges_; }
    const std::vector<DiagonalMove>& moves() const { return moves_; }

private:
    SkeletonGraph skel_;
    std::vector<int> f_;
    std::vector<std::vector<int>> action_;
    std::vector<DiagonalMove> moves_;
    int original_edges_ = 0;
    int x0_class_ = -1;

    friend DiagonalMove resolve_bad_loop(FExtension& W, const Cycle& alpha, const Ball& ball,
                                         const SkeletonGraph& X);
};

// Lexicographically least embedded 4- or 5-cycle without a diagonal whose
// vertices all lie in the interior mask, or nullopt when saturated there.
std::optional<Cycle> find_bad_loop(const FExtension& W, const std::vector<char>& interior);

// Case analysis on f over the cycle, in order: Bijective (diagonal of the
// image cycle pulled back; throws AmbientNotSixLarge when the patch offers
// none), NonConsecutiveSameImage, ConsecutiveSameImage. Adds the orbit of the
// chosen pair to W and records the move. Throws InputError if the cycle
// already has a diagonal.
DiagonalMove resolve_bad_loop(FExtension& W, const Cycle& alpha, const Ball& ball,
                              const SkeletonGraph& X);

}  // namespace systolic
