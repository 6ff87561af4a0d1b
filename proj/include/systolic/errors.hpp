#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace systolic {

// Exit-code families used by the CLI: input/config problems map to exit 2,
// exhausted search budgets to exit 3. Verification failures are reported in
// run reports, not thrown.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// A word application left the finite patch. `position` is the index of the
// offending letter in the word as written (letters are applied right to left).
class DomainEscape : public InputError {
public:
    DomainEscape(int vertex_, int position_, const std::string& context)
        : InputError("domain escape at vertex " + std::to_string(vertex_) + ", letter index " +
                     std::to_string(position_) + (context.empty() ? "" : " (" + context + ")") +
                     "; enlarge the patch"),
          vertex(vertex_),
          position(position_) {}
    int vertex;
    int position;
};

// A radius-R ball around some h*x0 cannot be trusted: the patch boundary is
// strictly closer than R to the center.
class PatchTooSmall : public InputError {
public:
    PatchTooSmall(std::string element_word_, int center_, int radius_)
        : InputError("patch too small: the radius-" + std::to_string(radius_) +
                     " ball at the translate of the base vertex by \"" + element_word_ +
                     "\" (vertex " + std::to_string(center_) +
                     ") reaches the patch boundary; enlarge the patch"),
          element_word(std::move(element_word_)),
          center(center_),
          radius(radius_) {}
    std::string element_word;
    int center;
    int radius;
};

// A group-element search (e.g. the replacement word of a crossing) ran off
// the end of the enumerated ball.
class BallTooSmall : public InputError {
public:
    explicit BallTooSmall(const std::string& detail)
        : InputError("ball too small: " + detail + "; increase rho") {}
};

// The ambient complex was contracted to be 6-large but a chordless 4/5-cycle
// was found in it while resolving a bad loop.
class AmbientNotSixLarge : public Error {
public:
    explicit AmbientNotSixLarge(std::vector<int> cycle_in_x)
        : Error("ambient complex is not 6-large: chordless short cycle of length " +
                std::to_string(cycle_in_x.size()) + " found"),
          cycle(std::move(cycle_in_x)) {}
    std::vector<int> cycle;
};

// A move or search budget ran out; `residual` carries the unresolved witness
// (e.g. the remaining bad cycle).
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::vector<int> residual_)
        : Error(what), residual(std::move(residual_)) {}
    std::vector<int> residual;
};

}  // namespace systolic
