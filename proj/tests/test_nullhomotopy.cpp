#include <vector>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "systolic/errors.hpp"
#include "systolic/nullhomotopy.hpp"

using namespace systolic;

// Closed walks are passed in cyclic form: the last vertex connects back to
// the first implicitly.

TEST_CASE("trivial and spur walks contract") {
    FlagComplex c(fixtures::path_graph(3));
    NullHomotopy constant = bounded_nullhomotopy(c, std::vector<int>{1}, 0);
    CHECK(constant.contractible);
    CHECK(constant.moves.empty());

    NullHomotopy spur = bounded_nullhomotopy(c, std::vector<int>{0, 1}, 8);
    CHECK(spur.contractible);
    std::vector<int> out = replay_nullhomotopy(c, {0, 1}, spur.moves);
    CHECK(out.size() == 1);
}

TEST_CASE("a triangle collapses") {
    FlagComplex c(fixtures::complete_graph(3));
    NullHomotopy h = bounded_nullhomotopy(c, std::vector<int>{0, 1, 2}, 8);
    CHECK(h.contractible);
    CHECK(replay_nullhomotopy(c, {0, 1, 2}, h.moves).size() == 1);
}

TEST_CASE("hexagon boundary does not contract in a flag complex without triangles") {
    FlagComplex c(fixtures::cycle_graph(6));
    NullHomotopy h = bounded_nullhomotopy(c, std::vector<int>{0, 1, 2, 3, 4, 5}, 200);
    CHECK(!h.contractible);
}

TEST_CASE("wheel rim contracts through the hub") {
    FlagComplex c(fixtures::wheel_graph(6));
    std::vector<int> rim{0, 1, 2, 3, 4, 5};
    int budget = default_nullhomotopy_budget(c.skeleton(), 6);
    NullHomotopy h = bounded_nullhomotopy(c, rim, budget);
    REQUIRE(h.contractible);
    CHECK(static_cast<int>(h.moves.size()) <= budget);
    CHECK(replay_nullhomotopy(c, rim, h.moves).size() == 1);
}

TEST_CASE("cycle overload agrees with the walk overload") {
    FlagComplex c(fixtures::wheel_graph(6));
    Cycle rim;
    rim.vertices = {0, 1, 2, 3, 4, 5};
    NullHomotopy h = bounded_nullhomotopy(c, rim, 64);
    CHECK(h.contractible);
}

TEST_CASE("budget exhaustion is reported, never a false positive") {
    FlagComplex c(fixtures::wheel_graph(6));
    NullHomotopy h = bounded_nullhomotopy(c, std::vector<int>{0, 1, 2, 3, 4, 5}, 1);
    CHECK(!h.contractible);
    CHECK(h.states_explored >= 1);
}

TEST_CASE("malformed walks are rejected") {
    FlagComplex c(fixtures::cycle_graph(6));
    CHECK_THROWS_AS((void)bounded_nullhomotopy(c, std::vector<int>{0, 1, 1, 2}, 8), Error);
    CHECK_THROWS_AS((void)bounded_nullhomotopy(c, std::vector<int>{0, 2, 4}, 8), Error);
    CHECK_THROWS_AS((void)bounded_nullhomotopy(c, std::vector<int>{0, 1, 2}, -1), InputError);
}

TEST_CASE("tampered certificates are rejected on replay") {
    FlagComplex c(fixtures::wheel_graph(6));
    std::vector<int> rim{0, 1, 2, 3, 4, 5};
    NullHomotopy h = bounded_nullhomotopy(c, rim, 64);
    REQUIRE(h.contractible);
    REQUIRE(!h.moves.empty());
    auto bad = h.moves;
    bad[0].vertex = 17;  // not a vertex of the complex
    CHECK_THROWS_AS((void)replay_nullhomotopy(c, rim, bad), Error);

    // Replaying against a complex missing the hub must fail too.
    FlagComplex rim_only(fixtures::cycle_graph(6));
    CHECK_THROWS_AS((void)replay_nullhomotopy(rim_only, rim, h.moves), Error);
}

TEST_CASE("default budget scales with diameter and length") {
    SkeletonGraph g = fixtures::path_graph(5);
    CHECK(default_nullhomotopy_budget(g, 6) == 4 * 4 * 6);
    CHECK(default_nullhomotopy_budget(g, 0) >= 0);
}

TEST_CASE("octahedron equators contract") {
    FlagComplex c(fixtures::octahedron());
    // 2-4-3-5 is an equatorial square with both diagonals missing; it still
    // contracts by expanding through a pole.
    std::vector<int> eq{2, 4, 3, 5};
    NullHomotopy h = bounded_nullhomotopy(c, eq, default_nullhomotopy_budget(c.skeleton(), 4));
    REQUIRE(h.contractible);
    CHECK(replay_nullhomotopy(c, eq, h.moves).size() == 1);
}
