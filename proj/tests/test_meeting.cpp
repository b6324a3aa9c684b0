#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsp/errors.hpp"
#include "dsp/meeting.hpp"

using namespace dsp;
using namespace dsp::detail;

TEST_CASE("tight legs split a diamond into the two disjoint routes") {
    std::vector<std::vector<int>> succ{{1, 2}, {3}, {3}, {4, 5}, {}, {}};
    LegPair lp = tight_legs(6, succ, 0, 4, 5);
    CHECK(lp.cuts == 2);  // 0 and 3 are forced on both legs
    REQUIRE(lp.leg1.size() == 4);
    REQUIRE(lp.leg2.size() == 4);
    CHECK(lp.leg1.front() == 0);
    CHECK(lp.leg1.back() == 4);
    CHECK(lp.leg2.front() == 0);
    CHECK(lp.leg2.back() == 5);
    CHECK(lp.leg1[1] != lp.leg2[1]);  // the diamond sides are split
}

TEST_CASE("tight legs on a shared corridor count every forced vertex") {
    // 0 -> 1 -> 2, then a diamond to 5, legs ending at 5 and 6
    std::vector<std::vector<int>> succ{{1}, {2}, {3, 4}, {5}, {5}, {6}, {}};
    LegPair lp = tight_legs(7, succ, 0, 5, 6);
    // both legs must pass 0,1,2,5; the diamond lets them split in between
    CHECK(lp.cuts == 4);
    CHECK(lp.leg1.front() == 0);
    CHECK(lp.leg2.front() == 0);
    bool a_first = lp.leg1.back() == 5;
    CHECK((a_first ? lp.leg2 : lp.leg1).back() == 6);
}

TEST_CASE("tight legs where one target precedes the other") {
    std::vector<std::vector<int>> succ{{1}, {2}, {3}, {}};
    LegPair lp = tight_legs(4, succ, 0, 1, 3);
    CHECK(lp.leg1 == std::vector<int>{0, 1});
    CHECK(lp.leg2 == std::vector<int>{0, 1, 2, 3});
    CHECK(lp.cuts == 2);  // 0 and 1 lie on both legs
}

TEST_CASE("four disjoint legs from a star") {
    std::vector<std::vector<int>> succ{{1, 2, 3, 4}, {}, {}, {}, {}};
    auto legs = disjoint_legs(5, succ, 0, {1, 2, 3, 4});
    for (int j = 0; j < 4; ++j) {
        CHECK(legs[j].front() == 0);
        CHECK(legs[j].back() == j + 1);
    }
}

TEST_CASE("disjoint legs fail through a shared bottleneck") {
    std::vector<std::vector<int>> succ{{1}, {2, 3, 4, 5}, {}, {}, {}, {}};
    CHECK_THROWS_AS(disjoint_legs(6, succ, 0, {2, 3, 4, 5}), FlowInfeasible);
}

TEST_CASE("disjoint legs accept the root as a target") {
    std::vector<std::vector<int>> succ{{1, 2, 3}, {}, {}, {}};
    auto legs = disjoint_legs(4, succ, 0, {0, 1, 2, 3});
    CHECK(legs[0] == std::vector<int>{0});
    CHECK(legs[3].back() == 3);
}

TEST_CASE("min meeting on a single forced bridge") {
    Query q{0, 1, 2, 3};
    std::vector<std::pair<int, int>> tight1{{0, 4}, {4, 1}};
    std::vector<std::pair<int, int>> tight2{{2, 4}, {4, 3}};
    std::vector<std::pair<int, int>> common;
    std::vector<char> on_both(5, 0);
    on_both[4] = 1;
    MeetResult r = min_meeting(5, q, common, common, tight1, tight2, on_both);
    CHECK(r.alpha == 1);
    CHECK(r.vstar == 4);
}

TEST_CASE("min meeting along a shared corridor") {
    Query q{0, 1, 2, 3};
    std::vector<std::pair<int, int>> tight1{{0, 4}, {4, 5}, {5, 6}, {6, 1}};
    std::vector<std::pair<int, int>> tight2{{2, 4}, {4, 5}, {5, 6}, {6, 3}};
    std::vector<std::pair<int, int>> common{{4, 5}, {5, 6}};
    std::vector<char> on_both(7, 0);
    on_both[4] = on_both[5] = on_both[6] = 1;
    MeetResult r = min_meeting(7, q, common, common, tight1, tight2, on_both);
    CHECK(r.alpha == 3);
    CHECK(r.vstar == 4);
}

TEST_CASE("min meeting reports no candidate when nothing lies on both pairs") {
    Query q{0, 1, 2, 3};
    std::vector<std::pair<int, int>> tight1{{0, 1}};
    std::vector<std::pair<int, int>> tight2{{2, 3}};
    std::vector<char> on_both(4, 0);
    MeetResult r = min_meeting(4, q, {}, {}, tight1, tight2, on_both);
    CHECK(r.alpha == -1);
}
