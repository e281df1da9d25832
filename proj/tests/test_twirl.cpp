#include <doctest.h>

#include "support.hpp"

#include "altknot/twirl.hpp"

using namespace altknot;
using namespace testing_support;

TEST_CASE("level zero is the changed diagram") {
    Diagram t = normalize_colouring(knot("3_1"));
    TwirlTower tw = twirl_tower(t, 0, 0);
    REQUIRE(tw.levels.size() == 1);
    CHECK(tw.top().diagram == t);
    CHECK(tw.minors.size() == 2);
    CHECK(tw.recurrence_holds);
}

TEST_CASE("trefoil tower minors") {
    Diagram t = normalize_colouring(knot("3_1"));
    TwirlTower tw = twirl_tower(t, 0, 4);
    CHECK(tw.levels.size() == 5);
    CHECK(tw.minors == std::vector<Integer>{1, 5, 21, 85, 341, 683});
    CHECK(tw.recurrence_holds);
    CHECK(tw.top().diagram.crossing_count() == t.crossing_count() + 12);
}

TEST_CASE("recurrences and crossing counts across the corpus") {
    for (const auto* e : alternating_upto(7)) {
        Diagram d = normalize_colouring(e->diagram());
        for (int c = 0; c < d.crossing_count(); ++c) {
            for (int n : {1, 3}) {
                TwirlTower tw = twirl_tower(d, c, n);
                CHECK_MESSAGE(tw.recurrence_holds, e->name, " crossing ", c);
                CHECK(static_cast<int>(tw.minors.size()) == n + 2);
                CHECK(tw.top().diagram.crossing_count() == d.crossing_count() + 3 * n);
                CHECK(tw.top().diagram.is_knot());
                CHECK(tw.goeritz.rows() == tw.original + n);
                CHECK(tw.minors.back() == determinant(tw.goeritz));
            }
        }
    }
}

TEST_CASE("unknotting crossings give signature -2 on the promoted side") {
    for (const auto* e : alternating_upto(8)) {
        Diagram d = normalize_colouring(e->diagram());
        UnknottingReport r = decide_unknotting(d);
        for (const auto& c : r.crossings) {
            Diagram side = c.via_mirror ? mirror(d) : d;
            TwirlTower tw = twirl_tower(side, c.crossing, 2);
            CHECK_MESSAGE(tw.signature == -2, e->name, " crossing ", c.crossing);
        }
    }
}

TEST_CASE("promotion marks the target crossing") {
    for (const auto* e : alternating_upto(7)) {
        Diagram d = normalize_colouring(e->diagram());
        for (int c : crossing_change_sweep(d)) {
            Promotion p = promote_unknotting_crossing(d, c);
            REQUIRE_MESSAGE(p.ok, e->name, " ", p.error);
            Diagram side = p.via_mirror ? mirror(d) : d;
            WhiteGraph g = white_graph(side, Colour::Unshaded);
            CHECK(verify_embedding(p.embedding, g));
            MarkedState s = locate_markers(side, p.embedding, c);
            CHECK(std::find(s.marked_crossings.begin(), s.marked_crossings.end(), c) != s.marked_crossings.end());
        }
    }
}

TEST_CASE("non-unknotting crossings are not promoted") {
    Diagram d = normalize_colouring(knot("5_1"));
    Promotion p = promote_unknotting_crossing(d, 0);
    CHECK_FALSE(p.ok);
}
