#include <doctest.h>

#include "support.hpp"

#include "altknot/twirl.hpp"

using namespace altknot;
using namespace testing_support;

TEST_CASE("diagram round trip") {
    for (const auto* e : alternating_upto(8)) {
        Diagram d = e->diagram();
        Json j = d;
        Diagram back = Json::parse(j.dump()).get<Diagram>();
        CHECK(back == d);
        CHECK(back.pd() == d.pd());
    }
}

TEST_CASE("diagram from pd or dt") {
    Diagram t = from_pd_string("PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]");
    Json a = {{"pd", {{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}}};
    CHECK(a.get<Diagram>().crossing_count() == 3);
    Json b = {{"dt", {4, 6, 2}}};
    CHECK(knot_determinant(b.get<Diagram>()) == 3);
    CHECK_THROWS(Json::object().get<Diagram>());
}

TEST_CASE("moves and certificates round trip") {
    for (MoveKind k : {MoveKind::Flype, MoveKind::CrossingChange, MoveKind::Untongue, MoveKind::Untwirl,
                       MoveKind::Tongue, MoveKind::Twirl, MoveKind::ReidemeisterII, MoveKind::NugatoryReduction}) {
        Move m{k, 3, 1, 0};
        CHECK(Json(m).get<Move>() == m);
        CHECK(move_kind_from_string(to_string(k)) == k);
    }
    Diagram d = knot("6_2");
    UnknottingReport r = decide_unknotting(d);
    REQUIRE_FALSE(r.crossings.empty());
    for (const auto& c : r.crossings) {
        Json bundle = certificate_bundle(d, c.certificate);
        CHECK(bundle["schema_version"] == kSchemaVersion);
        Certificate back = bundle["certificate"].get<Certificate>();
        CHECK(back.moves == c.certificate.moves);
        CHECK(back.from_mirror == c.certificate.from_mirror);
        CHECK(replay(bundle["input"].get<Diagram>(), back).ok);
    }
}

TEST_CASE("embedding round trip") {
    Diagram d = knot("7_4");
    WhiteGraph g = white_graph(normalize_colouring(d), Colour::Unshaded);
    for (const auto& e : find_embeddings(g).embeddings) CHECK(Json(e).get<Embedding>() == e);
    IntVector v(3);
    v << 1, -2, 3;
    CHECK(vector_from_json(Json{1, -2, 3}) == v);
}

TEST_CASE("report and tower documents") {
    Json r = decide_unknotting(knot("3_1"));
    CHECK(r["verdict"] == "true");
    CHECK(r["crossings"].size() == 3);
    Json t = twirl_tower(normalize_colouring(knot("3_1")), 0, 2);
    CHECK(t["recurrence_holds"] == true);
    Json m = matrix_json(goeritz_matrix(knot("4_1")).matrix);
    CHECK(m.is_array());
}
