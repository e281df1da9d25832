#include <doctest.h>

#include "support.hpp"

using namespace altknot;
using namespace testing_support;

namespace {

WhiteGraph graph_of(const Diagram& d) { return white_graph(normalize_colouring(d), Colour::Unshaded); }

// same graph with vertex ids permuted by perm (new id = perm[old])
WhiteGraph relabel(const WhiteGraph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges) edges.push_back({perm[e.u], perm[e.v]});
    return make_graph(g.vertex_count, edges);
}

}  // namespace

TEST_CASE("sigma candidates") {
    CHECK(enumerate_sigma_candidates(3, 1) == std::vector<Sigma>{{1}});
    CHECK(enumerate_sigma_candidates(5, 2) == std::vector<Sigma>{{1, 1}});
    CHECK(enumerate_sigma_candidates(2, 1).empty());
    for (Integer det : {7, 9, 13, 21, 45})
        for (int r = 1; r <= 5; ++r)
            for (const auto& s : enumerate_sigma_candidates(det, r)) {
                CHECK(is_change_maker(s));
                CHECK(is_indecomposable(s));
                CHECK(2 * norm_squared(s) - 1 == det);
            }
}

TEST_CASE("trefoil has a unique rank-one embedding") {
    Diagram t = from_pd_string("PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]");
    auto s = find_embeddings(graph_of(t));
    REQUIRE(s.embeddings.size() == 1);
    const Embedding& e = s.embeddings[0];
    CHECK(e.sigma == Sigma{1});
    IntVector v(3);
    v << 1, 1, -1;  // e_{-1} + e_0 - e_1
    bool ok = (e.labels[0] == v && e.labels[1] == -v) || (e.labels[0] == -v && e.labels[1] == v);
    CHECK(ok);
    CHECK(verify_embedding(e, graph_of(t)));
    CHECK(find_embeddings(graph_of(mirror(t))).embeddings.empty());
}

TEST_CASE("figure-eight embeds on both sides") {
    Diagram f = from_dt_string("4 6 8 2");
    CHECK_FALSE(find_embeddings(graph_of(f)).embeddings.empty());
    CHECK_FALSE(find_embeddings(graph_of(mirror(f))).embeddings.empty());
}

TEST_CASE("torus (2,7) does not embed on either side") {
    Diagram t = torus_2q(7);
    auto a = find_embeddings(graph_of(t)), b = find_embeddings(graph_of(mirror(t)));
    CHECK(a.embeddings.empty());
    CHECK(b.embeddings.empty());
    CHECK_FALSE(a.budget_exhausted);
    CHECK_FALSE(b.budget_exhausted);
}

TEST_CASE("verification rejects tampered embeddings") {
    Diagram d = knot("6_1");
    WhiteGraph g = graph_of(d);
    auto s = find_embeddings(g);
    if (s.embeddings.empty()) s = find_embeddings(g = graph_of(mirror(d)));
    REQUIRE_FALSE(s.embeddings.empty());
    Embedding e = s.embeddings[0];
    CHECK(verify_embedding(e, g));
    for (std::size_t v = 0; v < e.labels.size(); ++v) {
        Embedding bad = e;
        bad.labels[v] = -bad.labels[v];
        CHECK_FALSE(verify_embedding(bad, g));
    }
    GoeritzForm f = goeritz_matrix(g, g.vertex_count - 1);
    CHECK(verify_embedding(e, f));
}

TEST_CASE("every returned embedding verifies and the Goeritz entry point agrees") {
    for (const auto* entry : alternating_upto(8)) {
        for (bool m : {false, true}) {
            Diagram d = normalize_colouring(entry->diagram());
            if (m) d = mirror(d);
            WhiteGraph g = white_graph(d, Colour::Unshaded);
            auto s = find_embeddings(g);
            for (const auto& e : s.embeddings) CHECK(verify_embedding(e, g));
            auto viaf = find_embeddings(goeritz_matrix(g, 0), g);
            CHECK(viaf.embeddings.size() == s.embeddings.size());
        }
    }
}

TEST_CASE("search results do not depend on vertex order") {
    std::mt19937 rng(43);
    for (const auto* entry : alternating_upto(8)) {
        WhiteGraph g = graph_of(entry->diagram());
        auto base = find_embeddings(g);
        std::vector<int> perm(g.vertex_count);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto other = find_embeddings(relabel(g, perm));
        REQUIRE(other.embeddings.size() == base.embeddings.size());
        std::set<Sigma> a, b;
        for (const auto& e : base.embeddings) a.insert(e.sigma);
        for (const auto& e : other.embeddings) b.insert(e.sigma);
        CHECK(a == b);
        // the relabelled embedding is the original one read through the permutation
        for (const auto& e : base.embeddings) {
            Embedding moved = e;
            for (int v = 0; v < g.vertex_count; ++v) moved.labels[perm[v]] = e.labels[v];
            moved = canonical(moved);
            CHECK(std::find(other.embeddings.begin(), other.embeddings.end(), moved) != other.embeddings.end());
        }
    }
}

TEST_CASE("markers are unique in every embedding") {
    for (const auto* entry : alternating_upto(9)) {
        WhiteGraph g = graph_of(entry->diagram());
        for (const auto& e : find_embeddings(g).embeddings) {
            auto [v, w] = marker_vertices(e);
            CHECK(v >= 0);
            CHECK(w >= 0);
        }
    }
}
