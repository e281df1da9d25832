#include <doctest.h>

#include "support.hpp"

using namespace altknot;
using namespace testing_support;

namespace {

// spanning trees by brute force over edge subsets
long long spanning_trees(const WhiteGraph& g) {
    const int n = g.vertex_count, m = static_cast<int>(g.edges.size());
    long long count = 0;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == n - 1) {
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
            for (int e : pick) {
                int a = find(g.edges[e].u), b = find(g.edges[e].v);
                if (a == b) return;
                parent[a] = b;
            }
            ++count;
            return;
        }
        for (int e = start; e < m; ++e) {
            pick.push_back(e);
            rec(e + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("trefoil Goeritz form") {
    Diagram t = normalize_colouring(from_pd_string("PD[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]"));
    for (int discard : {0, 1}) {
        GoeritzForm f = goeritz_matrix(t, Colour::Unshaded, discard);
        REQUIRE(f.matrix.rows() == 1);
        CHECK(f.matrix(0, 0) == 3);
        CHECK(is_positive_definite(f));
    }
    CHECK(signature(t) == -2);
    CHECK(signature(mirror(t)) == 2);
}

TEST_CASE("figure-eight and clasp knot determinants") {
    Diagram f = normalize_colouring(from_dt_string("4 6 8 2"));
    GoeritzForm g = goeritz_matrix(f);
    CHECK(g.matrix.rows() == 2);
    CHECK(determinant(g) == 5);
    CHECK(is_positive_definite(g));
    CHECK(signature(f) == 0);
    CHECK(knot_determinant(knot("5_2")) == 7);
    CHECK(knot_determinant(Diagram()) == 1);
}

TEST_CASE("indefinite form is not positive definite") {
    GoeritzForm f;
    f.matrix = IntMatrix(2, 2);
    f.matrix << 1, -2, -2, 1;
    CHECK_FALSE(is_positive_definite(f));
}

TEST_CASE("tree white graphs have unimodular forms") {
    WhiteGraph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    GoeritzForm f = goeritz_matrix(path, 0);
    CHECK(determinant(f) == 1);
}

TEST_CASE("Goeritz properties on the corpus") {
    for (const auto* e : alternating_upto(10)) {
        Diagram d = normalize_colouring(e->diagram());
        WhiteGraph g = white_graph(d, Colour::Unshaded);
        Integer det0 = determinant(goeritz_matrix(g, 0));
        for (int v = 1; v < g.vertex_count; ++v) CHECK(determinant(goeritz_matrix(g, v)) == det0);
        CHECK(is_positive_definite(goeritz_matrix(g, 0)));
        if (g.edges.size() <= 12) CHECK(spanning_trees(g) == det0);
        CHECK(signature(d, Colour::Unshaded) == signature(d, Colour::Shaded));
        CHECK(signature(mirror(d)) == -signature(d));
        if (e->signature) CHECK_MESSAGE(std::abs(*e->signature) == std::abs(signature(d)), e->name);
        // sigma = r - n for the all -1 colouring
        int positive = 0;
        for (int c = 0; c < d.crossing_count(); ++c) positive += d.crossing_sign(c) > 0;
        CHECK(signature(d) == g.vertex_count - 1 - positive);
    }
}
