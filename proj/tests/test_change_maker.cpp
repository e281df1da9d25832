#include <doctest.h>

#include "oracles.hpp"

using namespace altknot;
using namespace testing_support;

namespace {

IntVector e(int r, std::initializer_list<std::pair<int, int>> terms) {
    IntVector v = IntVector::Zero(r + 2);
    for (auto [i, c] : terms) v(coord(i)) += c;
    return v;
}

}  // namespace

TEST_CASE("change-maker condition examples") {
    CHECK(is_change_maker({1, 1, 2}));
    CHECK_FALSE(is_change_maker({1, 3}));
    CHECK(is_change_maker({1, 2, 4, 8}));
    CHECK_FALSE(is_change_maker({2}));
    CHECK(is_change_maker({0, 1}));
    CHECK_FALSE(is_change_maker({2, 1}));
}

TEST_CASE("change-maker condition matches subset-sum representability") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 2000; ++trial) {
        int len = 1 + trial % 8;
        std::uniform_int_distribution<int> c(0, 20);
        Sigma s(len);
        for (auto& x : s) x = c(rng);
        std::sort(s.begin(), s.end());
        CHECK(is_change_maker(s) == brute_all_subset_sums(s));
        CHECK(all_subset_sums(s) == brute_all_subset_sums(s));
    }
}

TEST_CASE("representations") {
    auto a = represent({1, 1, 2}, 3, false);
    REQUIRE(a);
    CHECK(*a == std::vector<int>{1, 2});
    auto t = represent({1, 1, 3}, 3, false);
    REQUIRE(t);
    CHECK(*t == std::vector<int>{0, 1, 2});
    std::mt19937 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        Sigma s{1};
        std::uniform_int_distribution<int> len(1, 7);
        int n = len(rng);
        Integer sum = 1;
        for (int i = 1; i < n; ++i) {
            std::uniform_int_distribution<Integer> next(s.back(), sum + 1);
            s.push_back(next(rng));
            sum += s.back();
        }
        bool slack = !is_tight(s).first;
        for (int idx = 2; idx <= n; ++idx) {
            auto rep = represent(s, idx, true);
            REQUIRE(rep);
            Integer total = 0;
            for (int i : *rep) total += i == 0 ? 1 : s[i - 1];
            CHECK(total == s[idx - 1]);
            CHECK(std::find(rep->begin(), rep->end(), 1) != rep->end());
            if (slack) CHECK(std::find(rep->begin(), rep->end(), 0) == rep->end());
        }
    }
}

TEST_CASE("tightness") {
    CHECK(is_tight({1, 1, 3}) == std::pair<bool, int>{true, 3});
    CHECK_FALSE(is_tight({1, 1, 2}).first);
    CHECK_FALSE(is_tight({1}).first);
    CHECK(is_tight_at({1, 2}, 2));
}

TEST_CASE("standard bases") {
    StandardBasis one = standard_basis({1});
    REQUIRE(one.vectors.size() == 1);
    CHECK(one.vectors[0] == e(1, {{1, -1}, {0, 1}, {-1, 1}}));
    StandardBasis two = standard_basis({1, 1});
    CHECK(two.vectors[0] == e(2, {{1, -1}, {0, 1}, {-1, 1}}));
    CHECK(two.vectors[1] == e(2, {{2, -1}, {1, 1}}));
    std::mt19937 rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        Sigma s{1};
        Integer sum = 1;
        for (int i = 1; i < 1 + trial % 7; ++i) {
            std::uniform_int_distribution<Integer> next(s.back(), sum + 1);
            s.push_back(next(rng));
            sum += s.back();
        }
        StandardBasis b = standard_basis(s);
        const int r = static_cast<int>(s.size());
        for (int k = 1; k <= r; ++k) {
            const IntVector& v = b.vectors[k - 1];
            CHECK(in_lattice(s, v));
            CHECK(v(coord(k)) == -1);
            CHECK(v(coord(k - 1)) >= 1);
            for (int j = k + 1; j <= r; ++j) CHECK(v(coord(j)) == 0);
            if (v(coord(0)) != 0 && k > 1) CHECK(b.tight[k - 1]);
        }
        // the standard basis spans L: Gram determinant equals the discriminant of L
        CHECK(determinant(b.gram()) == 2 * norm_squared(s) - 1);
        CHECK(discriminant(s) == 2 * norm_squared(s) - 1);
    }
}

TEST_CASE("lattices from bases") {
    CHECK(lattice_from_basis({e(1, {{1, -1}, {0, 1}, {-1, 1}})}).sigma == Sigma{1});
    CHECK(lattice_from_basis({e(2, {{1, -1}, {0, 1}, {-1, 1}}), e(2, {{2, -1}, {1, 1}, {0, 1}, {-1, 1}})}).sigma ==
          Sigma{1, 2});
    CHECK_THROWS_AS(lattice_from_basis({e(1, {{1, -1}, {0, 1}})}), BasisShapeError);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        Sigma s{1};
        Integer sum = 1;
        for (int i = 1; i < 1 + trial % 6; ++i) {
            std::uniform_int_distribution<Integer> next(s.back(), sum + 1);
            s.push_back(next(rng));
            sum += s.back();
        }
        CHECK(lattice_from_basis(standard_basis(s).vectors).sigma == s);
    }
}

TEST_CASE("indecomposability and short vectors") {
    CHECK_FALSE(is_indecomposable({0, 1}));
    CHECK(is_indecomposable({1, 2}));
    for (Sigma s : {Sigma{1}, Sigma{0, 1}, Sigma{1, 1}, Sigma{0, 1, 1}, Sigma{1, 2}, Sigma{1, 1, 3}, Sigma{0, 0, 1}}) {
        bool unit = false;
        for (const auto& v : lattice_box(s, 1))
            if (v.squaredNorm() == 1) unit = true;
        CHECK(unit == !is_indecomposable(s));
    }
}

TEST_CASE("standard basis vectors are irreducible") {
    for (Sigma s : {Sigma{1}, Sigma{1, 1}, Sigma{1, 2}, Sigma{1, 1, 2}, Sigma{1, 1, 3}, Sigma{1, 2, 3}}) {
        for (const auto& v : standard_basis(s).vectors) {
            int b = static_cast<int>(std::floor(std::sqrt(static_cast<double>(v.squaredNorm()))));
            CHECK_FALSE(lattice_reducible(s, v, b));
        }
        auto [tight, k] = is_tight(s);
        if (tight) {
            const int r = static_cast<int>(s.size());
            IntVector t = IntVector::Zero(r + 2);
            t(coord(k)) = -1;
            for (int i = 2; i < k; ++i) t(coord(i)) = 1;
            t(coord(1)) = 2;
            REQUIRE(in_lattice(s, t));
            CHECK_FALSE(lattice_reducible(s, t, 2));
        }
    }
}
