#pragma once

// Definition-level brute force used by unit and acceptance tests.

#include "support.hpp"

namespace testing_support {

// all coefficient vectors with entries 0..hi and minimum 0 (one per coset)
inline std::vector<LatticeElement> bounded_elements(int n, int hi) {
    std::vector<LatticeElement> out;
    std::vector<Integer> c(n, 0);
    for (;;) {
        if (*std::min_element(c.begin(), c.end()) == 0) out.emplace_back(c);
        int i = 0;
        while (i < n && c[i] == hi) c[i++] = 0;
        if (i == n) break;
        ++c[i];
    }
    return out;
}

// x = y + z, y, z nonzero, y.z >= 0, y ranging over bounded representatives
inline bool brute_reducible(const LatticeElement& x, const WhiteGraph& g, int hi) {
    for (const auto& y : bounded_elements(g.vertex_count, hi)) {
        if (y.is_zero() || y == x) continue;
        LatticeElement z = x - y;
        if (pair(y, z, g) >= 0) return true;
    }
    return false;
}

inline bool induces_connected(const WhiteGraph& g, const std::vector<char>& keep) {
    return is_connected(g, keep);
}

// 2-connected loopless multigraphs on n vertices with at most max_edges edges, up to relabelling
inline std::vector<WhiteGraph> two_connected_multigraphs(int n, int max_edges) {
    std::vector<std::pair<int, int>> types;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) types.push_back({a, b});
    const int t = static_cast<int>(types.size());
    std::vector<int> perm(n);
    std::set<std::vector<int>> seen;
    std::vector<WhiteGraph> out;
    std::vector<int> mult(t, 0);
    std::function<void(int, int)> rec = [&](int k, int used) {
        if (k == t) {
            if (used < n) return;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < mult[i]; ++j) edges.push_back(types[i]);
            WhiteGraph g = make_graph(n, edges);
            if (!is_connected(g) || !is_two_connected(g)) return;
            // canonical key: lexicographically least adjacency multiplicities over permutations
            std::vector<int> best;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<int> key(t);
                for (int i = 0; i < t; ++i) {
                    int a = perm[types[i].first], b = perm[types[i].second];
                    if (a > b) std::swap(a, b);
                    int idx = 0;
                    for (int j = 0; j < t; ++j)
                        if (types[j].first == a && types[j].second == b) idx = j;
                    key[idx] = mult[i];
                }
                if (best.empty() || key < best) best = key;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(best).second) out.push_back(g);
            return;
        }
        for (int m = 0; used + m <= max_edges; ++m) {
            mult[k] = m;
            rec(k + 1, used + m);
        }
        mult[k] = 0;
    };
    rec(0, 0);
    return out;
}

// every k in 0..sum is a subset sum, by explicit subset enumeration
inline bool brute_all_subset_sums(const Sigma& s) {
    Integer total = 0;
    for (auto x : s) total += x;
    std::vector<char> hit(static_cast<std::size_t>(total) + 1, 0);
    const std::size_t n = s.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Integer sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) sum += s[i];
        hit[static_cast<std::size_t>(sum)] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
}

// vectors of the change-maker lattice with entries in [-b, b]
inline std::vector<IntVector> lattice_box(const Sigma& s, int b) {
    const int dim = static_cast<int>(s.size()) + 2;
    std::vector<IntVector> out;
    IntVector x = IntVector::Constant(dim, -b);
    for (;;) {
        if (in_lattice(s, x)) out.push_back(x);
        int i = 0;
        while (i < dim && x(i) == b) x(i++) = -b;
        if (i == dim) break;
        ++x(i);
    }
    return out;
}

// x reducible in L: x = y + z with y, z nonzero in L and y.z >= 0, y within the box
inline bool lattice_reducible(const Sigma& s, const IntVector& x, int b) {
    for (const auto& y : lattice_box(s, b)) {
        if (y.isZero() || y == x) continue;
        IntVector z = x - y;
        if (y.dot(z) >= 0) return true;
    }
    return false;
}

}  // namespace testing_support
