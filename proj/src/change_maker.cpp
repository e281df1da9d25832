#include "altknot/change_maker.hpp"

#include <algorithm>

namespace altknot {

bool is_change_maker(const Sigma& s) {
    Integer prefix = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 0 && (s[0] < 0 || s[0] > 1)) return false;
        if (i > 0 && (s[i] < s[i - 1] || s[i] > prefix + 1)) return false;
        prefix += s[i];
    }
    return true;
}

bool all_subset_sums(const Sigma& s) {
    Integer total = 0;
    for (Integer x : s) {
        if (x < 0) return false;
        total += x;
    }
    if (total > 100000) throw std::invalid_argument("all_subset_sums: total too large");
    std::vector<char> reach(total + 1, 0);
    reach[0] = 1;
    for (Integer x : s)
        for (Integer k = total; k >= x; --k)
            if (reach[k - x]) reach[k] = 1;
    return std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
}

IntVector sigma_vector(const Sigma& s) {
    IntVector v = IntVector::Zero(static_cast<Eigen::Index>(s.size()) + 2);
    v(coord(0)) = 1;
    for (std::size_t i = 0; i < s.size(); ++i) v(coord(static_cast<int>(i) + 1)) = s[i];
    return v;
}

IntVector rho_vector(int r) {
    IntVector v = IntVector::Zero(r + 2);
    v(coord(-1)) = 1;
    v(coord(0)) = -1;
    return v;
}

bool in_lattice(const Sigma& s, const IntVector& x) {
    const int r = static_cast<int>(s.size());
    if (x.size() != r + 2) return false;
    return x.dot(sigma_vector(s)) == 0 && x.dot(rho_vector(r)) == 0;
}

namespace {

Integer sigma_at(const Sigma& s, int i) { return i == 0 ? 1 : s.at(i - 1); }

// subset of candidates summing to target: greedy largest-first, then lexicographic search
std::optional<std::vector<int>> subset_sum(const Sigma& s, std::vector<int> cand, Integer target) {
    std::sort(cand.begin(), cand.end(), [&](int a, int b) {
        Integer sa = sigma_at(s, a), sb = sigma_at(s, b);
        return sa != sb ? sa > sb : a > b;
    });
    {
        std::vector<int> pick;
        Integer left = target;
        for (int i : cand)
            if (sigma_at(s, i) <= left && sigma_at(s, i) > 0) {
                pick.push_back(i);
                left -= sigma_at(s, i);
            }
        if (left == 0) {
            std::sort(pick.begin(), pick.end());
            return pick;
        }
    }
    std::sort(cand.begin(), cand.end());
    if (cand.size() > 24) return std::nullopt;
    for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
        Integer sum = 0;
        std::vector<int> pick;
        for (std::size_t j = 0; j < cand.size(); ++j)
            if ((mask >> j) & 1) {
                sum += sigma_at(s, cand[j]);
                pick.push_back(cand[j]);
            }
        if (sum == target) return pick;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> represent(const Sigma& s, int index, bool avoid_zero) {
    const int r = static_cast<int>(s.size());
    if (index < 2 || index > r) throw std::out_of_range("represent: index must satisfy 1 < s <= r");
    bool skip_zero = avoid_zero && !is_tight(s).first;
    std::vector<int> cand;
    if (!skip_zero) cand.push_back(0);
    for (int i = 2; i < index; ++i) cand.push_back(i);
    auto rest = subset_sum(s, cand, sigma_at(s, index) - s[0]);
    if (!rest) return std::nullopt;
    rest->push_back(1);
    std::sort(rest->begin(), rest->end());
    return rest;
}

bool is_tight_at(const Sigma& s, int index) {
    Integer prefix = 1;
    for (int i = 1; i < index; ++i) prefix += s.at(i - 1);
    return s.at(index - 1) == prefix;
}

std::pair<bool, int> is_tight(const Sigma& s) {
    for (int i = 2; i <= static_cast<int>(s.size()); ++i)
        if (is_tight_at(s, i)) return {true, i};
    return {false, -1};
}

IntMatrix StandardBasis::gram() const {
    const int r = static_cast<int>(vectors.size());
    IntMatrix g(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g(i, j) = vectors[i].dot(vectors[j]);
    return g;
}

StandardBasis standard_basis(const Sigma& s) {
    if (!is_change_maker(s)) throw std::invalid_argument("standard_basis: not a change-maker vector");
    const int r = static_cast<int>(s.size());
    StandardBasis b;
    for (int k = 1; k <= r; ++k) {
        IntVector v = IntVector::Zero(r + 2);
        v(coord(k)) = -1;
        std::vector<int> a;
        bool tight = is_tight_at(s, k);
        if (tight) {
            for (int i = -1; i < k; ++i) v(coord(i)) += 1;
        } else if (k == 1) {
            // sigma_1 = 0: -e_1 alone spans a unimodular summand
        } else {
            v(coord(k - 1)) += 1;
            std::vector<int> cand;
            for (int i = 1; i <= k - 2; ++i) cand.push_back(i);
            auto pick = subset_sum(s, cand, s[k - 1] - s[k - 2]);
            if (!pick) throw std::logic_error("standard_basis: no representation");
            a = *pick;
            for (int i : a) v(coord(i)) += 1;
        }
        b.vectors.push_back(v);
        b.tight.push_back(tight);
        b.subsets.push_back(a);
    }
    return b;
}

CMLattice lattice_from_basis(const std::vector<IntVector>& w) {
    const int r = static_cast<int>(w.size());
    std::vector<Integer> sp(r + 2, 0);  // sigma' by coordinate
    sp[coord(0)] = 1;
    for (int s = 1; s <= r; ++s) {
        const IntVector& v = w[s - 1];
        if (v.size() != r + 2) throw BasisShapeError("lattice_from_basis: wrong ambient rank");
        if (v(coord(s)) != -1 || v(coord(s - 1)) < 1) throw BasisShapeError("lattice_from_basis: leading terms");
        Integer acc = sp[coord(s - 1)];
        for (int i = -1; i <= r; ++i) {
            Integer c = v(coord(i)) - (i == s ? -1 : 0) - (i == s - 1 ? 1 : 0);
            if (c == 0) continue;
            if (c != 1 || i > s - 2) throw BasisShapeError("lattice_from_basis: support outside {-1..s-2}");
            acc += sp[coord(i)];
        }
        if (v(coord(-1)) != v(coord(0))) throw BasisShapeError("lattice_from_basis: e_{-1} and e_0 must appear together");
        sp[coord(s)] = acc;
    }
    CMLattice l;
    for (int s = 1; s <= r; ++s) l.sigma.push_back(sp[coord(s)]);
    l.basis = w;
    return l;
}

bool is_indecomposable(const Sigma& s) {
    return std::all_of(s.begin(), s.end(), [](Integer x) { return x >= 1; });
}

Integer discriminant(const Sigma& s) { return determinant(standard_basis(s).gram()); }

Integer norm_squared(const Sigma& s) {
    Integer n = 1;
    for (Integer x : s) n += x * x;
    return n;
}

}  // namespace altknot
