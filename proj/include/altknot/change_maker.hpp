#pragma once

#include <optional>
#include <utility>

#include "altknot/linalg.hpp"

namespace altknot {

// (sigma_1, ..., sigma_r); sigma_0 = 1 is implicit.
// Ambient vectors live in Z^{r+2}; position 0 is e_{-1}, position i+1 is e_i.
using Sigma = std::vector<Integer>;

inline int coord(int i) { return i + 1; }

bool is_change_maker(const Sigma& s);
bool all_subset_sums(const Sigma& s);  // every 0..sum is a subset sum

IntVector sigma_vector(const Sigma& s);  // e_0 + sum sigma_i e_i
IntVector rho_vector(int r);              // e_{-1} - e_0
bool in_lattice(const Sigma& s, const IntVector& x);

// A within {0..s-1}, containing 1, summing to sigma_s; 0 is avoided for slack sigma on request
std::optional<std::vector<int>> represent(const Sigma& s, int index, bool avoid_zero);

std::pair<bool, int> is_tight(const Sigma& s);
bool is_tight_at(const Sigma& s, int index);

struct StandardBasis {
    std::vector<IntVector> vectors;        // v_1..v_r
    std::vector<char> tight;               // per index
    std::vector<std::vector<int>> subsets; // A_s
    IntMatrix gram() const;
};
StandardBasis standard_basis(const Sigma& s);

struct CMLattice {
    Sigma sigma;
    std::vector<IntVector> basis;
};
struct BasisShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
CMLattice lattice_from_basis(const std::vector<IntVector>& w);

bool is_indecomposable(const Sigma& s);
Integer discriminant(const Sigma& s);  // Gram determinant of a standard basis
Integer norm_squared(const Sigma& s);  // 1 + sum sigma_i^2

}  // namespace altknot
