#pragma once

#include "altknot/diagram.hpp"
#include "altknot/linalg.hpp"

namespace altknot {

struct GoeritzForm {
    std::vector<int> basis;  // white-graph vertices, discarded one omitted
    IntMatrix matrix;
    int discarded = 0;
    int n_plus = 0;   // positive crossings of incidence -1
    int n_minus = 0;  // negative crossings of incidence +1
};

// full (r+1)x(r+1) form; kernel spanned by the all-ones vector
IntMatrix goeritz_full(const WhiteGraph& g);
GoeritzForm goeritz_matrix(const WhiteGraph& g, int discard);
GoeritzForm goeritz_matrix(const Diagram& d, Colour colour = Colour::Unshaded, int discard = -1);

Integer determinant(const GoeritzForm& f);
bool is_positive_definite(const GoeritzForm& f);

int signature(const Diagram& d, Colour colour = Colour::Unshaded);
Integer knot_determinant(const Diagram& d);

}  // namespace altknot
