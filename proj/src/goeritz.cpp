#include "altknot/goeritz.hpp"

#include <cstdlib>

namespace altknot {

IntMatrix goeritz_full(const WhiteGraph& g) {
    IntMatrix m = IntMatrix::Zero(g.vertex_count, g.vertex_count);
    for (const WhiteEdge& e : g.edges) {
        if (e.u == e.v) continue;
        m(e.u, e.v) += e.mu;
        m(e.v, e.u) += e.mu;
        m(e.u, e.u) -= e.mu;
        m(e.v, e.v) -= e.mu;
    }
    return m;
}

GoeritzForm goeritz_matrix(const WhiteGraph& g, int discard) {
    if (discard < 0 || discard >= g.vertex_count) throw std::out_of_range("unknown vertex id");
    GoeritzForm f;
    f.discarded = discard;
    for (int v = 0; v < g.vertex_count; ++v)
        if (v != discard) f.basis.push_back(v);
    IntMatrix full = goeritz_full(g);
    const int r = static_cast<int>(f.basis.size());
    f.matrix.resize(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) f.matrix(i, j) = full(f.basis[i], f.basis[j]);
    return f;
}

GoeritzForm goeritz_matrix(const Diagram& d, Colour colour, int discard) {
    WhiteGraph g = white_graph(d, colour);
    GoeritzForm f = goeritz_matrix(g, discard < 0 ? g.vertex_count - 1 : discard);
    for (const WhiteEdge& e : g.edges) {
        int s = d.crossing_sign(e.crossing);
        if (s > 0 && e.mu == -1) ++f.n_plus;
        if (s < 0 && e.mu == 1) ++f.n_minus;
    }
    return f;
}

Integer determinant(const GoeritzForm& f) { return std::llabs(determinant(f.matrix)); }

bool is_positive_definite(const GoeritzForm& f) { return is_positive_definite(f.matrix); }

int signature(const Diagram& d, Colour colour) {
    GoeritzForm f = goeritz_matrix(d, colour);
    return signature(f.matrix) + f.n_minus - f.n_plus;
}

Integer knot_determinant(const Diagram& d) { return determinant(goeritz_matrix(d)); }

}  // namespace altknot
