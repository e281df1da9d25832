#pragma once

#include <optional>
#include <utility>

#include "altknot/diagram.hpp"
#include "altknot/linalg.hpp"

namespace altknot {

// abstract multigraph with every edge of incidence -1; no rotation data
WhiteGraph make_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

// element of the graph lattice, coefficients per vertex, stored with minimum 0
class LatticeElement {
public:
    LatticeElement() = default;
    explicit LatticeElement(std::vector<Integer> coeffs);
    static LatticeElement vertex(int n, int v);
    static LatticeElement subset(int n, const std::vector<int>& vertices);

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    int size() const { return static_cast<int>(coeffs_.size()); }
    bool is_zero() const;

    LatticeElement operator+(const LatticeElement& o) const;
    LatticeElement operator-(const LatticeElement& o) const;
    LatticeElement operator-() const;
    bool operator==(const LatticeElement& o) const { return coeffs_ == o.coeffs_; }
    bool operator<(const LatticeElement& o) const { return coeffs_ < o.coeffs_; }

private:
    std::vector<Integer> coeffs_;
};

Integer pair(const LatticeElement& x, const LatticeElement& y, const WhiteGraph& g);

bool is_connected(const WhiteGraph& g, const std::vector<char>& keep);
bool is_connected(const WhiteGraph& g);
bool is_two_connected(const WhiteGraph& g);

struct Irreducibility {
    bool irreducible = false;
    std::vector<int> region;    // R with x = [R], when irreducible
    LatticeElement y, z;        // x = y + z with y.z >= 0 otherwise
};
Irreducibility is_irreducible(const LatticeElement& x, const WhiteGraph& g);

// [R] for every R with R and its complement connected, subject to x.y = value constraints
std::vector<LatticeElement> enumerate_irreducible_with_value(
    const WhiteGraph& g, const std::vector<std::pair<LatticeElement, Integer>>& constraints = {});

struct FlypeData {
    int cut_edge = -1;   // crossing id
    int u1 = -1, u2 = -1;
    std::vector<int> r_side, s_side;  // components of (G - v) - e containing u1, u2
    LatticeElement x, y;
};
struct HypothesisViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
FlypeData split_vertex(int v, const LatticeElement& x, const WhiteGraph& g);

}  // namespace altknot
