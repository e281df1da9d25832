#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace altknot {

struct InvalidDiagram : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A crossing seen as an edge between the two unshaded regions at its corners.
// mu is the Goeritz incidence with respect to the unshaded colouring.
struct Edge {
    int tail = 0;
    int head = 0;
    int mu = -1;
};

// PD entry: arc labels starting from the incoming under-strand, counterclockwise.
using PDCrossing = std::array<int, 4>;

// Knot diagram stored as its signed plane Tait graph on the unshaded regions.
// Half-edge 2e sits at edge(e).tail, 2e+1 at edge(e).head; rotation lists are
// counterclockwise. Values are immutable; every operation returns a new diagram.
class Diagram {
public:
    Diagram();  // the crossingless unknot

    static Diagram from_graph(int vertex_count, std::vector<Edge> edges,
                              std::vector<std::vector<int>> rotation);

    int crossing_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int region_count() const { return vertex_count() + face_count(); }

    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
    const std::vector<std::vector<int>>& rotations() const { return rotation_; }

    static int twin(int h) { return h ^ 1; }
    static int edge_of(int h) { return h >> 1; }
    int vertex_of(int h) const { return (h & 1) ? edges_[h >> 1].head : edges_[h >> 1].tail; }
    int other_end(int e, int v) const;
    int rot_next(int h) const;
    int rot_prev(int h) const;
    // face lying to the left of the half-edge, walking from its vertex
    int face_of(int h) const { return face_of_half_[h]; }
    int face_next(int h) const { return rot_prev(twin(h)); }
    const std::vector<int>& face_walk(int f) const { return faces_.at(f); }

    int component_count() const { return components_; }
    bool is_knot() const { return components_ == 1; }
    const std::vector<PDCrossing>& pd() const { return pd_; }
    int crossing_sign(int e) const { return signs_.at(e); }
    int writhe() const;

    bool is_alternating() const;
    int count_mu(int mu) const;
    bool is_loop(int e) const { return edges_[e].tail == edges_[e].head; }
    bool is_bridge(int e) const;
    bool is_nugatory(int e) const { return is_loop(e) || is_bridge(e); }
    bool is_reduced() const;

    // the four regions around a crossing, counterclockwise: NE, NW, SW, SE corners
    // are shaded(above), tail, shaded(below), head; returned as region ids
    std::array<int, 4> corner_regions(int e) const;

    bool operator==(const Diagram& o) const {
        return edges_ == o.edges_ && rotation_ == o.rotation_;
    }

private:
    void analyse();
    void trace();

    std::vector<Edge> edges_;
    std::vector<std::vector<int>> rotation_;
    std::vector<int> rot_pos_;
    std::vector<int> face_of_half_;
    std::vector<std::vector<int>> faces_;
    std::vector<PDCrossing> pd_;
    std::vector<int> signs_;
    int components_ = 1;
};

inline bool operator==(const Edge& a, const Edge& b) {
    return a.tail == b.tail && a.head == b.head && a.mu == b.mu;
}

// Same diagram described on the shaded regions (dual graph, incidences negated).
// Vertex f of the result is face f of d; crossing ids are preserved.
Diagram dual_view(const Diagram& d);

// Re-colour so that incidence -1 is the majority (ties keep the current colouring).
Diagram normalize_colouring(const Diagram& d);

Diagram mirror(const Diagram& d);
Diagram crossing_change(const Diagram& d, int e);

enum class Colour { Unshaded, Shaded };

struct WhiteEdge {
    int crossing;
    int u;
    int v;
    int mu;
    bool nugatory;
};

// Plane graph of one colour class; vertex i corresponds to region region_ids[i].
struct WhiteGraph {
    int vertex_count = 0;
    std::vector<WhiteEdge> edges;
    std::vector<std::vector<int>> rotation;  // half-edge ids as in Diagram
    std::vector<int> region_ids;
};

WhiteGraph white_graph(const Diagram& d, Colour colour);

// Parsing; all reject links, unbalanced labels and non-planar data with InvalidDiagram.
Diagram from_pd(const std::vector<PDCrossing>& pd);
Diagram from_pd_string(const std::string& text);
Diagram from_dt(const std::vector<int>& dt);
Diagram from_dt_string(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
std::string pd_string(const Diagram& d);

// C_m: two-bridge diagram, m-crossing twist region plus a one-crossing-changed clasp.
struct ClaspInfo {
    bool is_clasp = false;
    int m = 0;
};
ClaspInfo is_clasp_Cm(const Diagram& d);
Diagram clasp_diagram(int m);
Diagram torus_2q(int q);

}  // namespace altknot
