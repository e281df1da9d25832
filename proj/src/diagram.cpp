#include "altknot/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace altknot {

namespace {

// Slot indices around a crossing, counterclockwise from the northeast.
enum Slot { NE = 0, NW = 1, SW = 2, SE = 3 };
constexpr int kPos[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};

// (half-edge, strand) -> slot; strand 0 is "next", 1 is "prev"
int slot_of(int h, int strand) {
    bool tail = (h & 1) == 0;
    if (strand == 0) return tail ? NW : SE;
    return tail ? SW : NE;
}

}  // namespace

Diagram::Diagram() : rotation_(1) { analyse(); }

Diagram Diagram::from_graph(int vertex_count, std::vector<Edge> edges,
                            std::vector<std::vector<int>> rotation) {
    if (vertex_count < 1 || static_cast<int>(rotation.size()) != vertex_count)
        throw InvalidDiagram("rotation system size mismatch");
    const int n = static_cast<int>(edges.size());
    std::vector<int> seen(2 * n, 0);
    for (int v = 0; v < vertex_count; ++v)
        for (int h : rotation[v]) {
            if (h < 0 || h >= 2 * n) throw InvalidDiagram("half-edge out of range");
            if (seen[h]++) throw InvalidDiagram("half-edge listed twice");
            int owner = (h & 1) ? edges[h >> 1].head : edges[h >> 1].tail;
            if (owner != v) throw InvalidDiagram("half-edge listed at the wrong vertex");
        }
    for (int h = 0; h < 2 * n; ++h)
        if (!seen[h]) throw InvalidDiagram("half-edge missing from rotation");
    for (const Edge& e : edges)
        if (e.mu != 1 && e.mu != -1) throw InvalidDiagram("incidence must be +1 or -1");
    Diagram d;
    d.edges_ = std::move(edges);
    d.rotation_ = std::move(rotation);
    d.analyse();
    return d;
}

int Diagram::other_end(int e, int v) const {
    const Edge& ed = edges_.at(e);
    if (ed.tail == v) return ed.head;
    if (ed.head == v) return ed.tail;
    throw std::invalid_argument("vertex not incident to edge");
}

int Diagram::rot_next(int h) const {
    const auto& r = rotation_[vertex_of(h)];
    return r[(rot_pos_[h] + 1) % r.size()];
}

int Diagram::rot_prev(int h) const {
    const auto& r = rotation_[vertex_of(h)];
    return r[(rot_pos_[h] + r.size() - 1) % r.size()];
}

void Diagram::analyse() {
    const int n = crossing_count();
    const int v = vertex_count();
    rot_pos_.assign(2 * n, -1);
    for (int x = 0; x < v; ++x)
        for (std::size_t i = 0; i < rotation_[x].size(); ++i) rot_pos_[rotation_[x][i]] = static_cast<int>(i);

    // connectivity of the plane graph
    std::vector<int> comp(v, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int h : rotation_[x]) {
            int y = vertex_of(twin(h));
            if (comp[y] < 0) {
                comp[y] = 0;
                stack.push_back(y);
            }
        }
    }
    if (std::count(comp.begin(), comp.end(), -1) > 0) throw InvalidDiagram("disconnected diagram");

    face_of_half_.assign(2 * n, -1);
    faces_.clear();
    for (int h = 0; h < 2 * n; ++h) {
        if (face_of_half_[h] >= 0) continue;
        std::vector<int> walk;
        int g = h;
        do {
            face_of_half_[g] = static_cast<int>(faces_.size());
            walk.push_back(g);
            g = face_next(g);
        } while (g != h);
        faces_.push_back(std::move(walk));
    }
    if (n == 0) faces_.push_back({});
    if (v - n + face_count() != 2) throw InvalidDiagram("rotation system is not planar");
    trace();
}

void Diagram::trace() {
    const int n = crossing_count();
    pd_.assign(n, PDCrossing{0, 0, 0, 0});
    signs_.assign(n, 0);
    if (n == 0) {
        components_ = 1;
        return;
    }
    // label[e][slot], entry[e][slot]
    std::vector<std::array<int, 4>> label(n, {0, 0, 0, 0});
    std::vector<std::array<int, 4>> entry(n, {-1, -1, -1, -1});
    int next_label = 1;
    components_ = 0;
    for (int e0 = 0; e0 < n; ++e0) {
        for (int s0 = 0; s0 < 2; ++s0) {
            int h0 = 2 * e0;
            if (label[e0][slot_of(h0, s0)] || label[e0][slot_of(twin(h0), s0)]) continue;
            ++components_;
            int h = h0, s = s0;
            do {
                int e = edge_of(h);
                entry[e][slot_of(h, s)] = 1;
                int out = twin(h);
                entry[e][slot_of(out, s)] = 0;
                int nh = s == 0 ? rot_next(out) : rot_prev(out);
                int ns = 1 - s;
                label[e][slot_of(out, s)] = next_label;
                label[edge_of(nh)][slot_of(nh, ns)] = next_label;
                ++next_label;
                h = nh;
                s = ns;
            } while (!(h == h0 && s == s0));
        }
    }
    for (int e = 0; e < n; ++e) {
        // next strand is {NW, SE}; it is over exactly when mu = +1
        bool next_over = edges_[e].mu == 1;
        int under_a = next_over ? SW : NW, under_b = next_over ? NE : SE;
        int over_a = next_over ? NW : SW, over_b = next_over ? SE : NE;
        int under_in = entry[e][under_a] == 1 ? under_a : under_b;
        int over_in = entry[e][over_a] == 1 ? over_a : over_b;
        for (int k = 0; k < 4; ++k) pd_[e][k] = label[e][(under_in + k) % 4];
        int dox = -kPos[over_in][0], doy = -kPos[over_in][1];
        int dux = -kPos[under_in][0], duy = -kPos[under_in][1];
        int cross = dox * duy - doy * dux;
        signs_[e] = cross > 0 ? 1 : -1;
    }
}

int Diagram::writhe() const { return std::accumulate(signs_.begin(), signs_.end(), 0); }

int Diagram::count_mu(int mu) const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [mu](const Edge& e) { return e.mu == mu; }));
}

bool Diagram::is_alternating() const {
    return count_mu(1) == 0 || count_mu(-1) == 0;
}

bool Diagram::is_bridge(int e) const {
    if (is_loop(e)) return false;
    // a non-loop edge is a bridge iff its two sides lie on the same face
    return face_of(2 * e) == face_of(2 * e + 1);
}

bool Diagram::is_reduced() const {
    for (int e = 0; e < crossing_count(); ++e)
        if (is_nugatory(e)) return false;
    return true;
}

std::array<int, 4> Diagram::corner_regions(int e) const {
    const int v = vertex_count();
    return {v + face_of(2 * e), edges_[e].tail, v + face_of(2 * e + 1), edges_[e].head};
}

Diagram dual_view(const Diagram& d) {
    const int n = d.crossing_count();
    if (n == 0) return d;
    std::vector<Edge> edges(n);
    for (int e = 0; e < n; ++e) edges[e] = Edge{d.face_of(2 * e), d.face_of(2 * e + 1), -d.edge(e).mu};
    std::vector<std::vector<int>> rotation(d.face_count());
    for (int f = 0; f < d.face_count(); ++f) rotation[f] = d.face_walk(f);
    return Diagram::from_graph(d.face_count(), std::move(edges), std::move(rotation));
}

Diagram normalize_colouring(const Diagram& d) {
    if (d.count_mu(1) > d.count_mu(-1)) return dual_view(d);
    return d;
}

Diagram mirror(const Diagram& d) {
    std::vector<Edge> edges = d.edges();
    for (Edge& e : edges) e.mu = -e.mu;
    return normalize_colouring(Diagram::from_graph(d.vertex_count(), std::move(edges), d.rotations()));
}

Diagram crossing_change(const Diagram& d, int e) {
    if (e < 0 || e >= d.crossing_count()) throw std::out_of_range("no such crossing");
    std::vector<Edge> edges = d.edges();
    edges[e].mu = -edges[e].mu;
    return Diagram::from_graph(d.vertex_count(), std::move(edges), d.rotations());
}

WhiteGraph white_graph(const Diagram& d, Colour colour) {
    Diagram g = colour == Colour::Unshaded ? d : dual_view(d);
    WhiteGraph w;
    w.vertex_count = g.vertex_count();
    w.rotation = g.rotations();
    for (int e = 0; e < g.crossing_count(); ++e)
        w.edges.push_back({e, g.edge(e).tail, g.edge(e).head, g.edge(e).mu, g.is_nugatory(e)});
    w.region_ids.resize(w.vertex_count);
    for (int i = 0; i < w.vertex_count; ++i)
        w.region_ids[i] = colour == Colour::Unshaded ? i : d.vertex_count() + i;
    return w;
}

}  // namespace altknot
