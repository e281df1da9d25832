#include "altknot/graph_lattice.hpp"

#include <algorithm>

namespace altknot {

WhiteGraph make_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    WhiteGraph g;
    g.vertex_count = vertex_count;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) throw std::out_of_range("edge endpoint");
        g.edges.push_back({static_cast<int>(i), u, v, -1, u == v});
    }
    g.rotation.assign(vertex_count, {});
    for (int i = 0; i < vertex_count; ++i) g.region_ids.push_back(i);
    return g;
}

LatticeElement::LatticeElement(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) return;
    Integer m = *std::min_element(coeffs_.begin(), coeffs_.end());
    for (Integer& c : coeffs_) c -= m;
}

LatticeElement LatticeElement::vertex(int n, int v) {
    std::vector<Integer> c(n, 0);
    c.at(v) = 1;
    return LatticeElement(std::move(c));
}

LatticeElement LatticeElement::subset(int n, const std::vector<int>& vertices) {
    std::vector<Integer> c(n, 0);
    for (int v : vertices) c.at(v) += 1;
    return LatticeElement(std::move(c));
}

bool LatticeElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Integer c) { return c == 0; });
}

LatticeElement LatticeElement::operator+(const LatticeElement& o) const {
    std::vector<Integer> c(coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_.at(i);
    return LatticeElement(std::move(c));
}

LatticeElement LatticeElement::operator-(const LatticeElement& o) const { return *this + (-o); }

LatticeElement LatticeElement::operator-() const {
    std::vector<Integer> c(coeffs_);
    for (Integer& x : c) x = -x;
    return LatticeElement(std::move(c));
}

Integer pair(const LatticeElement& x, const LatticeElement& y, const WhiteGraph& g) {
    if (x.size() != g.vertex_count || y.size() != g.vertex_count) throw std::invalid_argument("pair: size mismatch");
    Integer s = 0;
    for (const WhiteEdge& e : g.edges) {
        if (e.u == e.v) continue;
        s += -e.mu * (x.coeffs()[e.u] - x.coeffs()[e.v]) * (y.coeffs()[e.u] - y.coeffs()[e.v]);
    }
    return s;
}

bool is_connected(const WhiteGraph& g, const std::vector<char>& keep) {
    int start = -1, count = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (keep[v]) {
            if (start < 0) start = v;
            ++count;
        }
    if (count == 0) return true;
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const WhiteEdge& e : g.edges)
        if (keep[e.u] && keep[e.v]) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<int> st{start};
    seen[start] = 1;
    int reached = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                st.push_back(y);
            }
    }
    return reached == count;
}

bool is_connected(const WhiteGraph& g) { return is_connected(g, std::vector<char>(g.vertex_count, 1)); }

bool is_two_connected(const WhiteGraph& g) {
    if (!is_connected(g)) return false;
    if (g.vertex_count <= 2) return g.vertex_count == 1 || std::any_of(g.edges.begin(), g.edges.end(), [](const WhiteEdge& e) { return e.u != e.v; });
    std::vector<char> keep(g.vertex_count, 1);
    for (int v = 0; v < g.vertex_count; ++v) {
        keep[v] = 0;
        bool ok = is_connected(g, keep);
        keep[v] = 1;
        if (!ok) return false;
    }
    return true;
}

namespace {

// split a 0/1 class set into one component and the rest
std::pair<std::vector<int>, std::vector<int>> split_off_component(const WhiteGraph& g, const std::vector<char>& in) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const WhiteEdge& e : g.edges)
        if (in[e.u] && in[e.v]) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    int start = static_cast<int>(std::find(in.begin(), in.end(), 1) - in.begin());
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<int> st{start};
    seen[start] = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                st.push_back(y);
            }
    }
    std::vector<int> a, b;
    for (int v = 0; v < g.vertex_count; ++v)
        if (in[v]) (seen[v] ? a : b).push_back(v);
    return {a, b};
}

}  // namespace

Irreducibility is_irreducible(const LatticeElement& x, const WhiteGraph& g) {
    if (x.is_zero()) throw std::invalid_argument("is_irreducible: zero element");
    const int n = g.vertex_count;
    Irreducibility out;
    Integer top = *std::max_element(x.coeffs().begin(), x.coeffs().end());
    if (top >= 2) {
        std::vector<int> level;
        for (int v = 0; v < n; ++v)
            if (x.coeffs()[v] >= 1) level.push_back(v);
        out.y = LatticeElement::subset(n, level);
        out.z = x - out.y;
        return out;
    }
    std::vector<char> in(n), out_set(n);
    std::vector<int> r;
    for (int v = 0; v < n; ++v) {
        in[v] = x.coeffs()[v] == 1;
        out_set[v] = !in[v];
        if (in[v]) r.push_back(v);
    }
    if (!is_connected(g, in)) {
        auto [s, t] = split_off_component(g, in);
        out.y = LatticeElement::subset(n, s);
        out.z = LatticeElement::subset(n, t);
        return out;
    }
    if (!is_connected(g, out_set)) {
        auto [s, t] = split_off_component(g, out_set);
        out.y = -LatticeElement::subset(n, s);
        out.z = -LatticeElement::subset(n, t);
        return out;
    }
    out.irreducible = true;
    out.region = r;
    return out;
}

std::vector<LatticeElement> enumerate_irreducible_with_value(
    const WhiteGraph& g, const std::vector<std::pair<LatticeElement, Integer>>& constraints) {
    const int n = g.vertex_count;
    if (n > 24) throw std::invalid_argument("enumerate_irreducible_with_value: graph too large");
    std::vector<LatticeElement> out;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<char> in(n), rest(n);
        for (int v = 0; v < n; ++v) {
            in[v] = (mask >> v) & 1;
            rest[v] = !in[v];
        }
        if (!is_connected(g, in) || !is_connected(g, rest)) continue;
        std::vector<Integer> c(n);
        for (int v = 0; v < n; ++v) c[v] = in[v];
        LatticeElement x(c);
        bool ok = true;
        for (const auto& [y, value] : constraints)
            if (pair(x, y, g) != value) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FlypeData split_vertex(int v, const LatticeElement& x, const WhiteGraph& g) {
    const int n = g.vertex_count;
    if (v < 0 || v >= n) throw std::out_of_range("unknown vertex id");
    LatticeElement vv = LatticeElement::vertex(n, v);
    LatticeElement y = vv - x;
    if (x.is_zero() || y.is_zero()) throw HypothesisViolation("split_vertex: both parts must be nonzero");
    if (pair(x, y, g) != -1) throw HypothesisViolation("split_vertex: parts must pair to -1");
    for (const WhiteEdge& e : g.edges) {
        if (e.u == v || e.v == v || e.u == e.v) continue;
        // components of G - v - e
        std::vector<char> keep(n, 1);
        keep[v] = 0;
        std::vector<std::vector<int>> adj(n);
        for (const WhiteEdge& f : g.edges)
            if (f.crossing != e.crossing && keep[f.u] && keep[f.v]) {
                adj[f.u].push_back(f.v);
                adj[f.v].push_back(f.u);
            }
        std::vector<int> side(n, -1);
        side[v] = 2;
        for (int s = 0; s < 2; ++s) {
            int start = s == 0 ? e.u : e.v;
            if (side[start] >= 0) break;
            side[start] = s;
            std::vector<int> st{start};
            while (!st.empty()) {
                int a = st.back();
                st.pop_back();
                for (int b : adj[a])
                    if (side[b] < 0) {
                        side[b] = s;
                        st.push_back(b);
                    }
            }
        }
        if (side[e.v] != 1 || std::count(side.begin(), side.end(), -1)) continue;
        std::vector<int> a_side, b_side;
        for (int w = 0; w < n; ++w) {
            if (side[w] == 0) a_side.push_back(w);
            if (side[w] == 1) b_side.push_back(w);
        }
        LatticeElement ra = LatticeElement::subset(n, a_side) + vv, rb = LatticeElement::subset(n, b_side) + vv;
        if (!((x == ra && y == rb) || (x == rb && y == ra))) continue;
        FlypeData fd;
        fd.cut_edge = e.crossing;
        fd.x = x;
        fd.y = y;
        LatticeElement eu = LatticeElement::vertex(n, e.u), ev = LatticeElement::vertex(n, e.v);
        if (pair(x, eu, g) == 1 && pair(y, ev, g) == 1) {
            fd.u1 = e.u;
            fd.u2 = e.v;
            fd.r_side = a_side;
            fd.s_side = b_side;
        } else if (pair(x, ev, g) == 1 && pair(y, eu, g) == 1) {
            fd.u1 = e.v;
            fd.u2 = e.u;
            fd.r_side = b_side;
            fd.s_side = a_side;
        } else {
            continue;
        }
        return fd;
    }
    throw HypothesisViolation("split_vertex: no cut edge realises the splitting");
}

}  // namespace altknot
