#include "altknot/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace altknot {

std::string to_string(MoveKind k) {
    switch (k) {
        case MoveKind::Flype: return "Flype";
        case MoveKind::CrossingChange: return "CrossingChange";
        case MoveKind::Untongue: return "Untongue";
        case MoveKind::Untwirl: return "Untwirl";
        case MoveKind::Tongue: return "Tongue";
        case MoveKind::Twirl: return "Twirl";
        case MoveKind::ReidemeisterII: return "ReidemeisterII";
        case MoveKind::NugatoryReduction: return "NugatoryReduction";
    }
    return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
    for (MoveKind k : {MoveKind::Flype, MoveKind::CrossingChange, MoveKind::Untongue, MoveKind::Untwirl,
                       MoveKind::Tongue, MoveKind::Twirl, MoveKind::ReidemeisterII, MoveKind::NugatoryReduction})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown move kind: " + s);
}

namespace {

// Mutable plane graph used while rewriting; half-edge ids follow Diagram's scheme.
struct Builder {
    std::vector<Edge> edges;
    std::vector<char> edge_alive;
    std::vector<int> edge_origin;
    std::vector<std::vector<int>> rot;
    std::vector<char> vertex_alive;
    std::vector<std::vector<int>> vertex_origin;

    explicit Builder(const Diagram& d) : edges(d.edges()), rot(d.rotations()) {
        edge_alive.assign(edges.size(), 1);
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) edge_origin.push_back(e);
        vertex_alive.assign(rot.size(), 1);
        for (int v = 0; v < static_cast<int>(rot.size()); ++v) vertex_origin.push_back({v});
    }

    int vert(int h) const { return (h & 1) ? edges[h >> 1].head : edges[h >> 1].tail; }
    void set_end(int h, int v) { ((h & 1) ? edges[h >> 1].head : edges[h >> 1].tail) = v; }

    std::size_t pos(int v, int h) const {
        auto it = std::find(rot[v].begin(), rot[v].end(), h);
        if (it == rot[v].end()) throw std::logic_error("half-edge not in rotation");
        return static_cast<std::size_t>(it - rot[v].begin());
    }

    int add_vertex() {
        rot.emplace_back();
        vertex_alive.push_back(1);
        vertex_origin.emplace_back();
        return static_cast<int>(rot.size()) - 1;
    }

    int add_edge(int u, int v, int mu) {
        edges.push_back({u, v, mu});
        edge_alive.push_back(1);
        edge_origin.push_back(-1);
        return static_cast<int>(edges.size()) - 1;
    }

    // replace h in the rotation of v by seq
    void replace(int v, int h, const std::vector<int>& seq) {
        std::size_t p = pos(v, h);
        rot[v].erase(rot[v].begin() + p);
        rot[v].insert(rot[v].begin() + p, seq.begin(), seq.end());
    }

    void erase(int v, int h) { rot[v].erase(rot[v].begin() + pos(v, h)); }

    void remove_edge(int e) {
        erase(edges[e].tail, 2 * e);
        erase(edges[e].head, 2 * e + 1);
        edge_alive[e] = 0;
    }

    // merge head into tail
    int contract(int e) {
        int u = edges[e].tail, v = edges[e].head;
        if (u == v) throw PatternMismatch("cannot contract a loop");
        std::vector<int> seq;
        std::size_t p = pos(v, 2 * e + 1);
        for (std::size_t k = 1; k < rot[v].size(); ++k) seq.push_back(rot[v][(p + k) % rot[v].size()]);
        replace(u, 2 * e, seq);
        for (int g : seq) set_end(g, u);
        rot[v].clear();
        vertex_alive[v] = 0;
        vertex_origin[u].insert(vertex_origin[u].end(), vertex_origin[v].begin(), vertex_origin[v].end());
        edge_alive[e] = 0;
        return u;
    }

    MoveResult finish() const {
        std::vector<int> vmap(rot.size(), -1), emap(edges.size(), -1);
        int nv = 0, ne = 0;
        for (std::size_t v = 0; v < rot.size(); ++v)
            if (vertex_alive[v]) vmap[v] = nv++;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edge_alive[e]) emap[e] = ne++;
        std::vector<Edge> out_edges(ne);
        MoveResult r{Diagram(), std::vector<std::vector<int>>(nv), std::vector<int>(ne)};
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!edge_alive[e]) continue;
            out_edges[emap[e]] = Edge{vmap[edges[e].tail], vmap[edges[e].head], edges[e].mu};
            r.edge_origin[emap[e]] = edge_origin[e];
        }
        std::vector<std::vector<int>> out_rot(nv);
        for (std::size_t v = 0; v < rot.size(); ++v) {
            if (!vertex_alive[v]) continue;
            for (int h : rot[v]) out_rot[vmap[v]].push_back(2 * emap[h >> 1] + (h & 1));
            auto o = vertex_origin[v];
            std::sort(o.begin(), o.end());
            r.vertex_origin[vmap[v]] = o;
        }
        if (nv == 0) throw PatternMismatch("move removed every region");
        r.diagram = Diagram::from_graph(nv, std::move(out_edges), std::move(out_rot));
        return r;
    }
};

MoveResult compose(const MoveResult& first, const MoveResult& second) {
    MoveResult r{second.diagram, {}, {}};
    for (const auto& o : second.vertex_origin) {
        std::vector<int> acc;
        for (int j : o) acc.insert(acc.end(), first.vertex_origin[j].begin(), first.vertex_origin[j].end());
        std::sort(acc.begin(), acc.end());
        r.vertex_origin.push_back(acc);
    }
    for (int e : second.edge_origin) r.edge_origin.push_back(e < 0 ? -1 : first.edge_origin[e]);
    return r;
}

MoveResult identity_result(const Diagram& d) {
    Builder b(d);
    return b.finish();
}

int find_vertex(const MoveResult& r, int old_vertex) {
    for (int v = 0; v < static_cast<int>(r.vertex_origin.size()); ++v)
        for (int o : r.vertex_origin[v])
            if (o == old_vertex) return v;
    return -1;
}

int half_at(const Diagram& d, int e, int v) {
    if (d.edge(e).tail == v) return 2 * e;
    if (d.edge(e).head == v) return 2 * e + 1;
    throw PatternMismatch("crossing not incident to region");
}

void check_crossing(const Diagram& d, int e) {
    if (e < 0 || e >= d.crossing_count()) throw PatternMismatch("no such crossing");
}

void check_vertex(const Diagram& d, int v) {
    if (v < 0 || v >= d.vertex_count()) throw PatternMismatch("no such unshaded region");
}

MoveResult flype(const Diagram& d, int e, int v) {
    check_crossing(d, e);
    check_vertex(d, v);
    const int u1 = d.edge(e).tail, u2 = d.edge(e).head;
    if (u1 == u2 || u1 == v || u2 == v) throw PatternMismatch("flype: crossing must avoid the region");
    // sides of G - v - e
    std::vector<int> side(d.vertex_count(), -1);
    side[v] = 2;
    for (int s = 0; s < 2; ++s) {
        int start = s == 0 ? u1 : u2;
        if (side[start] >= 0) throw PatternMismatch("flype: crossing is not a cut edge");
        std::vector<int> st{start};
        side[start] = s;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int h : d.rotation(x)) {
                if (Diagram::edge_of(h) == e) continue;
                int y = d.vertex_of(Diagram::twin(h));
                if (side[y] < 0) {
                    side[y] = s;
                    st.push_back(y);
                } else if (side[y] != s && side[y] != 2) {
                    throw PatternMismatch("flype: crossing is not a cut edge");
                }
            }
        }
    }
    if (std::count(side.begin(), side.end(), -1)) throw PatternMismatch("flype: region split is incomplete");
    // v's rotation as an R-block followed by an S-block
    const auto& rv = d.rotation(v);
    const int deg = static_cast<int>(rv.size());
    std::vector<int> cls(deg);
    for (int i = 0; i < deg; ++i) {
        int y = d.vertex_of(Diagram::twin(rv[i]));
        if (y == v) throw PatternMismatch("flype: region has a loop");
        cls[i] = side[y];
    }
    int changes = 0, start = -1;
    for (int i = 0; i < deg; ++i)
        if (cls[i] != cls[(i + deg - 1) % deg]) {
            ++changes;
            if (cls[i] == 0) start = i;
        }
    if (changes != 2) throw PatternMismatch("flype: tangle sides are not contiguous at the region");
    std::vector<int> rblock, sblock;
    for (int k = 0; k < deg; ++k) {
        int h = rv[(start + k) % deg];
        (cls[(start + k) % deg] == 0 ? rblock : sblock).push_back(h);
    }

    Builder b(d);
    const int vs = b.add_vertex();
    b.vertex_origin[vs] = {v};
    // merge u2 into u1, reflecting the S side
    std::vector<int> tail_seq;
    {
        std::size_t p = b.pos(u2, 2 * e + 1);
        const auto& r2 = b.rot[u2];
        for (std::size_t k = 1; k < r2.size(); ++k) tail_seq.push_back(r2[(p + k) % r2.size()]);
        std::reverse(tail_seq.begin(), tail_seq.end());
    }
    for (int x = 0; x < d.vertex_count(); ++x)
        if (side[x] == 1 && x != u2) std::reverse(b.rot[x].begin(), b.rot[x].end());
    b.replace(u1, 2 * e, tail_seq);
    for (int g : tail_seq) b.set_end(g, u1);
    b.rot[u2].clear();
    b.vertex_alive[u2] = 0;
    b.vertex_origin[u1].push_back(u2);
    // the crossing moves to join v (R part) and vs (S part)
    b.edges[e].tail = v;
    b.edges[e].head = vs;
    rblock.push_back(2 * e);
    b.rot[v] = rblock;
    std::vector<int> srot(sblock.rbegin(), sblock.rend());
    srot.push_back(2 * e + 1);
    for (int g : sblock) b.set_end(g, vs);
    b.rot[vs] = srot;
    return b.finish();
}

// e parallel to a tangle T across the cut {a, b}; T is the block of crossing x at a.
// e moves to the far side of T and T is reflected; the white graph is unchanged.
MoveResult parallel_flype(const Diagram& d, int e, int a, int x) {
    check_crossing(d, e);
    check_crossing(d, x);
    check_vertex(d, a);
    if (x == e) throw PatternMismatch("flype: tangle crossing equals the moved crossing");
    const Edge& ed = d.edge(e);
    if (ed.tail != a && ed.head != a) throw PatternMismatch("crossing not incident to region");
    const int b = ed.tail == a ? ed.head : ed.tail;
    if (a == b) throw PatternMismatch("flype: crossing is a loop");
    const int n = d.vertex_count();
    // components of G - {a, b}
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (s == a || s == b || comp[s] >= 0) continue;
        std::vector<int> st{s};
        comp[s] = nc;
        while (!st.empty()) {
            int y = st.back();
            st.pop_back();
            for (int h : d.rotation(y)) {
                int z = d.vertex_of(Diagram::twin(h));
                if (z != a && z != b && comp[z] < 0) {
                    comp[z] = nc;
                    st.push_back(z);
                }
            }
        }
        ++nc;
    }
    // block of a half-edge at a or b: a component, or a single a-b crossing
    auto block = [&](int h) {
        int z = d.vertex_of(Diagram::twin(h));
        if (z == a || z == b) return nc + Diagram::edge_of(h);
        return comp[z];
    };
    const int tb = block(half_at(d, x, a));
    if (tb >= nc && d.vertex_of(Diagram::twin(half_at(d, x, a))) != b) throw PatternMismatch("flype: region has a loop");
    std::vector<char> inside(n, 0);
    for (int y = 0; y < n; ++y) inside[y] = y != a && y != b && comp[y] == tb;
    // rewrite the rotation at an end: [e, T...] -> [T reversed, e] or [T..., e] -> [e, T reversed]
    auto rewrite = [&](int v, std::vector<int>& out) {
        const auto& r = d.rotation(v);
        const int deg = static_cast<int>(r.size());
        const int he = half_at(d, e, v);
        int pe = static_cast<int>(std::find(r.begin(), r.end(), he) - r.begin());
        std::vector<int> cls(deg);
        int cnt = 0;
        for (int i = 0; i < deg; ++i) {
            cls[i] = block(r[i]) == tb;
            cnt += cls[i];
        }
        if (cnt == 0) throw PatternMismatch("flype: tangle does not meet both ends");
        int dir = 0;
        if (cls[(pe + 1) % deg]) dir = 1;
        else if (cls[(pe + deg - 1) % deg]) dir = -1;
        else throw PatternMismatch("flype: crossing is not beside the tangle");
        std::vector<int> seg;
        for (int k = 1; k <= cnt; ++k) {
            int i = (pe + dir * k + deg * k) % deg;
            if (!cls[i]) throw PatternMismatch("flype: tangle is not contiguous at the region");
            seg.push_back(r[i]);
        }
        // seg lists T outward from e; the reflected T sits where e was, e beyond it
        out.clear();
        int first = dir == 1 ? pe : (pe - cnt + deg) % deg;
        for (int k = cnt + 1; k < deg; ++k) out.push_back(r[(first + k) % deg]);
        if (dir == 1) {
            // old order e, t1..tk -> tk..t1, e
            for (int k = cnt - 1; k >= 0; --k) out.push_back(seg[k]);
            out.push_back(he);
        } else {
            // old order tk..t1, e -> e, t1..tk
            out.push_back(he);
            for (int k = 0; k < cnt; ++k) out.push_back(seg[k]);
        }
    };
    Builder bl(d);
    rewrite(a, bl.rot[a]);
    rewrite(b, bl.rot[b]);
    for (int y = 0; y < n; ++y)
        if (inside[y]) std::reverse(bl.rot[y].begin(), bl.rot[y].end());
    return bl.finish();
}

MoveResult nugatory(const Diagram& d, int e) {
    check_crossing(d, e);
    Builder b(d);
    if (d.is_loop(e)) b.remove_edge(e);
    else if (d.is_bridge(e)) b.contract(e);
    else throw PatternMismatch("crossing is not nugatory");
    return b.finish();
}

MoveResult reidemeister2(const Diagram& d, int e1, int e2) {
    check_crossing(d, e1);
    check_crossing(d, e2);
    if (e1 == e2 || d.edge(e1).mu == d.edge(e2).mu) throw PatternMismatch("RII needs two crossings of opposite incidence");
    const Edge &a = d.edge(e1), &c = d.edge(e2);
    Builder b(d);
    bool parallel = (a.tail == c.tail && a.head == c.head) || (a.tail == c.head && a.head == c.tail);
    if (parallel && a.tail != a.head) {
        for (int s = 0; s < 2; ++s) {
            const auto& walk = d.face_walk(d.face_of(2 * e1 + s));
            if (walk.size() == 2 && (Diagram::edge_of(walk[0]) == e2 || Diagram::edge_of(walk[1]) == e2)) {
                b.remove_edge(e1);
                b.remove_edge(e2);
                return b.finish();
            }
        }
    }
    // series: a shared region of degree two
    for (int z : {a.tail, a.head}) {
        if (d.rotation(z).size() != 2) continue;
        if (c.tail != z && c.head != z) continue;
        if (a.tail == a.head || c.tail == c.head) continue;
        b.contract(e1);
        if (b.edges[e2].tail == b.edges[e2].head) b.remove_edge(e2);
        else b.contract(e2);
        return b.finish();
    }
    throw PatternMismatch("RII pattern not found");
}

// face walk half-edges g0,g1,g2; g_i runs from p_i to p_{i+1}
MoveResult delta_to_y_impl(const Diagram& d, int f) {
    if (f < 0 || f >= d.face_count()) throw PatternMismatch("no such shaded region");
    const auto& walk = d.face_walk(f);
    if (walk.size() != 3) throw PatternMismatch("shaded region is not a triangle");
    int g[3], e[3], p[3];
    for (int i = 0; i < 3; ++i) {
        g[i] = walk[i];
        e[i] = Diagram::edge_of(g[i]);
        p[i] = d.vertex_of(g[i]);
    }
    if (p[0] == p[1] || p[1] == p[2] || p[0] == p[2]) throw PatternMismatch("triangle regions not distinct");
    if (d.edge(e[0]).mu == d.edge(e[1]).mu && d.edge(e[1]).mu == d.edge(e[2]).mu)
        throw PatternMismatch("alternating triangle admits no third Reidemeister move");
    Builder b(d);
    const int z = b.add_vertex();
    for (int i = 0; i < 3; ++i) {
        int prev = Diagram::twin(g[(i + 2) % 3]);
        std::size_t pg = b.pos(p[i], g[i]);
        std::size_t pp = b.pos(p[i], prev);
        if ((pg + 1) % b.rot[p[i]].size() != pp) throw std::logic_error("triangle corner is not consecutive");
    }
    std::vector<std::vector<int>> newrot(3);
    for (int i = 0; i < 3; ++i) {
        int prev = Diagram::twin(g[(i + 2) % 3]);
        auto r = b.rot[p[i]];
        std::size_t pg = b.pos(p[i], g[i]);
        r[pg] = 2 * e[(i + 1) % 3];
        r.erase(std::find(r.begin(), r.end(), prev));
        newrot[i] = r;
    }
    for (int i = 0; i < 3; ++i) {
        b.rot[p[i]] = newrot[i];
        b.edges[e[i]] = Edge{p[(i + 2) % 3], z, -d.edge(e[i]).mu};
    }
    b.rot[z] = {2 * e[1] + 1, 2 * e[2] + 1, 2 * e[0] + 1};
    return b.finish();
}

MoveResult y_to_delta_impl(const Diagram& d, int z) {
    check_vertex(d, z);
    const auto& rz = d.rotation(z);
    if (rz.size() != 3) throw PatternMismatch("region is not trivalent");
    int h[3], e[3], p[3];
    for (int i = 0; i < 3; ++i) {
        h[i] = rz[i];
        e[i] = Diagram::edge_of(h[i]);
        p[i] = d.vertex_of(Diagram::twin(h[i]));
    }
    if (p[0] == p[1] || p[1] == p[2] || p[0] == p[2] || p[0] == z || p[1] == z || p[2] == z)
        throw PatternMismatch("star regions not distinct");
    if (d.edge(e[0]).mu == d.edge(e[1]).mu && d.edge(e[1]).mu == d.edge(e[2]).mu)
        throw PatternMismatch("alternating star admits no third Reidemeister move");
    Builder b(d);
    // edge of h_{i+2} becomes p_i -> p_{i+1}
    std::vector<std::vector<int>> newrot(3);
    for (int i = 0; i < 3; ++i) {
        auto r = b.rot[p[i]];
        std::size_t at = b.pos(p[i], Diagram::twin(h[i]));
        r[at] = 2 * e[(i + 2) % 3];
        r.insert(r.begin() + at + 1, 2 * e[(i + 1) % 3] + 1);
        newrot[i] = r;
    }
    for (int i = 0; i < 3; ++i) {
        b.rot[p[i]] = newrot[i];
        b.edges[e[(i + 2) % 3]] = Edge{p[i], p[(i + 1) % 3], -d.edge(e[(i + 2) % 3]).mu};
    }
    b.rot[z].clear();
    b.vertex_alive[z] = 0;
    return b.finish();
}

// triangle shaded region at the corner of v1 between crossings c and x
int corner_face(const Diagram& d, int v1, int c, int x) {
    int hc = half_at(d, c, v1), hx = half_at(d, x, v1);
    if (d.rot_next(hc) == hx) return d.face_of(hc);
    if (d.rot_next(hx) == hc) return d.face_of(hx);
    throw PatternMismatch("crossings are not adjacent at the region");
}

MoveResult untangle(const Diagram& d, const Move& m, bool twirl) {
    const int c = m.crossing, v1 = m.region, x = m.aux;
    check_crossing(d, c);
    check_crossing(d, x);
    check_vertex(d, v1);
    if (d.rotation(v1).size() != 3) throw PatternMismatch("marker region must have three crossings");
    if (d.count_mu(d.edge(c).mu) != 1) throw PatternMismatch("site crossing is not the dealternating crossing");
    int f = corner_face(d, v1, c, x);
    if (d.face_walk(f).size() != 3) throw PatternMismatch("no triangular region at the site");
    MoveResult r1 = delta_to_y_impl(d, f);
    int nv1 = find_vertex(r1, v1);
    const auto& rv = r1.diagram.rotation(nv1);
    if (rv.size() != 2) throw std::logic_error("untangle: unexpected degree");
    MoveResult r2 = compose(r1, reidemeister2(r1.diagram, Diagram::edge_of(rv[0]), Diagram::edge_of(rv[1])));
    if (!twirl) return r2;
    std::set<int> local{c, x};
    for (int h : d.rotation(v1)) local.insert(Diagram::edge_of(h));
    for (int h : d.face_walk(f)) local.insert(Diagram::edge_of(h));
    for (int e = 0; e < r2.diagram.crossing_count(); ++e)
        if (local.count(r2.edge_origin[e]) && r2.diagram.is_nugatory(e)) return compose(r2, nugatory(r2.diagram, e));
    throw PatternMismatch("untwirl: site is a tongue, not a twirl");
}

// add an edge closing the corner (h1, rot_next(h1)) at a vertex into a triangle
void close_corner(Builder& b, int h1, int h2, int mu, int& new_edge) {
    int p1 = b.vert(Diagram::twin(h1)), p2 = b.vert(Diagram::twin(h2));
    int f = b.add_edge(p1, p2, mu);
    new_edge = f;
    // at p1 just before twin(h1); at p2 just after twin(h2)
    auto& r1 = b.rot[p1];
    r1.insert(r1.begin() + b.pos(p1, Diagram::twin(h1)), 2 * f);
    auto& r2 = b.rot[p2];
    r2.insert(r2.begin() + b.pos(p2, Diagram::twin(h2)) + 1, 2 * f + 1);
}

MoveResult tongue(const Diagram& d, const Move& m) {
    const int c = m.crossing, V = m.region, a = m.aux;
    check_crossing(d, c);
    check_crossing(d, a);
    check_vertex(d, V);
    if (d.count_mu(d.edge(c).mu) != 1 || d.edge(a).mu == d.edge(c).mu)
        throw PatternMismatch("tongue needs the dealternating crossing and an alternating neighbour");
    int hc = half_at(d, c, V), ha = half_at(d, a, V);
    if (d.is_loop(c) || d.is_loop(a)) throw PatternMismatch("tongue at a loop");
    bool c_first = d.rot_next(hc) == ha;
    if (!c_first && d.rot_next(ha) != hc) throw PatternMismatch("tongue crossings not adjacent");
    int h1 = c_first ? hc : ha, h2 = c_first ? ha : hc;
    const int alt = -d.edge(c).mu;
    Builder b(d);
    int v1 = b.add_vertex();
    int eb = b.add_edge(V, v1, alt);
    b.replace(V, h1, {2 * eb});
    b.erase(V, h2);
    b.set_end(h1, v1);
    b.set_end(h2, v1);
    b.rot[v1] = {2 * eb + 1, h1, h2};
    int f;
    close_corner(b, h1, h2, alt, f);
    return b.finish();
}

MoveResult twirl(const Diagram& d, const Move& m) {
    const int c = m.crossing, V = m.region;
    check_crossing(d, c);
    check_vertex(d, V);
    if (d.count_mu(d.edge(c).mu) != 1) throw PatternMismatch("twirl needs the dealternating crossing");
    if (d.is_loop(c)) throw PatternMismatch("twirl at a loop");
    int hc = half_at(d, c, V);
    const int alt = -d.edge(c).mu;
    if (m.aux == 0) {
        // V keeps its other crossings; new regions v1 (c, a, b) and u2 (b, d)
        Builder b(d);
        int v1 = b.add_vertex(), u2 = b.add_vertex();
        int ea = b.add_edge(V, v1, alt);
        int eb = b.add_edge(v1, u2, alt);
        b.replace(V, hc, {2 * ea});
        b.set_end(hc, v1);
        b.rot[v1] = {2 * ea + 1, hc, 2 * eb};
        b.rot[u2] = {2 * eb + 1};
        int f;
        close_corner(b, hc, 2 * eb, alt, f);
        return b.finish();
    }
    if (m.aux == 1) {
        for (int order = 0; order < 2; ++order) {
            Builder b(d);
            int v1 = b.add_vertex();
            int p1 = b.add_edge(V, v1, alt);
            int p2 = b.add_edge(V, v1, alt);
            b.replace(V, hc, order ? std::vector<int>{2 * p1, 2 * p2} : std::vector<int>{2 * p2, 2 * p1});
            b.set_end(hc, v1);
            b.rot[v1] = {2 * p1 + 1, 2 * p2 + 1, hc};
            int f;
            close_corner(b, 2 * p2 + 1, hc, alt, f);
            try {
                MoveResult r = b.finish();
                if (r.diagram.is_knot()) return r;
            } catch (const InvalidDiagram&) {
            }
        }
        throw PatternMismatch("twirl: no planar placement");
    }
    throw PatternMismatch("twirl variant must be 0 or 1");
}

}  // namespace

MoveResult delta_to_y(const Diagram& d, int face) { return delta_to_y_impl(d, face); }
MoveResult y_to_delta(const Diagram& d, int vertex) { return y_to_delta_impl(d, vertex); }

MoveResult apply_move_tracked(const Diagram& d, const Move& m) {
    switch (m.kind) {
        case MoveKind::Flype:
            return m.aux >= 0 ? parallel_flype(d, m.crossing, m.region, m.aux) : flype(d, m.crossing, m.region);
        case MoveKind::CrossingChange: {
            check_crossing(d, m.crossing);
            MoveResult r = identity_result(d);
            r.diagram = crossing_change(d, m.crossing);
            return r;
        }
        case MoveKind::Untongue: return untangle(d, m, false);
        case MoveKind::Untwirl: return untangle(d, m, true);
        case MoveKind::Tongue: return tongue(d, m);
        case MoveKind::Twirl: return twirl(d, m);
        case MoveKind::ReidemeisterII: return reidemeister2(d, m.crossing, m.aux);
        case MoveKind::NugatoryReduction: return nugatory(d, m.crossing);
    }
    throw PatternMismatch("unknown move");
}

Diagram apply_move(const Diagram& d, const Move& m) { return apply_move_tracked(d, m).diagram; }

NugatoryResult reduce_nugatory(const Diagram& d) {
    NugatoryResult out{d, {}};
    for (;;) {
        int found = -1;
        for (int e = 0; e < out.diagram.crossing_count() && found < 0; ++e)
            if (out.diagram.is_nugatory(e)) found = e;
        if (found < 0) break;
        Move m{MoveKind::NugatoryReduction, found, -1, -1};
        out.diagram = apply_move(out.diagram, m);
        out.moves.push_back(m);
    }
    return out;
}

}  // namespace altknot
