#include "altknot/twirl.hpp"

#include <algorithm>

namespace altknot {

namespace {

int image_of(const MoveResult& r, int old_vertex) {
    for (int v = 0; v < static_cast<int>(r.vertex_origin.size()); ++v)
        for (int o : r.vertex_origin[v])
            if (o == old_vertex) return v;
    return -1;
}

std::optional<TowerLevel> next_level(const TowerLevel& cur) {
    const Diagram changed = crossing_change(cur.diagram, cur.crossing);
    MoveResult r;
    try {
        r = apply_move_tracked(changed, Move{MoveKind::Twirl, cur.crossing, cur.chain.back(), 1});
    } catch (const PatternMismatch&) {
        return std::nullopt;
    }
    TowerLevel nx;
    nx.w = image_of(r, cur.w);
    for (int v : cur.chain) nx.chain.push_back(image_of(r, v));
    int fresh = -1;
    nx.previous.assign(r.diagram.vertex_count(), -1);
    for (int v = 0; v < r.diagram.vertex_count(); ++v) {
        if (r.vertex_origin[v].size() == 1) nx.previous[v] = r.vertex_origin[v][0];
        else if (r.vertex_origin[v].empty()) fresh = v;
        else return std::nullopt;
    }
    if (fresh < 0) return std::nullopt;
    nx.chain.push_back(fresh);
    for (int e = 0; e < r.diagram.crossing_count(); ++e)
        if (r.edge_origin[e] == cur.crossing) nx.crossing = e;
    nx.diagram = crossing_change(r.diagram, nx.crossing);
    const Edge& ed = nx.diagram.edge(nx.crossing);
    bool joins = (ed.tail == fresh && ed.head == nx.w) || (ed.head == fresh && ed.tail == nx.w);
    if (!joins || nx.diagram.count_mu(1) != 0) return std::nullopt;
    return nx;
}

std::vector<TowerLevel> build(const Diagram& d, int c, int w, int n) {
    TowerLevel base;
    base.diagram = d;
    base.crossing = c;
    base.w = w;
    base.chain = {d.edge(c).tail == w ? d.edge(c).head : d.edge(c).tail};
    base.previous.assign(d.vertex_count(), -1);
    std::vector<TowerLevel> out{base};
    for (int i = 1; i <= n; ++i) {
        auto nx = next_level(out.back());
        if (!nx) return {};
        out.push_back(*nx);
    }
    return out;
}

}  // namespace

TwirlTower twirl_tower(const Diagram& input, int c, int n) {
    Diagram d = normalize_colouring(input);
    if (c < 0 || c >= d.crossing_count()) throw std::invalid_argument("no such crossing");
    if (d.count_mu(1) != 0) throw NotAlternating("twirl tower needs an alternating diagram");
    const Edge& ed = d.edge(c);
    if (ed.tail == ed.head) throw std::invalid_argument("crossing is nugatory");
    TwirlTower t;
    for (int w : {ed.head, ed.tail}) {
        auto levels = build(d, c, w, std::max(n, 1));
        if (levels.empty()) continue;
        bool good = signature(levels[1].diagram) == -2;
        if (t.levels.empty() || good) {
            levels.resize(n + 1);
            t.levels = levels;
        }
        if (good) break;
    }
    if (t.levels.empty()) throw std::logic_error("twirl tower could not be built");

    const TowerLevel& top = t.top();
    const int nv = top.diagram.vertex_count();
    std::vector<int> order;
    const int v0 = top.chain.front();
    for (int v = 0; v < nv; ++v)
        if (v != top.w && std::find(top.chain.begin(), top.chain.end(), v) == top.chain.end()) order.push_back(v);
    order.push_back(v0);
    t.original = static_cast<int>(order.size());
    for (std::size_t i = 1; i < top.chain.size(); ++i) order.push_back(top.chain[i]);
    const IntMatrix full = goeritz_full(white_graph(top.diagram, Colour::Unshaded));
    const int m = static_cast<int>(order.size());
    t.goeritz.resize(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t.goeritz(i, j) = full(order[i], order[j]);
    for (int k = -1; k <= n; ++k) {
        int size = t.original + k;
        t.minors.push_back(size <= 0 ? 1 : determinant(t.goeritz.topLeftCorner(size, size)));
    }
    auto dk = [&](int k) { return t.minors[k + 1]; };
    t.recurrence_holds = true;
    for (int k = 1; k < n; ++k)
        if (dk(k) != 5 * dk(k - 1) - 4 * dk(k - 2)) t.recurrence_holds = false;
    if (n >= 1 && dk(n) != 3 * dk(n - 1) - 4 * dk(n - 2)) t.recurrence_holds = false;
    t.signature = signature(top.diagram);
    return t;
}

std::vector<int> surviving_crossings(const TwirlTower& t) {
    const TowerLevel& top = t.top();
    std::vector<int> out;
    for (int e = 0; e < top.diagram.crossing_count(); ++e) {
        if (e == top.crossing) continue;
        GoeritzForm f = goeritz_matrix(crossing_change(top.diagram, e), Colour::Unshaded, top.w);
        if (is_positive_definite(f) && determinant(f) == 1) out.push_back(e);
    }
    return out;
}

Promotion promote_unknotting_crossing(const Diagram& input, int c, long long node_budget) {
    Promotion p;
    Diagram d = normalize_colouring(input);
    const int sig = signature(d);
    const int sign = d.crossing_sign(c);
    if ((sig == 0 && sign < 0) || (sig == -2 && sign > 0)) {
        p.via_mirror = false;
    } else if ((sig == 0 && sign > 0) || (sig == 2 && sign < 0)) {
        p.via_mirror = true;
        d = mirror(d);
    } else {
        p.error = "crossing sign does not fit the signature";
        return p;
    }
    const int r = d.vertex_count() - 1;
    TwirlTower t;
    for (int n = 1;; ++n) {
        if (n > r + 10) {
            p.error = "tower did not isolate the crossing";
            return p;
        }
        t = twirl_tower(d, c, n);
        if (surviving_crossings(t).empty()) {
            p.n = n;
            break;
        }
    }
    const TowerLevel& top = t.top();
    SearchOptions so;
    so.node_budget = node_budget;
    auto found = find_embeddings(white_graph(top.diagram, Colour::Unshaded), so);
    std::optional<Embedding> cur;
    for (const Embedding& e : found.embeddings) {
        auto [v, w] = marker_vertices(e);
        std::vector<int> ends{top.diagram.edge(top.crossing).tail, top.diagram.edge(top.crossing).head};
        if (v >= 0 && std::find(ends.begin(), ends.end(), v) != ends.end() &&
            std::find(ends.begin(), ends.end(), w) != ends.end()) {
            cur = e;
            break;
        }
    }
    if (!cur) {
        p.error = found.budget_exhausted ? "embedding search budget exhausted" : "no embedding marks the tower crossing";
        return p;
    }
    for (int i = p.n; i >= 1; --i) {
        const TowerLevel& lv = t.levels[i];
        const int vi = lv.chain.back(), vprev = lv.chain[lv.chain.size() - 2];
        Embedding e = *cur;
        if (e.labels[vi](coord(0)) < 0) e = negated(e);
        // v_i = e_{-1} + e_0 - e_j with sigma_j = 1; move j to the first coordinate
        int j = -1;
        for (int a = 1; a <= e.rank(); ++a)
            if (e.labels[vi](coord(a)) != 0) j = a;
        if (j < 0 || e.sigma[j - 1] != 1 || e.labels[vi].squaredNorm() != 3) {
            p.error = "tower region has an unexpected label";
            return p;
        }
        for (auto& l : e.labels) std::swap(l(coord(1)), l(coord(j)));
        const TowerLevel& below = t.levels[i - 1];
        std::vector<IntVector> summed(below.diagram.vertex_count(), IntVector::Zero(e.rank() + 2));
        for (int v = 0; v < lv.diagram.vertex_count(); ++v) {
            int to = v == vi ? lv.previous[vprev] : lv.previous[v];
            summed[to] += e.labels[v];
        }
        auto projected = project_labels(summed, {1}, e.rank());
        if (!projected || !verify_embedding(*projected, white_graph(below.diagram, Colour::Unshaded))) {
            p.error = "projected labels are not an embedding at level " + std::to_string(i - 1);
            return p;
        }
        auto [v, w] = marker_vertices(*projected);
        const Edge& ce = below.diagram.edge(below.crossing);
        if (!((ce.tail == v && ce.head == w) || (ce.tail == w && ce.head == v))) {
            p.error = "crossing is not marked at level " + std::to_string(i - 1);
            return p;
        }
        cur = projected;
    }
    p.embedding = canonical(*cur);
    p.ok = true;
    return p;
}

}  // namespace altknot
