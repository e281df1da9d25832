#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "altknot/diagram.hpp"

namespace altknot {

namespace {

struct PDIndex {
    // occurrences of each label as (crossing, slot)
    std::map<int, std::vector<std::pair<int, int>>> where;

    explicit PDIndex(const std::vector<PDCrossing>& pd) {
        for (int x = 0; x < static_cast<int>(pd.size()); ++x)
            for (int i = 0; i < 4; ++i) where[pd[x][i]].push_back({x, i});
        for (auto& [label, occ] : where)
            if (occ.size() != 2)
                throw InvalidDiagram("PD label " + std::to_string(label) + " does not appear exactly twice");
    }

    std::pair<int, int> other(int x, int i, int label) const {
        const auto& occ = where.at(label);
        return occ[0] == std::make_pair(x, i) ? occ[1] : occ[0];
    }
};

// face index of every corner (x, i) = region between slot i and slot i+1
std::vector<int> pd_faces(const std::vector<PDCrossing>& pd, const PDIndex& idx, int& face_count) {
    const int n = static_cast<int>(pd.size());
    std::vector<int> face(4 * n, -1);
    face_count = 0;
    for (int c = 0; c < 4 * n; ++c) {
        if (face[c] >= 0) continue;
        int cur = c;
        while (face[cur] < 0) {
            face[cur] = face_count;
            int x = cur / 4, i = cur % 4;
            int s = (i + 1) % 4;
            auto [y, j] = idx.other(x, s, pd[x][s]);
            cur = 4 * y + j;
        }
        if (cur != c) throw InvalidDiagram("PD face walk is inconsistent");
        ++face_count;
    }
    return face;
}

int pd_component_count(const std::vector<PDCrossing>& pd, const PDIndex& idx) {
    const int n = static_cast<int>(pd.size());
    std::vector<char> used(4 * n, 0);
    int comps = 0;
    for (int c = 0; c < 4 * n; ++c) {
        if (used[c]) continue;
        ++comps;
        int cur = c;
        while (!used[cur]) {
            used[cur] = 1;
            int x = cur / 4, i = cur % 4;
            int o = (i + 2) % 4;
            used[4 * x + o] = 1;
            auto [y, j] = idx.other(x, o, pd[x][o]);
            cur = 4 * y + j;
        }
    }
    return comps;
}

}  // namespace

Diagram from_pd(const std::vector<PDCrossing>& pd) {
    const int n = static_cast<int>(pd.size());
    if (n == 0) return Diagram();
    PDIndex idx(pd);
    int nf = 0;
    std::vector<int> face = pd_faces(pd, idx, nf);
    if (nf != n + 2) throw InvalidDiagram("PD code is not realizable as a planar diagram");
    if (pd_component_count(pd, idx) != 1) throw InvalidDiagram("PD code describes a link, not a knot");

    std::vector<int> colour(nf, -1);
    std::vector<std::vector<int>> adj(nf);
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < 4; ++i) {
            int a = face[4 * x + i], b = face[4 * x + (i + 1) % 4];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    colour[face[0]] = 0;
    std::vector<int> stack{face[0]};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[f]) {
            if (colour[g] < 0) {
                colour[g] = 1 - colour[f];
                stack.push_back(g);
            } else if (colour[g] == colour[f]) {
                throw InvalidDiagram("regions are not two-colourable");
            }
        }
    }
    std::vector<int> vid(nf, -1);
    int nv = 0;
    for (int c = 0; c < 4 * n; ++c)
        if (colour[face[c]] == 0 && vid[face[c]] < 0) vid[face[c]] = nv++;

    std::vector<Edge> edges(n);
    std::vector<int> corner_half(4 * n, -1);
    for (int x = 0; x < n; ++x) {
        int i0 = colour[face[4 * x]] == 0 ? 0 : 1;
        edges[x] = Edge{vid[face[4 * x + i0]], vid[face[4 * x + i0 + 2]], i0 == 1 ? 1 : -1};
        corner_half[4 * x + i0] = 2 * x;
        corner_half[4 * x + i0 + 2] = 2 * x + 1;
    }
    std::vector<int> half_corner(2 * n);
    for (int c = 0; c < 4 * n; ++c)
        if (corner_half[c] >= 0) half_corner[corner_half[c]] = c;
    auto next_half = [&](int h) {
        int c = half_corner[h];
        int x = c / 4, k = c % 4;
        auto [y, j] = idx.other(x, k, pd[x][k]);
        int h2 = corner_half[4 * y + (j + 3) % 4];
        if (h2 < 0) throw InvalidDiagram("PD corner colouring is inconsistent");
        return h2;
    };
    std::vector<std::vector<int>> rotation(nv);
    std::vector<char> placed(2 * n, 0);
    for (int h = 0; h < 2 * n; ++h) {
        if (placed[h]) continue;
        int v = (h & 1) ? edges[h >> 1].head : edges[h >> 1].tail;
        if (!rotation[v].empty()) throw InvalidDiagram("PD rotation is inconsistent");
        int g = h;
        do {
            placed[g] = 1;
            rotation[v].push_back(g);
            g = next_half(g);
        } while (g != h);
    }
    return normalize_colouring(Diagram::from_graph(nv, std::move(edges), std::move(rotation)));
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    static const std::regex num(R"(-?\d+)");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), num); it != std::sregex_iterator(); ++it)
        out.push_back(std::stoi(it->str()));
    return out;
}

namespace {

// only digits, signs, separators and the given words may appear
void check_charset(const std::string& text, const std::vector<std::string>& words, const char* what) {
    std::string t = text;
    for (const auto& w : words)
        for (auto p = t.find(w); p != std::string::npos; p = t.find(w)) t.replace(p, w.size(), " ");
    for (char ch : t)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && !std::isspace(static_cast<unsigned char>(ch)) &&
            std::string("-,;[](){}").find(ch) == std::string::npos)
            throw InvalidDiagram(std::string(what) + ": unexpected character '" + ch + "'");
}

}  // namespace

Diagram from_pd_string(const std::string& text) {
    check_charset(text, {"PD", "X"}, "PD code");
    std::vector<int> v = parse_int_list(text);
    if (v.empty() && text.find_first_of("[(") == std::string::npos) throw InvalidDiagram("PD code is empty");
    if (v.size() % 4 != 0) throw InvalidDiagram("PD code must list four labels per crossing");
    std::vector<PDCrossing> pd;
    for (std::size_t i = 0; i < v.size(); i += 4) pd.push_back({v[i], v[i + 1], v[i + 2], v[i + 3]});
    return from_pd(pd);
}

Diagram from_dt(const std::vector<int>& dt) {
    const int n = static_cast<int>(dt.size());
    if (n == 0) return Diagram();
    std::set<int> evens;
    for (int a : dt) {
        int e = std::abs(a);
        if (e % 2 != 0 || e < 2 || e > 2 * n || !evens.insert(e).second)
            throw InvalidDiagram("DT code must be a permutation of the even numbers 2..2n");
    }
    const int m = 2 * n;
    auto in_arc = [m](int p) { return p == 1 ? m : p - 1; };
    auto out_arc = [](int p) { return p; };
    if (n > 24) throw InvalidDiagram("DT codes above 24 crossings are not supported");
    for (long long bits = 0; bits < (1LL << (n - 1)); ++bits) {
        std::vector<PDCrossing> pd(n);
        for (int i = 0; i < n; ++i) {
            int o = 2 * i + 1, e = std::abs(dt[i]);
            bool flip = i > 0 && ((bits >> (i - 1)) & 1);
            std::array<int, 4> ring = flip ? std::array<int, 4>{in_arc(o), out_arc(e), out_arc(o), in_arc(e)}
                                           : std::array<int, 4>{in_arc(o), in_arc(e), out_arc(o), out_arc(e)};
            bool odd_over = dt[i] > 0;
            int start = 0;
            if (odd_over) start = flip ? 3 : 1;  // position of in_arc(e)
            for (int k = 0; k < 4; ++k) pd[i][k] = ring[(start + k) % 4];
        }
        PDIndex idx(pd);
        int nf = 0;
        try {
            pd_faces(pd, idx, nf);
        } catch (const InvalidDiagram&) {
            continue;
        }
        if (nf == n + 2) return from_pd(pd);
    }
    throw InvalidDiagram("DT code is not realizable");
}

Diagram from_dt_string(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
    if (t == "-" || t == "[]") return Diagram();
    check_charset(text, {}, "DT code");
    std::vector<int> v = parse_int_list(text);
    if (v.empty()) throw InvalidDiagram("DT code is empty");
    return from_dt(v);
}

std::string pd_string(const Diagram& d) {
    std::ostringstream os;
    os << "PD[";
    for (int e = 0; e < d.crossing_count(); ++e) {
        const auto& x = d.pd()[e];
        os << (e ? "," : "") << "X(" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << ")";
    }
    os << "]";
    return os.str();
}

Diagram torus_2q(int q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("torus_2q needs odd q >= 3");
    std::vector<int> dt;
    for (int i = 0; i < q; ++i) dt.push_back(((q + 1 + 2 * i - 2) % (2 * q)) + 2);
    return from_dt(dt);
}

namespace {

// plane graph: cycle on L vertices with the edge 0-1 doubled; one copy has incidence +1
Diagram clasp_graph(int L) {
    std::vector<Edge> edges;
    edges.push_back({0, 1, 1});
    edges.push_back({0, 1, -1});
    for (int i = 1; i < L; ++i) edges.push_back({i, (i + 1) % L, -1});
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<std::vector<int>> rot(L);
        if (L == 2) {
            rot[0] = {0, 2, 5};
            rot[1] = attempt ? std::vector<int>{1, 3, 4} : std::vector<int>{4, 3, 1};
        } else {
            int back = 2 * L + 1;  // edge L runs from L-1 to 0
            rot[0] = {0, 2, back};
            rot[1] = attempt ? std::vector<int>{1, 3, 4} : std::vector<int>{3, 1, 4};
            for (int i = 2; i < L; ++i) rot[i] = {2 * i + 1, 2 * (i + 1)};
        }
        try {
            return Diagram::from_graph(L, edges, rot);
        } catch (const InvalidDiagram&) {
        }
    }
    throw std::logic_error("clasp_graph: no planar rotation");
}

}  // namespace

ClaspInfo is_clasp_Cm(const Diagram& d) {
    if (d.crossing_count() < 3 || !d.is_knot()) return {};
    for (int pass = 0; pass < 2; ++pass) {
        Diagram g = pass == 0 ? d : dual_view(d);
        const int L = g.vertex_count(), n = g.crossing_count();
        if (L < 2 || n != L + 1) continue;
        int plus = g.count_mu(1), minus = g.count_mu(-1);
        int minority = plus == 1 ? 1 : (minus == 1 ? -1 : 0);
        if (minority == 0) continue;
        int f = -1;
        for (int e = 0; e < n; ++e)
            if (g.edge(e).mu == minority) f = e;
        if (g.is_loop(f)) continue;
        // partner bounding a bigon with f
        int p = -1;
        for (int side = 0; side < 2 && p < 0; ++side) {
            const auto& walk = g.face_walk(g.face_of(2 * f + side));
            if (walk.size() == 2) p = Diagram::edge_of(walk[0] == 2 * f + side ? walk[1] : walk[0]);
        }
        if (p < 0) continue;
        // without f the graph must be a single cycle
        std::vector<int> deg(L, 0);
        bool loops = false;
        for (int e = 0; e < n; ++e) {
            if (e == f) continue;
            if (g.is_loop(e)) loops = true;
            deg[g.edge(e).tail]++;
            deg[g.edge(e).head]++;
        }
        if (loops || std::any_of(deg.begin(), deg.end(), [](int x) { return x != 2; })) continue;
        int sign = 0;
        bool uniform = true;
        for (int e = 0; e < n; ++e) {
            if (e == f || e == p) continue;
            int s = d.crossing_sign(e);
            if (sign == 0) sign = s;
            else if (s != sign) uniform = false;
        }
        if (!uniform) continue;
        return {true, sign * (L - 1)};
    }
    return {};
}

Diagram clasp_diagram(int m) {
    if (m == 0) throw std::invalid_argument("clasp_diagram needs m != 0");
    Diagram g = clasp_graph(std::abs(m) + 1);
    ClaspInfo info = is_clasp_Cm(g);
    if (!info.is_clasp) throw std::logic_error("clasp_diagram: construction failed");
    if ((info.m > 0) != (m > 0)) g = mirror(g);
    return g;
}

}  // namespace altknot
