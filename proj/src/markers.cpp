#include "altknot/markers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "altknot/graph_lattice.hpp"

namespace altknot {

std::string to_string(Situation s) {
    switch (s) {
        case Situation::MultiMarked: return "MultiMarked";
        case Situation::A1: return "A1";
        case Situation::A2: return "A2";
        case Situation::B: return "B";
        case Situation::Unnormalized: return "Unnormalized";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "true";
        case Verdict::No: return "false";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

using Labels = std::vector<IntVector>;

WhiteGraph graph_of(const Diagram& d) { return white_graph(d, Colour::Unshaded); }

// v_1 = -e_1 + e_0 + e_{-1}, v_a = -e_a + e_{a-1}
IntVector standard_vector(int r, int a) {
    IntVector v = IntVector::Zero(r + 2);
    v(coord(a)) = -1;
    v(coord(a - 1)) += 1;
    if (a == 1) v(coord(-1)) += 1;
    return v;
}

int find_label(const Labels& l, const IntVector& t) {
    for (int v = 0; v < static_cast<int>(l.size()); ++v)
        if (l[v] == t) return v;
    return -1;
}

std::vector<int> edges_between(const Diagram& d, int a, int b) {
    std::vector<int> out;
    for (int e = 0; e < d.crossing_count(); ++e) {
        const Edge& ed = d.edge(e);
        if ((ed.tail == a && ed.head == b) || (ed.tail == b && ed.head == a)) out.push_back(e);
    }
    return out;
}

void refresh(MarkedState& s) {
    auto [v, w] = marker_vertices(s.embedding);
    if (v < 0) throw MarkerError("marker vertices are not unique");
    s.marker_v = v;
    s.marker_w = w;
    s.marked_crossings = edges_between(s.diagram, v, w);
}

int max_index_one(const Sigma& s) {
    int k = 0;
    for (int i = 1; i <= static_cast<int>(s.size()); ++i)
        if (s[i - 1] == 1) k = i;
    return k;
}

bool in_standard_form(const MarkedState& s, int upto) {
    const int r = s.embedding.rank();
    for (int a = 1; a <= upto; ++a)
        if (find_label(s.embedding.labels, standard_vector(r, a)) < 0) return false;
    return true;
}

bool tracked_marked(const MarkedState& s) {
    return std::find(s.marked_crossings.begin(), s.marked_crossings.end(), s.crossing) != s.marked_crossings.end();
}

// flype splitting vertex x as t + (x - t), carrying the labels along
bool flype_to_vertex(MarkedState& s, int x, const IntVector& t, std::vector<Move>& moves) {
    const WhiteGraph g = graph_of(s.diagram);
    const int n = g.vertex_count;
    const Labels& l = s.embedding.labels;
    const int dim = static_cast<int>(t.size());
    IntMatrix a(dim, n - 1);
    for (int v = 0; v + 1 < n; ++v) a.col(v) = l[v];
    auto sol = solve_integer(a, t);
    if (!sol) return false;
    std::vector<Integer> c(n, 0);
    for (int v = 0; v + 1 < n; ++v) c[v] = (*sol)(v);
    FlypeData fd;
    try {
        fd = split_vertex(x, LatticeElement(c), g);
    } catch (const HypothesisViolation&) {
        return false;
    }
    Move m{MoveKind::Flype, fd.cut_edge, x, -1};
    MoveResult res;
    try {
        res = apply_move_tracked(s.diagram, m);
    } catch (const PatternMismatch&) {
        return false;
    }
    const int nn = res.diagram.vertex_count();
    Labels nl(nn, IntVector::Zero(dim));
    std::vector<int> halves;
    for (int v = 0; v < nn; ++v) {
        const auto& o = res.vertex_origin[v];
        if (o.size() == 1 && o[0] == x) {
            halves.push_back(v);
            continue;
        }
        for (int u : o) nl[v] += l[u];
    }
    if (halves.size() != 2) return false;
    const WhiteGraph ng = graph_of(res.diagram);
    for (int swap = 0; swap < 2; ++swap) {
        nl[halves[swap]] = t;
        nl[halves[1 - swap]] = l[x] - t;
        Embedding e{s.embedding.sigma, nl};
        if (!verify_embedding(e, ng)) continue;
        MarkedState next = s;
        next.diagram = res.diagram;
        next.embedding = e;
        refresh(next);
        if (!tracked_marked(next)) return false;
        s = next;
        moves.push_back(m);
        return true;
    }
    return false;
}

// subsets of cand containing 1 with sigma sum equal to target; the greedy choice first
std::vector<std::vector<int>> representations(const Sigma& s, int index, bool allow_zero) {
    std::vector<std::vector<int>> out;
    auto sig = [&](int i) { return i == 0 ? Integer(1) : s[i - 1]; };
    if (auto g = represent(s, index, !allow_zero)) {
        if (allow_zero || std::find(g->begin(), g->end(), 0) == g->end()) out.push_back(*g);
    }
    std::vector<int> cand;
    if (allow_zero) cand.push_back(0);
    for (int i = 2; i < index; ++i) cand.push_back(i);
    if (cand.size() > 22) return out;
    for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
        Integer sum = sig(1);
        std::vector<int> pick{1};
        for (std::size_t j = 0; j < cand.size(); ++j)
            if ((mask >> j) & 1) {
                sum += sig(cand[j]);
                pick.push_back(cand[j]);
            }
        if (sum != sig(index)) continue;
        std::sort(pick.begin(), pick.end());
        if (std::find(out.begin(), out.end(), pick) == out.end()) out.push_back(pick);
    }
    return out;
}

int max_support(const IntVector& v) {
    for (int i = static_cast<int>(v.size()) - 2; i >= -1; --i)
        if (v(coord(i)) != 0) return i;
    return -2;
}

bool is_tight_endpoint(const IntVector& w) {
    int g = max_support(w);
    if (g < 1 || w(coord(g)) != 1) return false;
    for (int i = -1; i < g; ++i)
        if (w(coord(i)) != -1) return false;
    return true;
}

bool is_slack_endpoint(const IntVector& u) {
    int h = max_support(u);
    if (h < 2 || u(coord(h)) != -1) return false;
    if (u(coord(-1)) != 0 || u(coord(0)) != 0) return false;
    for (int i = 1; i < h; ++i)
        if (u(coord(i)) != 1) return false;
    return true;
}

std::vector<int> adjacent_vertices(const MarkedState& s, std::map<int, int>& multiplicity) {
    multiplicity.clear();
    const int v1 = s.marker_v;
    for (int h : s.diagram.rotation(v1)) {
        int u = s.diagram.vertex_of(Diagram::twin(h));
        if (u != s.marker_w) multiplicity[u]++;
    }
    std::vector<int> out;
    for (auto [u, m] : multiplicity) out.push_back(u);
    return out;
}

// one descent flype; the vertex x is replaced by target with a smaller top index
bool descend(MarkedState& s, int x, bool tight, std::vector<Move>& moves) {
    const Sigma& sig = s.embedding.sigma;
    const int r = static_cast<int>(sig.size());
    const IntVector lx = s.embedding.labels[x];
    int g = -1;
    for (int i = 1; i <= r; ++i)
        if (tight ? lx(coord(i)) >= 0 : lx(coord(i)) <= 0) {
            g = i;
            break;
        }
    if (g < 2) return false;
    for (const auto& a : representations(sig, g, tight)) {
        IntVector t = IntVector::Zero(r + 2);
        t(coord(g)) = tight ? 1 : -1;
        for (int i : a) {
            t(coord(i)) += tight ? -1 : 1;
            if (i == 0) t(coord(-1)) += tight ? -1 : 1;
        }
        if (!in_lattice(sig, t)) continue;
        if ((lx - t).dot(t) != -1) continue;
        MarkedState trial = s;
        std::vector<Move> mv;
        if (!flype_to_vertex(trial, x, t, mv)) continue;
        if (!in_standard_form(trial, trial.k)) continue;
        if (find_label(trial.embedding.labels, t) < 0) continue;
        s = trial;
        moves.insert(moves.end(), mv.begin(), mv.end());
        return true;
    }
    return false;
}

// coordinates kept after dropping, new sigma solved from orthogonality
}  // namespace

std::optional<Embedding> project_labels(const Labels& summed, const std::vector<int>& drop, int old_r) {
    std::vector<int> keep;
    for (int i = 1; i <= old_r; ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);
    const int nr = static_cast<int>(keep.size());
    const int n = static_cast<int>(summed.size());
    if (n != nr + 1) return std::nullopt;
    Labels l(n, IntVector::Zero(nr + 2));
    for (int v = 0; v < n; ++v) {
        l[v](coord(-1)) = summed[v](coord(-1));
        l[v](coord(0)) = summed[v](coord(0));
        for (int j = 0; j < nr; ++j) l[v](coord(j + 1)) = summed[v](coord(keep[j]));
    }
    if (nr == 0) return std::nullopt;
    IntMatrix a(n, nr);
    IntVector b(n);
    for (int v = 0; v < n; ++v) {
        for (int j = 0; j < nr; ++j) a(v, j) = l[v](coord(j + 1));
        b(v) = -l[v](coord(0));
    }
    auto sol = solve_integer(a, b);
    if (!sol) return std::nullopt;
    std::vector<std::pair<Integer, int>> cols;
    for (int j = 0; j < nr; ++j) {
        Integer sj = (*sol)(j);
        if (sj < 0) {
            for (auto& x : l) x(coord(j + 1)) = -x(coord(j + 1));
            sj = -sj;
        }
        cols.push_back({sj, j});
    }
    std::stable_sort(cols.begin(), cols.end(), [](auto& p, auto& q) { return p.first < q.first; });
    Embedding e;
    Labels out(n, IntVector::Zero(nr + 2));
    for (int v = 0; v < n; ++v) {
        out[v](coord(-1)) = l[v](coord(-1));
        out[v](coord(0)) = l[v](coord(0));
        for (int j = 0; j < nr; ++j) out[v](coord(j + 1)) = l[v](coord(cols[j].second + 1));
    }
    for (auto& [sj, j] : cols) e.sigma.push_back(sj);
    e.labels = out;
    return e;
}

MarkedState locate_markers(const Diagram& d, const Embedding& e, int crossing) {
    MarkedState s;
    s.diagram = d;
    s.embedding = e;
    if (static_cast<int>(e.labels.size()) != d.vertex_count()) throw MarkerError("embedding does not match diagram");
    refresh(s);
    if (crossing >= 0) {
        s.crossing = crossing;
        if (!tracked_marked(s)) throw MarkerError("crossing is not marked by this embedding");
    } else if (!s.marked_crossings.empty()) {
        s.crossing = s.marked_crossings.front();
    }
    s.k = max_index_one(e.sigma);
    return s;
}

std::vector<Move> normalize_marker(MarkedState& s) {
    std::vector<Move> moves;
    refresh(s);
    const int r = s.embedding.rank();
    const IntVector v1 = standard_vector(r, 1);
    if (s.embedding.labels[s.marker_v](coord(1)) > 0) {
        s.embedding = negated(s.embedding);
        refresh(s);
    }
    const IntVector& lv = s.embedding.labels[s.marker_v];
    if (lv == v1) return moves;
    if (lv(coord(1)) != 0) throw MarkerError("marker vertex has an unexpected e_1 coefficient");
    if (!flype_to_vertex(s, s.marker_v, v1, moves)) throw MarkerError("no flype normalises the marker vertex");
    if (s.embedding.labels[s.marker_v] != v1) throw MarkerError("normalising flype lost the marker");
    return moves;
}

std::vector<Move> to_standard_form(MarkedState& s) {
    std::vector<Move> moves;
    const int r = s.embedding.rank();
    s.k = max_index_one(s.embedding.sigma);
    for (int m = 2; m <= s.k; ++m) {
        const IntVector t = standard_vector(r, m);
        if (find_label(s.embedding.labels, t) >= 0) continue;
        const IntVector prev = standard_vector(r, m - 1);
        std::vector<int> cands, rest;
        for (int x = 0; x < s.diagram.vertex_count(); ++x) {
            const IntVector& lx = s.embedding.labels[x];
            if ((lx - t).dot(t) != -1) continue;
            (lx.dot(t) == 1 && lx.dot(prev) == -1 ? cands : rest).push_back(x);
        }
        cands.insert(cands.end(), rest.begin(), rest.end());
        bool done = false;
        for (int x : cands) {
            MarkedState trial = s;
            std::vector<Move> mv;
            if (!flype_to_vertex(trial, x, t, mv) || !in_standard_form(trial, m)) continue;
            s = trial;
            moves.insert(moves.end(), mv.begin(), mv.end());
            done = true;
            break;
        }
        if (!done) throw MarkerError("no flype reaches standard form");
    }
    s.standard_form = true;
    return moves;
}

std::vector<Move> classify_and_align(MarkedState& s) {
    std::vector<Move> moves;
    refresh(s);
    const Sigma& sig = s.embedding.sigma;
    const int r = static_cast<int>(sig.size());
    if (s.marked_crossings.size() >= 2) {
        s.situation = Situation::MultiMarked;
        return moves;
    }
    const bool tight = is_tight(sig).first;
    std::map<int, int> mult;
    for (int iter = 0; iter < 4 * (r + 2); ++iter) {
        refresh(s);
        auto adj = adjacent_vertices(s, mult);
        if (tight) {
            if (is_tight_endpoint(s.embedding.labels[s.marker_w])) break;
            if (!descend(s, s.marker_w, true, moves)) throw MarkerError("tight descent failed");
        } else {
            int v2 = find_label(s.embedding.labels, standard_vector(r, 2));
            if (adj.size() != 2 || v2 < 0) throw MarkerError("slack case needs two adjacent vertices");
            int u1 = adj[0] == v2 ? adj[1] : adj[0];
            if (is_slack_endpoint(s.embedding.labels[u1])) break;
            if (!descend(s, u1, false, moves)) throw MarkerError("slack descent failed");
        }
        if (iter + 1 == 4 * (r + 2)) throw MarkerError("descent did not terminate");
    }
    refresh(s);
    auto adj = adjacent_vertices(s, mult);
    const Labels& l = s.embedding.labels;
    const IntVector& w = l[s.marker_w];
    if (adj.size() == 1 && mult[adj[0]] == 2) {
        s.situation = Situation::B;
        s.u1 = adj[0];
        s.u2 = -1;
        return moves;
    }
    if (adj.size() != 2) throw MarkerError("marker vertex has unexpected neighbours");
    if (r >= 2 && w(coord(2)) == 0) {
        int v2 = find_label(l, standard_vector(r, 2));
        if (v2 < 0) throw MarkerError("situation A2 without v_2");
        s.situation = Situation::A2;
        s.u2 = v2;
        s.u1 = adj[0] == v2 ? adj[1] : adj[0];
        return moves;
    }
    s.situation = Situation::A1;
    std::sort(adj.begin(), adj.end());
    s.u1 = -1;
    for (int u : adj)
        if (l[u].dot(w) < 0) {
            s.u1 = u;
            break;
        }
    if (s.u1 < 0) throw MarkerError("no adjacent vertex meets the other marker");
    s.u2 = adj[0] == s.u1 ? adj[1] : adj[0];
    return moves;
}

namespace {

struct Site {
    Move move;
    MoveResult result;
};

std::optional<Site> find_site(const MarkedState& s, const Diagram& parent) {
    const Diagram changed = crossing_change(parent, s.crossing);
    MoveKind kind = s.situation == Situation::A1 ? MoveKind::Untongue : MoveKind::Untwirl;
    int other = s.situation == Situation::A2 ? s.u2 : s.u1;
    for (int e : edges_between(parent, s.marker_v, other)) {
        Move m{kind, s.crossing, s.marker_v, e};
        try {
            return Site{m, apply_move_tracked(changed, m)};
        } catch (const PatternMismatch&) {
        }
    }
    return std::nullopt;
}

std::vector<std::pair<Move, Diagram>> parallel_flypes(const Diagram& d) {
    std::vector<std::pair<Move, Diagram>> out;
    for (int e = 0; e < d.crossing_count(); ++e)
        for (int a : {d.edge(e).tail, d.edge(e).head})
            for (int x = 0; x < d.crossing_count(); ++x) {
                if (x == e) continue;
                Move m{MoveKind::Flype, e, a, x};
                try {
                    Diagram r = apply_move(d, m);
                    if (!(r == d)) out.push_back({m, r});
                } catch (const PatternMismatch&) {
                }
            }
    return out;
}

}  // namespace

std::vector<Move> induction_step(MarkedState& s) {
    if (s.situation != Situation::A1 && s.situation != Situation::A2 && s.situation != Situation::B)
        throw MarkerError("induction step needs a classified single marked crossing");
    std::vector<Move> prefix;
    auto res = find_site(s, s.diagram);
    // the corner triangle may sit behind a tangle; parallel flypes keep the white graph and labels
    if (!res) {
        for (auto& [m1, d1] : parallel_flypes(s.diagram)) {
            if ((res = find_site(s, d1))) {
                prefix = {m1};
                s.diagram = d1;
                break;
            }
        }
    }
    if (!res) {
        for (auto& [m1, d1] : parallel_flypes(s.diagram)) {
            for (auto& [m2, d2] : parallel_flypes(d1))
                if ((res = find_site(s, d2))) {
                    prefix = {m1, m2};
                    s.diagram = d2;
                    break;
                }
            if (res) break;
        }
    }
    if (!res) throw MarkerError("local pattern at the marked crossing not found (" + to_string(s.situation) + ")");
    const Move used = res->move;
    refresh(s);
    const Diagram& small = res->result.diagram;
    int ct = -1;
    for (int e = 0; e < small.crossing_count(); ++e)
        if (small.edge(e).mu == 1) {
            if (ct >= 0) throw MarkerError("more than one dealternating crossing after the move");
            ct = e;
        }
    if (ct < 0) throw MarkerError("move left an alternating diagram");
    Diagram parent = crossing_change(small, ct);
    if (!parent.is_reduced()) throw MarkerError("smaller diagram is not reduced");
    const int r = s.embedding.rank();
    Labels summed(parent.vertex_count(), IntVector::Zero(r + 2));
    for (int v = 0; v < parent.vertex_count(); ++v)
        for (int o : res->result.vertex_origin[v]) summed[v] += s.embedding.labels[o];
    std::vector<int> drop = s.situation == Situation::A2 ? std::vector<int>{1, 2} : std::vector<int>{1};
    MarkedState next;
    next.diagram = parent;
    next.crossing = ct;
    bool ok = false;
    if (auto e = project_labels(summed, drop, r)) {
        next.embedding = *e;
        if (verify_embedding(*e, graph_of(parent))) {
            refresh(next);
            ok = tracked_marked(next);
        }
    }
    if (!ok) {
        // fall back to a fresh search on the smaller diagram
        auto found = find_embeddings(graph_of(parent));
        for (const auto& e : found.embeddings) {
            next.embedding = e;
            refresh(next);
            if (tracked_marked(next)) {
                ok = true;
                break;
            }
        }
        if (!ok) throw MarkerError("smaller diagram has no embedding marking the new crossing");
        next.re_searched = true;
    }
    s = next;
    prefix.push_back(used);
    return prefix;
}

namespace {

bool replay_moves(Diagram& d, const std::vector<Move>& moves, std::string& err) {
    for (const Move& m : moves) {
        try {
            d = apply_move(d, m);
        } catch (const std::exception& e) {
            err = to_string(m.kind) + ": " + e.what();
            return false;
        }
    }
    return true;
}

}  // namespace

std::optional<std::vector<Move>> reduce_to_clasp(MarkedState s, int& terminal_m, ReductionStats* stats,
                                                std::string* failure) {
    std::vector<Move> moves;
    const int limit = s.embedding.rank() + 2;
    try {
        for (int level = 0; level <= limit; ++level) {
            auto a = normalize_marker(s);
            auto b = to_standard_form(s);
            auto c = classify_and_align(s);
            for (auto* part : {&a, &b, &c}) moves.insert(moves.end(), part->begin(), part->end());
            if (s.situation == Situation::MultiMarked) {
                ClaspInfo ci = is_clasp_Cm(crossing_change(s.diagram, s.crossing));
                if (!ci.is_clasp) throw MarkerError("multi-marked diagram does not change to a clasp");
                terminal_m = ci.m;
                return moves;
            }
            auto d = induction_step(s);
            moves.insert(moves.end(), d.begin(), d.end());
            if (stats) {
                ++stats->steps;
                if (s.re_searched) ++stats->re_searched;
                else ++stats->transported;
            }
        }
        throw MarkerError("induction did not terminate");
    } catch (const std::exception& e) {
        if (failure) *failure = e.what();
        return std::nullopt;
    }
}

Diagram replay_start(const Diagram& input, bool from_mirror) {
    return from_mirror ? mirror(input) : normalize_colouring(input);
}

ReplayResult replay(const Diagram& input, const Certificate& c) {
    ReplayResult out;
    Diagram d = replay_start(input, c.from_mirror);
    if (!replay_moves(d, c.moves, out.error)) return out;
    ClaspInfo ci = is_clasp_Cm(d);
    if (!ci.is_clasp) {
        out.error = "final diagram is not a clasp diagram";
        return out;
    }
    out.m = ci.m;
    out.ok = ci.m == c.terminal_m;
    if (!out.ok) out.error = "terminal clasp parameter differs";
    return out;
}

UnknottingReport decide_unknotting(const Diagram& input, const DecideOptions& opts) {
    UnknottingReport rep;
    if (!input.is_knot()) throw NotAlternating("input is not a knot");
    Diagram d = normalize_colouring(input);
    if (d.crossing_count() == 0) {
        rep.determinant = 1;
        return rep;
    }
    if (d.count_mu(1) != 0) throw NotAlternating("diagram is not alternating");
    if (!d.is_reduced()) throw NotAlternating("diagram is not reduced");
    rep.determinant = knot_determinant(d);
    rep.signature = signature(d);
    SearchOptions so;
    so.node_budget = opts.node_budget;
    so.limit = opts.all_embeddings ? 0 : 1;
    std::set<std::pair<int, bool>> seen;
    for (bool side_mirror : {false, true}) {
        Diagram side = side_mirror ? mirror(d) : d;
        int sig = side_mirror ? -rep.signature : rep.signature;
        if (sig != 0 && sig != -2) continue;
        auto search = find_embeddings(graph_of(side), so);
        rep.nodes += search.nodes;
        rep.budget_exhausted = rep.budget_exhausted || search.budget_exhausted;
        (side_mirror ? rep.mirror_embeddings : rep.embeddings) = search.embeddings;
        for (const Embedding& e : search.embeddings) {
            MarkedState base = locate_markers(side, e);
            for (int c : base.marked_crossings) {
                if (!seen.insert({c, side_mirror}).second) continue;
                UnknottingCrossing uc;
                uc.crossing = c;
                uc.via_mirror = side_mirror;
                uc.sign = d.crossing_sign(c);
                int side_sign = side_mirror ? -uc.sign : uc.sign;
                uc.sign_expected = (sig == 0 && side_sign < 0) || (sig == -2 && side_sign > 0);
                std::string why;
                int m = 0;
                auto moves = reduce_to_clasp(locate_markers(side, e, c), m, &rep.stats, &why);
                if (moves) {
                    uc.certificate.from_mirror = side_mirror;
                    uc.certificate.moves.push_back({MoveKind::CrossingChange, c, -1, -1});
                    uc.certificate.moves.insert(uc.certificate.moves.end(), moves->begin(), moves->end());
                    uc.certificate.terminal_m = m;
                    ReplayResult rr = replay(input, uc.certificate);
                    if (!rr.ok) rep.failures.push_back("crossing " + std::to_string(c) + ": replay " + rr.error);
                } else {
                    rep.failures.push_back("crossing " + std::to_string(c) + ": " + why);
                }
                rep.crossings.push_back(uc);
            }
        }
    }
    std::sort(rep.crossings.begin(), rep.crossings.end(), [](const auto& a, const auto& b) {
        return a.crossing != b.crossing ? a.crossing < b.crossing : a.via_mirror < b.via_mirror;
    });
    if (!rep.crossings.empty()) rep.verdict = Verdict::Yes;
    else rep.verdict = rep.budget_exhausted ? Verdict::Inconclusive : Verdict::No;
    return rep;
}

std::optional<Certificate> certify_almost_alternating_unknot(const Diagram& input, const DecideOptions& opts) {
    if (!input.is_knot()) throw NotAlternating("input is not a knot");
    for (bool side_mirror : {false, true}) {
        Diagram side = replay_start(input, side_mirror);
        if (ClaspInfo ci = is_clasp_Cm(side); ci.is_clasp) return Certificate{side_mirror, {}, ci.m};
        if (side.count_mu(1) != 1) {
            if (!side_mirror) throw NotAlternating("diagram is not almost-alternating");
            continue;
        }
        int c = -1;
        for (int e = 0; e < side.crossing_count(); ++e)
            if (side.edge(e).mu == 1) c = e;
        // one inverse move straight to a clasp diagram beats the general reduction
        for (MoveKind k : {MoveKind::Untongue, MoveKind::Untwirl})
            for (int v = 0; v < side.vertex_count(); ++v)
                for (int a = 0; a < side.crossing_count(); ++a) {
                    Move mv{k, c, v, a};
                    try {
                        ClaspInfo ci = is_clasp_Cm(apply_move(side, mv));
                        if (!ci.is_clasp) continue;
                        Certificate cert{side_mirror, {mv}, ci.m};
                        if (replay(input, cert).ok) return cert;
                    } catch (const std::invalid_argument&) {
                    }
                }
        Diagram parent = crossing_change(side, c);
        if (!parent.is_reduced()) continue;
        SearchOptions so;
        so.node_budget = opts.node_budget;
        auto search = find_embeddings(graph_of(parent), so);
        for (const Embedding& e : search.embeddings) {
            MarkedState st = locate_markers(parent, e);
            if (std::find(st.marked_crossings.begin(), st.marked_crossings.end(), c) == st.marked_crossings.end())
                continue;
            int m = 0;
            auto moves = reduce_to_clasp(locate_markers(parent, e, c), m);
            if (!moves) continue;
            Certificate cert{side_mirror, *moves, m};
            if (replay(input, cert).ok) return cert;
        }
    }
    return std::nullopt;
}

}  // namespace altknot
