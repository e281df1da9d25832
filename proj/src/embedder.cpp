#include "altknot/embedder.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace altknot {

bool Embedding::operator==(const Embedding& o) const {
    if (sigma != o.sigma || labels.size() != o.labels.size()) return false;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != o.labels[i]) return false;
    return true;
}

bool Embedding::operator<(const Embedding& o) const {
    if (sigma != o.sigma) return sigma < o.sigma;
    for (std::size_t i = 0; i < labels.size() && i < o.labels.size(); ++i) {
        const auto &a = labels[i], &b = o.labels[i];
        auto r = std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
        if (r) return true;
        if (a != b) return false;
    }
    return labels.size() < o.labels.size();
}

Embedding negated(const Embedding& e) {
    Embedding n = e;
    for (auto& l : n.labels) l = -l;
    return n;
}

namespace {

Embedding sort_blocks(const Embedding& e) {
    const int r = e.rank();
    const int n = static_cast<int>(e.labels.size());
    Embedding out = e;
    auto column = [&](const Embedding& x, int i) {
        std::vector<Integer> c(n);
        for (int v = 0; v < n; ++v) c[v] = x.labels[v](coord(i));
        return c;
    };
    int i = 1;
    while (i <= r) {
        int j = i;
        while (j + 1 <= r && e.sigma[j] == e.sigma[i - 1]) ++j;
        std::vector<std::vector<Integer>> cols;
        for (int k = i; k <= j; ++k) cols.push_back(column(e, k));
        std::sort(cols.begin(), cols.end(), std::greater<>());
        for (int k = i; k <= j; ++k)
            for (int v = 0; v < n; ++v) out.labels[v](coord(k)) = cols[k - i][v];
        i = j + 1;
    }
    return out;
}

}  // namespace

Embedding canonical(const Embedding& e) {
    Embedding a = sort_blocks(e), b = sort_blocks(negated(e));
    return b < a ? b : a;
}

std::vector<Sigma> enumerate_sigma_candidates(Integer det, int r) {
    std::vector<Sigma> out;
    if (det <= 0 || det % 2 == 0 || r < 1) return out;
    const Integer target = (det + 1) / 2 - 1;  // sum of sigma_i^2
    Sigma cur;
    auto rec = [&](auto&& self, Integer prefix, Integer left) -> void {
        const int pos = static_cast<int>(cur.size());
        if (pos == r) {
            if (left == 0) out.push_back(cur);
            return;
        }
        const int remaining = r - pos;
        Integer lo = pos == 0 ? 1 : cur.back();
        Integer hi = pos == 0 ? 1 : prefix + 1;
        for (Integer x = lo; x <= hi; ++x) {
            // the rest are at least x each
            if (x * x * remaining > left) break;
            cur.push_back(x);
            self(self, prefix + x, left - x * x);
            cur.pop_back();
        }
    };
    rec(rec, 1 - 1, target);
    return out;
}

namespace {

struct Search {
    const IntMatrix& q;   // full Gram
    const Sigma& sigma;
    int n, r, dim;
    std::vector<int> order;   // vertices in labelling order; last is the discarded one
    std::vector<IntVector> labels;
    std::vector<char> assigned;
    long long nodes = 0, budget;
    bool aborted = false;
    std::size_t limit;
    std::set<Embedding> found;
    // coordinates ordered e_r .. e_1; e_{-1}=e_0 handled as a pair
    std::vector<Integer> tail_sigma_sq;   // sum sigma_i^2 for i <= index
    std::vector<char> block_link;         // block_link[i]: sigma_i == sigma_{i+1}
    std::vector<char> strict;             // columns i > i+1 already decided on earlier rows

    Search(const IntMatrix& q_, const Sigma& s, long long b, std::size_t lim)
        : q(q_), sigma(s), n(static_cast<int>(q_.rows())), r(static_cast<int>(s.size())), dim(r + 2), budget(b), limit(lim) {
        labels.assign(n, IntVector::Zero(dim));
        assigned.assign(n, 0);
        tail_sigma_sq.assign(r + 1, 0);
        for (int i = 1; i <= r; ++i) tail_sigma_sq[i] = tail_sigma_sq[i - 1] + s[i - 1] * s[i - 1];
        block_link.assign(r + 2, 0);
        for (int i = 1; i < r; ++i) block_link[i] = s[i - 1] == s[i];
        strict.assign(r + 2, 0);
    }

    // state for the vertex currently being labelled
    int cur = -1;
    std::vector<int> prev;       // already labelled neighbours-or-not; all assigned vertices
    std::vector<Integer> target; // required dot with prev
    std::vector<Integer> partial;
    std::vector<std::vector<Integer>> rest_sq;  // rest_sq[j][i]: sum over coords 1..i of prev_j^2 plus pair part
    IntVector x;

    bool label_vertex(int depth) {
        if (aborted) return false;
        if (depth == static_cast<int>(order.size()) - 1) {
            // discarded vertex closes the sum
            IntVector s = IntVector::Zero(dim);
            for (int k = 0; k < depth; ++k) s += labels[order[k]];
            labels[order[depth]] = -s;
            Embedding e{sigma, labels};
            found.insert(canonical(e));
            return limit != 0 && found.size() >= limit;
        }
        cur = order[depth];
        prev.assign(order.begin(), order.begin() + depth);
        target.clear();
        for (int p : prev) target.push_back(q(cur, p));
        partial.assign(prev.size(), 0);
        rest_sq.assign(prev.size(), std::vector<Integer>(r + 1, 0));
        for (std::size_t j = 0; j < prev.size(); ++j)
            for (int i = 1; i <= r; ++i) {
                Integer y = labels[prev[j]](coord(i));
                rest_sq[j][i] = rest_sq[j][i - 1] + y * y;
            }
        x = IntVector::Zero(dim);
        std::vector<char> saved_strict = strict;
        // snapshot since recursion overwrites the per-vertex state
        auto snap_prev = prev;
        auto snap_target = target;
        auto snap_rest = rest_sq;
        bool stop = false;
        auto on_vector = [&]() -> bool {
            labels[cur] = x;
            std::vector<char> before = strict;
            for (int i = 1; i < r; ++i)
                if (block_link[i] && x(coord(i)) > x(coord(i + 1))) strict[i] = 1;
            int keep_cur = cur;
            IntVector keep_x = x;
            auto keep_partial = partial;
            bool s = label_vertex(depth + 1);
            cur = keep_cur;
            x = keep_x;
            prev = snap_prev;
            target = snap_target;
            rest_sq = snap_rest;
            partial = keep_partial;
            strict = before;
            return s;
        };
        stop = coords(r, q(cur, cur), 0, on_vector);
        strict = saved_strict;
        return stop;
    }

    template <typename F>
    bool coords(int i, Integer norm_left, Integer sig_partial, F& on_vector) {
        if (++nodes > budget) {
            aborted = true;
            return true;
        }
        if (i == 0) {
            // x_{-1} = x_0 = t: contributes 2t^2 to the norm, t to sigma, and t*(y_{-1}+y_0) to dots
            for (Integer t = -1; t <= 1; ++t) {
                if (2 * t * t != norm_left) continue;
                if (sig_partial + t != 0) continue;
                if (t != 0 && std::llabs(x(coord(1))) > 1) continue;
                bool ok = true;
                for (std::size_t j = 0; j < prev.size() && ok; ++j) {
                    const IntVector& y = labels[prev[j]];
                    ok = partial[j] + t * (y(coord(-1)) + y(coord(0))) == target[j];
                }
                if (!ok) continue;
                x(coord(-1)) = t;
                x(coord(0)) = t;
                if (on_vector()) return true;
            }
            x(coord(-1)) = 0;
            x(coord(0)) = 0;
            return false;
        }
        // bound on |x_i|
        Integer bound = static_cast<Integer>(std::sqrt(static_cast<double>(norm_left)));
        while ((bound + 1) * (bound + 1) <= norm_left) ++bound;
        if (i == 1) bound = std::min<Integer>(bound, 2);
        for (Integer v = -bound; v <= bound; ++v) {
            // columns inside an equal-sigma block stay lexicographically non-increasing
            if (i < r && block_link[i] && !strict[i] && v < x(coord(i + 1))) continue;
            Integer nl = norm_left - v * v;
            Integer sp = sig_partial + sigma[i - 1] * v;
            // what remains: coords 1..i-1 and the pair (weight 2, sigma 1)
            Integer rem_sig = tail_sigma_sq[i - 1];
            // sigma: |sp| must be reachable; pair contributes t with 2t^2 <= nl
            {
                // Cauchy-Schwarz with the pair counted as a coordinate of weight sqrt2, sigma coefficient 1/sqrt2... use loose form
                double cap = std::sqrt(static_cast<double>(nl) * (static_cast<double>(rem_sig) + 0.5)) + 1e-9;
                if (std::fabs(static_cast<double>(sp)) > cap) continue;
            }
            bool ok = true;
            for (std::size_t j = 0; j < prev.size() && ok; ++j) {
                const IntVector& y = labels[prev[j]];
                Integer pj = partial[j] + v * y(coord(i));
                Integer pair_y = y(coord(-1));
                double cap = std::sqrt(static_cast<double>(nl) *
                                       (static_cast<double>(rest_sq[j][i - 1]) + 2.0 * pair_y * pair_y)) + 1e-9;
                ok = std::fabs(static_cast<double>(target[j] - pj)) <= cap;
            }
            if (!ok) continue;
            x(coord(i)) = v;
            for (std::size_t j = 0; j < prev.size(); ++j) partial[j] += v * labels[prev[j]](coord(i));
            bool stop = coords(i - 1, nl, sp, on_vector);
            for (std::size_t j = 0; j < prev.size(); ++j) partial[j] -= v * labels[prev[j]](coord(i));
            x(coord(i)) = 0;
            if (stop) return true;
        }
        return false;
    }
};

std::vector<int> labelling_order(const IntMatrix& q) {
    const int n = static_cast<int>(q.rows());
    int discard = 0;
    for (int v = 1; v < n; ++v)
        if (q(v, v) > q(discard, discard)) discard = v;
    std::vector<int> order;
    std::vector<char> used(n, 0);
    used[discard] = 1;
    for (int step = 0; step + 1 < n; ++step) {
        int best = -1;
        Integer best_links = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            Integer links = 0;
            for (int u : order) links += q(v, u) != 0;
            if (links > best_links || (links == best_links && q(v, v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = q(v, v);
            }
        }
        used[best] = 1;
        order.push_back(best);
    }
    order.push_back(discard);
    return order;
}

}  // namespace

EmbeddingSearch find_embeddings(const WhiteGraph& g, const SearchOptions& opts) {
    EmbeddingSearch out;
    IntMatrix q = goeritz_full(g);
    const int n = g.vertex_count;
    if (n < 2) return out;
    GoeritzForm f = goeritz_matrix(g, n - 1);
    if (!is_positive_definite(f.matrix)) return out;
    Integer det = determinant(f.matrix);
    auto cands = enumerate_sigma_candidates(det, n - 1);
    out.sigma_candidates = static_cast<int>(cands.size());
    std::vector<int> order = labelling_order(q);
    std::set<Embedding> all;
    for (const Sigma& s : cands) {
        Search search(q, s, opts.node_budget - out.nodes, opts.limit == 0 ? 0 : opts.limit - all.size());
        search.order = order;
        search.label_vertex(0);
        out.nodes += search.nodes;
        for (const auto& e : search.found)
            if (verify_embedding(e, g)) all.insert(e);
        if (search.aborted) {
            out.budget_exhausted = true;
            break;
        }
        if (opts.limit != 0 && all.size() >= opts.limit) break;
    }
    out.embeddings.assign(all.begin(), all.end());
    return out;
}

EmbeddingSearch find_embeddings(const GoeritzForm& f, const WhiteGraph& g, std::size_t limit) {
    (void)f;
    SearchOptions o;
    o.limit = limit;
    return find_embeddings(g, o);
}

bool verify_embedding(const Embedding& e, const WhiteGraph& g) {
    const int n = g.vertex_count;
    if (static_cast<int>(e.labels.size()) != n || e.rank() != n - 1) return false;
    if (!is_change_maker(e.sigma)) return false;
    IntMatrix q = goeritz_full(g);
    IntVector sum = IntVector::Zero(e.rank() + 2);
    for (int v = 0; v < n; ++v) {
        if (!in_lattice(e.sigma, e.labels[v])) return false;
        sum += e.labels[v];
        for (int u = 0; u < n; ++u)
            if (e.labels[v].dot(e.labels[u]) != q(v, u)) return false;
    }
    if (!sum.isZero()) return false;
    auto [pv, pw] = marker_vertices(e);
    return pv >= 0 && pw >= 0;
}

bool verify_embedding(const Embedding& e, const GoeritzForm& f) {
    const int r = static_cast<int>(f.basis.size());
    if (static_cast<int>(e.labels.size()) != r + 1 || e.rank() != r) return false;
    if (!is_change_maker(e.sigma)) return false;
    IntVector sum = IntVector::Zero(r + 2);
    for (const auto& l : e.labels) {
        if (!in_lattice(e.sigma, l)) return false;
        sum += l;
    }
    if (!sum.isZero()) return false;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (e.labels[f.basis[i]].dot(e.labels[f.basis[j]]) != f.matrix(i, j)) return false;
    if (determinant(f.matrix) != discriminant(e.sigma)) return false;
    auto [pv, pw] = marker_vertices(e);
    return pv >= 0 && pw >= 0;
}

std::pair<int, int> marker_vertices(const Embedding& e) {
    int pv = -1, pw = -1, cp = 0, cm = 0;
    for (int v = 0; v < static_cast<int>(e.labels.size()); ++v) {
        Integer c = e.labels[v](coord(0));
        if (c > 0) {
            ++cp;
            pv = c == 1 ? v : -1;
        }
        if (c < 0) {
            ++cm;
            pw = c == -1 ? v : -1;
        }
    }
    if (cp != 1 || cm != 1) return {-1, -1};
    return {pv, pw};
}

}  // namespace altknot
