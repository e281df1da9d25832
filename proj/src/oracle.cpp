#include "altknot/oracle.hpp"

#include <sstream>
#include <tuple>

namespace altknot {

Laurent Laurent::monomial(Integer c, int exponent) {
    Laurent p;
    p.add(exponent, c);
    return p;
}

void Laurent::add(int e, Integer c) {
    if (c == 0) return;
    Integer& v = terms_[e];
    v += c;
    if (v == 0) terms_.erase(e);
}

Integer Laurent::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (auto [e, c] : o.terms_) r.add(e, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    for (auto [e, c] : o.terms_) r.add(e, -c);
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (auto [e1, c1] : terms_)
        for (auto [e2, c2] : o.terms_) r.add(e1 + e2, c1 * c2);
    return r;
}

Laurent Laurent::inverted() const {
    Laurent r;
    for (auto [e, c] : terms_) r.add(-e, c);
    return r;
}

Integer Laurent::evaluate(Integer x) const {
    if (x != 1 && x != -1) throw std::invalid_argument("evaluate: only +-1 supported");
    Integer s = 0;
    for (auto [e, c] : terms_) s += (x == -1 && (e % 2 != 0)) ? -c : c;
    return s;
}

std::string Laurent::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        Integer a = c < 0 ? -c : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

namespace {

struct RollbackUnion {
    std::vector<int> parent, size;
    std::vector<std::pair<int, int>> log;  // (absorbed root, old size of keeper)
    int components;

    explicit RollbackUnion(int n) : parent(n), size(n, 1), components(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            log.push_back({-1, -1});
            return;
        }
        if (size[a] < size[b]) std::swap(a, b);
        log.push_back({b, size[a]});
        parent[b] = a;
        size[a] += size[b];
        --components;
    }
    void undo() {
        auto [b, old] = log.back();
        log.pop_back();
        if (b < 0) return;
        int a = parent[b];
        parent[b] = b;
        size[a] = old;
        ++components;
    }
};

}  // namespace

Laurent jones(const Diagram& d) {
    const int n = d.crossing_count();
    if (n > 26) throw std::invalid_argument("jones: state sum limited to 26 crossings");
    const int v = d.vertex_count();
    // count states by (A-smoothings, contracted edges, components)
    std::map<std::tuple<int, int, int>, Integer> counts;
    RollbackUnion uf(v);
    // the A-smoothing at an edge of incidence +1 merges its two white regions
    auto rec = [&](auto&& self, int e, int num_a, int num_s) -> void {
        if (e == n) {
            counts[{num_a, num_s, uf.components}] += 1;
            return;
        }
        const Edge& ed = d.edge(e);
        for (int choice = 0; choice < 2; ++choice) {
            bool a_smoothing = choice == 0;
            bool contract = a_smoothing == (ed.mu == 1);
            if (contract) {
                uf.unite(ed.tail, ed.head);
                self(self, e + 1, num_a + a_smoothing, num_s + 1);
                uf.undo();
            } else {
                self(self, e + 1, num_a + a_smoothing, num_s);
            }
        }
    };
    rec(rec, 0, 0, 0);
    // polynomials in A
    const Laurent delta = Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
    Laurent bracket;
    for (auto [key, cnt] : counts) {
        auto [num_a, num_s, k] = key;
        int circles = 2 * k + num_s - v;
        Laurent term = Laurent::monomial(cnt, num_a - (n - num_a));
        for (int i = 1; i < circles; ++i) term = term * delta;
        bracket = bracket + term;
    }
    int w = d.writhe();
    // (-A^3)^{-w}
    Laurent norm = Laurent::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
    Laurent inA = norm * bracket;
    Laurent out;
    for (auto [e, c] : inA.terms()) {
        if (e % 4 != 0) throw std::logic_error("jones: non-integral exponent");
        out = out + Laurent::monomial(c, e / 4);
    }
    return out;
}

Integer determinant_from_jones(const Laurent& j) {
    Integer x = j.evaluate(-1);
    return x < 0 ? -x : x;
}

bool is_unknot_smallscale(const Diagram& d) {
    Laurent j = jones(d);
    return j == Laurent(1) && determinant_from_jones(j) == 1;
}

std::set<int> crossing_change_sweep(const Diagram& d) {
    std::set<int> out;
    for (int c = 0; c < d.crossing_count(); ++c)
        if (is_unknot_smallscale(crossing_change(d, c))) out.insert(c);
    return out;
}

}  // namespace altknot
