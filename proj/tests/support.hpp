#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "altknot/graph_lattice.hpp"
#include "altknot/serialize.hpp"
#include "altknot/table.hpp"

namespace testing_support {

using namespace altknot;

inline const std::vector<TableEntry>& table() {
    static const std::vector<TableEntry> t = load_table(default_table_path());
    return t;
}

inline Diagram knot(const std::string& name) {
    const TableEntry* e = find_entry(table(), name);
    if (!e) throw std::runtime_error("missing table entry " + name);
    return e->diagram();
}

// table entries with a reduced alternating DT diagram of at most max_crossings
inline std::vector<const TableEntry*> alternating_upto(int max_crossings) {
    std::vector<const TableEntry*> out;
    for (const auto& e : table()) {
        if (e.crossings() == 0 || e.crossings() > max_crossings) continue;
        Diagram d = normalize_colouring(e.diagram());
        if (d.count_mu(1) == 0 && d.is_reduced()) out.push_back(&e);
    }
    return out;
}

inline std::set<int> crossing_set(const UnknottingReport& r) {
    std::set<int> s;
    for (const auto& c : r.crossings) s.insert(c.crossing);
    return s;
}

// random connected multigraph on n vertices with m >= n-1 edges, no loops
inline WhiteGraph random_graph(std::mt19937& rng, int n, int m) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<int>(edges.size()) < m) {
        int a = pick(rng), b = pick(rng);
        if (a != b) edges.push_back({a, b});
    }
    return make_graph(n, edges);
}

inline LatticeElement random_element(std::mt19937& rng, int n, int bound) {
    std::uniform_int_distribution<int> c(-bound, bound);
    std::vector<Integer> v(n);
    for (auto& x : v) x = c(rng);
    return LatticeElement(v);
}

}  // namespace testing_support
