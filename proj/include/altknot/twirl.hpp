#pragma once

#include <optional>
#include <string>

#include "altknot/markers.hpp"

namespace altknot {

// One level D^(i) of the tower; vertex ids are this level's.
struct TowerLevel {
    Diagram diagram;
    int crossing = -1;         // between chain.back() and w
    int w = -1;
    std::vector<int> chain;    // v_0 .. v_i
    std::vector<int> previous; // per vertex, its vertex in D^(i-1), or -1 for v_i
};

struct TwirlTower {
    std::vector<TowerLevel> levels;  // D^(0) .. D^(n)
    IntMatrix goeritz;               // M_n: w discarded, original vertices with v_0 last, then v_1 .. v_n
    int original = 0;                // r, rows before the chain
    std::vector<Integer> minors;     // d_{-1} .. d_n
    bool recurrence_holds = false;
    int signature = 0;

    const TowerLevel& top() const { return levels.back(); }
};

// d alternating with c between v_0 and w; w is the end that gives signature -2 when possible
TwirlTower twirl_tower(const Diagram& d, int c, int n);

// crossings other than the top crossing whose change still leaves a positive definite unimodular form
std::vector<int> surviving_crossings(const TwirlTower& t);

struct Promotion {
    bool ok = false;
    bool via_mirror = false;
    int n = 0;
    Embedding embedding;  // for the side diagram, with c marked
    std::string error;
};

// unknotting crossing c of alternating d to a marked crossing of d or its mirror, through D^(n)
Promotion promote_unknotting_crossing(const Diagram& d, int c, long long node_budget = 20000000);

}  // namespace altknot
