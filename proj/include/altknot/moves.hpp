#pragma once

#include <string>
#include <vector>

#include "altknot/diagram.hpp"

namespace altknot {

enum class MoveKind { Flype, CrossingChange, Untongue, Untwirl, Tongue, Twirl, ReidemeisterII, NugatoryReduction };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

// Sites, all in terms of the stored unshaded graph of the pre-state:
//   Flype            crossing e, region v: e is a cut edge of the white graph minus v (aux -1);
//                    or aux = x: e runs parallel to the tangle holding x across the cut {v, other end of e}
//   CrossingChange   crossing
//   Untongue/Untwirl crossing c (dealternating), region v1 (its degree-3 end),
//                    aux = crossing closing a triangular shaded region with c at v1
//   Tongue           crossing c (dealternating), region V, aux = crossing adjacent to c at V
//   Twirl            crossing c (dealternating), region V, aux = 0 (tail-first) or 1 (clasp-first)
//   ReidemeisterII   crossings crossing and aux
//   NugatoryReduction crossing
struct Move {
    MoveKind kind = MoveKind::CrossingChange;
    int crossing = -1;
    int region = -1;
    int aux = -1;

    bool operator==(const Move& o) const {
        return kind == o.kind && crossing == o.crossing && region == o.region && aux == o.aux;
    }
};

struct PatternMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Result of a move with provenance: for each new vertex, the old vertices merged into
// it (empty for vertices created by the move); for each new edge, its old id or -1.
struct MoveResult {
    Diagram diagram;
    std::vector<std::vector<int>> vertex_origin;
    std::vector<int> edge_origin;
};

MoveResult apply_move_tracked(const Diagram& d, const Move& m);
Diagram apply_move(const Diagram& d, const Move& m);

struct NugatoryResult {
    Diagram diagram;
    std::vector<Move> moves;
};
NugatoryResult reduce_nugatory(const Diagram& d);

// Local primitives, exposed for tests.
MoveResult delta_to_y(const Diagram& d, int face);
MoveResult y_to_delta(const Diagram& d, int vertex);

}  // namespace altknot
