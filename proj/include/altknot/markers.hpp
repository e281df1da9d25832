#pragma once

#include <optional>
#include <string>

#include "altknot/embedder.hpp"
#include "altknot/moves.hpp"

namespace altknot {

enum class Situation { MultiMarked, A1, A2, B, Unnormalized };
std::string to_string(Situation s);

struct MarkerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Alternating parent diagram (every incidence -1) with an embedding and a tracked marked crossing.
struct MarkedState {
    Diagram diagram;
    Embedding embedding;
    int crossing = -1;
    int marker_v = -1, marker_w = -1;
    std::vector<int> marked_crossings;
    Situation situation = Situation::Unnormalized;
    int k = 0;
    bool standard_form = false;
    int u1 = -1, u2 = -1;  // adjacent vertices; u1 alone in situation B
    bool re_searched = false;  // last embedding came from a fresh search
};

MarkedState locate_markers(const Diagram& d, const Embedding& e, int crossing = -1);
std::vector<Move> normalize_marker(MarkedState& s);
std::vector<Move> to_standard_form(MarkedState& s);
std::vector<Move> classify_and_align(MarkedState& s);
std::vector<Move> induction_step(MarkedState& s);

// labels summed over merged vertices, coordinates in drop (indices >= 1) removed and the rest
// re-solved for sigma; sign-fixed and sorted
std::optional<Embedding> project_labels(const std::vector<IntVector>& summed, const std::vector<int>& drop, int rank);

struct Certificate {
    bool from_mirror = false;  // replay starts from mirror(input)
    std::vector<Move> moves;
    int terminal_m = 0;
};

struct ReplayResult {
    bool ok = false;
    int m = 0;
    std::string error;
};
// start: normalize_colouring(input), or mirror(input)
Diagram replay_start(const Diagram& input, bool from_mirror);
ReplayResult replay(const Diagram& input, const Certificate& c);

struct ReductionStats {
    int steps = 0;
    int transported = 0;   // embeddings carried through an induction step
    int re_searched = 0;   // embeddings found again by search after a failed transport
};

// reduce the changed diagram of a marked state to C_m; the moves act on the almost-alternating diagram
std::optional<std::vector<Move>> reduce_to_clasp(MarkedState s, int& terminal_m, ReductionStats* stats = nullptr,
                                                std::string* failure = nullptr);

enum class Verdict { Yes, No, Inconclusive };
std::string to_string(Verdict v);

struct UnknottingCrossing {
    int crossing = -1;
    int sign = 0;             // in the input diagram
    bool via_mirror = false;
    bool sign_expected = false;
    Certificate certificate;
};

struct DecideOptions {
    long long node_budget = 20000000;
    bool all_embeddings = true;
};

struct UnknottingReport {
    Verdict verdict = Verdict::No;
    Integer determinant = 0;
    int signature = 0;
    std::vector<UnknottingCrossing> crossings;
    std::vector<Embedding> embeddings, mirror_embeddings;
    bool budget_exhausted = false;
    long long nodes = 0;
    std::vector<std::string> failures;
    ReductionStats stats;
};

struct NotAlternating : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

UnknottingReport decide_unknotting(const Diagram& d, const DecideOptions& opts = {});
std::optional<Certificate> certify_almost_alternating_unknot(const Diagram& d, const DecideOptions& opts = {});

}  // namespace altknot
