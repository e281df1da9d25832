#pragma once

#include "altknot/change_maker.hpp"
#include "altknot/goeritz.hpp"

namespace altknot {

// Labels for every white-graph vertex (all r+1), indexed like the graph.
struct Embedding {
    Sigma sigma;
    std::vector<IntVector> labels;

    int rank() const { return static_cast<int>(sigma.size()); }
    bool operator==(const Embedding& o) const;
    bool operator<(const Embedding& o) const;
};

Embedding negated(const Embedding& e);
// equal-sigma coordinate blocks sorted, then the smaller of +-
Embedding canonical(const Embedding& e);

// change-maker sigma of length r, all entries positive, with 1 + |sigma|^2 = (det+1)/2
std::vector<Sigma> enumerate_sigma_candidates(Integer det, int r);

struct SearchOptions {
    std::size_t limit = 0;            // 0 means all
    long long node_budget = 20000000;
};

struct EmbeddingSearch {
    std::vector<Embedding> embeddings;  // canonical, deduplicated, sorted
    bool budget_exhausted = false;
    long long nodes = 0;
    int sigma_candidates = 0;
};

EmbeddingSearch find_embeddings(const WhiteGraph& g, const SearchOptions& opts = {});
EmbeddingSearch find_embeddings(const GoeritzForm& f, const WhiteGraph& g, std::size_t limit = 0);

bool verify_embedding(const Embedding& e, const WhiteGraph& g);
bool verify_embedding(const Embedding& e, const GoeritzForm& f);

// vertices with label . e_0 = +1 and -1; (-1,-1) unless both unique
std::pair<int, int> marker_vertices(const Embedding& e);

}  // namespace altknot
