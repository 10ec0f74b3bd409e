#pragma once
#include <string>
#include <vector>

#include "p3turan/graph.hpp"

namespace p3turan {

enum class SearchMode { Exhaustive, Augmentation };

// maximize nu(target, G) over forbidden-free graphs on exactly n vertices
struct SearchProblem {
    int n = 0;
    Graph target;
    Graph forbidden;
    SearchMode mode = SearchMode::Augmentation;
    int workers = 1;
};

struct SearchResult {
    long long optimum = 0;
    std::vector<std::string> witnesses;  // canonical graph6, lexicographic
    long long classes = 0;               // isomorphism classes attaining optimum
    long long nodes = 0;                 // candidate graphs examined
    double seconds = 0.0;
};

// augmentation frontier, resumable; level is the vertex count of the frontier
// graphs, best/witnesses only become meaningful once level reaches n
struct SearchCheckpoint {
    SearchProblem problem;
    int level = 0;
    long long best = -1;
    long long nodes = 0;
    std::vector<std::string> frontier;   // canonical graph6 at this level
    std::vector<std::string> witnesses;  // filled at the final level
};

// exact optimum with deduplicated canonical witnesses.  Augmentation mode
// runs orderly generation of forbidden-free classes with an optimistic
// count bound for pruning; exhaustive mode sweeps all labelled graphs
// (n <= 7).  Both cap at n <= 10.
SearchResult solve(const SearchProblem& p);

// ex(n, K_t, K_q) with the witness checked to be the unique balanced
// complete (q-1)-partite graph; requires t < q
SearchResult solve_zykov(int n, int t, int q);

// greedy improvement: best clone-replace move, plus part-rebalancing moves
// when the graph is complete multipartite, until no move gains.  Preserves
// K_{r+1}-freeness; the path count never decreases
Graph local_improve(const Graph& g, int r);

SearchCheckpoint make_checkpoint(const SearchProblem& p);
// one generation level; after the final level the frontier is folded into
// best/witnesses and the checkpoint is complete
SearchCheckpoint advance_level(const SearchCheckpoint& cp);
SearchResult solve_resume(const SearchCheckpoint& cp);

std::string checkpoint_render(const SearchCheckpoint& cp);
SearchCheckpoint checkpoint_parse(const std::string& text);

std::string search_json(const SearchResult& res, bool with_timings = false);

}  // namespace p3turan
