#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>
#include "p3turan/rational.hpp"

namespace p3turan {

// Simple undirected graph, n <= 32, one bitmask row per vertex.
struct Graph {
    int n = 0;
    std::array<uint32_t, 32> adj{};

    Graph() = default;
    explicit Graph(int n_);

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const;
    int edge_count() const;
    std::vector<int> degree_sequence() const;  // ascending

    Graph permuted(const std::vector<int>& perm) const;  // perm[old] = new label
    Graph induced(const std::vector<int>& verts) const;  // verts keep given order
    Graph without_vertex(int v) const;
    Graph complement() const;

    bool operator==(const Graph& o) const;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// consecutive vertex blocks, all cross edges
Graph complete_multipartite(const std::vector<int>& parts);

// Upper-triangle column values: key[j-1] packs column j (rows 0..j-1, row 0 as
// the high bit).  Lexicographic order on this vector is the total order used
// everywhere; it also matches the graph6 bit layout.
using CanonKey = std::vector<uint32_t>;
CanonKey graph_key(const Graph& g);

struct CanonGraph {
    Graph g;                 // = original.permuted(perm)
    std::vector<int> perm;   // original label -> canonical label
};

CanonGraph canonical_form(const Graph& g);
// minimize only over permutations fixing vertices 0..fixed-1 pointwise
CanonGraph canonical_form_fixed(const Graph& g, int fixed);
CanonKey canon_key(const Graph& g);
uint64_t canon_key64(const Graph& g);  // packed key, needs C(n,2) <= 64
bool isomorphic(const Graph& a, const Graph& b);

struct GraphFamily {
    int n = 0;
    std::vector<Graph> graphs;     // canonical reps sorted by key
    std::vector<CanonKey> keys;    // parallel to graphs
    int index_of(const Graph& g) const;  // -1 if absent
    size_t size() const { return graphs.size(); }
};

// all isomorphism classes on n vertices, 0 <= n <= 8, cached
const GraphFamily& enumerate_graphs(int n);

long long count_embeddings(const Graph& T, const Graph& G);  // injective homs
long long count_automorphisms(const Graph& T);
// nu(T,G): distinct subgraph copies (vertex+edge sets), = embeddings/aut
long long count_subgraphs(const Graph& T, const Graph& G);
// P(H,G): probability a uniform |H|-subset of V(G) induces H; 0 if |H| > |G|
Rat induced_density(const Graph& H, const Graph& G);

// triple {a,b,c} inducing exactly one edge ab; absent iff complete multipartite
std::optional<std::array<int, 3>> find_induced_cocherry(const Graph& g);
// part sizes (descending) via non-adjacency classes, absent if not complete multipartite
std::optional<std::vector<int>> multipartite_parts(const Graph& g);

int clique_number(const Graph& g);
bool has_clique(const Graph& g, int q);
bool is_Kq_free(const Graph& g, int q);  // no clique on q vertices

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// The fixed 4-vertex basis F0..F10.  Indexing is pinned by the signature
// table (edge count, degree sequence, nu(P3,.)), not by canonical order:
//   F0 empty, F1 one edge, F2 cherry+K1, F3 star K_{1,3}, F4 2K2,
//   F5 triangle+K1, F6 path, F7 paw, F8 C4, F9 diamond, F10 K4.
const std::vector<Graph>& f4_basis();
int f4_index(const Graph& g);  // -1 if |g| != 4
const std::array<long long, 11>& f4_p3_counts();

}  // namespace p3turan
