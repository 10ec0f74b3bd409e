#include "p3turan/graph.hpp"
#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace p3turan {

Graph::Graph(int n_) : n(n_) {
    if (n_ < 0 || n_ > 32) throw std::invalid_argument("graph order out of range");
}

void Graph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("bad edge");
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
}

void Graph::remove_edge(int u, int v) {
    adj[u] &= ~(1u << v);
    adj[v] &= ~(1u << u);
}

int Graph::degree(int v) const { return __builtin_popcount(adj[v]); }

int Graph::edge_count() const {
    int s = 0;
    for (int v = 0; v < n; v++) s += degree(v);
    return s / 2;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n);
    for (int v = 0; v < n; v++) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    Graph h(n);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h((int)verts.size());
    for (size_t i = 0; i < verts.size(); i++)
        for (size_t j = i + 1; j < verts.size(); j++)
            if (has_edge(verts[i], verts[j])) h.add_edge((int)i, (int)j);
    return h;
}

Graph Graph::without_vertex(int v) const {
    std::vector<int> keep;
    for (int u = 0; u < n; u++)
        if (u != v) keep.push_back(u);
    return induced(keep);
}

Graph Graph::complement() const {
    Graph h(n);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (!has_edge(u, v)) h.add_edge(u, v);
    return h;
}

bool Graph::operator==(const Graph& o) const {
    if (n != o.n) return false;
    for (int v = 0; v < n; v++)
        if (adj[v] != o.adj[v]) return false;
    return true;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; v++) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    Graph g(n);
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); i++)
        for (int j = 0; j < parts[i]; j++) part_of.push_back((int)i);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

CanonKey graph_key(const Graph& g) {
    CanonKey key(g.n > 0 ? g.n - 1 : 0, 0u);
    for (int j = 1; j < g.n; j++) {
        uint32_t c = 0;
        for (int i = 0; i < j; i++) c = (c << 1) | (g.has_edge(i, j) ? 1u : 0u);
        key[j - 1] = c;
    }
    return key;
}

namespace {

// 1-WL colour refinement; cell order is fixed by sorted signatures so it is
// label-invariant.  Used only to restrict the canonical search for large n.
// Vertices below `fixed` get unique minimal colours, which keeps them in
// singleton cells at positions 0..fixed-1 throughout.
std::vector<std::vector<int>> refine_cells(const Graph& g, int fixed) {
    int n = g.n;
    std::vector<int> color(n);
    for (int v = 0; v < n; v++) color[v] = v < fixed ? v : fixed + g.degree(v);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; v++) {
            std::vector<int> s{color[v]};
            for (int u = 0; u < n; u++)
                if (g.has_edge(u, v)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int nc = 0;
        for (int i = 0; i < n; i++) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) nc++;
            next[sorted[i].second] = nc;
        }
        bool stable = (std::set<int>(next.begin(), next.end()).size() ==
                       std::set<int>(color.begin(), color.end()).size());
        color = next;
        if (stable) break;
    }
    int nc = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> cells(nc);
    for (int v = 0; v < n; v++) cells[color[v]].push_back(v);
    return cells;
}

struct CanonSearch {
    const Graph* g;
    int n, fixed;
    std::vector<int> cell_of_pos;             // which candidate cell feeds each position
    std::vector<std::vector<int>> cells;
    std::vector<int> inv;                     // canonical position -> original vertex
    std::vector<char> used;
    CanonKey cur, best;
    std::vector<int> best_inv;
    bool have_best = false;
    long long gen = 0;                        // bumped whenever best is replaced

    void run() {
        inv.assign(n, -1);
        used.assign(n, 0);
        cur.assign(n > 0 ? n - 1 : 0, 0);
        for (int p = 0; p < fixed; p++) {
            inv[p] = p;
            used[p] = 1;
        }
        for (int j = 1; j < fixed; j++) {
            uint32_t c = 0;
            for (int i = 0; i < j; i++) c = (c << 1) | (g->has_edge(i, j) ? 1u : 0u);
            cur[j - 1] = c;
        }
        rec(fixed, true);
    }

    // less_in: the prefix is strictly below best (or best does not exist yet).
    // Any best recorded under this node shares our prefix, so once gen moves
    // the prefix is tied with best and later siblings must compare columns.
    void rec(int pos, bool less_in) {
        if (pos == n) {
            best = cur;
            best_inv = inv;
            have_best = true;
            gen++;
            return;
        }
        long long entry_gen = gen;
        const std::vector<int>& cand = cells[cell_of_pos[pos]];
        for (int w : cand) {
            if (used[w]) continue;
            uint32_t c = 0;
            for (int i = 0; i < pos; i++) c = (c << 1) | (g->has_edge(inv[i], w) ? 1u : 0u);
            bool eff_less = less_in && gen == entry_gen;
            bool child_less;
            if (pos == 0 || eff_less) {
                child_less = eff_less;
            } else {
                if (c > best[pos - 1]) continue;
                child_less = c < best[pos - 1];
            }
            if (pos > 0) cur[pos - 1] = c;
            inv[pos] = w;
            used[w] = 1;
            rec(pos + 1, child_less);
            used[w] = 0;
        }
    }
};

}  // namespace

CanonGraph canonical_form_fixed(const Graph& g, int fixed) {
    if (fixed < 0 || fixed > g.n) throw std::invalid_argument("bad fixed prefix");
    CanonSearch s;
    s.g = &g;
    s.n = g.n;
    s.fixed = fixed;
    s.cell_of_pos.assign(std::max(g.n, 1), 0);
    if (g.n - fixed > 8) {
        s.cells = refine_cells(g, fixed);
        int p = 0;
        for (size_t c = 0; c < s.cells.size(); c++)
            for (size_t k = 0; k < s.cells[c].size(); k++) s.cell_of_pos[p++] = (int)c;
    } else {
        // exhaustive: one cell with every vertex (fixed prefix is forced via used[])
        s.cells.assign(1, {});
        for (int v = 0; v < g.n; v++) s.cells[0].push_back(v);
    }
    s.run();
    CanonGraph out;
    out.perm.assign(g.n, 0);
    for (int p = 0; p < g.n; p++) out.perm[s.best_inv[p]] = p;
    out.g = g.permuted(out.perm);
    return out;
}

CanonGraph canonical_form(const Graph& g) { return canonical_form_fixed(g, 0); }

CanonKey canon_key(const Graph& g) { return graph_key(canonical_form(g).g); }

uint64_t canon_key64(const Graph& g) {
    if (g.n * (g.n - 1) / 2 > 64) throw std::invalid_argument("graph too large for packed key");
    CanonKey k = canon_key(g);
    uint64_t out = 0;
    for (int j = 1; j < g.n; j++) out = (out << j) | k[j - 1];
    return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canon_key(a) == canon_key(b);
}

int GraphFamily::index_of(const Graph& g) const {
    if (g.n != n) return -1;
    CanonKey k = canon_key(g);
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || *it != k) return -1;
    return (int)(it - keys.begin());
}

const GraphFamily& enumerate_graphs(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("enumerate_graphs supports 0 <= n <= 8");
    static std::mutex mu;
    static std::map<int, GraphFamily> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    for (int k = 0; k <= n; k++) {
        if (cache.count(k)) continue;
        GraphFamily fam;
        fam.n = k;
        if (k == 0) {
            fam.graphs.push_back(Graph(0));
            fam.keys.push_back(graph_key(fam.graphs[0]));
        } else {
            // extend every (k-1)-class by one vertex with all possible back-neighborhoods
            std::map<CanonKey, Graph> seen;
            for (const Graph& g : cache[k - 1].graphs) {
                for (uint32_t s = 0; s < (1u << (k - 1)); s++) {
                    Graph h(k);
                    for (int u = 0; u < k - 1; u++) {
                        for (int v = u + 1; v < k - 1; v++)
                            if (g.has_edge(u, v)) h.add_edge(u, v);
                        if ((s >> u) & 1u) h.add_edge(u, k - 1);
                    }
                    Graph c = canonical_form(h).g;
                    seen.emplace(graph_key(c), c);
                }
            }
            for (auto& [key, g] : seen) {
                fam.keys.push_back(key);
                fam.graphs.push_back(g);
            }
        }
        cache[k] = std::move(fam);
    }
    return cache[n];
}

namespace {

long long embed_rec(const Graph& T, const Graph& G, std::vector<int>& img, int pos, uint32_t used) {
    if (pos == T.n) return 1;
    long long total = 0;
    for (int v = 0; v < G.n; v++) {
        if ((used >> v) & 1u) continue;
        bool ok = true;
        for (int u = 0; u < pos && ok; u++)
            if (T.has_edge(u, pos) && !G.has_edge(img[u], v)) ok = false;
        if (!ok) continue;
        img[pos] = v;
        total += embed_rec(T, G, img, pos + 1, used | (1u << v));
    }
    return total;
}

}  // namespace

long long count_embeddings(const Graph& T, const Graph& G) {
    if (T.n > G.n) return 0;
    std::vector<int> img(T.n);
    return embed_rec(T, G, img, 0, 0);
}

long long count_automorphisms(const Graph& T) { return count_embeddings(T, T); }

long long count_subgraphs(const Graph& T, const Graph& G) {
    if (T.n > G.n) return 0;
    return count_embeddings(T, G) / count_automorphisms(T);
}

namespace {

void subsets_rec(const Graph& G, int k, int start, std::vector<int>& pick, const CanonKey& target,
                 long long& hits) {
    if ((int)pick.size() == k) {
        if (canon_key(G.induced(pick)) == target) hits++;
        return;
    }
    for (int v = start; v <= G.n - (k - (int)pick.size()); v++) {
        pick.push_back(v);
        subsets_rec(G, k, v + 1, pick, target, hits);
        pick.pop_back();
    }
}

}  // namespace

Rat induced_density(const Graph& H, const Graph& G) {
    if (H.n > G.n) return Rat(0);
    CanonKey target = canon_key(H);
    long long hits = 0;
    std::vector<int> pick;
    subsets_rec(G, H.n, 0, pick, target, hits);
    return make_rat(Int((long)hits), binomial(G.n, H.n));
}

std::optional<std::array<int, 3>> find_induced_cocherry(const Graph& g) {
    for (int a = 0; a < g.n; a++)
        for (int b = a + 1; b < g.n; b++) {
            if (!g.has_edge(a, b)) continue;
            for (int c = 0; c < g.n; c++)
                if (c != a && c != b && !g.has_edge(a, c) && !g.has_edge(b, c))
                    return std::array<int, 3>{a, b, c};
        }
    return std::nullopt;
}

std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
    if (find_induced_cocherry(g)) return std::nullopt;
    // non-adjacency is transitive here, so complement components are the parts
    std::vector<int> part(g.n, -1);
    std::vector<int> sizes;
    for (int v = 0; v < g.n; v++) {
        if (part[v] >= 0) continue;
        int id = (int)sizes.size();
        sizes.push_back(0);
        std::vector<int> stack{v};
        part[v] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            sizes[id]++;
            for (int w = 0; w < g.n; w++)
                if (w != u && !g.has_edge(u, w) && part[w] < 0) {
                    part[w] = id;
                    stack.push_back(w);
                }
        }
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

namespace {

int clique_rec(const Graph& g, uint32_t cand, int depth) {
    int best = depth;
    while (cand) {
        if (depth + __builtin_popcount(cand) <= best) break;
        int v = __builtin_ctz(cand);
        cand &= cand - 1;   // vertices below v were already tried as the minimum
        best = std::max(best, clique_rec(g, cand & g.adj[v], depth + 1));
    }
    return best;
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.n == 0) return 0;
    return clique_rec(g, (1u << g.n) - 1, 0);
}

bool has_clique(const Graph& g, int q) {
    if (q <= 0) return true;
    return clique_number(g) >= q;
}

bool is_Kq_free(const Graph& g, int q) { return !has_clique(g, q); }

std::string to_graph6(const Graph& g) {
    std::string out;
    out.push_back((char)(g.n + 63));
    int bits = g.n * (g.n - 1) / 2;
    int nb = (bits + 5) / 6;
    std::vector<int> bit;
    bit.reserve(bits);
    for (int j = 1; j < g.n; j++)
        for (int i = 0; i < j; i++) bit.push_back(g.has_edge(i, j) ? 1 : 0);
    for (int b = 0; b < nb; b++) {
        int v = 0;
        for (int k = 0; k < 6; k++) {
            v <<= 1;
            int idx = 6 * b + k;
            if (idx < bits) v |= bit[idx];
        }
        out.push_back((char)(v + 63));
    }
    return out;
}

Graph from_graph6(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    int n = (unsigned char)s[0] - 63;
    if (n < 0 || n > 32) throw std::invalid_argument("graph6 order out of supported range");
    int bits = n * (n - 1) / 2;
    int nb = (bits + 5) / 6;
    if ((int)s.size() != 1 + nb) throw std::invalid_argument("graph6 length mismatch");
    Graph g(n);
    int idx = 0;
    for (int j = 1; j < n; j++)
        for (int i = 0; i < j; i++, idx++) {
            int v = (unsigned char)s[1 + idx / 6] - 63;
            if (v < 0 || v > 63) throw std::invalid_argument("graph6 byte out of range");
            if ((v >> (5 - idx % 6)) & 1) g.add_edge(i, j);
        }
    return g;
}

namespace {

std::vector<Graph> build_f4() {
    auto mk = [](std::vector<std::pair<int, int>> edges) {
        Graph g(4);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    };
    return {
        mk({}),                                                  // F0 empty
        mk({{0, 1}}),                                            // F1
        mk({{0, 1}, {1, 2}}),                                    // F2 cherry
        mk({{0, 1}, {0, 2}, {0, 3}}),                            // F3 star
        mk({{0, 1}, {2, 3}}),                                    // F4 two edges
        mk({{0, 1}, {0, 2}, {1, 2}}),                            // F5 triangle
        mk({{0, 1}, {1, 2}, {2, 3}}),                            // F6 path
        mk({{0, 1}, {0, 2}, {1, 2}, {0, 3}}),                    // F7 paw
        mk({{0, 1}, {1, 2}, {2, 3}, {0, 3}}),                    // F8 C4
        mk({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}),            // F9 diamond
        mk({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),    // F10 K4
    };
}

}  // namespace

const std::vector<Graph>& f4_basis() {
    static const std::vector<Graph> basis = build_f4();
    return basis;
}

int f4_index(const Graph& g) {
    if (g.n != 4) return -1;
    static std::mutex mu;
    static std::map<CanonKey, int> lut;
    std::lock_guard<std::mutex> lock(mu);
    if (lut.empty())
        for (int i = 0; i < 11; i++) lut[canon_key(f4_basis()[i])] = i;
    auto it = lut.find(canon_key(g));
    return it == lut.end() ? -1 : it->second;
}

const std::array<long long, 11>& f4_p3_counts() {
    static const std::array<long long, 11> counts{0, 0, 0, 0, 0, 0, 1, 2, 4, 6, 12};
    return counts;
}

}  // namespace p3turan
