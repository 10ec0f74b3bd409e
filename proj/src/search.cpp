#include "p3turan/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "p3turan/turan.hpp"

namespace p3turan {

namespace {

long long factorial_ll(int k) {
    long long f = 1;
    for (int i = 2; i <= k; i++) f *= i;
    return f;
}

long long choose_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 0; i < k; i++) c = c * (n - i) / (i + 1);
    return c;
}

bool clique_like(const Graph& f) {
    return f.n >= 2 && f.edge_count() == f.n * (f.n - 1) / 2;
}

bool contains_forbidden(const Graph& g, const Graph& f) {
    if (f.n > g.n) return false;
    if (clique_like(f)) return has_clique(g, f.n);
    return count_embeddings(f, g) > 0;
}

// new copies of a forbidden graph must touch the freshly added last vertex
bool child_gains_forbidden(const Graph& h, const Graph& f) {
    if (f.n > h.n) return false;
    int v = h.n - 1;
    if (clique_like(f)) {
        std::vector<int> nb;
        for (int u = 0; u < v; u++)
            if (h.has_edge(u, v)) nb.push_back(u);
        if ((int)nb.size() < f.n - 1) return false;
        return has_clique(h.induced(nb), f.n - 1);
    }
    return count_embeddings(f, h) > 0;
}

void validate(const SearchProblem& p) {
    if (p.n < 1 || p.n > 10)
        throw std::invalid_argument("vertex count must be in 1..10");
    if (p.mode == SearchMode::Exhaustive && p.n > 7)
        throw std::invalid_argument("exhaustive sweep capped at 7 vertices");
    if (p.target.n == 0 || p.forbidden.n == 0)
        throw std::invalid_argument("target and forbidden graphs must be nonempty");
    if (p.forbidden.edge_count() == 0 && p.forbidden.n <= p.n)
        throw std::invalid_argument(
            "an edgeless forbidden graph embeds everywhere, nothing is feasible");
}

// copies of the target per |target|-subset of the host
long long per_subset_cap(const Graph& t) {
    return factorial_ll(t.n) / count_automorphisms(t);
}

// achievable value from a known feasible graph: the complete multipartite
// family plus the empty graph (k = 1 below) make good starting incumbents
long long seed_value(const SearchProblem& p) {
    long long best = -1;
    for (int k = 1; k <= p.n; k++) {
        Graph t = turan_graph({k, p.n});
        if (!contains_forbidden(t, p.forbidden))
            best = std::max(best, count_subgraphs(p.target, t));
    }
    return best;
}

struct LevelOut {
    std::map<CanonKey, Graph> classes;
    long long nodes = 0;
};

// all feasible one-vertex extensions of the parents in [lo, hi), deduplicated
// by canonical key; children that provably cannot reach `incumbent` are cut
void extend_range(const std::vector<Graph>& parents, size_t lo, size_t hi,
                  const SearchProblem& p, long long incumbent, LevelOut& out) {
    long long cap_per = per_subset_cap(p.target);
    for (size_t pi = lo; pi < hi; pi++) {
        const Graph& g = parents[pi];
        int k = g.n;
        long long slack =
            cap_per * (choose_ll(p.n, p.target.n) - choose_ll(k + 1, p.target.n));
        for (uint32_t s = 0; s < (1u << k); s++) {
            out.nodes++;
            Graph h(k + 1);
            for (int u = 0; u < k; u++) h.adj[u] = g.adj[u];
            for (int u = 0; u < k; u++)
                if (s >> u & 1) h.add_edge(u, k);
            if (child_gains_forbidden(h, p.forbidden)) continue;
            if (p.target.n <= k + 1 &&
                count_subgraphs(p.target, h) + slack < incumbent)
                continue;
            CanonGraph c = canonical_form(h);
            out.classes.emplace(graph_key(c.g), c.g);
        }
    }
}

std::vector<Graph> parse_frontier(const std::vector<std::string>& g6) {
    std::vector<Graph> out;
    out.reserve(g6.size());
    for (const std::string& s : g6) out.push_back(from_graph6(s));
    return out;
}

SearchResult finish(const SearchProblem& p, long long best,
                    const std::map<CanonKey, Graph>& attain, long long nodes) {
    SearchResult res;
    res.optimum = best;
    res.nodes = nodes;
    for (const auto& [key, g] : attain) {
        if (contains_forbidden(g, p.forbidden))
            throw std::logic_error("witness contains the forbidden graph");
        if (count_subgraphs(p.target, g) != best)
            throw std::logic_error("witness does not attain the optimum");
        res.witnesses.push_back(to_graph6(g));
    }
    res.classes = (long long)res.witnesses.size();
    return res;
}

SearchResult solve_exhaustive(const SearchProblem& p) {
    int m = p.n * (p.n - 1) / 2;
    std::vector<std::pair<int, int>> eorder;
    for (int j = 1; j < p.n; j++)
        for (int i = 0; i < j; i++) eorder.push_back({i, j});

    int w = std::max(1, p.workers);
    std::vector<long long> lbest(w, -1), lnodes(w, 0);
    std::vector<std::map<CanonKey, Graph>> lwit(w);
    auto work = [&](int tid) {
        for (uint64_t mask = tid; mask < (1ull << m); mask += w) {
            lnodes[tid]++;
            Graph g(p.n);
            for (int b = 0; b < m; b++)
                if (mask >> b & 1) g.add_edge(eorder[b].first, eorder[b].second);
            if (contains_forbidden(g, p.forbidden)) continue;
            long long nu = count_subgraphs(p.target, g);
            if (nu < lbest[tid]) continue;
            if (nu > lbest[tid]) {
                lbest[tid] = nu;
                lwit[tid].clear();
            }
            CanonGraph c = canonical_form(g);
            lwit[tid].emplace(graph_key(c.g), c.g);
        }
    };
    if (w == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < w; tid++) pool.emplace_back(work, tid);
        for (std::thread& th : pool) th.join();
    }
    long long best = *std::max_element(lbest.begin(), lbest.end());
    long long nodes = 0;
    std::map<CanonKey, Graph> attain;
    for (int tid = 0; tid < w; tid++) {
        nodes += lnodes[tid];
        if (lbest[tid] == best)
            attain.insert(lwit[tid].begin(), lwit[tid].end());
    }
    return finish(p, best, attain, nodes);
}

}  // namespace

SearchCheckpoint make_checkpoint(const SearchProblem& p) {
    validate(p);
    if (p.mode != SearchMode::Augmentation)
        throw std::invalid_argument("checkpoints only apply to augmentation mode");
    SearchCheckpoint cp;
    cp.problem = p;
    cp.level = 1;
    cp.best = seed_value(p);
    cp.nodes = 0;
    cp.frontier = {to_graph6(Graph(1))};
    return cp;
}

SearchCheckpoint advance_level(const SearchCheckpoint& cp) {
    const SearchProblem& p = cp.problem;
    if (p.mode != SearchMode::Augmentation)
        throw std::invalid_argument("checkpoints only apply to augmentation mode");
    if (cp.level >= p.n) throw std::invalid_argument("checkpoint already complete");
    std::vector<Graph> parents = parse_frontier(cp.frontier);

    int w = std::max(1, p.workers);
    std::vector<LevelOut> outs((size_t)w);
    auto work = [&](int tid) {
        size_t chunk = (parents.size() + w - 1) / w;
        size_t lo = std::min(parents.size(), (size_t)tid * chunk);
        size_t hi = std::min(parents.size(), lo + chunk);
        extend_range(parents, lo, hi, p, cp.best, outs[(size_t)tid]);
    };
    if (w == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < w; tid++) pool.emplace_back(work, tid);
        for (std::thread& th : pool) th.join();
    }
    std::map<CanonKey, Graph> classes;
    SearchCheckpoint next;
    next.problem = p;
    next.level = cp.level + 1;
    next.nodes = cp.nodes;
    for (LevelOut& o : outs) {
        next.nodes += o.nodes;
        classes.merge(o.classes);
    }

    if (next.level < p.n) {
        next.best = cp.best;
        for (const auto& [key, g] : classes) next.frontier.push_back(to_graph6(g));
        return next;
    }
    // final level: fold the classes into the incumbent and witness set
    long long best = cp.best;
    for (const auto& [key, g] : classes)
        best = std::max(best, count_subgraphs(p.target, g));
    next.best = best;
    for (const auto& [key, g] : classes)
        if (count_subgraphs(p.target, g) == best)
            next.witnesses.push_back(to_graph6(g));
    return next;
}

SearchResult solve_resume(const SearchCheckpoint& start) {
    auto t0 = std::chrono::steady_clock::now();
    SearchCheckpoint cp = start;
    while (cp.level < cp.problem.n) cp = advance_level(cp);
    if (cp.witnesses.empty() && !cp.frontier.empty()) {
        // n = 1: the initial frontier is already the final level
        std::map<CanonKey, Graph> classes;
        for (const Graph& g : parse_frontier(cp.frontier))
            classes.emplace(graph_key(g), g);
        cp.best = count_subgraphs(cp.problem.target, classes.begin()->second);
        for (const auto& [key, g] : classes) cp.witnesses.push_back(to_graph6(g));
    }
    std::map<CanonKey, Graph> attain;
    for (const std::string& s : cp.witnesses) {
        Graph g = from_graph6(s);
        attain.emplace(graph_key(g), g);
    }
    SearchResult res = finish(cp.problem, cp.best, attain, cp.nodes);
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

SearchResult solve(const SearchProblem& p) {
    validate(p);
    auto t0 = std::chrono::steady_clock::now();
    SearchResult res = p.mode == SearchMode::Exhaustive
                           ? solve_exhaustive(p)
                           : solve_resume(make_checkpoint(p));
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return res;
}

SearchResult solve_zykov(int n, int t, int q) {
    if (t >= q) throw std::invalid_argument("target clique must be smaller than the forbidden one");
    if (t < 2) throw std::invalid_argument("target clique needs at least an edge");
    SearchProblem p;
    p.n = n;
    p.target = complete_graph(t);
    p.forbidden = complete_graph(q);
    SearchResult res = solve(p);
    Graph expect = canonical_form(turan_graph({q - 1, n})).g;
    if (res.witnesses != std::vector<std::string>{to_graph6(expect)})
        throw std::logic_error("clique maximizer is not the balanced multipartite graph");
    return res;
}

Graph local_improve(const Graph& g0, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (has_clique(g0, r + 1))
        throw std::invalid_argument("input already contains a forbidden clique");
    Graph g = g0;
    for (;;) {
        long long base = count_p3_fast(g);
        long long best_gain = 0;
        Graph best_graph;
        bool rebalance = false;
        PartVector best_parts;
        for (int u = 0; u < g.n; u++)
            for (int v = 0; v < g.n; v++) {
                if (u == v) continue;
                Graph h = clone_replace(g, u, v);
                long long gain = count_p3_fast(h) - base;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_graph = h;
                    rebalance = false;
                }
            }
        if (auto parts = multipartite_parts(g)) {
            PartVector pv(parts->begin(), parts->end());
            while ((int)pv.size() < r) pv.push_back(0);
            for (size_t a = 0; a < pv.size(); a++)
                for (size_t b = 0; b < pv.size(); b++) {
                    if (a == b || pv[a] == 0) continue;
                    long long gain = delta_p3(pv, (int)a, (int)b).get_si();
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_parts = pv;
                        best_parts[a]--;
                        best_parts[b]++;
                        rebalance = true;
                    }
                }
        }
        if (best_gain <= 0) return g;
        if (rebalance) {
            std::sort(best_parts.rbegin(), best_parts.rend());
            std::vector<int> nz;
            for (long s : best_parts)
                if (s > 0) nz.push_back((int)s);
            g = complete_multipartite(nz);
        } else {
            g = best_graph;
        }
    }
}

std::string search_json(const SearchResult& res, bool with_timings) {
    nlohmann::ordered_json j;
    j["version"] = "p3turan-search-1";
    j["optimum"] = res.optimum;
    j["classes"] = res.classes;
    j["witnesses"] = res.witnesses;
    j["nodes"] = res.nodes;
    if (with_timings) j["timings"]["seconds"] = res.seconds;
    return j.dump(2) + "\n";
}

std::string checkpoint_render(const SearchCheckpoint& cp) {
    std::ostringstream os;
    os << "p3turan-search-checkpoint v1\n";
    os << "n " << cp.problem.n << "\n";
    os << "mode "
       << (cp.problem.mode == SearchMode::Exhaustive ? "exhaustive"
                                                     : "augmentation")
       << "\n";
    os << "workers " << cp.problem.workers << "\n";
    os << "target " << to_graph6(cp.problem.target) << "\n";
    os << "forbidden " << to_graph6(cp.problem.forbidden) << "\n";
    os << "level " << cp.level << "\n";
    os << "best " << cp.best << "\n";
    os << "nodes " << cp.nodes << "\n";
    os << "frontier " << cp.frontier.size() << "\n";
    for (const std::string& s : cp.frontier) os << s << "\n";
    os << "witnesses " << cp.witnesses.size() << "\n";
    for (const std::string& s : cp.witnesses) os << s << "\n";
    return os.str();
}

SearchCheckpoint checkpoint_parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("checkpoint parse: " + what);
    };
    if (!std::getline(is, line) || line != "p3turan-search-checkpoint v1")
        fail("bad header");
    SearchCheckpoint cp;
    auto expect_kv = [&](const std::string& key) -> std::string {
        if (!std::getline(is, line)) fail("truncated at " + key);
        std::istringstream ls(line);
        std::string k, v;
        ls >> k >> v;
        if (k != key || v.empty()) fail("expected '" + key + "' line");
        return v;
    };
    cp.problem.n = std::stoi(expect_kv("n"));
    std::string mode = expect_kv("mode");
    if (mode != "exhaustive" && mode != "augmentation") fail("bad mode");
    cp.problem.mode = mode == "exhaustive" ? SearchMode::Exhaustive
                                           : SearchMode::Augmentation;
    cp.problem.workers = std::stoi(expect_kv("workers"));
    cp.problem.target = from_graph6(expect_kv("target"));
    cp.problem.forbidden = from_graph6(expect_kv("forbidden"));
    cp.level = std::stoi(expect_kv("level"));
    cp.best = std::stoll(expect_kv("best"));
    cp.nodes = std::stoll(expect_kv("nodes"));
    long nf = std::stol(expect_kv("frontier"));
    for (long i = 0; i < nf; i++) {
        if (!std::getline(is, line) || line.empty()) fail("truncated frontier");
        cp.frontier.push_back(line);
    }
    long nw = std::stol(expect_kv("witnesses"));
    for (long i = 0; i < nw; i++) {
        if (!std::getline(is, line) || line.empty()) fail("truncated witnesses");
        cp.witnesses.push_back(line);
    }
    return cp;
}

}  // namespace p3turan
