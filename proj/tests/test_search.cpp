#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <utility>

#include "doctest.h"
#include "json.hpp"
#include "p3turan/search.hpp"
#include "p3turan/turan.hpp"

using namespace p3turan;

static SearchProblem problem(int n, Graph t, Graph f,
                             SearchMode m = SearchMode::Augmentation,
                             int workers = 1) {
    SearchProblem p;
    p.n = n;
    p.target = std::move(t);
    p.forbidden = std::move(f);
    p.mode = m;
    p.workers = workers;
    return p;
}

TEST_CASE("path target against K5") {
    long long expect[] = {42, 112, 252, 504, 840};
    for (int n = 5; n <= 9; n++) {
        SearchResult r = solve(problem(n, path_graph(4), complete_graph(5), SearchMode::Augmentation, 2));
        CHECK(r.optimum == expect[n - 5]);
        CHECK(r.optimum == multipartite_p3(turan_parts({4, n})).get_si());
        CHECK(r.classes == 1);
        Graph t4 = canonical_form(turan_graph({4, n})).g;
        REQUIRE(r.witnesses.size() == 1);
        CHECK(r.witnesses[0] == to_graph6(t4));
        Graph w = from_graph6(r.witnesses[0]);
        CHECK(is_Kq_free(w, 5));
        CHECK(count_subgraphs(path_graph(4), w) == r.optimum);
        CHECK(r.nodes > 0);

        // sign-consistency of the per-vertex lower bound on each witness:
        // every vertex carries at least (opt - 4^-10) C(n-1,3) - n^3/256 paths
        Rat rhs = (opt_density(4) - make_rat(1, 1048576)) * Rat(binomial(n - 1, 3)) -
                  make_rat((long)n * n * n, 256);
        CHECK(rhs > 0);
        for (int v = 0; v < w.n; v++)
            CHECK(Rat((long)per_vertex_p3(w, v)) >= rhs);
    }
}

TEST_CASE("four vertex optima") {
    SearchResult r = solve(problem(4, path_graph(4), complete_graph(4)));
    CHECK(r.optimum == 6);
    CHECK(r.classes == 1);
    CHECK(r.witnesses == std::vector<std::string>{to_graph6(canonical_form(f4_basis()[9]).g)});

    // forbidding an edge leaves only empty graphs
    SearchResult r2 = solve(problem(4, path_graph(4), complete_graph(2)));
    CHECK(r2.optimum == 0);
    CHECK(r2.classes == 1);
    CHECK(r2.witnesses == std::vector<std::string>{to_graph6(Graph(4))});

    // forbidden graph larger than the host: everything is feasible
    SearchResult r3 = solve(problem(4, path_graph(4), complete_graph(5)));
    CHECK(r3.optimum == 12);
    CHECK(r3.witnesses == std::vector<std::string>{to_graph6(complete_graph(4))});
}

TEST_CASE("clique targets") {
    long long expect[] = {2, 4, 8, 12, 18, 27};
    for (int n = 4; n <= 9; n++) {
        SearchResult r = solve_zykov(n, 3, 4);
        CHECK(r.optimum == expect[n - 4]);
        CHECK(r.classes == 1);
        CHECK(r.witnesses[0] == to_graph6(canonical_form(turan_graph({3, n})).g));
    }
    SearchResult e = solve_zykov(5, 2, 3);
    CHECK(e.optimum == 6);  // floor(25/4) edges
    CHECK(e.witnesses == std::vector<std::string>{
                             to_graph6(canonical_form(turan_graph({2, 5})).g)});
    CHECK_THROWS_AS(solve_zykov(5, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(solve_zykov(5, 1, 3), std::invalid_argument);
}

TEST_CASE("mode consistency") {
    std::vector<std::pair<Graph, Graph>> combos = {
        {path_graph(4), complete_graph(5)},
        {complete_graph(3), complete_graph(4)},
        {path_graph(4), cycle_graph(4)},
        {path_graph(4), complete_multipartite({3, 1})},
    };
    for (const auto& [t, f] : combos)
        for (int n = 4; n <= 6; n++) {
            SearchResult a = solve(problem(n, t, f, SearchMode::Augmentation));
            SearchResult e = solve(problem(n, t, f, SearchMode::Exhaustive));
            CHECK(a.optimum == e.optimum);
            CHECK(a.classes == e.classes);
            CHECK(a.witnesses == e.witnesses);
        }
    // one deeper cross-check at the exhaustive cap
    SearchResult a7 = solve(problem(7, path_graph(4), complete_graph(5)));
    SearchResult e7 =
        solve(problem(7, path_graph(4), complete_graph(5), SearchMode::Exhaustive, 4));
    CHECK(a7.optimum == e7.optimum);
    CHECK(a7.witnesses == e7.witnesses);
    CHECK(e7.nodes == 1ll << 21);

    // frozen values for a non-clique forbid: optimum and class counts
    long long c4_opt[] = {2, 8, 12};
    long long c4_classes[] = {1, 1, 2};
    for (int n = 4; n <= 6; n++) {
        SearchResult r = solve(problem(n, path_graph(4), cycle_graph(4)));
        CHECK(r.optimum == c4_opt[n - 4]);
        CHECK(r.classes == c4_classes[n - 4]);
        CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
        for (const std::string& s : r.witnesses)
            CHECK(count_subgraphs(cycle_graph(4), from_graph6(s)) == 0);
    }
}

TEST_CASE("problem validation") {
    Graph p4 = path_graph(4), k5 = complete_graph(5);
    CHECK_THROWS_AS(solve(problem(0, p4, k5)), std::invalid_argument);
    CHECK_THROWS_AS(solve(problem(11, p4, k5)), std::invalid_argument);
    CHECK_THROWS_AS(solve(problem(8, p4, k5, SearchMode::Exhaustive)),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve(problem(4, Graph(0), k5)), std::invalid_argument);
    CHECK_THROWS_AS(solve(problem(4, p4, Graph(0))), std::invalid_argument);
    CHECK_THROWS_AS(solve(problem(4, p4, Graph(1))), std::invalid_argument);
    CHECK_THROWS_AS(solve(problem(4, p4, Graph(3))), std::invalid_argument);
}

TEST_CASE("checkpoint round trip") {
    SearchProblem p = problem(8, path_graph(4), complete_graph(5));
    SearchCheckpoint cp = make_checkpoint(p);
    CHECK(cp.level == 1);
    CHECK(cp.best == 504);  // seeded from the balanced multipartite family
    cp = advance_level(cp);
    cp = advance_level(cp);
    CHECK(cp.level == 3);

    std::string text = checkpoint_render(cp);
    CHECK(text.rfind("p3turan-search-checkpoint v1\n", 0) == 0);
    SearchCheckpoint back = checkpoint_parse(text);
    CHECK(back.level == cp.level);
    CHECK(back.best == cp.best);
    CHECK(back.nodes == cp.nodes);
    CHECK(back.frontier == cp.frontier);
    CHECK(back.witnesses == cp.witnesses);
    CHECK(back.problem.n == p.n);
    CHECK(back.problem.target == p.target);
    CHECK(back.problem.forbidden == p.forbidden);
    CHECK(checkpoint_render(back) == text);

    SearchResult full = solve(p);
    SearchResult resumed = solve_resume(back);
    CHECK(resumed.optimum == full.optimum);
    CHECK(resumed.witnesses == full.witnesses);
    CHECK(resumed.nodes == full.nodes);

    // a finished checkpoint cannot advance further
    SearchCheckpoint done = cp;
    while (done.level < p.n) done = advance_level(done);
    CHECK(done.witnesses.size() == 1);
    CHECK_THROWS_AS(advance_level(done), std::invalid_argument);

    SearchProblem ex = problem(5, path_graph(4), complete_graph(5), SearchMode::Exhaustive);
    CHECK_THROWS_AS(make_checkpoint(ex), std::invalid_argument);

    CHECK_THROWS_AS(checkpoint_parse("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(checkpoint_parse("p3turan-search-checkpoint v2\n"),
                    std::invalid_argument);
    std::string truncated = text.substr(0, text.size() / 2);
    CHECK_THROWS_AS(checkpoint_parse(truncated), std::invalid_argument);
}

TEST_CASE("local improvement") {
    Graph c8 = cycle_graph(8);
    Graph out = local_improve(c8, 4);
    CHECK(count_p3_fast(c8) == 8);
    CHECK(count_p3_fast(out) >= 8);
    CHECK(is_Kq_free(out, 5));
    CHECK(count_p3_fast(out) == 504);  // reaches the balanced multipartite value

    Graph t48 = turan_graph({4, 8});
    CHECK(canon_key(local_improve(t48, 4)) == canon_key(t48));

    // every complete multipartite start on 8 vertices with four parts
    // rebalances to the {2,2,2,2} profile; fewer-part starts that still
    // converge are pinned as regression values
    std::vector<std::vector<int>> starts = {{5, 1, 1, 1}, {4, 2, 1, 1}, {3, 3, 1, 1},
                                            {3, 2, 2, 1}, {2, 2, 2, 2}, {4, 4},
                                            {6, 2}, {7, 1}, {4, 3, 1}, {5, 3},
                                            {6, 1, 1}, {3, 3, 2}, {5, 2, 1}};
    for (const auto& parts : starts) {
        Graph g = complete_multipartite(parts);
        Graph h = local_improve(g, 4);
        auto hp = multipartite_parts(h);
        REQUIRE(hp.has_value());
        CHECK(*hp == std::vector<int>{2, 2, 2, 2});
    }
    // the edgeless graph sits on a plateau: one move only reaches a star,
    // which still has no four-vertex path, so strict improvement stops
    Graph idle = local_improve(Graph(8), 4);
    CHECK(count_p3_fast(idle) == 0);

    CHECK_THROWS_AS(local_improve(complete_graph(5), 4), std::invalid_argument);
    CHECK_THROWS_AS(local_improve(complete_graph(3), 0), std::invalid_argument);

    // randomized: never decreases the count, never introduces a forbidden clique
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; trial++) {
        int n = 4 + (int)(rng() % 6);
        int r = 3 + (int)(rng() % 3);
        Graph g(n);
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (rng() % 100 < 45) g.add_edge(u, v);
        // peel edges until the forbidden clique is gone
        while (has_clique(g, r + 1)) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; u++)
                for (int v = u + 1; v < n; v++)
                    if (g.has_edge(u, v)) edges.push_back({u, v});
            auto [u, v] = edges[rng() % edges.size()];
            g.remove_edge(u, v);
        }
        Graph h = local_improve(g, r);
        CHECK(count_p3_fast(h) >= count_p3_fast(g));
        CHECK(is_Kq_free(h, r + 1));
    }
}

TEST_CASE("result rendering") {
    SearchResult r = solve(problem(4, path_graph(4), complete_graph(4)));
    CHECK(r.nodes == 42);  // 2 + 2*4 + 4*8 candidate extensions
    std::string js = search_json(r, false);
    CHECK(js.find("timings") == std::string::npos);
    CHECK(search_json(r, true).find("timings") != std::string::npos);
    nlohmann::json j = nlohmann::json::parse(js);
    CHECK(j["version"] == "p3turan-search-1");
    CHECK(j["optimum"] == 6);
    CHECK(j["classes"] == 1);
    CHECK(j["witnesses"].size() == 1);
    CHECK(j["nodes"] == 42);
}
