// Acceptance gate: one criterion per invocation, one PASS or FAIL line on
// stdout, exit 0 on pass and 1 on fail.  Criteria 3, 4 and 10 state exact
// agreement with reference values that the implementation can measure but
// not reproduce; they fail with the precise discrepancy (see README).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "p3turan/certificate.hpp"
#include "p3turan/flags.hpp"
#include "p3turan/graph.hpp"
#include "p3turan/search.hpp"
#include "p3turan/turan.hpp"

using namespace p3turan;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

int workers() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

void partitions_into(int n, int max_part, std::vector<long>& cur,
                     std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; p--) {
        cur.push_back(p);
        partitions_into(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long>> partitions(int n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partitions_into(n, n, cur, out);
    return out;
}

Outcome criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<PerR> scan = verify_max(4, 1000, workers());
    double dt = seconds_since(t0);
    std::vector<int> tight = {0, 3, 8, 9, 10};
    for (const PerR& row : scan) {
        if (row.max != opt_density(row.r))
            return {false, "r=" + std::to_string(row.r) + ": max " +
                               rat_str(row.max) + " != " +
                               rat_str(opt_density(row.r))};
        if (row.argmax != tight)
            return {false, "r=" + std::to_string(row.r) + ": argmax drifted"};
    }
    if (dt >= 60.0)
        return {false, "scan took " + std::to_string(dt) + "s, budget 60s"};
    char buf[64];
    std::snprintf(buf, sizeof buf, "997 values of r, %.2fs", dt);
    return {true, buf};
}

Outcome criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<RayVerdictEntry> entries = verify_weights();
    std::vector<RayVerdictEntry> oc = opt_minus_c_verdicts();
    entries.insert(entries.end(), oc.begin(), oc.end());
    double dt = seconds_since(t0);
    for (const RayVerdictEntry& e : entries)
        if (!e.ok) return {false, e.name + ": " + e.verdict + " (" + e.detail + ")"};
    if (dt >= 5.0)
        return {false, "proofs took " + std::to_string(dt) + "s, budget 5s"};
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu ray bounds, %.2fs", entries.size(), dt);
    return {true, buf};
}

Outcome criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    const FlagIdentification& id = identify_flags();  // throws if not unique
    double dt = seconds_since(t0);
    if (dt >= 5.0)
        return {false, "expansion took " + std::to_string(dt) + "s, budget 5s"};
    std::array<RF, 11> refs[3] = {reference_p1(), reference_p2(), reference_p3()};
    const std::array<RF, 11>* got[3] = {&id.p1, &id.p2, &id.p3};
    std::string diffs;
    for (int j = 0; j < 3; j++)
        for (int i = 0; i < 11; i++)
            if (!((*got[j])[i] == refs[j][i])) {
                if (!diffs.empty()) diffs += "; ";
                diffs += "P" + std::to_string(j + 1) + "[F" + std::to_string(i) +
                         "] computed " + rf_str((*got[j])[i]) + ", reference " +
                         rf_str(refs[j][i]);
            }
    if (!diffs.empty()) return {false, diffs};
    return {true, "all 33 coefficients match"};
}

Outcome criterion4() {
    const std::array<RF, 11>& c = build_certificate().C;
    std::array<RF, 11> ref = reference_coefficient_table();
    std::string diffs;
    for (int i = 0; i < 11; i++)
        if (!(c[i] == ref[i])) {
            if (!diffs.empty()) diffs += "; ";
            diffs += "C[F" + std::to_string(i) + "] differs from the reference by " +
                     rf_str(c[i] - ref[i]) + " (values agree at r=4 only)";
        }
    if (!diffs.empty()) return {false, diffs};
    return {true, "all 11 closed forms match"};
}

Outcome criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 5; n <= 9; n++) {
        SearchProblem p;
        p.n = n;
        p.target = path_graph(4);
        p.forbidden = complete_graph(5);
        p.workers = workers();
        SearchResult r = solve(p);
        Int expect = multipartite_p3(turan_parts({4, n}));
        if (Int((long)r.optimum) != expect)
            return {false, "n=" + std::to_string(n) + ": optimum " +
                               std::to_string(r.optimum) + " != " + expect.get_str()};
        std::string t4 = to_graph6(canonical_form(turan_graph({4, n})).g);
        if (r.classes != 1 || r.witnesses != std::vector<std::string>{t4})
            return {false, "n=" + std::to_string(n) + ": witness set is not exactly " +
                               "the balanced four-partite graph"};
    }
    double dt = seconds_since(t0);
    if (dt >= 600.0)
        return {false, "search took " + std::to_string(dt) + "s, budget 600s"};
    char buf[64];
    std::snprintf(buf, sizeof buf, "n=5..9 unique witnesses, %.2fs", dt);
    return {true, buf};
}

Outcome criterion6() {
    for (int n = 4; n <= 9; n++) {
        SearchResult r;
        try {
            r = solve_zykov(n, 3, 4);  // throws if the witness drifts
        } catch (const std::exception& e) {
            return {false, "n=" + std::to_string(n) + ": " + e.what()};
        }
        long long expect =
            count_subgraphs(complete_graph(3), turan_graph({3, n}));
        if (r.optimum != expect || r.classes != 1)
            return {false, "n=" + std::to_string(n) + ": optimum " +
                               std::to_string(r.optimum) + " classes " +
                               std::to_string(r.classes) + ", expected " +
                               std::to_string(expect) + " and 1"};
    }
    return {true, "n=4..9 unique witnesses"};
}

Outcome criterion7() {
    // formula count against the generic subgraph counter, all classes n <= 7
    Graph p4 = path_graph(4);
    long long checked = 0;
    for (int n = 0; n <= 7; n++)
        for (const Graph& g : enumerate_graphs(n).graphs) {
            if (count_p3_fast(g) != count_subgraphs(p4, g))
                return {false, "count mismatch on " + to_graph6(g)};
            checked++;
        }
    // closed multipartite form against materialized counts, all parts n <= 12
    for (int n = 1; n <= 12; n++)
        for (const std::vector<long>& parts : partitions(n)) {
            Graph g = complete_multipartite(std::vector<int>(parts.begin(), parts.end()));
            if (Int((long)count_p3_fast(g)) != multipartite_p3(parts))
                return {false, "multipartite mismatch at n=" + std::to_string(n)};
            // move deltas on the same sweep, including opening a new part
            std::vector<long> padded = parts;
            padded.push_back(0);
            for (size_t a = 0; a < padded.size(); a++)
                for (size_t b = 0; b < padded.size(); b++) {
                    if (a == b || padded[a] == 0) continue;
                    std::vector<long> moved = padded;
                    moved[a]--;
                    moved[b]++;
                    Int recount = multipartite_p3(moved) - multipartite_p3(padded);
                    if (delta_p3_closed(padded, (int)a, (int)b) != recount ||
                        delta_p3(padded, (int)a, (int)b) != recount)
                        return {false, "delta mismatch at n=" + std::to_string(n)};
                    checked++;
                }
        }
    return {true, std::to_string(checked) + " exact comparisons"};
}

Outcome criterion8() {
    for (int n = 1; n <= 12; n++)
        for (int r = 1; r <= n; r++) {
            std::vector<long> balanced = turan_parts({r, n});
            std::sort(balanced.rbegin(), balanced.rend());
            Int best = multipartite_p3(balanced);
            for (const std::vector<long>& parts : partitions(n)) {
                if ((int)parts.size() != r) continue;
                if (parts == balanced) continue;
                if (multipartite_p3(parts) >= best) {
                    std::string s;
                    for (long x : parts) s += std::to_string(x) + ",";
                    return {false, "parts " + s + " ties or beats balance at n=" +
                                       std::to_string(n) + " r=" + std::to_string(r)};
                }
            }
        }
    return {true, "balanced parts strictly dominate, n <= 12"};
}

Outcome criterion9() {
    long long checked = 0;
    for (int n = 0; n <= 7; n++)
        for (const Graph& g : enumerate_graphs(n).graphs) {
            bool multipartite = multipartite_parts(g).has_value();
            bool cocherry_free = !find_induced_cocherry(g).has_value();
            if (multipartite != cocherry_free)
                return {false, "characterization breaks on " + to_graph6(g)};
            checked++;
        }
    return {true, std::to_string(checked) + " graphs checked"};
}

Outcome criterion10() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ConvergenceRow> rows = convergence_rows(4, 40, 2000);
    double dt = seconds_since(t0);
    long long violations = 0;
    std::string first;
    Rat min_ngap, max_ngap;
    bool have = false;
    for (const ConvergenceRow& row : rows) {
        Rat gap = row.gap < 0 ? -row.gap : row.gap;
        Rat ngap = gap * Rat((long)row.n);
        if (!have || ngap < min_ngap) min_ngap = ngap;
        if (!have || ngap > max_ngap) max_ngap = ngap;
        have = true;
        if (gap > make_rat(12, row.n)) {
            violations++;
            if (first.empty())
                first = "n=" + std::to_string(row.n) + ": gap " + rat_str(row.gap) +
                        " > " + rat_str(make_rat(12, row.n));
        }
    }
    if (dt >= 30.0)
        return {false, "sweep took " + std::to_string(dt) + "s, budget 30s"};
    if (violations > 0)
        return {false, std::to_string(violations) + " of " +
                           std::to_string(rows.size()) + " rows violate; " + first +
                           "; n*gap ranges [" + rat_str(min_ngap) + ", " +
                           rat_str(max_ngap) + "], entirely above 12"};
    return {true, "gap within 12/n for n=40..2000"};
}

Outcome criterion11() {
    std::vector<RayVerdictEntry> entries = verify_section4_inequalities();
    if (entries.size() != 4)
        return {false, "expected 4 margins, got " + std::to_string(entries.size())};
    for (const RayVerdictEntry& e : entries)
        if (!e.ok) return {false, e.name + ": " + e.verdict + " (" + e.detail + ")"};
    bool stronger = false;
    for (const RayVerdictEntry& e : entries)
        if (e.name == "tail48_minus_quartic" && e.ok) stronger = true;
    if (!stronger) return {false, "stronger tail variant was not certified"};
    return {true, "all four margins positive on the ray"};
}

Outcome criterion12() {
    // density normalization and the chain rule over unlabelled 4..6-vertex flags
    Graph type(0);
    std::vector<Flag> h4 = enumerate_flags(type, 4);
    std::vector<Flag> h5 = enumerate_flags(type, 5);
    std::vector<Flag> hosts;
    for (const Graph& g : enumerate_graphs(6).graphs)
        if (g.edge_count() % 5 == 0) hosts.push_back(Flag{g, 0});
    hosts.push_back(Flag{turan_graph({4, 6}), 0});
    for (const Flag& G : hosts) {
        Rat total(0);
        for (const Flag& H : h4) total += flag_density(H, G);
        if (total != Rat(1)) return {false, "normalization breaks on " + to_graph6(G.g)};
        for (const Flag& H : h4) {
            Rat direct = flag_density(H, G);
            Rat chained(0);
            for (const Flag& M : h5) chained += flag_density(H, M) * flag_density(M, G);
            if (direct != chained)
                return {false, "chain rule breaks on " + to_graph6(G.g)};
        }
    }
    // product bilinearity on 3-vertex flags over the edge type
    std::vector<Flag> e3 = enumerate_flags(sigma2(), 3);
    if (e3.size() < 3) return {false, "unexpected flag family size"};
    RF s = RF(Poly::from_coeffs({1, 1}));  // r + 1
    FlagVector a = FlagVector::zero(sigma2()), b = a, c = a;
    a.add(e3[0], RF(1));
    a.add(e3[1], RF(Poly::from_coeffs({0, 2})));
    b.add(e3[1], RF(-3));
    b.add(e3[2], s);
    c.add(e3[0], RF(2));
    c.add(e3[2], RF(1));
    FlagVector ab = a;
    ab += b;
    FlagVector lhs = flag_product(ab, c);
    FlagVector rhs = flag_product(a, c);
    rhs += flag_product(b, c);
    if (!(lhs == rhs)) return {false, "product is not additive"};
    if (!(flag_product(a * s, c) == flag_product(a, c) * s))
        return {false, "product does not commute with scaling"};

    // clone moves never create the forbidden clique
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 500; trial++) {
        int n = 5 + (int)(rng() % 5);
        int q = 4 + (int)(rng() % 3);
        Graph g(n);
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (rng() % 100 < 60) g.add_edge(u, v);
        while (has_clique(g, q)) {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; u++)
                for (int v = u + 1; v < n; v++)
                    if (g.has_edge(u, v)) edges.push_back({u, v});
            auto [u, v] = edges[rng() % edges.size()];
            g.remove_edge(u, v);
        }
        int u = (int)(rng() % n), v = (int)(rng() % n);
        if (u == v) v = (v + 1) % n;
        Graph h = clone_replace(g, u, v);
        if (has_clique(h, q))
            return {false, "clone move created a forbidden clique, trial " +
                               std::to_string(trial)};
    }
    return {true, "normalization, chain rule, bilinearity, 500 clone moves"};
}

const char* labels[12] = {
    "integer scan of the certificate maximum",
    "symbolic nonnegativity on the ray",
    "flag expansions match the reference vectors",
    "assembled coefficients match the reference closed forms",
    "exhaustive path maximum on five to nine vertices",
    "exhaustive triangle maximum under a forbidden four-clique",
    "counting oracle agreement",
    "balanced parts uniquely dominate",
    "complete multipartite equals no induced co-cherry",
    "density gap within twelve over n",
    "four scalar inequality margins",
    "algebraic invariants and randomized clone moves",
};

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..12>\n");
        return 2;
    }
    int k = std::atoi(argv[1]);
    if (k < 1 || k > 12) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..12>\n");
        return 2;
    }
    Outcome (*fns[12])() = {criterion1, criterion2,  criterion3,  criterion4,
                            criterion5, criterion6,  criterion7,  criterion8,
                            criterion9, criterion10, criterion11, criterion12};
    Outcome o;
    try {
        o = fns[k - 1]();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s: criterion %d (%s)%s%s\n", o.pass ? "PASS" : "FAIL", k,
                labels[k - 1], o.detail.empty() ? "" : " - ",
                o.detail.c_str());
    return o.pass ? 0 : 1;
}
