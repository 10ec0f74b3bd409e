#pragma once
#include <string>
#include <vector>
#include "p3turan/graph.hpp"
#include "p3turan/poly.hpp"
#include "p3turan/rational.hpp"

namespace p3turan {

// Part sizes |V_1|,...,|V_r| of a complete multipartite graph.  Zero sizes
// are permitted and contribute nothing.
using PartVector = std::vector<long>;

struct TuranSpec {
    int r = 1;
    int n = 0;
};

// Balanced part sizes of T_r(n); part i holds the vertices v with v mod r == i.
PartVector turan_parts(const TuranSpec& spec);
// Materialized T_r(n), vertex v in part v mod r (pinned so graph6 output is
// byte-reproducible).  Throws std::invalid_argument when n > 32.
Graph turan_graph(const TuranSpec& spec);

long long count_triangles(const Graph& g);
// nu(P3,G) via sum over edges uv of (d(u)-1)(d(v)-1), minus 3 * triangles.
long long count_p3_fast(const Graph& g);

// nu(P3, complete multipartite on these parts): exact closed form, no size cap.
Int multipartite_p3(const PartVector& parts);

// Count change when one vertex moves from parts[from] to parts[to].  Returns
// the recount difference and cross-checks it against delta_p3_closed.
// Throws std::invalid_argument if the source part is empty.
Int delta_p3(const PartVector& parts, int from, int to);
// Closed form (a-b-1)((n-a-b)(n-3) + 2(a-1)b + 2 sum_j c_j(n-2-c_j)) where
// a = parts[from], b = parts[to] and c_j runs over the remaining sizes.
Int delta_p3_closed(const PartVector& parts, int from, int to);
// Reference rendering of the same delta with weight 1 on the c_j sum.  Kept
// for comparison only: it disagrees with the recount whenever the leading
// factor and the c_j sum are both nonzero.
Int delta_p3_reference(const PartVector& parts, int from, int to);

// 12((r-1)/r)^3, as a value and as a rational function of r.
Rat opt_density(long r);
RF opt_density_rf();
// Main term C(r,2)(n/r)^2((n/r-1)^2 + (n-2n/r)(n-3)) of the asymptotic path
// count; agrees with multipartite_p3 on balanced parts exactly when r | n.
Rat turan_p3_asymptotic(long r, long n);

// Exact K4 count of T_r(n): elementary symmetric function e_4 of part sizes.
Int zykov_k4(const TuranSpec& spec);
// (r^3 - 6r^2 + 11r - 6)/r^3
Rat zykov_bound(long r);

// Number of P3 subgraphs containing v, resp. containing both u and v.
long long per_vertex_p3(const Graph& g, int v);
long long pair_p3(const Graph& g, int u, int v);

// Drop v's edges and reuse slot v as a clone u' with N(u') = N(u)\{v}; u' is
// never adjacent to u, and K_q-freeness is preserved for every q.  Throws
// std::invalid_argument on u == v.
Graph clone_replace(const Graph& g, int u, int v);

struct ConvergenceRow {
    long r = 0, n = 0;
    Int nu_p3;
    Rat density_times_24, opt, gap;  // gap = density_times_24 - opt
};
std::vector<ConvergenceRow> convergence_rows(long r, long nmin, long nmax);
// CSV with header r,n,nu_p3,density_times_24,opt,gap, exact rational entries
std::string convergence_csv(long r, long nmin, long nmax);

}  // namespace p3turan
