#include "p3turan/turan.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace p3turan {

PartVector turan_parts(const TuranSpec& spec) {
    if (spec.r < 1) throw std::invalid_argument("need at least one part");
    if (spec.n < 0) throw std::invalid_argument("negative order");
    PartVector parts(spec.r);
    for (int i = 0; i < spec.r; i++)
        parts[i] = spec.n / spec.r + (i < spec.n % spec.r ? 1 : 0);
    return parts;
}

Graph turan_graph(const TuranSpec& spec) {
    if (spec.r < 1) throw std::invalid_argument("need at least one part");
    if (spec.n < 0 || spec.n > 32)
        throw std::invalid_argument("turan_graph size cap is 32 vertices");
    Graph g(spec.n);
    for (int u = 0; u < spec.n; u++)
        for (int v = u + 1; v < spec.n; v++)
            if (u % spec.r != v % spec.r) g.add_edge(u, v);
    return g;
}

long long count_triangles(const Graph& g) {
    long long t = 0;
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++)
            if (g.has_edge(u, v)) t += std::popcount(g.adj[u] & g.adj[v]);
    return t / 3;
}

long long count_p3_fast(const Graph& g) {
    long long s = 0;
    for (int u = 0; u < g.n; u++)
        for (int v = u + 1; v < g.n; v++)
            if (g.has_edge(u, v))
                s += (long long)(g.degree(u) - 1) * (g.degree(v) - 1);
    return s - 3 * count_triangles(g);
}

Int multipartite_p3(const PartVector& parts) {
    if (parts.empty()) throw std::invalid_argument("need at least one part");
    Int n = 0;
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("negative part size");
        n += p;
    }
    Int total = 0;
    for (size_t i = 0; i < parts.size(); i++)
        for (size_t j = i + 1; j < parts.size(); j++) {
            Int a(parts[i]), b(parts[j]);
            total += a * b * ((a - 1) * (b - 1) + (n - a - b) * (n - 3));
        }
    return total;
}

namespace {

Int delta_closed_weighted(const PartVector& parts, int from, int to, long w) {
    Int n = 0;
    for (long p : parts) n += p;
    Int a(parts[from]), b(parts[to]);
    Int rest = 0;
    for (size_t j = 0; j < parts.size(); j++) {
        if ((int)j == from || (int)j == to) continue;
        Int c(parts[j]);
        rest += c * (n - 2 - c);
    }
    return (a - b - 1) * ((n - a - b) * (n - 3) + 2 * (a - 1) * b + w * rest);
}

void check_move(const PartVector& parts, int from, int to) {
    if (from < 0 || to < 0 || from >= (int)parts.size() || to >= (int)parts.size())
        throw std::invalid_argument("part index out of range");
    if (parts[from] < 1) throw std::invalid_argument("moving from an empty part");
}

}  // namespace

Int delta_p3_closed(const PartVector& parts, int from, int to) {
    check_move(parts, from, to);
    return delta_closed_weighted(parts, from, to, 2);
}

Int delta_p3_reference(const PartVector& parts, int from, int to) {
    check_move(parts, from, to);
    return delta_closed_weighted(parts, from, to, 1);
}

Int delta_p3(const PartVector& parts, int from, int to) {
    check_move(parts, from, to);
    if (from == to) return 0;
    PartVector moved = parts;
    moved[from]--;
    moved[to]++;
    Int d = multipartite_p3(moved) - multipartite_p3(parts);
    if (d != delta_p3_closed(parts, from, to))
        throw std::logic_error("delta recount disagrees with closed form");
    return d;
}

Rat opt_density(long r) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    Int m(r - 1);
    return make_rat(12 * m * m * m, Int(r) * r * r);
}

RF opt_density_rf() {
    Poly num = Poly::from_coeffs({Int(-12), Int(36), Int(-36), Int(12)});
    Poly den = Poly::from_coeffs({Int(0), Int(0), Int(0), Int(1)});
    return RF(num, den);
}

Rat turan_p3_asymptotic(long r, long n) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    Rat s = make_rat(n, r);
    Rat one(1);
    return Rat(binomial(r, 2)) * s * s *
           ((s - one) * (s - one) + (Rat((long)n) - 2 * s) * Rat((long)(n - 3)));
}

Int zykov_k4(const TuranSpec& spec) {
    PartVector parts = turan_parts(spec);
    std::vector<Int> e(5, Int(0));
    e[0] = 1;
    for (long p : parts)
        for (int k = 4; k >= 1; k--) e[k] += e[k - 1] * p;
    return e[4];
}

Rat zykov_bound(long r) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    return make_rat(Int(r - 1) * (r - 2) * (r - 3), Int(r) * r * r);
}

long long per_vertex_p3(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex out of range");
    return count_p3_fast(g) - count_p3_fast(g.without_vertex(v));
}

long long pair_p3(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
        throw std::invalid_argument("bad vertex pair");
    int hi = u > v ? u : v, lo = u > v ? v : u;
    Graph both = g.without_vertex(hi).without_vertex(lo);
    return count_p3_fast(g) - count_p3_fast(g.without_vertex(u)) -
           count_p3_fast(g.without_vertex(v)) + count_p3_fast(both);
}

Graph clone_replace(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("clone source equals target");
    if (u < 0 || v < 0 || u >= g.n || v >= g.n)
        throw std::invalid_argument("vertex out of range");
    Graph h = g;
    for (int w = 0; w < g.n; w++)
        if (h.has_edge(v, w)) h.remove_edge(v, w);
    for (int w = 0; w < g.n; w++)
        if (w != v && g.has_edge(u, w)) h.add_edge(v, w);
    return h;
}

std::vector<ConvergenceRow> convergence_rows(long r, long nmin, long nmax) {
    if (nmin < 4) throw std::invalid_argument("need nmin >= 4");
    if (r < 1 || r > 1000000) throw std::invalid_argument("bad part count");
    std::vector<ConvergenceRow> rows;
    Rat opt = opt_density(r);
    for (long n = nmin; n <= nmax; n++) {
        ConvergenceRow row;
        row.r = r;
        row.n = n;
        row.nu_p3 = multipartite_p3(turan_parts({(int)r, (int)n}));
        row.density_times_24 = make_rat(24 * row.nu_p3, falling(n, 4));
        row.opt = opt;
        row.gap = row.density_times_24 - opt;
        rows.push_back(row);
    }
    return rows;
}

std::string convergence_csv(long r, long nmin, long nmax) {
    std::ostringstream out;
    out << "r,n,nu_p3,density_times_24,opt,gap\n";
    for (const ConvergenceRow& row : convergence_rows(r, nmin, nmax))
        out << row.r << ',' << row.n << ',' << row.nu_p3.get_str() << ','
            << rat_str(row.density_times_24) << ',' << rat_str(row.opt) << ','
            << rat_str(row.gap) << '\n';
    return out.str();
}

}  // namespace p3turan
