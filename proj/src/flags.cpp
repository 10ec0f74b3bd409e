#include "p3turan/flags.hpp"
#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace p3turan {

Graph sigma1() { return Graph(2); }

Graph sigma2() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

Graph flag_type(const Flag& f) {
    std::vector<int> prefix(f.k);
    for (int i = 0; i < f.k; i++) prefix[i] = i;
    return f.g.induced(prefix);
}

Flag flag_canon(const Flag& f) { return Flag{canonical_form_fixed(f.g, f.k).g, f.k}; }

Flag make_flag(const Graph& g, const std::vector<int>& theta) {
    int k = (int)theta.size();
    std::vector<char> seen(g.n, 0);
    for (int v : theta) {
        if (v < 0 || v >= g.n || seen[v]) throw std::invalid_argument("bad flag embedding");
        seen[v] = 1;
    }
    std::vector<int> perm(g.n);
    for (int i = 0; i < k; i++) perm[theta[i]] = i;
    int next = k;
    for (int v = 0; v < g.n; v++)
        if (!seen[v]) perm[v] = next++;
    return flag_canon(Flag{g.permuted(perm), k});
}

std::vector<Flag> enumerate_flags(const Graph& type, int n) {
    int k = type.n;
    if (n < k) throw std::invalid_argument("flag order below type order");
    if (n > 8) throw std::invalid_argument("enumerate_flags supports n <= 8");
    using Key = std::pair<CanonKey, int>;
    static std::mutex mu;
    static std::map<Key, std::vector<Flag>> cache;
    std::lock_guard<std::mutex> lock(mu);
    Key ck{graph_key(type), n};
    auto it = cache.find(ck);
    if (it != cache.end()) return it->second;

    std::vector<Flag> level{flag_canon(Flag{type, k})};
    for (int m = k; m < n; m++) {
        std::map<CanonKey, Flag> next;
        for (const Flag& f : level) {
            for (uint32_t s = 0; s < (1u << m); s++) {
                Graph h(m + 1);
                for (int u = 0; u < m; u++) {
                    for (int v = u + 1; v < m; v++)
                        if (f.g.has_edge(u, v)) h.add_edge(u, v);
                    if ((s >> u) & 1u) h.add_edge(u, m);
                }
                Flag c = flag_canon(Flag{h, k});
                next.emplace(graph_key(c.g), c);
            }
        }
        level.clear();
        for (auto& [key, f] : next) level.push_back(f);
    }
    cache[ck] = level;
    return level;
}

namespace {

void check_same_type(const Flag& a, const Flag& b) {
    if (a.k != b.k || !(flag_type(a) == flag_type(b)))
        throw std::invalid_argument("flag type mismatch");
}

// all m-subsets of pool, as sorted index vectors
void subsets_of(const std::vector<int>& pool, int m, size_t start, std::vector<int>& pick,
                std::vector<std::vector<int>>& out) {
    if ((int)pick.size() == m) {
        out.push_back(pick);
        return;
    }
    for (size_t i = start; i + (m - pick.size()) <= pool.size(); i++) {
        pick.push_back(pool[i]);
        subsets_of(pool, m, i + 1, pick, out);
        pick.pop_back();
    }
}

std::vector<std::vector<int>> all_subsets(const std::vector<int>& pool, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    subsets_of(pool, m, 0, pick, out);
    return out;
}

Flag induced_flag(const Flag& G, const std::vector<int>& extra) {
    std::vector<int> verts(G.k);
    for (int i = 0; i < G.k; i++) verts[i] = i;
    verts.insert(verts.end(), extra.begin(), extra.end());
    return flag_canon(Flag{G.g.induced(verts), G.k});
}

}  // namespace

Rat flag_density(const Flag& H, const Flag& G) {
    check_same_type(H, G);
    if (H.g.n > G.g.n) return Rat(0);
    int k = H.k, m = H.g.n - k;
    Flag hc = flag_canon(H);
    std::vector<int> pool;
    for (int v = k; v < G.g.n; v++) pool.push_back(v);
    long hits = 0, total = 0;
    for (const auto& s : all_subsets(pool, m)) {
        total++;
        if (induced_flag(G, s) == hc) hits++;
    }
    return make_rat(hits, total);
}

Rat joint_density(const Flag& H, const Flag& J, const Flag& G) {
    check_same_type(H, J);
    check_same_type(H, G);
    int k = H.k, h = H.g.n - k, j = J.g.n - k;
    if (G.g.n - k < h + j) throw std::invalid_argument("joint_density size overflow");
    Flag hc = flag_canon(H), jc = flag_canon(J);
    std::vector<int> pool;
    for (int v = k; v < G.g.n; v++) pool.push_back(v);
    long hits = 0, total = 0;
    for (const auto& s1 : all_subsets(pool, h)) {
        bool h_ok = induced_flag(G, s1) == hc;
        std::vector<int> rest;
        for (int v : pool)
            if (std::find(s1.begin(), s1.end(), v) == s1.end()) rest.push_back(v);
        for (const auto& s2 : all_subsets(rest, j)) {
            total++;
            if (h_ok && induced_flag(G, s2) == jc) hits++;
        }
    }
    return make_rat(hits, total);
}

Rat q_factor(const Flag& f) {
    Flag fc = flag_canon(f);
    int n = f.g.n, k = f.k;
    long hits = 0, total = 0;
    std::vector<int> theta(k);
    // iterate ordered k-tuples of distinct vertices
    std::function<void(int, uint32_t)> rec = [&](int pos, uint32_t used) {
        if (pos == k) {
            total++;
            if (make_flag(f.g, theta) == fc) hits++;
            return;
        }
        for (int v = 0; v < n; v++) {
            if ((used >> v) & 1u) continue;
            theta[pos] = v;
            rec(pos + 1, used | (1u << v));
        }
    };
    rec(0, 0);
    return make_rat(hits, total);
}

FlagVector FlagVector::zero(const Graph& type) {
    FlagVector v;
    v.type = type;
    return v;
}

void FlagVector::add(const Flag& f, const RF& c) {
    if (c.is_zero()) return;
    if (f.k != type.n || !(flag_type(f) == type)) throw std::invalid_argument("flag type mismatch");
    if (!terms.empty() && terms.begin()->second.first.g.n != f.g.n)
        throw std::invalid_argument("mixed flag orders in one vector");
    Flag fc = flag_canon(f);
    CanonKey key = graph_key(fc.g);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, std::make_pair(fc, c));
    } else {
        it->second.second = it->second.second + c;
        if (it->second.second.is_zero()) terms.erase(it);
    }
}

RF FlagVector::coeff(const Flag& f) const {
    auto it = terms.find(graph_key(flag_canon(f).g));
    return it == terms.end() ? RF(0) : it->second.second;
}

FlagVector& FlagVector::operator+=(const FlagVector& o) {
    if (!(type == o.type)) throw std::invalid_argument("flag type mismatch");
    for (const auto& [k, term] : o.terms) add(term.first, term.second);
    return *this;
}

FlagVector FlagVector::operator*(const RF& s) const {
    FlagVector out = zero(type);
    for (const auto& [k, term] : terms) out.add(term.first, term.second * s);
    return out;
}

bool FlagVector::operator==(const FlagVector& o) const {
    if (!(type == o.type) || terms.size() != o.terms.size()) return false;
    auto it = o.terms.begin();
    for (const auto& [k, term] : terms) {
        if (k != it->first || !(term.second == it->second.second)) return false;
        ++it;
    }
    return true;
}

FlagVector flag_product(const FlagVector& a, const FlagVector& b) {
    if (!(a.type == b.type)) throw std::invalid_argument("flag type mismatch");
    FlagVector out = FlagVector::zero(a.type);
    if (a.is_zero() || b.is_zero()) return out;
    int k = a.type.n;
    int v1 = a.terms.begin()->second.first.g.n;
    int v2 = b.terms.begin()->second.first.g.n;
    int N = v1 + v2 - k;
    if (N > 8) throw std::invalid_argument("flag product level above 8");
    for (const Flag& g : enumerate_flags(a.type, N)) {
        RF coeff(0);
        for (const auto& [ka, ta] : a.terms)
            for (const auto& [kb, tb] : b.terms) {
                Rat p = joint_density(ta.first, tb.first, g);
                if (p != 0) coeff = coeff + ta.second * tb.second * RF(p);
            }
        out.add(g, coeff);
    }
    return out;
}

FlagVector unlabel(const FlagVector& a) {
    FlagVector out = FlagVector::zero(Graph(0));
    for (const auto& [k, term] : a.terms) {
        Rat q = q_factor(term.first);
        Graph und = canonical_form(term.first.g).g;
        out.add(Flag{und, 0}, term.second * RF(q));
    }
    return out;
}

std::array<RF, 11> square_expand(const FlagVector& a, const RF& scale) {
    std::array<RF, 11> out;
    if (a.is_zero()) return out;
    if (a.type.n != 2 || a.terms.begin()->second.first.g.n != 3)
        throw std::invalid_argument("square_expand expects 3-vertex flags over a 2-vertex type");
    FlagVector u = unlabel(flag_product(a, a));
    for (const auto& [k, term] : u.terms) {
        int idx = f4_index(term.first.g);
        if (idx < 0) throw std::logic_error("square expansion left the 4-vertex family");
        out[idx] = out[idx] + term.second * scale;
    }
    return out;
}

namespace {

std::array<RF, 11> parse_vec(const std::array<const char*, 11>& s) {
    std::array<RF, 11> out;
    for (int i = 0; i < 11; i++) out[i] = rf_parse(s[i]);
    return out;
}

}  // namespace

std::array<RF, 11> reference_p1() {
    static const std::array<RF, 11> v = parse_vec({"6r^2 - 12r + 6", "r^2 - 2r + 1", "1 - r",
                                                   "3 - 3r", "0", "0", "0", "0", "2", "1", "0"});
    return v;
}

std::array<RF, 11> reference_p2() {
    static const std::array<RF, 11> v =
        parse_vec({"0", "0", "0", "3", "0", "0", "-1", "1", "-4", "0", "0"});
    return v;
}

std::array<RF, 11> reference_p3() {
    static const std::array<RF, 11> v =
        parse_vec({"0", "0", "0", "3(r-2)^2", "0", "0", "r^2 - 6r + 12", "r^2 - 8r + 12",
                   "4(r-2)^2", "20 - 8r", "24"});
    return v;
}

namespace {

FlagVector combo(const Graph& type, std::initializer_list<std::pair<Flag, RF>> parts) {
    FlagVector v = FlagVector::zero(type);
    for (const auto& [f, c] : parts) v.add(f, c);
    return v;
}

FlagIdentification run_identification() {
    FlagIdentification id;
    RF rm1 = rf_parse("r-1"), rm2 = rf_parse("r-2");

    // sigma1: unique ordered pair with 6((r-1)A - B)^2 = reference_p1
    std::vector<Flag> s1 = enumerate_flags(sigma1(), 3);
    int found = 0;
    for (const Flag& a : s1)
        for (const Flag& b : s1) {
            if (a == b) continue;
            auto sq = square_expand(combo(sigma1(), {{a, rm1}, {b, RF(-1)}}), RF(6));
            if (sq == reference_p1()) {
                id.A = a;
                id.B = b;
                id.p1 = sq;
                found++;
            }
        }
    if (found != 1) throw std::logic_error("sigma1 identification not unique");

    // sigma2: 6(C - D)^2 = reference_p2, symmetric in C,D; pin by key order
    std::vector<Flag> s2 = enumerate_flags(sigma2(), 3);
    found = 0;
    for (const Flag& c : s2)
        for (const Flag& d : s2) {
            if (c == d || graph_key(d.g) < graph_key(c.g)) continue;
            auto sq = square_expand(combo(sigma2(), {{c, RF(1)}, {d, RF(-1)}}), RF(6));
            if (sq == reference_p2()) {
                id.C = c;
                id.D = d;
                id.p2 = sq;
                found++;
            }
        }
    if (found != 1) throw std::logic_error("sigma2 identification not unique");

    // E: the remaining-flag choice whose square is entrywise closest to
    // reference_p3 (exact match is impossible; one entry differs)
    int best_diffs = 12;
    int best_count = 0;
    for (const Flag& e : s2) {
        if (e == id.C || e == id.D) continue;
        auto sq = square_expand(
            combo(sigma2(), {{id.C, rm2}, {id.D, rm2}, {e, RF(-2)}}), RF(6));
        int diffs = 0;
        for (int i = 0; i < 11; i++)
            if (!(sq[i] == reference_p3()[i])) diffs++;
        if (diffs < best_diffs) {
            best_diffs = diffs;
            best_count = 1;
            id.E = e;
            id.p3 = sq;
        } else if (diffs == best_diffs) {
            best_count++;
        }
    }
    if (best_count != 1) throw std::logic_error("sigma2 third-flag identification not unique");

    for (int i = 0; i < 11; i++) {
        id.p1_match[i] = id.p1[i] == reference_p1()[i];
        id.p2_match[i] = id.p2[i] == reference_p2()[i];
        id.p3_match[i] = id.p3[i] == reference_p3()[i];
    }
    return id;
}

}  // namespace

const FlagIdentification& identify_flags() {
    static const FlagIdentification id = run_identification();
    return id;
}

std::string flag_fixture_render() {
    const FlagIdentification& id = identify_flags();
    std::ostringstream os;
    os << "p3turan-flag-fixture v1\n";
    os << "A " << to_graph6(id.A.g) << "\n";
    os << "B " << to_graph6(id.B.g) << "\n";
    os << "C " << to_graph6(id.C.g) << "\n";
    os << "D " << to_graph6(id.D.g) << "\n";
    os << "E " << to_graph6(id.E.g) << "\n";
    auto emit = [&os](const char* name, const std::array<RF, 11>& v,
                      const std::array<RF, 11>& ref, const std::array<bool, 11>& match) {
        os << name << " ";
        for (int i = 0; i < 11; i++) os << rf_str(v[i]) << (i < 10 ? ";" : "\n");
        os << name << "REF ";
        for (int i = 0; i < 11; i++) os << rf_str(ref[i]) << (i < 10 ? ";" : "\n");
        os << name << "MATCH ";
        for (int i = 0; i < 11; i++) os << (match[i] ? '1' : '0');
        os << "\n";
    };
    emit("P1", id.p1, reference_p1(), id.p1_match);
    emit("P2", id.p2, reference_p2(), id.p2_match);
    emit("P3", id.p3, reference_p3(), id.p3_match);
    return os.str();
}

}  // namespace p3turan
