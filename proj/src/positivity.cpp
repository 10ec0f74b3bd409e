#include "p3turan/positivity.hpp"
#include <climits>
#include <stdexcept>

namespace p3turan {

namespace {

// rational-coefficient polynomials, ascending; local helpers for the root analysis
using QPoly = std::vector<Rat>;

void qnorm(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const Poly& p) {
    QPoly q;
    for (const auto& x : p.c) q.emplace_back(x);
    qnorm(q);
    return q;
}

int qdeg(const QPoly& p) { return (int)p.size() - 1; }

QPoly qderiv(const QPoly& p) {
    QPoly r;
    for (int i = 1; i <= qdeg(p); i++) r.push_back(p[i] * i);
    qnorm(r);
    return r;
}

Rat qeval(const QPoly& p, const Rat& x) {
    Rat acc(0);
    for (int i = qdeg(p); i >= 0; i--) acc = acc * x + p[i];
    return acc;
}

QPoly qscale(QPoly p, const Rat& k) {
    for (auto& x : p) x *= k;
    return p;
}

// remainder of a by b
QPoly qrem(QPoly a, const QPoly& b) {
    int db = qdeg(b);
    while (qdeg(a) >= db) {
        Rat coef = a.back() / b.back();
        int off = qdeg(a) - db;
        for (int j = 0; j <= db; j++) a[off + j] -= coef * b[j];
        qnorm(a);
    }
    return a;
}

QPoly qdiv(QPoly a, const QPoly& b) {
    int db = qdeg(b);
    QPoly q(std::max(0, qdeg(a) - db + 1), Rat(0));
    while (qdeg(a) >= db) {
        Rat coef = a.back() / b.back();
        int off = qdeg(a) - db;
        q[off] = coef;
        for (int j = 0; j <= db; j++) a[off + j] -= coef * b[j];
        qnorm(a);
    }
    qnorm(q);
    return q;
}

QPoly qmonic(QPoly p) {
    if (p.empty()) return p;
    Rat lc = p.back();
    for (auto& x : p) x /= lc;
    return p;
}

QPoly qgcd(QPoly a, QPoly b) {
    qnorm(a);
    qnorm(b);
    while (!b.empty()) {
        QPoly r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return qmonic(a);
}

QPoly qsquarefree(const QPoly& p) {
    if (qdeg(p) <= 0) return p;
    QPoly g = qgcd(p, qderiv(p));
    if (qdeg(g) <= 0) return p;
    return qdiv(p, g);
}

// product of the irreducible factors of p of odd multiplicity (Yun decomposition)
QPoly qodd_part(const QPoly& p0) {
    QPoly p = qmonic(p0);
    if (qdeg(p) <= 0) return {Rat(1)};
    QPoly g = qgcd(p, qderiv(p));
    if (qdeg(g) <= 0) return p;  // square-free: everything has multiplicity 1
    QPoly c = qdiv(p, g);
    QPoly d = qdiv(qderiv(p), g);
    {
        QPoly cp = qderiv(c);
        QPoly nd(std::max(d.size(), cp.size()), Rat(0));
        for (size_t i = 0; i < d.size(); i++) nd[i] += d[i];
        for (size_t i = 0; i < cp.size(); i++) nd[i] -= cp[i];
        qnorm(nd);
        d = nd;
    }
    QPoly odd = {Rat(1)};
    int i = 1;
    while (qdeg(c) > 0) {
        QPoly a = qgcd(c, d);
        if (i % 2 == 1 && qdeg(a) > 0) {
            // odd *= a
            QPoly prod(odd.size() + a.size() - 1, Rat(0));
            for (size_t x = 0; x < odd.size(); x++)
                for (size_t y = 0; y < a.size(); y++)
                    prod[x + y] += odd[x] * a[y];
            qnorm(prod);
            odd = prod;
        }
        c = qdiv(c, a);
        QPoly cp = qderiv(c);
        QPoly da = qdiv(d, a);
        QPoly nd(std::max(da.size(), cp.size()), Rat(0));
        for (size_t x = 0; x < da.size(); x++) nd[x] += da[x];
        for (size_t x = 0; x < cp.size(); x++) nd[x] -= cp[x];
        qnorm(nd);
        d = nd;
        i++;
    }
    return odd;
}

int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

// Sturm chain of the square-free part of p
std::vector<QPoly> sturm_chain(const QPoly& p) {
    std::vector<QPoly> chain;
    QPoly p0 = qsquarefree(p);
    qnorm(p0);
    if (p0.empty() || qdeg(p0) == 0) return chain;
    chain.push_back(p0);
    chain.push_back(qderiv(p0));
    while (qdeg(chain.back()) > 0) {
        QPoly r = qrem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        chain.push_back(qscale(std::move(r), Rat(-1)));
    }
    return chain;
}

int variations_at(const std::vector<QPoly>& chain, const Rat& x) {
    int v = 0, last = 0;
    for (const auto& p : chain) {
        int s = sgn(qeval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) v++;
        last = s;
    }
    return v;
}

int variations_at_inf(const std::vector<QPoly>& chain) {
    int v = 0, last = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sgn(p.back());
        if (last != 0 && s != last) v++;
        last = s;
    }
    return v;
}

// number of distinct real roots of p strictly greater than a
int count_roots_open_ray(QPoly p, const Rat& a) {
    qnorm(p);
    if (p.empty() || qdeg(p) == 0) return 0;
    p = qsquarefree(p);
    // divide out any root at a so Sturm's endpoint hypothesis holds
    QPoly lin = {-a, Rat(1)};
    while (!p.empty() && qeval(p, a) == 0) p = qdiv(p, lin);
    if (p.empty() || qdeg(p) == 0) return 0;
    auto chain = sturm_chain(p);
    if (chain.empty()) return 0;
    return variations_at(chain, a) - variations_at_inf(chain);
}

} // namespace

RayResult positive_on_integer_ray(const RF& f, long r0) {
    if (f.num.is_zero()) return {RayVerdict::Nonnegative, 0, "zero"};

    Rat a((long)r0);
    // the claim is about the whole real ray, so the denominator must be zero-free there
    if (poly_eval(f.den, a) == 0 || count_roots_open_ray(to_q(f.den), a) > 0)
        throw std::domain_error("positive_on_integer_ray: pole on the ray");
    int den_sign = sgn(Rat(poly_eval(f.den, a)));

    Poly g = (den_sign > 0) ? f.num : -f.num;  // want g >= 0 on [r0, inf)

    // cheap sufficient test: expand g(s + r0); all-nonnegative coefficients settle it
    Poly gs = poly_shift(g, Int(r0));
    bool all_nonneg = true;
    for (const auto& x : gs.c)
        if (x < 0) { all_nonneg = false; break; }
    if (all_nonneg)
        return {gs.coeff(0) > 0 ? RayVerdict::Positive : RayVerdict::Nonnegative, 0, "shift"};

    // exact real-root analysis
    Int g_at = poly_eval(g, Int(r0));
    if (g_at < 0) return {RayVerdict::Fails, r0, "sturm"};
    int roots_open = count_roots_open_ray(to_q(g), a);
    bool root_at_endpoint = (g_at == 0);
    if (roots_open == 0) {
        // constant sign on the open ray, given by the leading coefficient
        if (g.lc() > 0)
            return {root_at_endpoint ? RayVerdict::Nonnegative : RayVerdict::Positive, 0, "sturm"};
        // negative beyond the endpoint despite g(r0) >= 0: impossible unless deg 0 handled above,
        // fall through to the scan to find a witness
    } else {
        // sign can only flip at roots of odd multiplicity
        QPoly odd = qodd_part(to_q(g));
        if (count_roots_open_ray(odd, a) == 0 && g.lc() > 0)
            return {RayVerdict::Nonnegative, 0, "sturm"};
    }

    for (long t = r0; t <= r0 + 4096; t++) {
        Rat v = rf_eval(f, Rat(t));
        if (v < 0) return {RayVerdict::Fails, t, "scan"};
    }
    return {RayVerdict::Fails, LLONG_MIN, "sturm"};
}

} // namespace p3turan
