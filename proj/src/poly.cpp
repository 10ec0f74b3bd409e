#include "p3turan/poly.hpp"
#include <stdexcept>
#include <cctype>

namespace p3turan {

Poly Poly::var() {
    Poly p;
    p.c = {Int(0), Int(1)};
    return p;
}

Poly Poly::from_coeffs(std::vector<Int> v) {
    Poly p;
    p.c = std::move(v);
    p.normalize();
    return p;
}

void Poly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) r.c[i] = a.coeff((int)i) + b.coeff((int)i);
    r.normalize();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); i++) r.c[i] = a.coeff((int)i) - b.coeff((int)i);
    r.normalize();
    return r;
}

Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); i++)
        for (size_t j = 0; j < b.c.size(); j++)
            r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

Poly mul_scalar(const Poly& a, const Int& k) {
    if (k == 0) return Poly();
    Poly r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

Poly poly_pow(const Poly& a, unsigned e) {
    Poly r(Int(1));
    Poly base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (int i = p.degree(); i >= 0; i--) acc = acc * x + Rat(p.c[i]);
    return acc;
}

Int poly_eval(const Poly& p, const Int& x) {
    Int acc(0);
    for (int i = p.degree(); i >= 0; i--) acc = acc * x + p.c[i];
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly r;
    for (int i = 1; i <= p.degree(); i++) r.c.push_back(p.c[i] * i);
    r.normalize();
    return r;
}

Poly poly_shift(const Poly& p, const Int& a) {
    // Horner in (x + a)
    Poly r;
    Poly xa = Poly::from_coeffs({a, Int(1)});
    for (int i = p.degree(); i >= 0; i--) r = r * xa + Poly(p.c[i]);
    return r;
}

Int poly_content(const Poly& p) {
    Int g(0);
    for (const auto& x : p.c) {
        Int ax = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
    }
    return g;
}

Poly poly_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Int g = poly_content(p);
    Poly r = p;
    for (auto& x : r.c) x /= g;
    return r;
}

namespace {

// pseudo-remainder chain step: returns a multiple of rem(a, b) by a power of lc(b)
Poly prem(Poly a, const Poly& b) {
    Int lb = b.lc();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int d = a.degree() - b.degree();
        Int la = a.lc();
        Poly shifted;
        shifted.c.assign(d, Int(0));
        for (const auto& x : b.c) shifted.c.push_back(x * la);
        a = mul_scalar(a, lb) - Poly::from_coeffs(std::move(shifted.c));
    }
    return a;
}

} // namespace

Poly poly_gcd(const Poly& a0, const Poly& b0) {
    Poly a = poly_primitive(a0), b = poly_primitive(b0);
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) {
        if (!a.is_zero() && a.lc() < 0) a = -a;
        return a;
    }
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = poly_primitive(prem(a, b));
        a = b;
        b = r;
    }
    if (a.lc() < 0) a = -a;
    return a;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero polynomial");
    if (a.is_zero()) return Poly();
    if (a.degree() < b.degree()) throw std::domain_error("poly_divexact: not divisible");
    // long division over Q, then integrality check
    std::vector<Rat> rem(a.c.size());
    for (size_t i = 0; i < a.c.size(); i++) rem[i] = Rat(a.c[i]);
    int db = b.degree();
    Rat lb(b.c[db]);
    std::vector<Rat> q(a.degree() - db + 1, Rat(0));
    for (int i = a.degree(); i >= db; i--) {
        Rat coef = rem[i] / lb;
        q[i - db] = coef;
        if (coef == 0) continue;
        for (int j = 0; j <= db; j++) rem[i - db + j] -= coef * Rat(b.c[j]);
    }
    for (int i = 0; i < db; i++)
        if (rem[i] != 0) throw std::domain_error("poly_divexact: not divisible");
    Poly out;
    for (auto& x : q) {
        if (x.get_den() != 1) throw std::domain_error("poly_divexact: quotient not integral");
        out.c.push_back(x.get_num());
    }
    out.normalize();
    return out;
}

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; i--) {
        const Int k = p.c[i];
        if (k == 0) continue;
        Int ak = abs(k);
        if (s.empty()) {
            if (k < 0) s += "-";
        } else {
            s += (k < 0) ? " - " : " + ";
        }
        bool unit = (ak == 1);
        if (i == 0) {
            s += ak.get_str();
        } else {
            if (!unit) s += ak.get_str();
            s += "r";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

RF::RF(const Rat& q) : num(Poly(Int(q.get_num()))), den(Poly(Int(q.get_den()))) {}

RF::RF(const Poly& n, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("RF: zero denominator");
    if (n.is_zero()) {
        num = Poly();
        den = Poly(1);
        return;
    }
    Poly g = poly_gcd(n, d);
    Poly nn = poly_divexact(poly_primitive(n), g);
    Poly dd = poly_divexact(poly_primitive(d), g);
    // carry the contents back and cross-reduce them
    Int cn = poly_content(n), cd = poly_content(d);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    cn /= cg;
    cd /= cg;
    nn = mul_scalar(nn, cn);
    dd = mul_scalar(dd, cd);
    if (dd.lc() < 0) {
        nn = -nn;
        dd = -dd;
    }
    num = nn;
    den = dd;
}

RF RF::var() { return RF(Poly::var()); }

RF operator+(const RF& a, const RF& b) { return RF(a.num * b.den + b.num * a.den, a.den * b.den); }
RF operator-(const RF& a, const RF& b) { return RF(a.num * b.den - b.num * a.den, a.den * b.den); }
RF operator-(const RF& a) { RF r = a; r.num = -r.num; return r; }
RF operator*(const RF& a, const RF& b) { return RF(a.num * b.num, a.den * b.den); }

RF operator/(const RF& a, const RF& b) {
    if (b.is_zero()) throw std::domain_error("RF: division by zero function");
    return RF(a.num * b.den, a.den * b.num);
}

RF rf_pow(const RF& a, int e) {
    if (e < 0) return rf_pow(RF(1) / a, -e);
    RF r(1);
    RF base = a;
    unsigned u = (unsigned)e;
    while (u) {
        if (u & 1) r = r * base;
        base = base * base;
        u >>= 1;
    }
    return r;
}

Rat rf_eval(const RF& f, const Rat& x) {
    Rat d = poly_eval(f.den, x);
    if (d == 0) throw std::domain_error("rf_eval: pole at " + rat_str(x));
    return poly_eval(f.num, x) / d;
}

std::string rf_str(const RF& f) {
    if (f.den == Poly(1)) return poly_str(f.num);
    return "(" + poly_str(f.num) + ")/(" + poly_str(f.den) + ")";
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip() { while (i < s.size() && std::isspace((unsigned char)s[i])) i++; }

    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }

    bool eat(char c) {
        if (peek(c)) { i++; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("rf_parse: " + what + " at position " + std::to_string(i) + " in \"" + s + "\"");
    }

    RF parse_expr() {
        RF v = eat('-') ? -parse_term() : parse_term();
        for (;;) {
            if (eat('+')) v = v + parse_term();
            else if (eat('-')) v = v - parse_term();
            else break;
        }
        return v;
    }

    RF parse_term() {
        RF v = parse_factor();
        for (;;) {
            skip();
            if (eat('*')) { v = v * parse_factor(); continue; }
            if (eat('/')) { v = v / parse_factor(); continue; }
            // implicit multiplication: "2r", "3(r-1)", "(r-1)(r-2)", "(r-1)r"
            if (i < s.size() && (s[i] == '(' || s[i] == 'r' || std::isdigit((unsigned char)s[i]))) {
                v = v * parse_factor();
                continue;
            }
            break;
        }
        return v;
    }

    RF parse_factor() {
        RF base = parse_base();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            size_t j = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) i++;
            if (j == i) fail("expected integer exponent");
            int e = std::stoi(s.substr(j, i - j));
            base = rf_pow(base, neg ? -e : e);
        }
        return base;
    }

    RF parse_base() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            RF v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('-')) return -parse_factor();
        if (s[i] == 'r') { i++; return RF::var(); }
        if (std::isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) i++;
            return RF(Int(s.substr(j, i - j)));
        }
        fail("unexpected character");
    }
};

} // namespace

RF rf_parse(const std::string& s) {
    Parser p(s);
    RF v = p.parse_expr();
    p.skip();
    if (p.i != s.size()) p.fail("trailing input");
    return v;
}

} // namespace p3turan
