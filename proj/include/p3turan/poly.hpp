#pragma once
#include "p3turan/rational.hpp"
#include <vector>
#include <string>

namespace p3turan {

// Univariate polynomial in the symbol r with arbitrary-precision integer
// coefficients, stored ascending.  Invariant: no trailing zero coefficient,
// so the zero polynomial has an empty list and degree() == -1.
struct Poly {
    std::vector<Int> c;

    Poly() = default;
    explicit Poly(const Int& k) { if (k != 0) c.push_back(k); }
    explicit Poly(long k) : Poly(Int(k)) {}

    static Poly var();                             // the polynomial r
    static Poly from_coeffs(std::vector<Int> v);   // ascending, normalized

    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    Int coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Int(0); }
    Int lc() const { return c.empty() ? Int(0) : c.back(); }
    void normalize();

    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly mul_scalar(const Poly& a, const Int& k);
Poly poly_pow(const Poly& a, unsigned e);

Rat poly_eval(const Poly& p, const Rat& x);
Int poly_eval(const Poly& p, const Int& x);
Poly poly_derivative(const Poly& p);
Poly poly_shift(const Poly& p, const Int& a);     // p(x + a)

Int poly_content(const Poly& p);                  // gcd of coefficients, >= 0 (0 for the zero poly)
Poly poly_primitive(const Poly& p);               // p / content, sign of lc preserved
Poly poly_gcd(const Poly& a, const Poly& b);      // primitive, lc > 0; poly_gcd(0,b) = primitive(|b|)
Poly poly_divexact(const Poly& a, const Poly& b); // throws std::domain_error if not divisible

std::string poly_str(const Poly& p);              // descending terms, caret powers, e.g. "3r^2 - 11r + 9"

// Ratio of integer polynomials in canonical form: numerator and denominator
// share no polynomial factor, their integer contents are coprime, and the
// denominator's leading coefficient is positive.  Zero is 0/1.
struct RF {
    Poly num, den;

    RF() : den(Poly(1)) {}
    RF(long k) : num(Poly(k)), den(Poly(1)) {}
    RF(const Int& k) : num(Poly(k)), den(Poly(1)) {}
    RF(const Rat& q);
    explicit RF(const Poly& p) : num(p), den(Poly(1)) {}
    RF(const Poly& n, const Poly& d);             // canonicalizes; throws on zero denominator

    static RF var();
    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RF& o) const { return num == o.num && den == o.den; }
};

RF operator+(const RF& a, const RF& b);
RF operator-(const RF& a, const RF& b);
RF operator-(const RF& a);
RF operator*(const RF& a, const RF& b);
RF operator/(const RF& a, const RF& b);           // throws on division by zero function
RF rf_pow(const RF& a, int e);                    // negative exponents invert

Rat rf_eval(const RF& f, const Rat& x);           // throws std::domain_error at a pole
std::string rf_str(const RF& f);                  // "num" or "(num)/(den)"
RF rf_parse(const std::string& s);                // full expression grammar: + - * / ^ ( ) integers r

} // namespace p3turan
