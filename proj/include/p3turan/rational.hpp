#pragma once
#include <gmpxx.h>
#include <string>

namespace p3turan {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

// "p/q", or just "p" when the denominator is 1
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

// falling factorial n(n-1)...(n-k+1)
inline Int falling(long n, long k) {
    Int r(1);
    for (long i = 0; i < k; i++) r *= (n - i);
    return r;
}

} // namespace p3turan
