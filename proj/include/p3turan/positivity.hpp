#pragma once
#include "p3turan/poly.hpp"
#include <string>

namespace p3turan {

enum class RayVerdict { Positive, Nonnegative, Fails };

struct RayResult {
    RayVerdict verdict;
    long long fail_at = 0;   // integer witness when verdict == Fails (LLONG_MIN if only a real refutation was found)
    std::string method;      // "zero", "shift", "sturm", "scan"
};

inline const char* verdict_str(RayVerdict v) {
    switch (v) {
        case RayVerdict::Positive: return "positive";
        case RayVerdict::Nonnegative: return "nonnegative";
        default: return "fails";
    }
}

// Decides sign of f on the full real ray [r0, infinity).
//   Positive:     f(r) >  0 for all real r >= r0
//   Nonnegative:  f(r) >= 0 for all real r >= r0 (with a zero somewhere on the ray)
//   Fails:        a point with f < 0 exists; fail_at holds an integer witness when one is found by scan
// Method: substitute r = s + r0 and accept if all shifted numerator coefficients are
// nonnegative; otherwise exact real-root analysis (Sturm chains on the square-free and
// odd-multiplicity parts); otherwise an integer scan for a witness.
// Throws std::domain_error if the denominator vanishes anywhere on the ray.
RayResult positive_on_integer_ray(const RF& f, long r0);

} // namespace p3turan
