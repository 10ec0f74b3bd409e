#include "p3turan/certificate.hpp"

#include <chrono>
#include <climits>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "p3turan/turan.hpp"

namespace p3turan {

RF opt_rf() { return opt_density_rf(); }

RF zykov_bound_rf() {
    Poly num = Poly::from_coeffs({Int(-6), Int(11), Int(-6), Int(1)});
    Poly den = Poly::from_coeffs({Int(0), Int(0), Int(0), Int(1)});
    return RF(num, den);
}

RF weight_p(int j) {
    switch (j) {
        case 0: return rf_parse("18(r^2 - 2r + 1)/(3r^2 - 11r + 9)");
        case 1: return rf_parse("(3r^3 - 10r^2 + 7r)/(3r^5 - 11r^4 + 9r^3)");
        case 2: return rf_parse("(9r^5 - 32r^4 + 25r^3)/(4(3r^5 - 11r^4 + 9r^3))");
        case 3: return rf_parse("(15r^3 - 24r^2 + 7r)/(4(3r^5 - 11r^4 + 9r^3))");
        default: throw std::invalid_argument("weight index out of range");
    }
}

RF delta1_rf() {
    return rf_parse(
        "12 - 45/r + 111/(2r^2) - 27/(2r^3) - 21/r^4 + 24/r^5 + 3/(2r^6) - "
        "3/(2r^7)");
}

RF delta2_rf() {
    return rf_parse("12 - 54/r + 78/r^2 - 96/r^4 + 72/r^5 + 24/r^6 - 24/r^7");
}

std::array<RF, 11> p0_coeffs() {
    std::array<RF, 11> c;
    RF zb = zykov_bound_rf();
    for (int i = 0; i < 10; i++) c[i] = zb;
    c[10] = zb - RF(1);
    return c;
}

FlagVector build_p0() {
    FlagVector v = FlagVector::zero(Graph(0));
    std::array<RF, 11> c = p0_coeffs();
    for (int i = 0; i < 11; i++) v.add(Flag{f4_basis()[i], 0}, c[i]);
    return v;
}

std::vector<int> tight_set() { return {0, 3, 8, 9, 10}; }

const CoefficientTable& build_certificate() {
    static const CoefficientTable table = [] {
        const FlagIdentification& id = identify_flags();
        std::array<RF, 11> p0c = p0_coeffs();
        std::array<const std::array<RF, 11>*, 3> sq = {&id.p1, &id.p2, &id.p3};
        CoefficientTable t;
        for (int i = 0; i < 11; i++) {
            RF c = RF(Int((long)f4_p3_counts()[i])) + weight_p(0) * p0c[i];
            for (int j = 1; j <= 3; j++) c = c + weight_p(j) * (*sq[j - 1])[i];
            t.C[i] = c;
        }
        for (int i : tight_set())
            if (!(t.C[i] == opt_rf()))
                throw std::logic_error("tight coefficient " + std::to_string(i) +
                                       " is " + rf_str(t.C[i]) + ", expected " +
                                       rf_str(opt_rf()));
        return t;
    }();
    return table;
}

std::array<RF, 11> reference_coefficient_table() {
    std::array<RF, 11> c;
    RF opt = rf_parse("12(r - 1)^3/r^3");
    c[0] = c[3] = c[8] = c[9] = c[10] = opt;
    c[1] = rf_parse("(21r^2 - 97r + 108)(r - 1)^3/(3r^5 - 11r^4 + 9r^3)");
    c[2] = rf_parse("(18r^3 - 111r^2 + 205r - 108)(r - 1)^2/(3r^5 - 11r^4 + 9r^3)");
    c[4] = c[5] = rf_parse("18(r - 1)^3(r - 2)(r - 3)/(3r^5 - 11r^4 + 9r^3)");
    c[6] = rf_parse(
        "(45r^5 - 351r^4 + 1035r^3 - 1389r^2 + 870r - 216)/"
        "(2(3r^5 - 11r^4 + 9r^3))");
    c[7] = rf_parse("(30r^4 - 180r^3 + 371r^2 - 327r + 108)(r - 1)/(3r^5 - 11r^4 + 9r^3)");
    return c;
}

std::array<bool, 11> coefficient_fixture_match() {
    const CoefficientTable& t = build_certificate();
    std::array<RF, 11> ref = reference_coefficient_table();
    std::array<bool, 11> m;
    for (int i = 0; i < 11; i++) m[i] = t.C[i] == ref[i];
    return m;
}

std::vector<PerR> verify_max(long rmin, long rmax, int workers) {
    if (rmin < 4)
        throw std::invalid_argument("certificate covers r >= 4 only");
    if (rmax < rmin) throw std::invalid_argument("empty r range");
    const CoefficientTable& t = build_certificate();
    long count = rmax - rmin + 1;
    std::vector<PerR> out((size_t)count);
    int w = std::max(1, workers);
    auto work = [&](int tid) {
        for (long idx = tid; idx < count; idx += w) {
            long r = rmin + idx;
            PerR p;
            p.r = r;
            for (int i = 0; i < 11; i++) {
                Rat v = rf_eval(t.C[i], Rat(r));
                if (i == 0 || v > p.max) {
                    p.max = v;
                    p.argmax.clear();
                }
                if (v == p.max) p.argmax.push_back(i);
            }
            out[(size_t)idx] = std::move(p);
        }
    };
    if (w == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < w; tid++) pool.emplace_back(work, tid);
        for (std::thread& th : pool) th.join();
    }
    return out;
}

namespace {

RayVerdictEntry ray_entry(std::string name, const RF& f, bool strict) {
    RayResult res = positive_on_integer_ray(f, 4);
    RayVerdictEntry e;
    e.name = std::move(name);
    e.verdict = verdict_str(res.verdict);
    e.detail = res.method;
    if (res.verdict == RayVerdict::Fails && res.fail_at != LLONG_MIN)
        e.detail += " fail_at=" + std::to_string(res.fail_at);
    e.ok = strict ? res.verdict == RayVerdict::Positive
                  : res.verdict != RayVerdict::Fails;
    return e;
}

}  // namespace

std::vector<RayVerdictEntry> verify_weights() {
    std::vector<RayVerdictEntry> out;
    for (int j = 0; j < 4; j++)
        out.push_back(ray_entry("p" + std::to_string(j), weight_p(j), false));
    return out;
}

std::vector<RayVerdictEntry> opt_minus_c_verdicts() {
    const CoefficientTable& t = build_certificate();
    std::vector<RayVerdictEntry> out;
    for (int i = 0; i < 11; i++)
        out.push_back(ray_entry("opt_minus_C" + std::to_string(i),
                                opt_rf() - t.C[i], false));
    return out;
}

std::vector<RayVerdictEntry> verify_section4_inequalities() {
    RF r = RF::var();
    RF tail39 = RF(9) / r - RF(39) / (RF(2) * r * r);
    RF tail42 = RF(18) / r - RF(42) / (r * r) - RF(12) / (r * r * r);
    RF tail48 = RF(18) / r - RF(48) / (r * r) - RF(12) / (r * r * r);
    RF quart = RF(1) / rf_pow(r, 4);
    std::vector<RayVerdictEntry> out;
    out.push_back(ray_entry("opt_minus_delta1_vs_tail39",
                            opt_rf() - delta1_rf() - tail39, true));
    out.push_back(ray_entry("opt_minus_delta2_vs_tail42",
                            opt_rf() - delta2_rf() - tail42, true));
    // the quartic tail bound circulates in a 48 and a 42 variant; the 48 form
    // is stronger, so it is the one certified.  The weaker variant is only
    // reported if the two ever disagree in verdict.
    RayVerdictEntry e48 = ray_entry("tail48_minus_quartic", tail48 - quart, true);
    RayVerdictEntry e42 = ray_entry("tail42_minus_quartic", tail42 - quart, true);
    out.push_back(e48);
    if (e42.verdict != e48.verdict) out.push_back(e42);
    out.push_back(ray_entry("tail39_minus_quartic", tail39 - quart, true));
    return out;
}

uint64_t fnv1a(const std::string& bytes) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string hash_string(uint64_t h) {
    static const char* hex = "0123456789abcdef";
    std::string s = "fnv1a:";
    for (int i = 60; i >= 0; i -= 4) s += hex[(h >> i) & 0xf];
    return s;
}

}  // namespace

CertificateReport verify_certificate(long rmin, long rmax, int workers) {
    auto start = std::chrono::steady_clock::now();
    CertificateReport rep;
    rep.rmin = rmin;
    rep.rmax = rmax;
    rep.per_r = verify_max(rmin, rmax, workers);
    rep.p_nonneg = verify_weights();
    rep.opt_minus_c = opt_minus_c_verdicts();
    rep.section4 = verify_section4_inequalities();
    const FlagIdentification& id = identify_flags();
    rep.p1_match = id.p1_match;
    rep.p2_match = id.p2_match;
    rep.p3_match = id.p3_match;
    rep.c_match = coefficient_fixture_match();
    rep.fixture_hash = hash_string(fnv1a(flag_fixture_render()));

    bool ok = true;
    std::vector<int> tight = tight_set();
    for (const PerR& p : rep.per_r)
        if (p.max != rf_eval(opt_rf(), Rat(p.r)) || p.argmax != tight) ok = false;
    for (const auto* v : {&rep.p_nonneg, &rep.opt_minus_c, &rep.section4})
        for (const RayVerdictEntry& e : *v)
            if (!e.ok) ok = false;
    rep.verdicts_ok = ok;
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

Rat p3_density(const Graph& g) {
    if (g.n < 4) throw std::invalid_argument("density needs at least 4 vertices");
    return make_rat(Int((long)count_p3_fast(g)), binomial(g.n, 4));
}

Rat certificate_upper_eval(const Graph& g, long r) {
    if (g.n < 4) throw std::invalid_argument("evaluation needs at least 4 vertices");
    const CoefficientTable& t = build_certificate();
    std::array<long, 11> hist{};
    long total = 0;
    for (int a = 0; a < g.n; a++)
        for (int b = a + 1; b < g.n; b++)
            for (int c = b + 1; c < g.n; c++)
                for (int d = c + 1; d < g.n; d++) {
                    hist[f4_index(g.induced({a, b, c, d}))]++;
                    total++;
                }
    Rat sum = 0;
    for (int i = 0; i < 11; i++)
        if (hist[i])
            sum += rf_eval(t.C[i], Rat(r)) * make_rat(hist[i], total);
    return sum;
}

std::string report_json(const CertificateReport& rep, bool with_timings) {
    using ordered = nlohmann::ordered_json;
    auto rays = [](const std::vector<RayVerdictEntry>& v) {
        ordered a = ordered::array();
        for (const RayVerdictEntry& e : v) {
            ordered o;
            o["name"] = e.name;
            o["verdict"] = e.verdict;
            o["detail"] = e.detail;
            o["ok"] = e.ok;
            a.push_back(o);
        }
        return a;
    };
    ordered j;
    j["version"] = "p3turan-certificate-1";
    j["r_range"] = ordered::array({rep.rmin, rep.rmax});
    ordered per = ordered::array();
    for (const PerR& p : rep.per_r) {
        ordered e;
        e["r"] = p.r;
        e["max"] = rat_str(p.max);
        e["argmax"] = p.argmax;
        per.push_back(e);
    }
    j["per_r"] = per;
    j["symbolic"]["p_nonneg"] = rays(rep.p_nonneg);
    j["symbolic"]["opt_minus_C_nonneg"] = rays(rep.opt_minus_c);
    j["symbolic"]["section4"] = rays(rep.section4);
    j["fixtures"]["p1_match"] = rep.p1_match;
    j["fixtures"]["p2_match"] = rep.p2_match;
    j["fixtures"]["p3_match"] = rep.p3_match;
    j["fixtures"]["c_match"] = rep.c_match;
    j["fixtures"]["flag_fixture_hash"] = rep.fixture_hash;
    j["verdicts_ok"] = rep.verdicts_ok;
    if (with_timings) j["timings"]["seconds"] = rep.seconds;
    return j.dump(2) + "\n";
}

}  // namespace p3turan
