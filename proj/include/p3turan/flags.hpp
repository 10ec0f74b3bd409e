#pragma once
#include <array>
#include <map>
#include <vector>
#include "p3turan/graph.hpp"
#include "p3turan/poly.hpp"

namespace p3turan {

// A flag is stored with its embedding normalized to the identity prefix:
// theta = (0, 1, ..., k-1).  Flag isomorphism = graph isomorphism fixing the
// prefix pointwise, so the canonical form is canonical_form_fixed(g, k).
struct Flag {
    Graph g;
    int k = 0;
    bool operator==(const Flag& o) const { return k == o.k && g == o.g; }
};

Graph sigma1();  // two labelled vertices, non-adjacent
Graph sigma2();  // two labelled vertices, adjacent

Graph flag_type(const Flag& f);
Flag flag_canon(const Flag& f);
// general constructor: theta lists the labelled vertices of g in label order
Flag make_flag(const Graph& g, const std::vector<int>& theta);

// all flags of the given type on n vertices up to flag isomorphism, k <= n <= 8
std::vector<Flag> enumerate_flags(const Graph& type, int n);

// probability a uniform (|H|-k)-subset of the unlabelled part of G induces H
Rat flag_density(const Flag& H, const Flag& G);
// probability two disjoint uniform sets induce H and J simultaneously
Rat joint_density(const Flag& H, const Flag& J, const Flag& G);
// probability a uniform injective relabelling of F's type vertices yields F again
Rat q_factor(const Flag& f);

struct FlagVector {
    Graph type;
    // keyed by the canonical flag's graph key; value keeps the flag itself
    std::map<CanonKey, std::pair<Flag, RF>> terms;

    static FlagVector zero(const Graph& type);
    void add(const Flag& f, const RF& c);  // canonizes, drops zeros
    RF coeff(const Flag& f) const;
    bool is_zero() const { return terms.empty(); }
    FlagVector& operator+=(const FlagVector& o);
    FlagVector operator*(const RF& s) const;
    bool operator==(const FlagVector& o) const;
};

// expansion over the next flag level with joint-density coefficients; bilinear
FlagVector flag_product(const FlagVector& a, const FlagVector& b);
// [[.]]: each flag F becomes q(F) times its underlying unlabelled graph (type = empty)
FlagVector unlabel(const FlagVector& a);
// scale * unlabel(a*a) collected over the pinned F0..F10 basis; a must live on
// 3-vertex flags over a 2-vertex type
std::array<RF, 11> square_expand(const FlagVector& a, const RF& scale);

// The three reference expansion vectors over F0..F10 that pin the working
// flags A, B (sigma1) and C, D, E (sigma2).
std::array<RF, 11> reference_p1();
std::array<RF, 11> reference_p2();
std::array<RF, 11> reference_p3();

struct FlagIdentification {
    Flag A, B;         // sigma1: (r-1)A - B squares to reference_p1
    Flag C, D, E;      // sigma2: C - D squares to reference_p2
    std::array<RF, 11> p1, p2, p3;              // first-principles expansions
    std::array<bool, 11> p1_match, p2_match, p3_match;  // vs the reference vectors
};

// Matching step: scans candidate tuples and pins the unique assignment that
// reproduces reference_p1 and reference_p2 exactly; p3 is then expanded from
// first principles and compared entrywise (it differs from the reference in
// one entry, which the match flags record).  Cached; throws if not unique.
const FlagIdentification& identify_flags();

// versioned text form of the identification + expansions, for the fixture file
std::string flag_fixture_render();

}  // namespace p3turan
