#pragma once

#include <map>
#include <string>
#include <vector>

#include "engel/identity.hpp"

namespace engel {

enum class Parity { even, odd };
enum class ParityClass { C0, C1 };

// A Z2-grading of the working generators; total on its domain, and every
// generator a graded element is built from must be assigned.
struct GradingAssignment {
    std::map<GeneratorId, Parity> parities;

    std::vector<GeneratorId> generators() const;
    bool all_even() const;
};

// All 2^K gradings of the given generators, odd sets enumerated in
// binary-counter order.
std::vector<GradingAssignment> all_gradings(const std::vector<GeneratorId>& gens);

// Parity of a layer: the sum of w's degrees in the odd generators, mod 2.
Parity parity(const Multiweight& w, const GradingAssignment& g);

// C0 = even left-normed commutators, C1 = odd.
ParityClass parity_class(const BasisMonomial& c, const GradingAssignment& g);

// The nilpotency-class bound for an n-Engel Lie algebra with an m-generated
// even part, and K = the smallest integer strictly greater.
struct Lemma1Bound {
    Rat bound;
    Int K;
};
Lemma1Bound lemma1_bound(int n, int m);

// Nilpotency-class bound (n^r - 1)/(n - 1) for a solvable n-Engel algebra
// of derived length r.
Int higgins_bound(int n, int r);

struct BoundReport {
    int n = 0, m = 0;
    Int derived_length_bound;  // (n-1)(m-1)+1+m
    Rat lemma1;
    Int K;
    Int higgins;  // class bound at the derived-length bound
};
BoundReport bound_report(int n, int m);

struct ARPolicy {
    // 3^{(n+6)/2} has a half-integer exponent for odd n; rounding the
    // exponent up preserves the upper bound but must be opted into.
    bool round_half_up = false;
    std::size_t digit_cap = 1000000;  // decimal digits
};

// F(n,r,0) = 1, F(n,r,i+1) = n * r^{3 F(n,r,i)}. Throws ResourceError
// naming the level at which the digit cap is exceeded.
Int adjan_razborov_F(int n, int r, const Int& i, const ARPolicy& policy = {});

// N(n,4) = 6, N(n,r+1) = F(n, r+1, N(n,r)^2 * 3^{(n+6)/2}).
Int adjan_razborov_N(int n, int r, const ARPolicy& policy = {});

// Dimension tables of the derived series terms of the relatively free
// algebra on ids, truncated at total weight W. layer_dims[i] holds the
// nonzero layer dimensions of L^(i) in the quotient.
struct DerivedSeriesReport {
    std::vector<std::map<Multiweight, std::size_t>> layer_dims;
    bool stabilized = false;  // some term vanished in every layer <= W
    int derived_length = -1;  // first vanishing term, when stabilized
};
DerivedSeriesReport derived_series_in_quotient(const std::vector<Identity>& ids,
                                               const std::vector<GeneratorId>& gens, int W,
                                               std::size_t ambient_cap = kDefaultAmbientCap);

// Desk-scale check of Lemma 1's two collection facts in the truncated
// relatively free n-Engel algebra modulo the ideal I generated by all
// [c1,...,cm] with ci in C0: every [a, b1,...,bk] with a in C1, bi in C0
// and k > (n-1)(m-1) lies in I, and the left-normed product of the
// assigned generators lies in I (the reduced-K stand-in for [x1,...,xK]).
struct Lemma1Report {
    int n = 0, m = 0, W = 0;
    Rat full_bound;
    Int full_K;
    int collection_threshold = 0;  // (n-1)(m-1)
    std::size_t collection_checked = 0;
    bool collection_holds = false;
    bool vacuous = false;  // no odd monomials: L1 = 0
    int reduced_K = 0;
    bool product_checked = false;  // reduced_K within the weight cap
    bool product_in_ideal = false;
    std::size_t measured_T = 0;  // certificate terms for the product
    std::string first_failure;
    bool passed = false;
};
Lemma1Report verify_lemma1_collection(int n, int m, const GradingAssignment& g, int W,
                                      std::size_t ambient_cap = kDefaultAmbientCap);

}  // namespace engel
