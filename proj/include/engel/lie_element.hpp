#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "engel/lyndon.hpp"
#include "engel/rational.hpp"

namespace engel {

// An element of the free Lie algebra over Q in canonical form: a finite
// map from Lyndon basis monomials to nonzero rational coefficients.
class LieElement {
public:
    LieElement() = default;

    static LieElement generator(const GeneratorId& g) {
        LieElement e;
        e.terms_.emplace(BasisMonomial{Word{g}}, Rat(1));
        return e;
    }

    static LieElement monomial(const BasisMonomial& m, const Rat& c = Rat(1)) {
        LieElement e;
        if (c != 0) e.terms_.emplace(m, c);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<BasisMonomial, Rat>& terms() const { return terms_; }

    void add_term(const BasisMonomial& m, const Rat& c);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Rat& c);

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rat& c, LieElement a) { return a *= c; }
    friend LieElement operator-(LieElement a) { return a *= Rat(-1); }
    friend bool operator==(const LieElement&, const LieElement&) = default;

    // True when every term has the same multiweight (vacuously for zero).
    bool is_homogeneous() const;

    // Multiweight of a nonzero homogeneous element.
    Multiweight multiweight() const;

private:
    std::map<BasisMonomial, Rat> terms_;
};

// The Lie product, result in canonical form.
LieElement bracket(const LieElement& a, const LieElement& b);

// [e1,e2,...,er] = [[...[e1,e2],...],er]; a single entry is returned as-is.
LieElement left_normed(std::span<const LieElement> entries);
LieElement left_normed(std::initializer_list<LieElement> entries);

// The terms of e with multiweight exactly w.
LieElement component(const LieElement& e, const Multiweight& w);

// The multiweights occurring in e.
std::vector<Multiweight> multiweights_of(const LieElement& e);

// The algebra endomorphism sending each mapped generator to its image and
// fixing every other generator.
LieElement substitute(const LieElement& e, const std::map<GeneratorId, LieElement>& images);

// Canonical textual form: terms sorted by (weight, word), e.g.
//   "x1 - 1/2*[x1,x2] + [x1,[x1,x2,x2]]".
// A bracket [a,b,...,c] denotes the left-normed product of its entries;
// the printer emits the standard bracketing of each basis monomial, which
// parses back to itself.
std::string to_string(const LieElement& e);
std::string to_string(const BasisMonomial& m);

// Parses the textual format; arbitrary whitespace allowed. The result is
// normalized to canonical form.
LieElement parse_element(std::string_view text);

}  // namespace engel
