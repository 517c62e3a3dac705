#pragma once

// Test-only oracle: the free Lie algebra embeds into the free associative
// algebra via [a,b] -> ab - ba. Expanding both the raw bracket expression
// and its normalized canonical form into associative polynomials must give
// exactly the same result. This path is independent of the rewriting used
// by engel::bracket.

#include <map>
#include <memory>
#include <vector>

#include "engel/lie_element.hpp"

namespace engel::testing {

using AssocPoly = std::map<Word, Rat>;

inline void assoc_add(AssocPoly& p, const Word& w, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline AssocPoly assoc_mul(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly r;
    for (auto& [wa, ca] : a)
        for (auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            assoc_add(r, w, ca * cb);
        }
    return r;
}

inline AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly r = assoc_mul(a, b);
    for (auto& [w, c] : assoc_mul(b, a)) assoc_add(r, w, -c);
    return r;
}

// Expansion of a basis monomial via its standard bracketing.
inline AssocPoly assoc_expand(const Word& w) {
    if (w.size() == 1) return AssocPoly{{w, Rat(1)}};
    std::size_t s = standard_split(w);
    return assoc_commutator(assoc_expand(Word(w.begin(), w.begin() + s)),
                            assoc_expand(Word(w.begin() + s, w.end())));
}

inline AssocPoly assoc_expand(const LieElement& e) {
    AssocPoly r;
    for (auto& [m, c] : e.terms())
        for (auto& [w, ac] : assoc_expand(m.word)) assoc_add(r, w, c * ac);
    return r;
}

// A raw (unnormalized) bracket expression tree.
struct BracketTree {
    GeneratorId leaf{};
    std::shared_ptr<BracketTree> left, right;

    bool is_leaf() const { return !left; }

    static BracketTree gen(GeneratorId g) { return BracketTree{g, nullptr, nullptr}; }
    static BracketTree node(BracketTree a, BracketTree b) {
        return BracketTree{{}, std::make_shared<BracketTree>(std::move(a)),
                           std::make_shared<BracketTree>(std::move(b))};
    }

    LieElement normalize() const {
        if (is_leaf()) return LieElement::generator(leaf);
        return bracket(left->normalize(), right->normalize());
    }

    AssocPoly expand() const {
        if (is_leaf()) return AssocPoly{{Word{leaf}, Rat(1)}};
        return assoc_commutator(left->expand(), right->expand());
    }
};

}  // namespace engel::testing
