#pragma once

#include <map>
#include <string>

#include "engel/permutation.hpp"
#include "engel/rational.hpp"

namespace engel {

// An element of Q Sym(N): finite map permutation -> nonzero rational.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int degree) : degree_(degree) {}

    static GroupAlgebraElement one(int degree) {
        GroupAlgebraElement e(degree);
        e.terms_.emplace(Permutation(degree), Rat(1));
        return e;
    }

    static GroupAlgebraElement of(const Permutation& p, const Rat& c = Rat(1)) {
        GroupAlgebraElement e(p.degree());
        if (c != 0) e.terms_.emplace(p, c);
        return e;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, Rat>& terms() const { return terms_; }

    Rat coefficient(const Permutation& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Permutation& p, const Rat& c);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator*=(const Rat& c);

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a += b;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a -= b;
    }
    friend GroupAlgebraElement operator*(const Rat& c, GroupAlgebraElement a) { return a *= c; }

    // Convolution product; (a s)(b t) contributes ab on s.then(t).
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);

    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    int degree_;
    std::map<Permutation, Rat> terms_;
};

std::string to_string(const GroupAlgebraElement& e);

}  // namespace engel
