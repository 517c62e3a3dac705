#pragma once

#include <compare>
#include <string>
#include <vector>

namespace engel {

// A permutation of {1..N} in one-line notation, acting on the right:
// i -> apply(i). Composition a.then(b) applies a first, so the product
// written "ab" in group-algebra formulas is a.then(b).
class Permutation {
public:
    explicit Permutation(int degree);  // identity

    static Permutation from_one_line(const std::vector<int>& images);
    static Permutation transposition(int degree, int a, int b);

    int degree() const { return static_cast<int>(img_.size()); }
    int apply(int i) const;  // 1-based

    Permutation then(const Permutation& second) const;
    Permutation inverse() const;

    int sign() const;
    bool is_identity() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;  // img_[i-1] = image of i
};

std::string to_string(const Permutation& p);  // cycle notation, "()" for identity

// Accepts cycle notation "(1 2)(3 4 5)" or one-line "[2,1,3]". degree < 0
// means: infer (largest point mentioned; one-line length).
Permutation parse_permutation(const std::string& s, int degree = -1);

// All permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> symmetric_group(int n);

}  // namespace engel
