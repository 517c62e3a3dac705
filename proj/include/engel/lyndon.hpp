#pragma once

#include <cstddef>
#include <vector>

#include "engel/generator.hpp"
#include "engel/multiweight.hpp"

namespace engel {

// A word over generators, compared lexicographically with the GeneratorId order.
using Word = std::vector<GeneratorId>;

bool is_lyndon(const Word& w);

// Index where the right factor of the standard factorization starts:
// w = uv with v the longest proper suffix of w that is Lyndon.
// Requires |w| >= 2 and w Lyndon.
std::size_t standard_split(const Word& w);

// A Lyndon word carrying its standard left-to-right data; the canonical
// basis element of the free Lie algebra. Ordered by (weight, word), which
// is the term order used everywhere.
struct BasisMonomial {
    Word word;

    int weight() const { return static_cast<int>(word.size()); }
    Multiweight multiweight() const;

    friend auto operator<=>(const BasisMonomial& a, const BasisMonomial& b) {
        if (auto c = a.word.size() <=> b.word.size(); c != 0) return c;
        return a.word <=> b.word;
    }
    friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

// All Lyndon words of length <= max_weight over the given generators,
// sorted by (weight, word). Throws std::invalid_argument on an empty
// generator set or max_weight < 1.
std::vector<BasisMonomial> lyndon_basis(const std::vector<GeneratorId>& generators,
                                        int max_weight);

// The Lyndon words whose letter content is exactly w.
std::vector<BasisMonomial> lyndon_basis_of_multiweight(const Multiweight& w);

}  // namespace engel
