#pragma once

#include <string>
#include <vector>

#include "engel/group_algebra.hpp"
#include "engel/lie_element.hpp"

namespace engel {

// A partition of N drawn as an array of boxes, row lengths weakly
// decreasing.
struct YoungDiagram {
    std::vector<int> rows;

    explicit YoungDiagram(std::vector<int> row_lengths);

    int size() const;
    std::vector<int> conjugate() const;

    Int hook_product() const;
    // f^lambda, the number of standard tableaux of this shape.
    Int standard_tableau_count() const;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

std::vector<YoungDiagram> partitions_of(int n);

// max(first-row length, first-column length); always >= ceil(sqrt(N)).
int row_column_bound(const YoungDiagram& d);

struct YoungTableau {
    YoungDiagram diagram;
    std::vector<std::vector<int>> filling;  // filling[r][c], entries a bijection to 1..N

    YoungTableau(YoungDiagram d, std::vector<std::vector<int>> fill);

    // Rows filled 1..N left to right, top to bottom.
    static YoungTableau row_major(const YoungDiagram& d);

    bool is_standard() const;
    // (row, column) of entry k, 0-based.
    std::pair<int, int> position_of(int k) const;
};

std::vector<YoungTableau> standard_tableaux(const YoungDiagram& d);
// Every bijective filling of the shape (N! of them).
std::vector<YoungTableau> all_fillings(const YoungDiagram& d);

// Parses "1 2 3\n4 5" style text, one row per line.
YoungTableau parse_tableau(const std::string& text);
std::string to_string(const YoungTableau& t);

// Generator sets (adjacent transpositions within each row / column) of the
// row group H and column group V.
std::vector<Permutation> row_group(const YoungTableau& t);
std::vector<Permutation> column_group(const YoungTableau& t);

// e = sum over pi in V, rho in H of sign(pi) pi rho.
GroupAlgebraElement young_symmetrizer(const YoungTableau& t);

// The k with e*e = k*e; k divides N! and equals N!/f^lambda.
Rat essential_scalar(const YoungTableau& t);

// A complete set of pairwise orthogonal primitive idempotents summing to
// the identity of Q Sym(N), built from the Jucys-Murphy eigenbasis
// (one idempotent per standard tableau). Throws ResourceError above cap.
std::vector<GroupAlgebraElement> decompose_identity(int n, int cap = 6);

// The Sym action on one column of double-indexed generators:
// x(i,column) -> x(i sigma, column), extended as an algebra endomorphism.
// Row indices occurring in that column must be <= sigma's degree.
LieElement act(const Permutation& sigma, const LieElement& e, int column);

LieElement apply_algebra_element(const GroupAlgebraElement& a, const LieElement& e, int column);

}  // namespace engel
