#pragma once

#include <compare>
#include <string>
#include <tuple>
#include <vector>

namespace engel {

// A free generator: either single-indexed x_i (col == 0) or double-indexed
// x_(i,j) with j >= 1. The total order puts all single-indexed generators
// first (by i), then double-indexed ones lexicographically by (j, i), so
// generators of one column are contiguous.
struct GeneratorId {
    int row = 1;
    int col = 0;

    static GeneratorId single(int i);
    static GeneratorId indexed(int i, int j);

    bool is_double() const { return col != 0; }

    friend auto operator<=>(const GeneratorId& a, const GeneratorId& b) {
        return std::tie(a.col, a.row) <=> std::tie(b.col, b.row);
    }
    friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

std::string to_string(const GeneratorId& g);

// Accepts "x3" or "x(2,5)".
GeneratorId parse_generator(const std::string& s);

// n single-indexed generators x1..xn.
std::vector<GeneratorId> single_generators(int n);

// The column-major grid x(i,j), 1 <= i <= rows, 1 <= j <= cols.
std::vector<GeneratorId> grid_generators(int rows, int cols);

}  // namespace engel
