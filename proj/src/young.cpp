#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "engel/young.hpp"

namespace engel {

YoungDiagram::YoungDiagram(std::vector<int> row_lengths) : rows(std::move(row_lengths)) {
    if (rows.empty()) throw std::invalid_argument("empty partition");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && rows[i] > rows[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int YoungDiagram::size() const {
    return std::accumulate(rows.begin(), rows.end(), 0);
}

std::vector<int> YoungDiagram::conjugate() const {
    std::vector<int> conj(rows[0], 0);
    for (int len : rows)
        for (int c = 0; c < len; ++c) ++conj[c];
    return conj;
}

Int YoungDiagram::hook_product() const {
    std::vector<int> conj = conjugate();
    Int prod = 1;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < rows[r]; ++c)
            prod *= (rows[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
    return prod;
}

Int YoungDiagram::standard_tableau_count() const {
    Int fact = 1;
    for (int i = 2; i <= size(); ++i) fact *= i;
    return fact / hook_product();
}

std::vector<YoungDiagram> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of needs n >= 1");
    std::vector<YoungDiagram> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

int row_column_bound(const YoungDiagram& d) {
    return std::max(d.rows[0], static_cast<int>(d.rows.size()));
}

YoungTableau::YoungTableau(YoungDiagram d, std::vector<std::vector<int>> fill)
    : diagram(std::move(d)), filling(std::move(fill)) {
    if (filling.size() != diagram.rows.size())
        throw std::invalid_argument("filling row count disagrees with shape");
    std::set<int> seen;
    for (std::size_t r = 0; r < filling.size(); ++r) {
        if (static_cast<int>(filling[r].size()) != diagram.rows[r])
            throw std::invalid_argument("filling row length disagrees with shape");
        for (int v : filling[r]) {
            if (v < 1 || v > diagram.size() || !seen.insert(v).second)
                throw std::invalid_argument("filling is not a bijection onto 1..N");
        }
    }
}

YoungTableau YoungTableau::row_major(const YoungDiagram& d) {
    std::vector<std::vector<int>> fill;
    int next = 1;
    for (int len : d.rows) {
        std::vector<int> row(len);
        std::iota(row.begin(), row.end(), next);
        next += len;
        fill.push_back(std::move(row));
    }
    return YoungTableau(d, std::move(fill));
}

bool YoungTableau::is_standard() const {
    for (std::size_t r = 0; r < filling.size(); ++r)
        for (std::size_t c = 0; c < filling[r].size(); ++c) {
            if (c + 1 < filling[r].size() && filling[r][c] > filling[r][c + 1]) return false;
            if (r + 1 < filling.size() && c < filling[r + 1].size() &&
                filling[r][c] > filling[r + 1][c])
                return false;
        }
    return true;
}

std::pair<int, int> YoungTableau::position_of(int k) const {
    for (std::size_t r = 0; r < filling.size(); ++r)
        for (std::size_t c = 0; c < filling[r].size(); ++c)
            if (filling[r][c] == k) return {static_cast<int>(r), static_cast<int>(c)};
    throw std::invalid_argument("entry not in tableau");
}

std::vector<YoungTableau> standard_tableaux(const YoungDiagram& d) {
    std::vector<YoungTableau> out;
    std::vector<std::vector<int>> fill(d.rows.size());
    std::vector<int> placed(d.rows.size(), 0);
    auto rec = [&](auto&& self, int next) -> void {
        if (next > d.size()) {
            std::vector<std::vector<int>> complete = fill;
            out.emplace_back(d, std::move(complete));
            return;
        }
        for (std::size_t r = 0; r < d.rows.size(); ++r) {
            int c = placed[r];
            if (c >= d.rows[r]) continue;
            if (r > 0 && placed[r - 1] <= c) continue;  // box above must be filled
            fill[r].push_back(next);
            ++placed[r];
            self(self, next + 1);
            --placed[r];
            fill[r].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<YoungTableau> all_fillings(const YoungDiagram& d) {
    std::vector<int> values(d.size());
    std::iota(values.begin(), values.end(), 1);
    std::vector<YoungTableau> out;
    do {
        std::vector<std::vector<int>> fill;
        auto it = values.begin();
        for (int len : d.rows) {
            fill.emplace_back(it, it + len);
            it += len;
        }
        out.emplace_back(d, std::move(fill));
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

YoungTableau parse_tableau(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> fill;
    while (std::getline(in, line)) {
        std::istringstream row_in(line);
        std::vector<int> row;
        int v;
        while (row_in >> v) row.push_back(v);
        if (!row_in.eof()) throw std::invalid_argument("bad tableau row: '" + line + "'");
        if (!row.empty()) fill.push_back(std::move(row));
    }
    if (fill.empty()) throw std::invalid_argument("empty tableau");
    std::vector<int> lengths;
    for (auto& row : fill) lengths.push_back(static_cast<int>(row.size()));
    return YoungTableau(YoungDiagram(std::move(lengths)), std::move(fill));
}

std::string to_string(const YoungTableau& t) {
    std::ostringstream os;
    for (std::size_t r = 0; r < t.filling.size(); ++r) {
        for (std::size_t c = 0; c < t.filling[r].size(); ++c)
            os << (c ? " " : "") << t.filling[r][c];
        os << "\n";
    }
    return os.str();
}

namespace {

std::vector<std::vector<int>> rows_of(const YoungTableau& t) {
    return t.filling;
}

std::vector<std::vector<int>> columns_of(const YoungTableau& t) {
    std::vector<std::vector<int>> cols(t.diagram.rows[0]);
    for (auto& row : t.filling)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return cols;
}

std::vector<Permutation> adjacent_transpositions(const std::vector<std::vector<int>>& blocks,
                                                 int degree) {
    std::vector<Permutation> gens;
    for (auto& block : blocks)
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            gens.push_back(Permutation::transposition(degree, block[i], block[i + 1]));
    return gens;
}

// Every permutation of {1..degree} fixing each block setwise.
std::vector<Permutation> block_subgroup(const std::vector<std::vector<int>>& blocks, int degree) {
    std::vector<Permutation> elements{Permutation(degree)};
    for (auto& block : blocks) {
        if (block.size() < 2) continue;
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Permutation> block_perms;
        std::vector<int> arrangement = sorted;
        do {
            std::vector<int> img(degree);
            std::iota(img.begin(), img.end(), 1);
            for (std::size_t i = 0; i < sorted.size(); ++i) img[sorted[i] - 1] = arrangement[i];
            block_perms.push_back(Permutation::from_one_line(img));
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));

        std::vector<Permutation> next;
        next.reserve(elements.size() * block_perms.size());
        for (auto& e : elements)
            for (auto& b : block_perms) next.push_back(e.then(b));
        elements = std::move(next);
    }
    return elements;
}

}  // namespace

std::vector<Permutation> row_group(const YoungTableau& t) {
    return adjacent_transpositions(rows_of(t), t.diagram.size());
}

std::vector<Permutation> column_group(const YoungTableau& t) {
    return adjacent_transpositions(columns_of(t), t.diagram.size());
}

GroupAlgebraElement young_symmetrizer(const YoungTableau& t) {
    int n = t.diagram.size();
    GroupAlgebraElement e(n);
    for (auto& pi : block_subgroup(columns_of(t), n)) {
        Rat s(pi.sign());
        for (auto& rho : block_subgroup(rows_of(t), n)) e.add_term(pi.then(rho), s);
    }
    return e;
}

Rat essential_scalar(const YoungTableau& t) {
    GroupAlgebraElement e = young_symmetrizer(t);
    GroupAlgebraElement e2 = e * e;
    // the coefficient of the identity in e is 1 (V and H intersect trivially)
    Rat k = e2.coefficient(Permutation(t.diagram.size()));
    if (!(e2 == k * e))
        throw std::logic_error("symmetrizer square is not proportional to the symmetrizer");
    Int fact = 1;
    for (int i = 2; i <= t.diagram.size(); ++i) fact *= i;
    if (k == 0 || k.get_den() != 1 || fact % k.get_num() != 0)
        throw std::logic_error("essential scalar does not divide N!");
    return k;
}

std::vector<GroupAlgebraElement> decompose_identity(int n, int cap) {
    if (n < 1) throw std::invalid_argument("decompose_identity needs n >= 1");
    if (n > cap)
        throw ResourceError("decompose_identity: degree " + std::to_string(n) +
                            " above the cap " + std::to_string(cap));

    // content vectors of all standard tableaux, grouped to know the
    // possible Jucys-Murphy eigenvalues at each level
    struct Entry {
        std::vector<int> contents;  // contents[k-1] = col - row of the box holding k
    };
    std::vector<Entry> tableaux;
    for (auto& shape : partitions_of(n))
        for (auto& t : standard_tableaux(shape)) {
            Entry e;
            for (int k = 1; k <= n; ++k) {
                auto [r, c] = t.position_of(k);
                e.contents.push_back(c - r);
            }
            tableaux.push_back(std::move(e));
        }

    std::vector<std::set<int>> levels(n);  // possible contents of box k
    for (auto& t : tableaux)
        for (int k = 0; k < n; ++k) levels[k].insert(t.contents[k]);

    std::vector<GroupAlgebraElement> jm;  // X_k = sum of (i k), i < k
    for (int k = 1; k <= n; ++k) {
        GroupAlgebraElement x(n);
        for (int i = 1; i < k; ++i) x.add_term(Permutation::transposition(n, i, k), Rat(1));
        jm.push_back(std::move(x));
    }

    std::vector<GroupAlgebraElement> out;
    for (auto& t : tableaux) {
        GroupAlgebraElement e = GroupAlgebraElement::one(n);
        for (int k = 2; k <= n; ++k)
            for (int c : levels[k - 1]) {
                if (c == t.contents[k - 1]) continue;
                GroupAlgebraElement factor = jm[k - 1] - Rat(c) * GroupAlgebraElement::one(n);
                e = e * factor;
                e *= Rat(1) / Rat(t.contents[k - 1] - c);
            }
        out.push_back(std::move(e));
    }
    return out;
}

LieElement act(const Permutation& sigma, const LieElement& e, int column) {
    if (column < 1) throw std::invalid_argument("column must be >= 1");
    for (auto& [m, c] : e.terms())
        for (auto& g : m.word)
            if (g.col == column && g.row > sigma.degree())
                throw std::invalid_argument("row index " + std::to_string(g.row) +
                                            " out of the permutation's range");
    std::map<GeneratorId, LieElement> images;
    for (int i = 1; i <= sigma.degree(); ++i)
        images.emplace(GeneratorId::indexed(i, column),
                       LieElement::generator(GeneratorId::indexed(sigma.apply(i), column)));
    return substitute(e, images);
}

LieElement apply_algebra_element(const GroupAlgebraElement& a, const LieElement& e, int column) {
    LieElement r;
    for (auto& [p, c] : a.terms()) r += c * act(p, e, column);
    return r;
}

}  // namespace engel
