#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "engel/lie_element.hpp"

namespace engel {

// ---------------------------------------------------------------------------
// generators

GeneratorId GeneratorId::single(int i) {
    if (i < 1) throw std::invalid_argument("generator index must be >= 1");
    return GeneratorId{i, 0};
}

GeneratorId GeneratorId::indexed(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("generator indices must be >= 1");
    return GeneratorId{i, j};
}

std::string to_string(const GeneratorId& g) {
    if (!g.is_double()) return "x" + std::to_string(g.row);
    return "x(" + std::to_string(g.row) + "," + std::to_string(g.col) + ")";
}

GeneratorId parse_generator(const std::string& s) {
    std::size_t pos = 0;
    auto fail = [&] { throw std::invalid_argument("bad generator literal: '" + s + "'"); };
    if (s.empty() || s[0] != 'x') fail();
    if (s.size() > 1 && s[1] == '(') {
        int i = 0, j = 0;
        char l = 0, c = 0, r = 0;
        std::istringstream in(s.substr(1));
        in >> l >> i >> c >> j >> r;
        if (!in || l != '(' || c != ',' || r != ')') fail();
        return GeneratorId::indexed(i, j);
    }
    try {
        int i = std::stoi(s.substr(1), &pos);
        if (pos + 1 != s.size()) fail();
        return GeneratorId::single(i);
    } catch (const std::logic_error&) {
        fail();
    }
    return {};
}

std::vector<GeneratorId> single_generators(int n) {
    std::vector<GeneratorId> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(GeneratorId::single(i));
    return gens;
}

std::vector<GeneratorId> grid_generators(int rows, int cols) {
    std::vector<GeneratorId> gens;
    for (int j = 1; j <= cols; ++j)
        for (int i = 1; i <= rows; ++i) gens.push_back(GeneratorId::indexed(i, j));
    return gens;
}

std::string to_string(const Multiweight& w) {
    std::string s = "{";
    bool first = true;
    for (auto& [g, d] : w.degrees()) {
        if (!first) s += ", ";
        first = false;
        s += to_string(g) + ":" + std::to_string(d);
    }
    return s + "}";
}

// ---------------------------------------------------------------------------
// Lyndon words

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        // w must be strictly smaller than the suffix starting at i
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
            return false;
    }
    return true;
}

std::size_t standard_split(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("standard_split needs weight >= 2");
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + i, w.end());
        if (is_lyndon(suffix)) return i;
    }
    throw std::logic_error("no Lyndon suffix; word was not Lyndon");
}

Multiweight BasisMonomial::multiweight() const {
    Multiweight w;
    for (auto& g : word) w.add(g, 1);
    return w;
}

std::vector<BasisMonomial> lyndon_basis(const std::vector<GeneratorId>& generators,
                                        int max_weight) {
    if (generators.empty()) throw std::invalid_argument("empty generator set");
    if (max_weight < 1) throw std::invalid_argument("max_weight must be >= 1");
    std::vector<GeneratorId> alpha = generators;
    std::sort(alpha.begin(), alpha.end());
    alpha.erase(std::unique(alpha.begin(), alpha.end()), alpha.end());
    const int k = static_cast<int>(alpha.size());
    const int n = max_weight;

    // Duval's algorithm over the index alphabet 0..k-1.
    std::vector<BasisMonomial> out;
    std::vector<int> t{0};
    while (!t.empty()) {
        if (static_cast<int>(t.size()) <= n) {
            Word w;
            for (int c : t) w.push_back(alpha[c]);
            out.push_back(BasisMonomial{std::move(w)});
        }
        // extend periodically to length n, then increment
        std::vector<int> u = t;
        while (static_cast<int>(u.size()) < n) u.push_back(u[u.size() - t.size()]);
        while (!u.empty() && u.back() == k - 1) u.pop_back();
        if (!u.empty()) ++u.back();
        t = std::move(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BasisMonomial> lyndon_basis_of_multiweight(const Multiweight& w) {
    Word letters;
    for (auto& [g, d] : w.degrees())
        for (int i = 0; i < d; ++i) letters.push_back(g);
    std::vector<BasisMonomial> out;
    // letters is sorted, so std::next_permutation walks every distinct word
    Word word = letters;
    do {
        if (is_lyndon(word)) out.push_back(BasisMonomial{word});
    } while (std::next_permutation(word.begin(), word.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// LieElement arithmetic

void LieElement::add_term(const BasisMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool LieElement::is_homogeneous() const {
    if (terms_.empty()) return true;
    Multiweight w = terms_.begin()->first.multiweight();
    for (auto& [m, c] : terms_)
        if (m.multiweight() != w) return false;
    return true;
}

Multiweight LieElement::multiweight() const {
    if (terms_.empty()) throw std::invalid_argument("zero element has no multiweight");
    if (!is_homogeneous()) throw std::invalid_argument("element is not homogeneous");
    return terms_.begin()->first.multiweight();
}

namespace {

LieElement bracket_monomials(const Word& u, const Word& v);

LieElement bracket_mono_elem(const Word& u, const LieElement& b) {
    LieElement r;
    for (auto& [m, c] : b.terms()) r += c * bracket_monomials(u, m.word);
    return r;
}

LieElement bracket_elem_mono(const LieElement& a, const Word& v) {
    LieElement r;
    for (auto& [m, c] : a.terms()) r += c * bracket_monomials(m.word, v);
    return r;
}

// Product of two basis monomials, normalized by the classical rewriting:
// for Lyndon u < v the concatenation uv is Lyndon, and (u,v) is its
// standard factorization iff u is a letter or the right factor of u is
// >= v; otherwise split u = u1 u2 and apply Jacobi,
//   [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]].
LieElement bracket_monomials(const Word& u, const Word& v) {
    if (u == v) return LieElement{};
    if (v < u) return -bracket_monomials(v, u);
    if (u.size() == 1) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        return LieElement::monomial(BasisMonomial{std::move(w)});
    }
    std::size_t s = standard_split(u);
    Word u1(u.begin(), u.begin() + s);
    Word u2(u.begin() + s, u.end());
    if (!(u2 < v)) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        return LieElement::monomial(BasisMonomial{std::move(w)});
    }
    return bracket_elem_mono(bracket_monomials(u1, v), u2) +
           bracket_mono_elem(u1, bracket_monomials(u2, v));
}

}  // namespace

LieElement bracket(const LieElement& a, const LieElement& b) {
    LieElement r;
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms()) r += (ca * cb) * bracket_monomials(ma.word, mb.word);
    return r;
}

LieElement left_normed(std::span<const LieElement> entries) {
    if (entries.empty()) throw std::invalid_argument("left_normed needs at least one entry");
    LieElement acc = entries[0];
    for (std::size_t i = 1; i < entries.size(); ++i) acc = bracket(acc, entries[i]);
    return acc;
}

LieElement left_normed(std::initializer_list<LieElement> entries) {
    return left_normed(std::span<const LieElement>(entries.begin(), entries.size()));
}

LieElement component(const LieElement& e, const Multiweight& w) {
    LieElement r;
    for (auto& [m, c] : e.terms())
        if (m.multiweight() == w) r.add_term(m, c);
    return r;
}

std::vector<Multiweight> multiweights_of(const LieElement& e) {
    std::vector<Multiweight> ws;
    for (auto& [m, c] : e.terms()) {
        Multiweight w = m.multiweight();
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(std::move(w));
    }
    return ws;
}

namespace {

LieElement substitute_word(const Word& w, const std::map<GeneratorId, LieElement>& images,
                           std::map<Word, LieElement>& cache) {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    LieElement r;
    if (w.size() == 1) {
        auto im = images.find(w[0]);
        r = im == images.end() ? LieElement::generator(w[0]) : im->second;
    } else {
        std::size_t s = standard_split(w);
        r = bracket(substitute_word(Word(w.begin(), w.begin() + s), images, cache),
                    substitute_word(Word(w.begin() + s, w.end()), images, cache));
    }
    cache.emplace(w, r);
    return r;
}

}  // namespace

LieElement substitute(const LieElement& e, const std::map<GeneratorId, LieElement>& images) {
    LieElement r;
    std::map<Word, LieElement> cache;
    for (auto& [m, c] : e.terms()) r += c * substitute_word(m.word, images, cache);
    return r;
}

// ---------------------------------------------------------------------------
// printing

namespace {

void print_monomial(std::ostream& os, const Word& w);

// Prints the entries of the left-normed spine of w's standard bracketing,
// so [[u,v],v'] comes out flattened as "u...,v,v'".
void print_spine(std::ostream& os, const Word& w) {
    if (w.size() == 1) {
        os << to_string(w[0]);
        return;
    }
    std::size_t s = standard_split(w);
    print_spine(os, Word(w.begin(), w.begin() + s));
    os << ",";
    print_monomial(os, Word(w.begin() + s, w.end()));
}

void print_monomial(std::ostream& os, const Word& w) {
    if (w.size() == 1) {
        os << to_string(w[0]);
        return;
    }
    os << "[";
    print_spine(os, w);
    os << "]";
}

}  // namespace

std::string to_string(const BasisMonomial& m) {
    std::ostringstream os;
    print_monomial(os, m.word);
    return os.str();
}

std::string to_string(const LieElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : e.terms()) {
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1) os << rat_to_string(mag) << "*";
        print_monomial(os, m.word);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing
//
//   element := ['-'] term (('+'|'-') term)*   |   '0'
//   term    := [rational '*'] factor
//   factor  := gen | '[' entry (',' entry)* ']'
//   entry   := factor
//
// A bracket with entries e1,...,er denotes the left-normed product.

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    LieElement parse() {
        skip_ws();
        LieElement e;
        if (peek() == '0') {
            ++pos_;
            skip_ws();
            if (pos_ != text_.size()) fail("trailing input after '0'");
            return e;
        }
        bool neg = accept('-');
        e += sign(neg) * parse_term();
        skip_ws();
        while (pos_ < text_.size()) {
            char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            e += sign(op == '-') * parse_term();
            skip_ws();
        }
        return e;
    }

private:
    static Rat sign(bool neg) { return Rat(neg ? -1 : 1); }

    LieElement parse_term() {
        skip_ws();
        Rat coeff(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            skip_ws();
            if (!accept('*')) fail("expected '*' after coefficient");
        }
        return coeff * parse_factor();
    }

    LieElement parse_factor() {
        skip_ws();
        char c = peek();
        if (c == 'x') return LieElement::generator(parse_gen());
        if (c == '[') {
            get();
            std::vector<LieElement> entries;
            entries.push_back(parse_factor());
            skip_ws();
            while (accept(',')) entries.push_back(parse_factor());
            skip_ws();
            if (!accept(']')) fail("expected ']' or ','");
            return left_normed(std::span<const LieElement>(entries));
        }
        fail("expected generator or '['");
        return {};
    }

    GeneratorId parse_gen() {
        if (!accept('x')) fail("expected generator");
        skip_ws();
        if (accept('(')) {
            int i = parse_int();
            skip_ws();
            if (!accept(',')) fail("expected ',' in generator");
            int j = parse_int();
            skip_ws();
            if (!accept(')')) fail("expected ')' in generator");
            return GeneratorId::indexed(i, j);
        }
        return GeneratorId::single(parse_int());
    }

    Rat parse_rational() {
        Int num = parse_bigint();
        skip_ws();
        if (accept('/')) {
            Int den = parse_bigint();
            if (den == 0) fail("zero denominator");
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        return Rat(num);
    }

    Int parse_bigint() {
        skip_ws();
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        if (digits.empty()) fail("expected integer");
        return Int(digits);
    }

    int parse_int() {
        Int v = parse_bigint();
        if (!v.fits_sint_p()) fail("index out of range");
        return static_cast<int>(v.get_si());
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

LieElement parse_element(std::string_view text) {
    return Parser(text).parse();
}

}  // namespace engel
