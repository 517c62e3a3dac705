#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "assoc_oracle.hpp"
#include "engel/lie_element.hpp"

using namespace engel;
using namespace engel::testing;

namespace {

LieElement gen(int i) { return LieElement::generator(GeneratorId::single(i)); }

// Witt's necklace count: number of Lyndon words of length n over k letters.
long witt_number(int k, int n) {
    auto mobius = [](int m) {
        int result = 1;
        for (int p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) return 0;
                result = -result;
            }
        if (m > 1) result = -result;
        return result;
    };
    long sum = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) {
            long pw = 1;
            for (int i = 0; i < n / d; ++i) pw *= k;
            sum += mobius(d) * pw;
        }
    return sum / n;
}

// Brute force: enumerate every word of length n and apply the suffix test.
long lyndon_count_brute(int k, int n) {
    long count = 0;
    std::vector<int> word(n, 0);
    auto gens = single_generators(k);
    while (true) {
        Word w;
        for (int c : word) w.push_back(gens[c]);
        if (is_lyndon(w)) ++count;
        int i = n - 1;
        while (i >= 0 && word[i] == k - 1) word[i--] = 0;
        if (i < 0) break;
        ++word[i];
    }
    return count;
}

}  // namespace

TEST_CASE("generator order: singles by index, then doubles by (column,row)") {
    auto x1 = GeneratorId::single(1), x2 = GeneratorId::single(2);
    auto a = GeneratorId::indexed(2, 1), b = GeneratorId::indexed(1, 2);
    CHECK(x1 < x2);
    CHECK(x2 < a);      // singles precede doubles
    CHECK(a < b);       // column-major among doubles
    CHECK(GeneratorId::indexed(1, 1) < a);
    CHECK(x1 == parse_generator("x1"));
    CHECK(b == parse_generator("x(1,2)"));
    CHECK_THROWS_AS(parse_generator("y1"), std::invalid_argument);
    CHECK_THROWS_AS((void)GeneratorId::single(0), std::invalid_argument);
}

TEST_CASE("lyndon_basis small cases") {
    auto gens = single_generators(2);
    auto b1 = lyndon_basis(gens, 1);
    REQUIRE(b1.size() == 2);
    CHECK(to_string(b1[0]) == "x1");
    CHECK(to_string(b1[1]) == "x2");

    auto b2 = lyndon_basis(gens, 2);
    REQUIRE(b2.size() == 3);
    CHECK(to_string(b2[2]) == "[x1,x2]");

    auto b3 = lyndon_basis(gens, 3);
    int weight3 = 0;
    for (auto& m : b3)
        if (m.weight() == 3) ++weight3;
    CHECK(weight3 == 2);  // words 112 and 122

    CHECK_THROWS_AS(lyndon_basis({}, 2), std::invalid_argument);
    CHECK_THROWS_AS(lyndon_basis(gens, 0), std::invalid_argument);
}

TEST_CASE("lyndon layer sizes match Witt numbers and brute-force enumeration") {
    for (int k = 1; k <= 3; ++k) {
        auto basis = lyndon_basis(single_generators(k), 6);
        std::map<int, long> by_weight;
        for (auto& m : basis) ++by_weight[m.weight()];
        for (int n = 1; n <= 6; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(by_weight[n] == witt_number(k, n));
            CHECK(by_weight[n] == lyndon_count_brute(k, n));
        }
    }
}

TEST_CASE("bracket basics") {
    CHECK(bracket(gen(1), gen(1)).is_zero());
    CHECK(bracket(gen(2), gen(1)) == -bracket(gen(1), gen(2)));
    CHECK(to_string(bracket(gen(2), gen(1))) == "-[x1,x2]");
}

TEST_CASE("bracket of composite monomials matches the associative oracle") {
    auto t = BracketTree::node(BracketTree::gen(GeneratorId::single(1)),
                               BracketTree::gen(GeneratorId::single(2)));
    auto u = BracketTree::node(BracketTree::gen(GeneratorId::single(1)),
                               BracketTree::gen(GeneratorId::single(3)));
    auto expr = BracketTree::node(t, u);
    CHECK(assoc_expand(expr.normalize()) == expr.expand());
    CHECK_FALSE(expr.normalize().is_zero());
}

TEST_CASE("left_normed") {
    CHECK(left_normed({gen(1)}) == gen(1));
    auto e = left_normed({gen(1), gen(2), gen(3)});
    CHECK(e.terms().size() == 2);  // two weight-3 Lyndon monomials
    auto raw = BracketTree::node(
        BracketTree::node(BracketTree::gen(GeneratorId::single(1)),
                          BracketTree::gen(GeneratorId::single(2))),
        BracketTree::gen(GeneratorId::single(3)));
    CHECK(assoc_expand(e) == raw.expand());
    CHECK(left_normed({gen(1), gen(1), gen(2)}).is_zero());
}

TEST_CASE("component extraction partitions an element") {
    auto e = gen(1) + bracket(gen(1), gen(2));
    Multiweight w1;
    w1.add(GeneratorId::single(1), 1);
    CHECK(component(e, w1) == gen(1));
    CHECK(component(LieElement{}, w1).is_zero());

    LieElement sum;
    for (auto& w : multiweights_of(e)) sum += component(e, w);
    CHECK(sum == e);
}

TEST_CASE("bracket of homogeneous elements lands in the sum multiweight") {
    auto u = bracket(gen(1), gen(2));
    auto v = bracket(gen(1), gen(3));
    auto p = bracket(u, v);
    CHECK(component(p, u.multiweight() + v.multiweight()) == p);
}

TEST_CASE("Jacobi identity for homogeneous triples of weight <= 6") {
    auto basis = lyndon_basis(single_generators(2), 2);
    for (auto& ma : basis)
        for (auto& mb : basis)
            for (auto& mc : basis) {
                auto a = LieElement::monomial(ma), b = LieElement::monomial(mb),
                     c = LieElement::monomial(mc);
                auto j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                         bracket(c, bracket(a, b));
                CHECK(j.is_zero());
            }
}

TEST_CASE("randomized normalization against the associative oracle") {
    std::mt19937 rng(20250824);
    auto random_tree = [&](auto&& self, int weight) -> BracketTree {
        if (weight == 1) {
            int i = static_cast<int>(rng() % 3) + 1;
            return BracketTree::gen(GeneratorId::single(i));
        }
        int l = 1 + static_cast<int>(rng() % (weight - 1));
        return BracketTree::node(self(self, l), self(self, weight - l));
    };
    for (int trial = 0; trial < 200; ++trial) {
        int weight = 2 + static_cast<int>(rng() % 5);
        auto t = random_tree(random_tree, weight);
        CAPTURE(trial);
        CHECK(assoc_expand(t.normalize()) == t.expand());
    }
}

TEST_CASE("substitute is an algebra endomorphism") {
    std::map<GeneratorId, LieElement> images{
        {GeneratorId::single(1), bracket(gen(2), gen(3))},
        {GeneratorId::single(2), gen(1) + gen(3)},
    };
    auto a = bracket(gen(1), gen(2));
    auto b = left_normed({gen(2), gen(3), gen(1)});
    CHECK(substitute(bracket(a, b), images) ==
          bracket(substitute(a, images), substitute(b, images)));
    CHECK(substitute(gen(3), images) == gen(3));
}

TEST_CASE("parse/print round trip is the identity on canonical forms") {
    std::mt19937 rng(7);
    auto basis = lyndon_basis(single_generators(3), 4);
    for (int trial = 0; trial < 50; ++trial) {
        LieElement e;
        for (int t = 0; t < 4; ++t) {
            auto& m = basis[rng() % basis.size()];
            int num = static_cast<int>(rng() % 7) - 3;
            int den = 1 + static_cast<int>(rng() % 4);
            Rat c(num, den);
            c.canonicalize();
            e += c * LieElement::monomial(m);
        }
        CHECK(parse_element(to_string(e)) == e);
    }
    CHECK(parse_element("0").is_zero());
    CHECK(parse_element(" [ x2 , x1 ] ") == bracket(gen(2), gen(1)));
    CHECK(parse_element("[x1,x2,x3]") == left_normed({gen(1), gen(2), gen(3)}));
    CHECK(parse_element("3/6*x1") == Rat(1, 2) * gen(1));
    CHECK(parse_element("[x(1,1),x(2,1)]") ==
          bracket(LieElement::generator(GeneratorId::indexed(1, 1)),
                  LieElement::generator(GeneratorId::indexed(2, 1))));
    CHECK_THROWS_AS(parse_element("x1 +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("[x1]]"), std::invalid_argument);
}

TEST_CASE("lyndon_basis_of_multiweight agrees with filtering the full basis") {
    Multiweight w;
    w.add(GeneratorId::single(1), 2);
    w.add(GeneratorId::single(2), 2);
    auto layer = lyndon_basis_of_multiweight(w);
    REQUIRE(layer.size() == 1);
    CHECK(layer[0].word == Word{GeneratorId::single(1), GeneratorId::single(1),
                                GeneratorId::single(2), GeneratorId::single(2)});
}
