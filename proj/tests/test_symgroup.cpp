#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "engel/young.hpp"

using namespace engel;

static Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

TEST_CASE("permutation basics") {
    Permutation id(4);
    CHECK(id.is_identity());
    CHECK(to_string(id) == "()");
    CHECK(id.sign() == 1);

    Permutation p = Permutation::from_one_line({2, 3, 1});
    CHECK(p.apply(1) == 2);
    CHECK(p.apply(3) == 1);
    CHECK(p.sign() == 1);
    CHECK(to_string(p) == "(1 2 3)");
    CHECK(p.then(p).then(p).is_identity());
    CHECK(p.then(p.inverse()).is_identity());

    Permutation t = Permutation::transposition(3, 1, 2);
    CHECK(t.sign() == -1);
    // right action: 1 -> 2 under t, then 2 -> 3 under p
    CHECK(t.then(p).apply(1) == 3);
    CHECK(p.then(t).apply(3) == 2);

    CHECK_THROWS_AS(Permutation::from_one_line({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(p.apply(4), std::invalid_argument);
    CHECK_THROWS_AS(p.then(id), std::invalid_argument);
}

TEST_CASE("permutation parsing") {
    CHECK(parse_permutation("(1 2)(3 4 5)") == parse_permutation("[2,1,4,5,3]"));
    CHECK(parse_permutation("()", 3) == Permutation(3));
    CHECK(parse_permutation("(2 3)", 5).degree() == 5);
    CHECK(parse_permutation("(1 3 2)").apply(3) == 2);
    CHECK_THROWS_AS(parse_permutation("(1 5)", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("[2,1,1]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);

    for (auto& p : symmetric_group(5)) {
        CHECK(parse_permutation(to_string(p), 5) == p);
        std::string one_line = "[";
        for (int i = 1; i <= 5; ++i) one_line += (i > 1 ? "," : "") + std::to_string(p.apply(i));
        CHECK(parse_permutation(one_line + "]") == p);
    }
}

TEST_CASE("symmetric group enumeration") {
    CHECK(symmetric_group(1).size() == 1);
    CHECK(symmetric_group(4).size() == 24);
    int sign_sum = 0;
    std::set<Permutation> distinct;
    for (auto& p : symmetric_group(4)) {
        sign_sum += p.sign();
        distinct.insert(p);
    }
    CHECK(sign_sum == 0);
    CHECK(distinct.size() == 24);
}

TEST_CASE("group algebra arithmetic") {
    auto a = GroupAlgebraElement::of(parse_permutation("(1 2)", 3)) +
             Rat(2) * GroupAlgebraElement::one(3);
    auto b = GroupAlgebraElement::of(parse_permutation("(1 2)", 3), Rat(-1)) +
             Rat(2) * GroupAlgebraElement::one(3);
    // (2 + s)(2 - s) = 4 - s^2 = 3 for a transposition s
    CHECK(a * b == Rat(3) * GroupAlgebraElement::one(3));

    auto s3 = symmetric_group(3);
    for (auto& p : s3)
        for (auto& q : s3)
            CHECK((GroupAlgebraElement::of(p) * GroupAlgebraElement::of(q)) ==
                  GroupAlgebraElement::of(p.then(q)));

    // associativity on a few mixed elements
    auto c = GroupAlgebraElement::of(parse_permutation("(1 2 3)", 3), Rat(1, 2)) +
             GroupAlgebraElement::of(parse_permutation("(2 3)", 3), Rat(-3));
    CHECK((a * b) * c == a * (b * c));
    CHECK(to_string(GroupAlgebraElement(3)) == "0");
    CHECK(a - a == GroupAlgebraElement(3));
}

TEST_CASE("partitions and hook lengths") {
    std::vector<std::size_t> counts = {1, 2, 3, 5, 7, 11};
    for (int n = 1; n <= 6; ++n) CHECK(partitions_of(n).size() == counts[n - 1]);

    YoungDiagram d({3, 2});
    CHECK(d.size() == 5);
    CHECK(d.conjugate() == std::vector<int>{2, 2, 1});
    CHECK(d.hook_product() == 24);  // hooks 4,3,1 / 2,1
    CHECK(d.standard_tableau_count() == 5);

    CHECK(YoungDiagram({4}).standard_tableau_count() == 1);
    CHECK(YoungDiagram({1, 1, 1, 1}).standard_tableau_count() == 1);
    CHECK(YoungDiagram({2, 2}).standard_tableau_count() == 2);
    CHECK_THROWS_AS(YoungDiagram({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram({}), std::invalid_argument);

    // sum of (f^lambda)^2 over shapes of n is n!
    for (int n = 1; n <= 8; ++n) {
        Int sum = 0;
        for (auto& shape : partitions_of(n)) {
            Int f = shape.standard_tableau_count();
            sum += f * f;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("row-column bound") {
    for (int n = 1; n <= 12; ++n)
        for (auto& shape : partitions_of(n)) {
            int b = row_column_bound(shape);
            CHECK(b == std::max(shape.rows[0], static_cast<int>(shape.rows.size())));
            CHECK(static_cast<long>(b) * b >= n);
        }
}

TEST_CASE("standard tableaux enumeration") {
    for (int n = 1; n <= 6; ++n) {
        for (auto& shape : partitions_of(n)) {
            auto tabs = standard_tableaux(shape);
            CHECK(Int(tabs.size()) == shape.standard_tableau_count());
            for (auto& t : tabs) CHECK(t.is_standard());
        }
    }
    auto fills = all_fillings(YoungDiagram({2, 1}));
    CHECK(fills.size() == 6);
    int standard = 0;
    for (auto& t : fills) standard += t.is_standard();
    CHECK(standard == 2);
}

TEST_CASE("tableau parse and print round trip") {
    YoungTableau t = parse_tableau("1 3 4\n2 5\n");
    CHECK(t.diagram == YoungDiagram({3, 2}));
    CHECK(t.is_standard());
    CHECK(t.position_of(5) == std::pair<int, int>{1, 1});
    CHECK(parse_tableau(to_string(t)).filling == t.filling);

    CHECK_THROWS_AS(parse_tableau("1 2\n3 4 5"), std::invalid_argument);  // bad shape
    CHECK_THROWS_AS(parse_tableau("1 2\n2 3"), std::invalid_argument);    // not a bijection
    CHECK_THROWS_AS(parse_tableau(""), std::invalid_argument);

    for (auto& shape : partitions_of(5))
        for (auto& tab : standard_tableaux(shape))
            CHECK(parse_tableau(to_string(tab)).filling == tab.filling);
}

TEST_CASE("row and column groups") {
    YoungTableau t = YoungTableau::row_major(YoungDiagram({3, 2}));
    auto h = row_group(t);
    auto v = column_group(t);
    CHECK(h.size() == 3);  // (1 2), (2 3), (4 5)
    CHECK(v.size() == 2);  // (1 4), (2 5)
    for (auto& g : h)
        for (int i = 1; i <= 5; ++i) {
            // row membership preserved
            bool top = i <= 3, top_img = g.apply(i) <= 3;
            CHECK(top == top_img);
        }
    for (auto& g : v) CHECK(g.sign() == -1);
}

TEST_CASE("young symmetrizer small shapes") {
    auto one2 = GroupAlgebraElement::one(2);
    auto swap2 = GroupAlgebraElement::of(Permutation::transposition(2, 1, 2));

    YoungTableau row2 = YoungTableau::row_major(YoungDiagram({2}));
    CHECK(young_symmetrizer(row2) == one2 + swap2);
    CHECK(essential_scalar(row2) == 2);

    YoungTableau col2 = YoungTableau::row_major(YoungDiagram({1, 1}));
    CHECK(young_symmetrizer(col2) == one2 - swap2);
    CHECK(essential_scalar(col2) == 2);

    YoungTableau hook = YoungTableau::row_major(YoungDiagram({2, 1}));
    auto e = young_symmetrizer(hook);
    // (1 - (1 3))(1 + (1 2)) expanded
    auto expected = GroupAlgebraElement::one(3) +
                    GroupAlgebraElement::of(parse_permutation("(1 2)", 3)) -
                    GroupAlgebraElement::of(parse_permutation("(1 3)", 3)) -
                    GroupAlgebraElement::of(parse_permutation("(1 3 2)", 3));
    CHECK(e == expected);
    CHECK(essential_scalar(hook) == 3);
}

TEST_CASE("essential scalar is N! over the tableau count") {
    for (int n = 1; n <= 4; ++n)
        for (auto& shape : partitions_of(n))
            for (auto& t : all_fillings(shape))
                CHECK(essential_scalar(t) == Rat(factorial(n)) / Rat(shape.standard_tableau_count()));
    for (auto& shape : partitions_of(5))
        for (auto& t : standard_tableaux(shape))
            CHECK(essential_scalar(t) == Rat(120) / Rat(shape.standard_tableau_count()));
}

TEST_CASE("identity decomposition into primitive idempotents") {
    std::vector<std::size_t> involutions = {1, 2, 4, 10, 26};
    for (int n = 1; n <= 4; ++n) {
        auto es = decompose_identity(n);
        CHECK(es.size() == involutions[n - 1]);
        GroupAlgebraElement sum(n);
        for (auto& e : es) sum += e;
        CHECK(sum == GroupAlgebraElement::one(n));
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = 0; j < es.size(); ++j) {
                auto prod = es[i] * es[j];
                if (i == j)
                    CHECK(prod == es[i]);
                else
                    CHECK(prod.is_zero());
            }
    }

    auto es5 = decompose_identity(5);
    CHECK(es5.size() == involutions[4]);
    GroupAlgebraElement sum(5);
    for (auto& e : es5) {
        CHECK(e * e == e);
        sum += e;
    }
    CHECK(sum == GroupAlgebraElement::one(5));

    CHECK_THROWS_AS(decompose_identity(7), ResourceError);
    CHECK_THROWS_AS(decompose_identity(5, 4), ResourceError);
}

TEST_CASE("permutation action on a generator column") {
    auto x = [](int i, int j) { return LieElement::generator(GeneratorId::indexed(i, j)); };
    Permutation s = parse_permutation("(1 2)", 2);

    LieElement e = left_normed({x(1, 1), x(1, 2)});
    CHECK(act(s, e, 1) == left_normed({x(2, 1), x(1, 2)}));
    CHECK(act(s, e, 2) == left_normed({x(1, 1), x(2, 2)}));
    CHECK(act(Permutation(2), e, 1) == e);

    // rows in the acted-on column must fit the permutation's degree
    CHECK_THROWS_AS(act(s, left_normed({x(3, 1), x(1, 1)}), 1), std::invalid_argument);
    CHECK_NOTHROW(act(s, left_normed({x(3, 2), x(1, 1)}), 1));

    // right action: acting by tau then sigma equals acting by tau.then(sigma)
    auto s4 = symmetric_group(4);
    LieElement f = left_normed({x(1, 1), x(2, 1), x(3, 1), x(4, 1), x(2, 2)});
    for (auto& tau : {parse_permutation("(1 2 3)", 4), parse_permutation("(2 4)", 4)})
        for (auto& sigma : {parse_permutation("(1 4)(2 3)", 4), parse_permutation("(3 4)", 4)})
            CHECK(act(sigma, act(tau, f, 1), 1) == act(tau.then(sigma), f, 1));
}

TEST_CASE("applying group algebra elements to Lie elements") {
    auto x = [](int i, int j) { return LieElement::generator(GeneratorId::indexed(i, j)); };
    LieElement e = left_normed({x(1, 1), x(2, 1)});

    // the antisymmetrizer doubles an already antisymmetric element
    YoungTableau col2 = YoungTableau::row_major(YoungDiagram({1, 1}));
    CHECK(apply_algebra_element(young_symmetrizer(col2), e, 1) == Rat(2) * e);
    // the full symmetrizer kills it
    YoungTableau row2 = YoungTableau::row_major(YoungDiagram({2}));
    CHECK(apply_algebra_element(young_symmetrizer(row2), e, 1).is_zero());

    // linearity over the algebra
    auto a = GroupAlgebraElement::of(parse_permutation("(1 2)", 2), Rat(1, 2));
    auto b = Rat(3) * GroupAlgebraElement::one(2);
    CHECK(apply_algebra_element(a + b, e, 1) ==
          apply_algebra_element(a, e, 1) + apply_algebra_element(b, e, 1));
    // and compatibility with the product (right action)
    YoungTableau hook = YoungTableau::row_major(YoungDiagram({2, 1}));
    LieElement f = left_normed({x(1, 1), x(2, 1), x(3, 1)});
    auto u = young_symmetrizer(hook);
    auto v = GroupAlgebraElement::of(parse_permutation("(1 3)", 3)) +
             Rat(2) * GroupAlgebraElement::one(3);
    CHECK(apply_algebra_element(u * v, f, 1) ==
          apply_algebra_element(v, apply_algebra_element(u, f, 1), 1));
}
