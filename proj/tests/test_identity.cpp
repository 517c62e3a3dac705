#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "engel/identity.hpp"

using namespace engel;

namespace {

GeneratorId xs(int i) { return GeneratorId::single(i); }
LieElement gen(int i) { return LieElement::generator(xs(i)); }

Multiweight multilinear(std::initializer_list<int> idx) {
    Multiweight w;
    for (int i : idx) w.add(xs(i), 1);
    return w;
}

}  // namespace

TEST_CASE("engel_identity") {
    auto e1 = engel_identity(1);
    CHECK(e1.body() == bracket(gen(1), gen(2)));
    auto e2 = engel_identity(2);
    CHECK(e2.body() == left_normed({gen(1), gen(2), gen(2)}));
    auto e3 = engel_identity(3);
    CHECK(e3.body().multiweight().degree(xs(2)) == 3);
    CHECK_THROWS_AS(engel_identity(0), std::invalid_argument);
}

TEST_CASE("identity validation") {
    CHECK_THROWS_AS(Identity(LieElement{}, {xs(1)}), std::invalid_argument);
    CHECK_THROWS_AS(Identity(gen(2), {xs(1)}), std::invalid_argument);
    auto id = Identity(gen(1), {xs(1), xs(2)});
    CHECK(id.degree_in(xs(1)) == 1);
    CHECK(id.degree_in(xs(2)) == 0);
}

TEST_CASE("polarize the 2-Engel identity") {
    auto id = engel_identity(2);  // [x1,x2,x2], y = x1, x = x2
    auto p = polarize(id, xs(2), 2, {xs(3), xs(4)});
    auto expected = left_normed({gen(1), gen(3), gen(4)}) + left_normed({gen(1), gen(4), gen(3)});
    CHECK(p.body() == expected);
    CHECK(p.variables() == std::vector<GeneratorId>{xs(1), xs(3), xs(4)});
}

TEST_CASE("polarize by one part is a renaming") {
    auto id = engel_identity(1);  // [x1,x2]
    auto p = polarize(id, xs(2), 1, {xs(5)});
    CHECK(p.body() == bracket(gen(1), gen(5)));
}

TEST_CASE("polarize degree three gives all six orderings") {
    auto id = engel_identity(3);
    auto p = polarize(id, xs(2), 3, {xs(3), xs(4), xs(5)});
    LieElement expected;
    std::vector<int> perm{3, 4, 5};
    do expected += left_normed({gen(1), gen(perm[0]), gen(perm[1]), gen(perm[2])});
    while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(p.body() == expected);
}

TEST_CASE("polarize error paths") {
    auto id = engel_identity(2);
    CHECK_THROWS_WITH_AS(polarize(id, xs(2), 3, {xs(3), xs(4), xs(5)}),
                         "cannot polarize below degree", std::invalid_argument);
    CHECK_THROWS_AS(polarize(id, xs(9), 1, {xs(3)}), std::invalid_argument);
    CHECK_THROWS_AS(polarize(id, xs(2), 2, {xs(1), xs(3)}), std::invalid_argument);
}

TEST_CASE("polarization completeness: re-identifying fresh variables recovers d! times the body") {
    for (int n : {2, 3}) {
        auto id = engel_identity(n);
        std::vector<GeneratorId> fresh;
        for (int i = 0; i < n; ++i) fresh.push_back(xs(3 + i));
        auto p = polarize(id, xs(2), n, fresh);
        std::map<GeneratorId, LieElement> back;
        for (auto& f : fresh) back.emplace(f, gen(2));
        Rat factorial(1);
        for (int i = 2; i <= n; ++i) factorial *= i;
        CHECK(substitute(p.body(), back) == factorial * id.body());
    }
}

TEST_CASE("expand_relation_one term counts and degeneracies") {
    // m=1, k=2, no gaps: dies by antisymmetry
    CHECK(expand_relation_one(1, 2).body().is_zero());

    // m=2, k=2: (2!)^2 = 4 raw terms; count via a gap-free rebuild of the sum
    auto r22 = expand_relation_one(2, 2);
    CHECK(r22.variables().size() == 4);

    auto r32 = expand_relation_one(3, 2);
    CHECK(r32.variables().size() == 6);
    for (auto& [m, c] : r32.body().terms()) CHECK(m.multiweight().is_multilinear());

    CHECK_THROWS_AS(expand_relation_one(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(expand_relation_one(1, 1), std::invalid_argument);
}

TEST_CASE("relation one with a skeleton keeps gap entries fixed") {
    RelationOneSkeleton skel;
    skel.gaps = {{xs(9)}, {}};
    auto r = expand_relation_one(1, 2, skel);
    // sum over Sym(2): [x(1,1),x9,x(2,1)] + [x(2,1),x9,x(1,1)]
    auto a = LieElement::generator(GeneratorId::indexed(1, 1));
    auto b = LieElement::generator(GeneratorId::indexed(2, 1));
    CHECK(r.body() == left_normed({a, gen(9), b}) + left_normed({b, gen(9), a}));

    RelationOneSkeleton bad;
    bad.gaps = {{GeneratorId::indexed(1, 1)}, {}};
    CHECK_THROWS_AS(expand_relation_one(1, 2, bad), std::invalid_argument);
}

TEST_CASE("LayerSpan basics") {
    LayerSpan span(multilinear({1, 2, 3}), 100);
    CHECK(span.ambient_dim() == 2);
    CHECK(span.rank() == 0);
    auto e = left_normed({gen(1), gen(2), gen(3)});
    CHECK(span.add(e));
    CHECK_FALSE(span.add(Rat(2) * e));
    CHECK(span.rank() == 1);
    CHECK(span.contains(Rat(-3) * e));
    auto cert = span.express(Rat(-3) * e);
    REQUIRE(cert.has_value());
    LieElement back;
    for (auto& [c, m] : *cert) back += c * m;
    CHECK(back == Rat(-3) * e);
    CHECK_FALSE(span.express(left_normed({gen(1), gen(3), gen(2)})).has_value());
    CHECK_THROWS_AS(span.add(gen(1)), std::invalid_argument);
    CHECK_THROWS_AS(LayerSpan(multilinear({1, 2, 3, 4, 5, 6, 7}), 100), ResourceError);
}

TEST_CASE("substitution instances of [y,x] span the whole multilinear layer") {
    auto id = engel_identity(1);
    auto cs = consequence_space({id}, multilinear({1, 2}));
    CHECK(cs.ambient_dim() == 1);
    CHECK(cs.rank() == 1);
}

TEST_CASE("2-Engel consequence ranks in small multilinear layers") {
    auto id = engel_identity(2);

    auto w2 = consequence_space({id}, multilinear({1, 2}));
    CHECK(w2.ambient_dim() == 1);
    CHECK(w2.rank() == 0);  // no weight-2 consequences

    auto w3 = consequence_space({id}, multilinear({1, 2, 3}));
    CHECK(w3.ambient_dim() == 2);
    CHECK(w3.rank() == 2);  // 2-Engel implies [x,y,z] = 0

    auto w4 = consequence_space({id}, multilinear({1, 2, 3, 4}));
    CHECK(w4.quotient_dim() == 0);  // the weight-4 multilinear layer dies
}

TEST_CASE("consequence_space of the empty set has rank 0") {
    auto cs = consequence_space({}, multilinear({1, 2, 3}));
    CHECK(cs.rank() == 0);
}

TEST_CASE("consequence rank is monotone in the identity set") {
    auto e3 = engel_identity(3);
    auto e2 = engel_identity(2);
    auto w = multilinear({1, 2, 3, 4});
    auto small = consequence_space({e3}, w);
    auto large = consequence_space({e3, e2}, w);
    CHECK(small.rank() <= large.rank());
}

TEST_CASE("is_consequence with certificates") {
    auto id = engel_identity(2);

    auto target = left_normed({gen(1), gen(2), gen(3)});
    auto r = is_consequence(target, {id});
    CHECK(r.holds);
    LieElement back;
    for (auto& [c, inst] : r.certificate) back += c * inst;
    CHECK(back == target);

    // self-consequence under renaming
    auto renamed = left_normed({gen(5), gen(6), gen(6)});
    CHECK(is_consequence(renamed, {id}).holds);

    CHECK_FALSE(is_consequence(bracket(gen(1), gen(2)), {id}).holds);
}

TEST_CASE("Sym-invariance of the Engel consequence space in multilinear layers") {
    // the n-Engel consequence space is stable under permuting the layer's
    // variables; check rank equality of permuted instance images at weight <= 5
    for (int n : {2, 3}) {
        auto id = engel_identity(n);
        std::vector<int> vars{1, 2, 3, 4};
        auto w = multilinear({1, 2, 3, 4});
        auto cs = consequence_space({id}, w);
        std::vector<int> perm{2, 3, 4, 1};
        std::map<GeneratorId, LieElement> images;
        for (std::size_t i = 0; i < vars.size(); ++i) images.emplace(xs(vars[i]), gen(perm[i]));
        for (auto& member : cs.span.members()) {
            CHECK(cs.span.contains(substitute(member, images)));
        }
    }
}
