#include "doctest.h"

#include "catmate/fixtures.hpp"
#include "catmate/universal.hpp"
#include "../support/oracles.hpp"

using namespace catmate;
namespace fx = catmate::fixtures;

namespace {

Functor fs2_point_span() {
    // S1 <- S0 -> S1
    return fx::functor_from_ids("P", fx::span(), fx::fs2(), {{"a", "S1"}, {"b", "S0"}, {"c", "S1"}},
                                {{"p", "e1"}, {"q", "e1"}});
}

Functor inclusion_of_1() {
    auto sub = full_subcategory(fx::chain2(), {1}, "Sub1");
    return sub.inclusion;
}

std::vector<int> values(const Functor& F) { return F.ob; }

} // namespace

TEST_CASE("colimit of two points over the empty set is the two-element set") {
    auto D = fs2_point_span();
    auto c = colimit(D);
    REQUIRE(c);
    CHECK(D.tgt->object(c->apex) == "S2");
    CHECK(is_colimit(*c));
    CHECK(oracle::colimit_apexes(D) == std::vector<int>{D.tgt->object_index("S2")});
}

TEST_CASE("empty and identity diagrams pick out initial and terminal objects") {
    auto C = fx::chain2();
    auto E = constant_functor(fx::discrete(0), C, 0);
    auto c = colimit(E);
    REQUIRE(c);
    CHECK(C->object(c->apex) == "0");
    auto l = limit(E);
    REQUIRE(l);
    CHECK(C->object(l->apex) == "2");

    auto A = fx::arrow();
    auto top = colimit(identity_functor(A));
    REQUIRE(top);
    CHECK(A->object(top->apex) == "1");
    auto bottom = limit(identity_functor(A));
    REQUIRE(bottom);
    CHECK(A->object(bottom->apex) == "0");
}

TEST_CASE("G1 has no coproduct of its object with itself") {
    // G1 has no coproduct of * with itself: Hom(*, *) has 2 elements, pairs 4
    auto G = fx::g1();
    CHECK_FALSE(copower(2, 0, G));
    CHECK(oracle::colimit_apexes(constant_functor(fx::discrete(2), G, 0)).empty());
}

TEST_CASE("copower and power edge cases") {
    auto C = fx::chain2();
    auto empty = copower(0, 1, C);
    REQUIRE(empty);
    CHECK(C->object(empty->apex) == "0");
    auto single = copower(1, 1, C);
    REQUIRE(single);
    CHECK(C->object(single->apex) == "1");
    CHECK(C->is_identity(single->legs[0]));
    auto top = power(0, 1, C);
    REQUIRE(top);
    CHECK(C->object(top->apex) == "2");

    auto S = fx::fs2();
    auto two = copower(2, S->object_index("S1"), S);
    REQUIRE(two);
    CHECK(S->object(two->apex) == "S2");
    auto sq = power(2, S->object_index("S2"), S);
    CHECK_FALSE(sq);  // S2 x S2 has four elements
}

TEST_CASE("comma categories under an inclusion and of identities") {
    auto In = inclusion_of_1();
    auto C = fx::chain2();
    auto one = fx::one();
    auto under0 = comma_category(constant_functor(one, C, C->object_index("0")), In);
    CHECK(under0.cat->num_objects() == 1);
    CHECK(under0.cat->num_morphisms() == 1);
    auto under2 = comma_category(constant_functor(one, C, C->object_index("2")), In);
    CHECK(under2.cat->num_objects() == 0);

    auto S = fx::fs2();
    auto arrows = comma_category(identity_functor(S), identity_functor(S));
    CHECK(arrows.cat->num_objects() == S->num_morphisms());
    // projections are functors
    CHECK(is_functor(arrows.left));
    CHECK(is_functor(arrows.right));
    // round trip through the text description validates every law
    CHECK_NOTHROW(validate_category(to_raw(*arrows.cat)));
}

TEST_CASE("Kan extensions along the identity and along inclusions") {
    auto S = fx::fs2();
    auto D = fs2_point_span();
    auto lan = kan_extension(KanSide::Left, identity_functor(D.src), D);
    REQUIRE(lan);
    CHECK(lan->ext == D);
    CHECK(lan->cell == identity_nat(D));

    // right Kan along {1} -> Chain2 at 2 is the empty limit
    auto In = inclusion_of_1();
    auto X = constant_functor(In.src, fx::chain2(), 1);
    auto ran = kan_extension(KanSide::Right, In, X);
    REQUIRE(ran);
    CHECK(ran->ext.ob[2] == 2);
    CHECK(ran->commas[2].cat->num_objects() == 0);

    // left Kan along {0} -> Arrow of a point is constant with identity
    auto A = fx::arrow();
    auto at0 = full_subcategory(A, {0}, "Sub0").inclusion;
    auto C = fx::chain2();
    auto pt = constant_functor(at0.src, C, 1);
    auto lan0 = kan_extension(KanSide::Left, at0, pt);
    REQUIRE(lan0);
    CHECK(lan0->ext.ob == std::vector<int>{1, 1});
    CHECK(C->is_identity(lan0->ext.mo[A->morphism_index("i")]));
    for (int j = 0; j < A->num_objects(); ++j) {
        auto apexes = oracle::colimit_apexes(compose(pt, lan0->commas[j].left));
        CHECK(std::find(apexes.begin(), apexes.end(), lan0->ext.ob[j]) != apexes.end());
    }
}

TEST_CASE("evaluation adjoints on Chain2 at 1") {
    auto C = fx::chain2();
    auto ea = evaluation_adjoints(C, C, 1);
    REQUIRE(ea.shriek);
    REQUIRE(ea.star);
    const auto& objs = ea.CJ->objects;
    // J_* c = (c, c, 2) and J_! 1 = (0, 1, 1)
    for (int c = 0; c < 3; ++c) CHECK(values(objs[ea.star->G.ob[c]]) == std::vector<int>{c, c, 2});
    CHECK(values(objs[ea.shriek->F.ob[1]]) == std::vector<int>{0, 1, 1});
    CHECK(ea.shriek_ff);
    CHECK(ea.star_ff);
}

TEST_CASE("evaluation adjoints over preorders are fully faithful on both sides") {
    auto C = fx::chain2();
    for (const auto& J : {fx::arrow(), fx::span(), fx::chain2(), fx::one()})
        for (int j = 0; j < J->num_objects(); ++j) {
            CAPTURE(J->name());
            CAPTURE(j);
            REQUIRE(trivial_endomorphisms(*J, j));
            auto ea = evaluation_adjoints(C, J, j);
            REQUIRE(ea.shriek);
            REQUIRE(ea.star);
            CHECK(ea.shriek_ff);
            CHECK(ea.star_ff);
            // ev_J J_! = id and ev_J J_* = id up to the (co)unit
            CHECK(is_iso(ea.shriek->unit));
            CHECK(is_iso(ea.star->counit));
        }
}

TEST_CASE("evaluation adjoints on FS2 over Arrow") {
    auto S = fx::fs2();
    for (int j = 0; j < 2; ++j) {
        auto ea = evaluation_adjoints(S, fx::arrow(), j);
        CHECK(ea.shriek);
        CHECK(ea.star);
        CHECK(ea.shriek_ff);
        CHECK(ea.star_ff);
    }
}

TEST_CASE("evaluation adjoints over G1 need the missing copower S2 + S2") {
    auto S = fx::fs2();
    auto G = fx::g1();
    CHECK_FALSE(trivial_endomorphisms(*G, 0));
    auto ea = evaluation_adjoints(S, G, 0);
    CHECK_FALSE(ea.shriek);
    CHECK_FALSE(ea.star);
}
