#include "doctest.h"

#include "catmate/adjunction.hpp"
#include "catmate/fixtures.hpp"
#include "catmate/universal.hpp"
#include "../support/oracles.hpp"

using namespace catmate;
namespace fx = catmate::fixtures;

namespace {

Adjunction galois() {
    auto f = fx::galois_left();
    auto g = fx::galois_right();
    auto unit = fx::thin_nat("eta", identity_functor(f.src), compose(g, f));
    auto counit = fx::thin_nat("eps", compose(f, g), identity_functor(f.tgt));
    return verify_adjunction("f -| g", f, g, unit, counit);
}

// const0 -| const1 on Arrow
Adjunction arrow_const() {
    auto A = fx::arrow();
    auto F = constant_functor(A, A, 0);
    auto G = constant_functor(A, A, 1);
    auto unit = fx::thin_nat("eta", identity_functor(A), compose(G, F));
    auto counit = fx::thin_nat("eps", compose(F, G), identity_functor(A));
    return verify_adjunction("const0 -| const1", F, G, unit, counit);
}

// identity adjunction on FS2 with both legs constant at S2, so sigma ranges
// over End(S2)
MateSquare fs2_constant_square() {
    auto S = fx::fs2();
    auto adj = identity_adjunction(S);
    auto K = constant_functor(S, S, S->object_index("S2"));
    return {adj, adj, K, K, std::nullopt, std::nullopt};
}

} // namespace

TEST_CASE("identity adjunction verifies") {
    for (const auto& C : {fx::one(), fx::arrow(), fx::fs2(), fx::g1()}) {
        auto adj = identity_adjunction(C);
        CHECK_NOTHROW(verify_adjunction(adj.name, adj.F, adj.G, adj.unit, adj.counit));
    }
}

TEST_CASE("Galois connection verifies and agrees with the order oracle") {
    auto adj = galois();
    CHECK(oracle::galois_pairs_hold(adj.F, adj.G));
    for (const auto& b : hom_bijection(adj)) {
        // both hom-sets are subsingletons, so the bijection is by counting
        CHECK(b.pairs.size() == adj.C()->hom(b.c, adj.G.ob[b.d]).size());
        for (auto [k, h] : b.pairs) CHECK(transpose_left(adj, b.d, h) == k);
    }
}

TEST_CASE("perturbed Galois data fails the triangle check") {
    auto f = fx::galois_left();
    auto g = fx::functor_from_ids("g'", fx::chain2(), fx::arrow(), {{"0", "0"}, {"1", "1"}, {"2", "1"}}, {});
    int bp = -1, bq = -1;
    CHECK_FALSE(oracle::galois_pairs_hold(f, g, &bp, &bq));
    auto unit = fx::thin_nat("eta", identity_functor(f.src), compose(g, f));
    // fg(1) = 2 has no map to 1; the best attempt is id_1
    auto C2 = fx::chain2();
    NatTrans counit{"eps", compose(f, g), identity_functor(f.tgt), {C2->identity(0), C2->identity(1), C2->identity(2)}};
    try {
        verify_adjunction("f -| g'", f, g, unit, counit);
        FAIL("expected TriangleFailure");
    } catch (const TriangleFailure& e) {
        CHECK(e.witness() == "1");
    }
}

TEST_CASE("find_left_adjoint recovers known adjoints and reports absence") {
    auto A = fx::arrow();
    auto id = find_left_adjoint(identity_functor(A));
    REQUIRE(id);
    CHECK(id->F == identity_functor(A));

    auto g = fx::galois_right();
    auto f = find_left_adjoint(g);
    REQUIRE(f);
    CHECK(f->F.ob == fx::galois_left().ob);
    CHECK(f->F.mo == fx::galois_left().mo);

    auto pick0 = constant_functor(fx::one(), A, 0);
    CHECK_FALSE(find_left_adjoint(pick0));
    // the point 1 is terminal, so picking it has a left adjoint
    CHECK(find_left_adjoint(constant_functor(fx::one(), A, 1)));

    auto S = fx::fs2();
    auto bang = constant_functor(S, fx::one(), 0);
    auto init = find_left_adjoint(bang);
    REQUIRE(init);
    CHECK(S->object(init->F.ob[0]) == "S0");
    auto term = find_right_adjoint(bang);
    REQUIRE(term);
    CHECK(S->object(term->G.ob[0]) == "S1");
}

TEST_CASE("composite adjunction satisfies the triangle identities") {
    auto g = galois();
    auto inner = *find_left_adjoint(constant_functor(fx::arrow(), fx::one(), 0));
    // One -> Arrow -> Chain2
    auto comp = compose_adjunctions(inner, g);
    CHECK(is_adjunction(comp.F, comp.G, comp.unit, comp.counit));
    CHECK(comp.F.ob[0] == 0);
}

TEST_CASE("the identity cell on the identity square mates to the identity") {
    for (const auto& adj : {galois(), arrow_const(), identity_adjunction(fx::fs2())}) {
        auto sq = identity_square(adj);
        auto tau = mate_of_sigma(sq, *sq.sigma);
        CHECK(tau == *sq.tau);
        auto v = check_mate_pair(sq);
        CHECK(v.mates);
        CHECK(v.unit_condition == v.hom_condition);
    }
}

TEST_CASE("mate round trip over every cell of a square with four cells") {
    auto sq = fs2_constant_square();
    auto cells = enumerate_nats(compose(sq.bottom.F, sq.X), compose(sq.Y, sq.top.F));
    REQUIRE(cells.size() == 4);
    for (const auto& sigma : cells) {
        auto tau = mate_of_sigma(sq, sigma);
        CHECK(mate_of_tau(sq, tau) == sigma);
        sq.sigma = sigma;
        sq.tau = tau;
        auto v = check_mate_pair(sq);
        CHECK(v.mates);
        CHECK(v.unit_condition);
        CHECK(v.hom_condition);
    }
}

TEST_CASE("a non-mate pair is rejected by both conditions with a witness") {
    auto sq = fs2_constant_square();
    auto cells = enumerate_nats(compose(sq.bottom.F, sq.X), compose(sq.Y, sq.top.F));
    auto taus = enumerate_nats(compose(sq.X, sq.top.G), compose(sq.bottom.G, sq.Y));
    int rejected = 0;
    for (const auto& sigma : cells)
        for (const auto& tau : taus) {
            sq.sigma = sigma;
            sq.tau = tau;
            auto v = check_mate_pair(sq);
            CHECK(v.unit_condition == v.hom_condition);
            CHECK(v.mates == (tau == mate_of_sigma(sq, sigma)));
            if (!v.mates) {
                ++rejected;
                CHECK_FALSE(v.witness.empty());
            }
        }
    CHECK(rejected == 12);
}

TEST_CASE("degenerate square over One") {
    auto adj = identity_adjunction(fx::one());
    CHECK(check_mate_pair(identity_square(adj)).mates);
}

TEST_CASE("pasting with identity squares is neutral") {
    auto s = fs2_constant_square();
    s.sigma = enumerate_nats(compose(s.bottom.F, s.X), compose(s.Y, s.top.F))[1];
    auto sq = mate(s);
    auto id_top = identity_square(sq.top);
    auto id_bottom = identity_square(sq.bottom);
    auto v1 = paste(PasteKind::Vertical, id_top, sq);
    CHECK(v1.sigma->comp == sq.sigma->comp);
    CHECK(v1.tau->comp == sq.tau->comp);
    auto v2 = paste(PasteKind::Vertical, sq, id_bottom);
    CHECK(v2.sigma->comp == sq.sigma->comp);
    CHECK(v2.tau->comp == sq.tau->comp);
}

TEST_CASE("pasted cells are mates of each other") {
    // vertical: Galois over Galois with identity legs, then a constant square
    auto g = galois();
    auto s1 = identity_square(g);
    auto s2 = identity_square(g);
    auto v = paste(PasteKind::Vertical, s1, s2);
    CHECK(mate_of_sigma(v, *v.sigma) == *v.tau);

    auto sq = fs2_constant_square();
    auto cells = enumerate_nats(compose(sq.bottom.F, sq.X), compose(sq.Y, sq.top.F));
    for (const auto& a : cells)
        for (const auto& b : cells) {
            auto top = sq;
            top.sigma = a;
            auto bottom = sq;
            bottom.sigma = b;
            auto p = paste(PasteKind::Vertical, mate(top), mate(bottom));
            CHECK(mate_of_sigma(p, *p.sigma) == *p.tau);
            auto h = paste(PasteKind::Horizontal, mate(top), mate(bottom));
            CHECK(mate_of_sigma(h, *h.sigma) == *h.tau);
        }
}

TEST_CASE("conjugate isomorphism check") {
    auto sq = identity_square(galois());
    auto v = conjugate_iso_check(sq);
    CHECK(v.sigma_iso);
    CHECK(v.tau_iso);

    // top id -| id, bottom const0 -| const1: the unique cells are not isos
    auto A = fx::arrow();
    MateSquare c{identity_adjunction(A), arrow_const(), identity_functor(A), identity_functor(A), std::nullopt,
                 std::nullopt};
    auto sigmas = enumerate_nats(compose(c.bottom.F, c.X), compose(c.Y, c.top.F));
    REQUIRE(sigmas.size() == 1);
    c.sigma = sigmas[0];
    c = mate(c);
    auto w = conjugate_iso_check(c);
    CHECK_FALSE(w.sigma_iso);
    CHECK_FALSE(w.tau_iso);

    auto bad = fs2_constant_square();
    bad.X = identity_functor(bad.X.src);
    bad.Y = identity_functor(bad.Y.src);
    bad.sigma = identity_nat(bad.top.F);
    bad.sigma->src = compose(bad.bottom.F, bad.X);
    bad.sigma->tgt = compose(bad.Y, bad.top.F);
    bad.tau = bad.sigma;
    bad.tau->src = compose(bad.X, bad.top.G);
    bad.tau->tgt = compose(bad.bottom.G, bad.Y);
    // swap one component of tau for a non-identity endomorphism
    auto S = fx::fs2();
    bad.tau->comp[S->object_index("S2")] = S->morphism_index("sw");
    CHECK_THROWS_AS(conjugate_iso_check(bad), NotMates);
}
