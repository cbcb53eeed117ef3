#include "doctest.h"

#include <algorithm>

#include "catmate/beck_chevalley.hpp"
#include "catmate/construct.hpp"
#include "catmate/fixtures.hpp"
#include "catmate/universal.hpp"

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

Adjunction arrow_const() {
    auto A = fx::arrow();
    auto F = constant_functor(A, A, 0);
    auto G = constant_functor(A, A, 1);
    auto unit = fx::thin_nat("eta", identity_functor(A), compose(G, F));
    auto counit = fx::thin_nat("eps", compose(F, G), identity_functor(A));
    return verify_adjunction("const0 -| const1", F, G, unit, counit);
}

NatTrans identity_between(const Functor& F, const Functor& G) {
    REQUIRE(F == G);
    auto a = identity_nat(F);
    a.tgt = G;
    return a;
}

Adjunction left_of(const Functor& G) {
    auto adj = find_left_adjoint(G);
    REQUIRE(adj);
    return *adj;
}

Adjunction right_of(const Functor& F) {
    auto adj = find_right_adjoint(F);
    REQUIRE(adj);
    return *adj;
}

// Diagram categories over a base B: B^I, B^J and (B^J)^I with their
// colimit adjunctions and evaluations at J.
struct Diagrams {
    CatPtr B, I, Jcat;
    FunctorCatPtr BI, BJ, BJI;
    Adjunction colim_I;   // colim -| Delta : B^I <-> B
    Adjunction colim_JI;  // colim -| Delta : (B^J)^I <-> B^J
};

Diagrams diagrams(const CatPtr& B, const CatPtr& I, const CatPtr& Jcat) {
    Diagrams d{B, I, Jcat, functor_category(I, B), functor_category(Jcat, B), nullptr, {}, {}};
    d.BJI = functor_category(I, d.BJ->cat);
    d.colim_I = left_of(diagonal(d.BI));
    d.colim_JI = left_of(diagonal(d.BJI));
    return d;
}

Functor ev(const Diagrams& d, int j) { return evaluation(d.BJ, j); }
Functor ev_I(const Diagrams& d, int j) { return postcompose(evaluation(d.BJ, j), d.BJI, d.BI); }

// colim -| Delta against ev_J, filled with the identity
MateSquare colimit_square(const Diagrams& d, int j) {
    MateSquare sq{d.colim_JI, d.colim_I, ev_I(d, j), ev(d, j), std::nullopt, std::nullopt};
    sq.tau = identity_between(compose(sq.X, sq.top.G), compose(sq.bottom.G, sq.Y));
    return sq;
}

// ev_J -| J_* against Delta, filled with the identity
MateSquare evaluation_square(const Diagrams& d, int j) {
    auto top = right_of(ev(d, j));
    auto bottom = right_of(ev_I(d, j));
    MateSquare sq{top, bottom, diagonal(d.BJI), diagonal(d.BI), std::nullopt, std::nullopt};
    sq.sigma = identity_between(compose(sq.bottom.F, sq.X), compose(sq.Y, sq.top.F));
    return sq;
}

std::vector<Adjunction> small_adjunctions() {
    std::vector<Adjunction> out;
    const std::vector<CatPtr> cats = {fx::one(), fx::arrow(), fx::chain2()};
    for (const auto& C : cats)
        for (const auto& D : cats)
            for (auto& a : enumerate_adjunctions(C, D)) out.push_back(std::move(a));
    return out;
}

// Squares over the pool whose legs have right adjoints, every tau.
struct LeggedSquare {
    MateSquare sq;
    Adjunction X_S;
    Adjunction Y_T;
};

std::vector<LeggedSquare> legged_squares(const std::vector<Adjunction>& pool, std::size_t cap) {
    std::vector<LeggedSquare> out;
    for (const auto& top : pool)
        for (const auto& bottom : pool)
            for (const auto& X : enumerate_functors(top.C(), bottom.C())) {
                auto XS = find_right_adjoint(X);
                if (!XS) continue;
                for (const auto& Y : enumerate_functors(top.D(), bottom.D())) {
                    auto YT = find_right_adjoint(Y);
                    if (!YT) continue;
                    for (const auto& tau : enumerate_nats(compose(X, top.G), compose(bottom.G, Y))) {
                        out.push_back({{top, bottom, X, Y, std::nullopt, tau}, *XS, *YT});
                        if (out.size() >= cap) return out;
                    }
                }
            }
    return out;
}

} // namespace

TEST_CASE("identity legs: the condition holds iff tau is invertible") {
    auto adj = galois();
    auto sq = identity_square(adj);
    auto r = bc_check(sq, BCDirection::Horizontal, false);
    CHECK(r.holds);
    CHECK(r.route == BCRoute::Direct);
    CHECK(is_iso(r.mate_cell));

    // identity on top, const0 -| const1 below, tau : id => const1 not invertible
    auto A = fx::arrow();
    auto top = identity_adjunction(A);
    auto bottom = arrow_const();
    auto id = identity_functor(A);
    auto taus = enumerate_nats(compose(id, top.G), compose(bottom.G, id));
    REQUIRE(taus.size() == 1);
    CHECK_FALSE(is_iso(taus[0]));
    MateSquare bad{top, bottom, id, id, std::nullopt, taus[0]};
    auto rb = bc_check(bad, BCDirection::Horizontal, false);
    CHECK_FALSE(rb.holds);
    CHECK(rb.witness == "1");
}

TEST_CASE("missing leg adjunctions are reported") {
    auto sq = identity_square(galois());
    CHECK_THROWS_AS(bc_check(sq, BCDirection::Vertical, false), MissingAdjunction);
    CHECK_THROWS_AS(bc_check(sq, BCDirection::Vertical, true), MissingAdjunction);
}

TEST_CASE("colimits in FS2^Arrow over Span are pointwise where they exist") {
    auto reports = pointwise_colimit_squares(fx::fs2(), fx::span(), fx::arrow(), Budget{10000, 100000});
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CAPTURE(r.J);
        CHECK(r.report.holds);
        CHECK(r.diagrams == 6195);
        CHECK(r.with_colimit == 2735);
        CHECK(r.pointwise_missing == 0);
        CHECK(r.iso == r.with_colimit);
    }
}

TEST_CASE("colimit square over Chain2 satisfies the condition for every J") {
    auto d = diagrams(fx::chain2(), fx::span(), fx::arrow());
    for (int j = 0; j < 2; ++j) {
        auto sq = colimit_square(d, j);
        auto r = bc_check(sq, BCDirection::Horizontal, false);
        CHECK(r.holds);
        // the mate of the identity is the identity
        CHECK(r.mate_cell.comp == identity_nat(r.mate_cell.src).comp);
    }
}

TEST_CASE("evaluation square against Delta satisfies the dual condition") {
    auto d = diagrams(fx::chain2(), fx::span(), fx::arrow());
    for (int j = 0; j < 2; ++j) {
        auto sq = evaluation_square(d, j);
        auto r = bc_check(sq, BCDirection::Horizontal, true);
        CHECK(r.holds);
        CHECK(r.mate_cell.comp == identity_nat(r.mate_cell.src).comp);
    }
}

TEST_CASE("counterexample search finds a square with invertible tau and non-invertible mate") {
    std::vector<Adjunction> pool;
    const std::vector<CatPtr> cats = {fx::one(), fx::arrow(), fx::chain2(), fx::span(), fx::walking_iso(), fx::g1()};
    for (const auto& C : cats)
        for (const auto& D : cats)
            for (auto& a : enumerate_adjunctions(C, D)) pool.push_back(std::move(a));
    auto found = bc_counterexamples(pool, 1);
    REQUIRE(found.size() == 1);
    CHECK(is_iso(*found[0].tau));
    CHECK_FALSE(bc_check(found[0], BCDirection::Horizontal, false).holds);

    auto pinned = fx::bc_counterexample();
    CHECK(is_iso(*pinned.tau));
    auto r = bc_check(pinned, BCDirection::Horizontal, false);
    CHECK_FALSE(r.holds);
    CHECK(r.witness == "0");
    CHECK(pinned.bottom.C()->mor_id(r.mate_cell.comp[0]) == "i");
    CHECK(check_mate_pair(pinned).mates);
}

TEST_CASE("interchange: identity adjunctions give identity conjugates") {
    auto A = fx::arrow();
    auto sq = identity_square(identity_adjunction(A));
    auto id = identity_adjunction(A);
    auto cert = bc_interchange(sq, id, id);
    CHECK(cert.conjugate);
    CHECK(cert.sharp_identity);
    CHECK(cert.sigma.comp == identity_nat(cert.sigma.src).comp);
    CHECK(cert.rho.comp == identity_nat(cert.rho.src).comp);
    CHECK(cert.horizontal_holds);
    CHECK(cert.vertical_dual_holds);
    REQUIRE(cert.sufficient);
    CHECK(*cert.sufficient == BCRoute::FFRightAdjoints);
}

TEST_CASE("interchange on the Chain2 colimit square") {
    auto d = diagrams(fx::chain2(), fx::span(), fx::arrow());
    for (int j = 0; j < 2; ++j) {
        auto sq = colimit_square(d, j);
        auto cert = bc_interchange(sq, right_of(sq.X), right_of(sq.Y));
        CHECK(cert.conjugate);
        CHECK(cert.sharp_identity);
        CHECK(cert.horizontal_holds);
        CHECK(cert.vertical_dual_holds);
        CHECK(bc_check(sq, BCDirection::Horizontal, false).holds == cert.horizontal_holds);
        LegAdjunctions legs;
        legs.X_S = right_of(sq.X);
        legs.Y_T = right_of(sq.Y);
        CHECK(bc_check(sq, BCDirection::Vertical, true, legs).holds == cert.vertical_dual_holds);
    }
}

TEST_CASE("interchange property over small squares") {
    auto squares = legged_squares(small_adjunctions(), 100000);
    REQUIRE(squares.size() == 2652);
    std::size_t ff_route = 0, holding = 0, failing = 0;
    for (const auto& s : squares) {
        auto cert = bc_interchange(s.sq, s.X_S, s.Y_T);
        CHECK(cert.conjugate);
        CHECK(cert.sharp_identity);
        CHECK(cert.horizontal_holds == cert.vertical_dual_holds);
        CHECK(bc_check(s.sq, BCDirection::Horizontal, false).holds == cert.horizontal_holds);
        if (cert.sufficient == BCRoute::FFRightAdjoints) CHECK(cert.horizontal_holds);
        if (cert.sufficient == BCRoute::Equivalences) CHECK(cert.horizontal_holds == is_iso(*s.sq.tau));
        if (cert.sufficient == BCRoute::FFRightAdjoints) ++ff_route;
        (cert.horizontal_holds ? holding : failing)++;
    }
    CHECK(ff_route > 0);
    CHECK(holding > 0);
    CHECK(failing > 0);
}

TEST_CASE("sufficient criteria") {
    SUBCASE("identity legs") {
        auto sq = identity_square(galois());
        auto id_C = identity_adjunction(sq.top.C());
        auto id_D = identity_adjunction(sq.top.D());
        auto r = bc_sufficient(sq, id_C, id_D);
        CHECK(r.holds);
        CHECK(r.hypothesis_met);
        CHECK(r.route == BCRoute::FFLeftAdjoints);
        CHECK(r.notes.front().rfind("clause 1", 0) == 0);
    }
    SUBCASE("J_! against Delta over Chain2: clause 1") {
        auto d = diagrams(fx::chain2(), fx::span(), fx::arrow());
        for (int j = 0; j < 2; ++j) {
            auto top = left_of(ev(d, j));        // J_! -| ev_J
            auto N = left_of(ev(d, j));
            auto X = diagonal(d.BI);
            MateSquare sq{top, d.colim_I, X, ev(d, j), std::nullopt, std::nullopt};
            sq.tau = identity_between(compose(sq.X, top.G), compose(d.colim_I.G, sq.Y));
            auto r = bc_sufficient(sq, d.colim_I, N);
            CHECK(r.hypothesis_met);
            CHECK(r.holds);
            CHECK(std::find(r.notes.begin(), r.notes.end(), "clause 1: X and N fully faithful") != r.notes.end());
            CHECK(r.mate_cell.comp == bc_check(sq, BCDirection::Horizontal, false).mate_cell.comp);
        }
    }
    SUBCASE("Delta legs between identity rows: clause 2") {
        auto d = diagrams(fx::chain2(), fx::span(), fx::arrow());
        auto Delta = diagonal(d.BI);
        MateSquare sq{identity_adjunction(d.B), identity_adjunction(d.BI->cat), Delta, Delta, std::nullopt,
                      identity_nat(Delta)};
        auto r = bc_sufficient(sq, d.colim_I, d.colim_I);
        CHECK(r.hypothesis_met);
        CHECK(r.holds);
        REQUIRE(r.notes.size() == 1);
        CHECK(r.notes[0] == "clause 2: X and Y fully faithful; some isomorphism F'X = YF");
    }
    SUBCASE("clause 2 with no isomorphism F'X = YF") {
        auto sq = fx::bc_counterexample();
        auto r = bc_sufficient(sq, identity_adjunction(sq.X.src), fx::arrow_to_terminal());
        CHECK(r.hypothesis_met);
        CHECK_FALSE(r.holds);
        CHECK(r.witness == "0");
        CHECK(r.notes.back() == "clause 2: X and Y fully faithful; no isomorphism F'X = YF");
    }
    SUBCASE("over small squares") {
        std::size_t clause1 = 0, clause2 = 0, none = 0;
        for (const auto& s : legged_squares(small_adjunctions(), 100000)) {
            if (!is_iso(*s.sq.tau)) continue;
            auto M = find_left_adjoint(s.sq.X);
            auto N = find_left_adjoint(s.sq.Y);
            if (!M || !N) continue;
            auto r = bc_sufficient(s.sq, *M, *N);
            CHECK(r.mate_cell.comp == bc_check(s.sq, BCDirection::Horizontal, false).mate_cell.comp);
            const auto& note = r.notes.back();
            if (note.rfind("clause 1", 0) == 0) {
                CHECK(r.holds);
                ++clause1;
            } else if (note.rfind("clause 2", 0) == 0) {
                CHECK(r.holds == (note.find("some isomorphism") != std::string::npos));
                ++clause2;
            } else {
                CHECK_FALSE(r.hypothesis_met);
                ++none;
            }
        }
        CHECK(clause1 > 0);
        CHECK(clause2 > 0);
        CHECK(none > 0);
    }
}

TEST_CASE("pasting Beck-Chevalley squares gives Beck-Chevalley squares") {
    auto d = diagrams(fx::chain2(), fx::span(), fx::arrow());
    auto sq = colimit_square(d, 1);
    auto below = identity_square(sq.bottom);
    auto v = paste(PasteKind::Vertical, sq, below);
    CHECK(bc_check(v, BCDirection::Horizontal, false).holds);

    std::vector<MateSquare> bc;
    for (auto& s : legged_squares(small_adjunctions(), 100000)) {
        auto full = mate(s.sq);
        if (is_iso(*full.sigma)) bc.push_back(std::move(full));
    }
    REQUIRE(bc.size() > 10);
    std::size_t vertical = 0, horizontal = 0;
    for (std::size_t a = 0; a < bc.size() && a < 300; ++a)
        for (std::size_t b = 0; b < bc.size() && b < 300; ++b) {
            if (bc[a].bottom.name == bc[b].top.name && bc[a].bottom.F == bc[b].top.F &&
                bc[a].bottom.G == bc[b].top.G && bc[a].bottom.unit == bc[b].top.unit) {
                auto p = paste(PasteKind::Vertical, bc[a], bc[b]);
                CHECK(is_iso(*p.sigma));
                CHECK(check_mate_pair(p).mates);
                ++vertical;
            }
            if (bc[a].Y == bc[b].X) {
                auto p = paste(PasteKind::Horizontal, bc[a], bc[b]);
                CHECK(is_iso(*p.sigma));
                CHECK(check_mate_pair(p).mates);
                ++horizontal;
            }
        }
    CHECK(vertical > 0);
    CHECK(horizontal > 0);
}
