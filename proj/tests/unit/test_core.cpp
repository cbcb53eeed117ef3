#include "doctest.h"

#include "catmate/construct.hpp"
#include "catmate/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace catmate;
namespace fx = catmate::fixtures;

namespace {

RawCategory arrow_raw() {
    RawCategory raw;
    raw.name = "Arrow";
    raw.objects = {"0", "1"};
    raw.morphisms = {{"i", "0", "1"}};
    raw.composites = {{"id_0", "id_0", "id_0"}, {"id_1", "id_1", "id_1"}, {"i", "id_0", "i"}, {"id_1", "i", "i"}};
    return raw;
}

RawCategory cyclic3_raw() {
    RawCategory raw;
    raw.name = "Z3";
    raw.objects = {"*"};
    raw.morphisms = {{"a", "*", "*"}, {"b", "*", "*"}};
    const std::vector<std::string> el{"id_*", "a", "b"};
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) raw.composites.push_back({el[x], el[y], el[(x + y) % 3]});
    return raw;
}

} // namespace

TEST_CASE("validate_category accepts the arrow and rejects a missing composite") {
    auto c = validate_category(arrow_raw());
    CHECK(c->num_objects() == 2);
    CHECK(c->num_morphisms() == 3);

    auto raw = arrow_raw();
    raw.composites.erase(raw.composites.begin() + 2);  // i . id_0
    CHECK_THROWS_AS(validate_category(raw), MissingComposite);
}

TEST_CASE("validate_category finds a planted associativity failure") {
    auto good = cyclic3_raw();
    REQUIRE_NOTHROW(validate_category(good));
    // scan single-entry perturbations until one breaks associativity only
    bool found = false;
    std::string witness;
    for (std::size_t k = 0; k < good.composites.size() && !found; ++k)
        for (const std::string h : {"id_*", "a", "b"}) {
            auto raw = good;
            if (raw.composites[k].h == h) continue;
            raw.composites[k].h = h;
            try {
                validate_category(raw);
            } catch (const AssociativityViolation& e) {
                found = true;
                witness = e.witness();
                break;
            } catch (const Error&) {
            }
        }
    CHECK(found);
    CHECK(std::count(witness.begin(), witness.end(), '.') == 2);
}

TEST_CASE("validate_category reports identity and id errors") {
    auto raw = arrow_raw();
    raw.composites[2].h = "id_1";
    CHECK_THROWS_AS(validate_category(raw), BadComposite);

    raw = arrow_raw();
    raw.morphisms.push_back({"j", "0", "7"});
    CHECK_THROWS_AS(validate_category(raw), DanglingId);

    raw = cyclic3_raw();
    for (auto& c : raw.composites)
        if (c.g == "id_*" && c.f == "a") c.h = "b";
    CHECK_THROWS_AS(validate_category(raw), IdentityViolation);
}

TEST_CASE("functor categories match monotone-map counts") {
    auto A = fx::arrow();
    auto AA = functor_category(A, A);
    CHECK(AA->cat->num_objects() == oracle::count_monotone(*A, *A));
    CHECK(AA->cat->num_objects() == 3);
    CHECK(AA->cat->num_morphisms() == 6);

    auto OA = functor_category(fx::one(), A);
    CHECK(OA->cat->num_objects() == 2);
    CHECK(OA->cat->num_morphisms() == 3);
    auto AO = functor_category(A, fx::one());
    CHECK(AO->cat->num_objects() == 1);
    CHECK(AO->cat->num_morphisms() == 1);

    auto span_arrow = functor_category(fx::span(), A);
    CHECK(span_arrow->cat->num_objects() == oracle::count_monotone(*fx::span(), *A));
    CHECK(span_arrow->cat->num_objects() == 5);
}

TEST_CASE("functor category over One is isomorphic to the base") {
    for (const auto& C : {fx::arrow(), fx::fs2(), fx::g1(), fx::walking_iso()}) {
        auto OC = functor_category(fx::one(), C);
        auto ev = evaluation(OC, 0);
        CHECK(is_functor(ev));
        CHECK(is_isomorphism(ev));
        auto back = inverse_isomorphism(ev);
        CHECK(is_functor(back));
        CHECK(compose(ev, back) == identity_functor(C));
    }
}

TEST_CASE("product categories count pairs") {
    auto A = fx::arrow();
    auto AA = product_category(A, A);
    CHECK(AA->num_objects() == 4);
    CHECK(AA->num_morphisms() == 9);
    auto SA = product_category(fx::span(), A);
    CHECK(SA->num_objects() == 3 * 2);
    CHECK(SA->num_morphisms() == 5 * 3);
    auto OJ = product_category(fx::one(), fx::span());
    CHECK(OJ->num_objects() == 3);
    CHECK(OJ->num_morphisms() == 5);
    CHECK(is_functor(product_projection(SA, fx::span(), A, 0)));
    CHECK(is_functor(product_projection(SA, fx::span(), A, 1)));
}

TEST_CASE("enumerate_functors and enumerate_nats") {
    auto A = fx::arrow();
    CHECK(enumerate_functors(fx::one(), A).size() == 2);
    CHECK(enumerate_functors(fx::walking_iso(), A).size() == 2);
    CHECK(enumerate_functors(A, fx::one()).size() == 1);
    for (const auto& F : enumerate_functors(fx::walking_iso(), A)) CHECK(F.ob[0] == F.ob[1]);

    auto id = identity_functor(A);
    CHECK(enumerate_nats(id, id).size() == 1);
    auto c0 = constant_functor(A, A, 0);
    auto c1 = constant_functor(A, A, 1);
    CHECK(enumerate_nats(c0, c1).size() == 1);
    CHECK(enumerate_nats(c1, c0).empty());

    // FS2 endofunctors of G1 correspond to involutions in End(S2) and friends
    auto fs2 = fx::fs2();
    auto fs = enumerate_functors(fx::g1(), fs2);
    for (const auto& F : fs) CHECK(is_functor(F));
    CHECK_THROWS_AS(enumerate_functors(fx::span(), fs2, Budget{10, 100}), SizeBudgetExceeded);
}

TEST_CASE("whiskering and the interchange law") {
    auto A = fx::arrow();
    auto id = identity_functor(A);
    auto idn = identity_nat(id);
    CHECK(vertical(idn, idn) == idn);
    CHECK(horizontal(idn, idn) == identity_nat(compose(id, id)));

    auto c0 = constant_functor(A, A, 0);
    auto t = fx::thin_nat("t", c0, id);
    auto to_one = constant_functor(A, fx::one(), 0);
    auto w = compose_whisker(WhiskerKind::LeftWhisker, to_one, t);
    CHECK(w == identity_nat(compose(to_one, c0)));
    CHECK_THROWS_AS(compose_whisker(WhiskerKind::Vertical, t, idn), ShapeMismatch);

    // (t' o t) * (s' o s) = (t' * s') o (t * s) over all endo-transformations of Arrow
    auto fc = functor_category(A, A);
    int checked = 0;
    for (const auto& s : fc->morphisms)
        for (const auto& s2 : fc->morphisms) {
            if (s.tgt != s2.src) continue;
            for (const auto& u : fc->morphisms)
                for (const auto& u2 : fc->morphisms) {
                    if (u.tgt != u2.src) continue;
                    auto lhs = horizontal(vertical(u2, u), vertical(s2, s));
                    auto rhs = vertical(horizontal(u2, s2), horizontal(u, s));
                    CHECK(lhs.comp == rhs.comp);
                    ++checked;
                }
        }
    CHECK(checked > 0);
}

TEST_CASE("twist isomorphisms are isomorphisms of categories") {
    auto t = twist(fx::span(), fx::arrow(), fx::arrow());
    for (const auto* F : {&t.flat_to_CI_J, &t.flat_to_CJ_I, &t.CI_J_to_CJ_I, &t.CJ_I_to_CI_J}) {
        CHECK(is_functor(*F));
        CHECK(is_isomorphism(*F));
    }
    CHECK(compose(t.CJ_I_to_CI_J, t.CI_J_to_CJ_I) == identity_functor(t.CI_J->cat));
}

TEST_CASE("fixture sizes") {
    CHECK(fx::fs2()->num_morphisms() == 11);
    CHECK(fx::fs2()->num_objects() == 3);
    CHECK(fx::chain2()->num_morphisms() == 6);
    CHECK(fx::span()->num_morphisms() == 5);
    CHECK(fx::g1()->num_morphisms() == 2);
    auto fsp = functor_category(fx::span(), fx::fs2(), Budget{500, 10000});
    CHECK(fsp->cat->num_objects() == 43);
}
