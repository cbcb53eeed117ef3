#include "doctest.h"

#include "catmate/construct.hpp"
#include "catmate/fixtures.hpp"
#include "catmate/localization.hpp"
#include "../support/oracles.hpp"

#include <map>
#include <set>

using namespace catmate;
namespace fx = catmate::fixtures;

namespace {

Word to_word(const FinCat& C, const std::vector<int>& letters) {
    const int m = C.num_morphisms();
    Word w;
    for (int l : letters) w.push_back(l < m ? Letter{l, false} : Letter{l - m, true});
    return w;
}

// the oracle partition and the engine classification agree word by word
bool agrees_with_oracle(const LocalizationResult& loc, int N) {
    auto oc = oracle::word_closure(loc.rc, N);
    std::map<int, int> cls_to_mor;
    std::set<int> mors_seen;
    for (std::size_t k = 0; k < oc.words.size(); ++k) {
        int m = loc.classify(oc.words[k].src, to_word(*loc.rc.cat, oc.words[k].letters));
        if (m < 0) return false;
        auto [it, fresh] = cls_to_mor.emplace(oc.cls[k], m);
        if (!fresh && it->second != m) return false;
        mors_seen.insert(m);
    }
    std::set<int> distinct;
    for (auto& [c, m] : cls_to_mor) distinct.insert(m);
    return distinct.size() == cls_to_mor.size() && static_cast<int>(mors_seen.size()) == loc.ho->num_morphisms();
}

} // namespace

TEST_CASE("RelArrow localizes to the walking isomorphism") {
    auto rc = fx::rel_arrow();
    auto loc = localize(rc, {4});
    REQUIRE(loc.exact());
    CHECK(loc.ho->num_objects() == 2);
    CHECK(loc.ho->num_morphisms() == 4);
    CHECK(loc.ho->is_iso(loc.H.mo[rc.cat->morphism_index("i")]));
    CHECK(agrees_with_oracle(loc, 6));
    CHECK(loc.ho->find_morphism("i^-1") >= 0);
}

TEST_CASE("too small a bound is undecided") {
    auto loc = localize(fx::rel_arrow(), {1});
    CHECK(!loc.exact());
    CHECK(loc.bound == 1);
    CHECK_THROWS_AS(localize_exact(fx::rel_arrow(), {1}), UndecidedLocalization);
}

TEST_CASE("localizing a groupoid at everything changes nothing") {
    auto rc = fx::rel_g1();
    auto loc = localize(rc);
    REQUIRE(loc.exact());
    CHECK(loc.ho->num_morphisms() == 2);
    CHECK(loc.H == identity_functor(rc.cat));
    CHECK(same_cat(loc.ho, rc.cat));
    CHECK(agrees_with_oracle(loc, 5));
}

TEST_CASE("inverting only isomorphisms gives back the category") {
    for (const auto& C : {fx::arrow(), fx::chain2(), fx::fs2(), fx::walking_iso(), fx::span()}) {
        auto loc = localize(minimal_relcat(C->name(), C));
        REQUIRE(loc.exact());
        CHECK(is_isomorphism(loc.H));
        for (int f = 0; f < C->num_morphisms(); ++f) CHECK(loc.ho->mor_id(loc.H.mo[f]) == C->mor_id(f));
    }
}

TEST_CASE("H inverts every weak equivalence and localization is idempotent") {
    std::vector<RelCat> cases{fx::rel_arrow(), fx::rel_g1(), maximal_relcat("Chain2*", fx::chain2()),
                              make_relcat("FS2t", fx::fs2(), std::vector<std::string>{"t"}),
                              make_relcat("ChainA", fx::chain2(), std::vector<std::string>{"a"})};
    for (const auto& rc : cases) {
        auto loc = localize(rc);
        REQUIRE(loc.exact());
        for (int w : rc.weq_list()) CHECK(loc.ho->is_iso(loc.H.mo[w]));
        std::vector<int> isos;
        for (int f = 0; f < loc.ho->num_morphisms(); ++f)
            if (loc.ho->is_iso(f)) isos.push_back(f);
        auto again = localize(make_relcat("again", loc.ho, isos));
        REQUIRE(again.exact());
        CHECK(is_isomorphism(again.H));
    }
}

TEST_CASE("connected poset with everything inverted is indiscrete") {
    auto loc = localize(maximal_relcat("Chain2*", fx::chain2()));
    REQUIRE(loc.exact());
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(loc.ho->hom(a, b).size() == 1);
    CHECK(agrees_with_oracle(loc, 4));
}

TEST_CASE("homotopical functors and Ho on functors") {
    auto rc = fx::rel_arrow();
    auto iso_only = minimal_relcat("Arrow", fx::arrow());
    auto id = identity_functor(rc.cat);
    CHECK(is_homotopical(id, rc, rc));
    CHECK(!is_homotopical(id, rc, iso_only));

    auto loc = localize_exact(rc);
    CHECK(ho_functor(id, loc, loc) == identity_functor(loc.ho));

    auto g0 = fx::rel_g0();
    auto loc0 = localize_exact(g0);
    auto collapse = constant_functor(rc.cat, g0.cat, 0);
    auto hc = ho_functor(collapse, loc, loc0);
    CHECK(is_functor(hc));
    CHECK(compose(hc, loc.H) == compose(loc0.H, collapse));
    CHECK_THROWS_AS(ho_functor(id, loc, localize_exact(iso_only)), NotHomotopical);
}

TEST_CASE("Ho is strictly functorial on composites") {
    auto rc = maximal_relcat("Chain2*", fx::chain2());
    auto loc = localize_exact(rc);
    auto fs = enumerate_functors(rc.cat, rc.cat);
    int checked = 0;
    for (const auto& F : fs)
        for (const auto& G : fs) {
            auto lhs = ho_functor(compose(G, F), loc, loc);
            auto rhs = compose(ho_functor(G, loc, loc), ho_functor(F, loc, loc));
            CHECK(lhs.ob == rhs.ob);
            CHECK(lhs.mo == rhs.mo);
            ++checked;
        }
    CHECK(checked == static_cast<int>(fs.size() * fs.size()));
}

TEST_CASE("initial objects survive localization") {
    auto chain = minimal_relcat("Chain2", fx::chain2());
    CHECK(check_initial_preserved(chain, localize_exact(chain)));
    auto rc = fx::rel_arrow();
    CHECK(check_initial_preserved(rc, localize_exact(rc)));
    auto g1 = fx::rel_g1();
    CHECK_THROWS_AS(check_initial_preserved(g1, localize_exact(g1)), NoInitialObject);
}

TEST_CASE("two-out-of-three saturation is opt-in") {
    auto rc = make_relcat("Chain", fx::chain2(), std::vector<std::string>{"a", "ba"});
    auto plain = localize(rc);
    LocalizeOptions opt;
    opt.saturate = true;
    auto sat = localize(rc, opt);
    REQUIRE(plain.exact());
    REQUIRE(sat.exact());
    CHECK(!plain.rc.is_weq(rc.cat->morphism_index("b")));
    CHECK(sat.rc.is_weq(rc.cat->morphism_index("b")));
    CHECK(sat.ho->num_morphisms() == 9);
}

TEST_CASE("pointwise weak equivalences on diagrams") {
    auto rc = fx::rel_arrow();
    auto CI = functor_category(fx::span(), rc.cat);
    auto drc = diagram_relcat(rc, CI);
    auto delta = diagonal(CI);
    CHECK(is_homotopical(delta, rc, drc));
    for (int j = 0; j < 3; ++j) CHECK(is_homotopical(evaluation(CI, j), drc, rc));
    auto loc = localize(drc);
    CHECK(loc.exact());
}

TEST_CASE("precomposition with H is fully faithful on probes") {
    for (const auto& rc : {fx::rel_arrow(), fx::rel_g1(), minimal_relcat("Chain2", fx::chain2())}) {
        auto loc = localize_exact(rc);
        for (const auto& E : {fx::one(), fx::arrow(), fx::walking_iso()}) {
            auto v = precomposition_check(loc, E);
            INFO(rc.name << " into " << E->name() << ": " << v.witness);
            CHECK(v.holds());
            CHECK(v.inverting == v.functors);
        }
    }
    // RelArrow into Arrow: only the two constant functors invert i
    auto v = precomposition_check(localize_exact(fx::rel_arrow()), fx::arrow());
    CHECK(v.functors == 2);
    CHECK(v.transformations == 3);
}
