#include "catmate/fixtures.hpp"

#include <map>
#include <tuple>

namespace catmate::fixtures {

CatPtr poset(const std::string& name, const std::vector<std::string>& objects,
             const std::function<bool(int, int)>& leq, const std::function<std::string(int, int)>& mor_name) {
    RawCategory raw;
    raw.name = name;
    raw.objects = objects;
    const int n = static_cast<int>(objects.size());
    auto id_of = [&](int a, int b) { return a == b ? "id_" + objects[a] : mor_name(a, b); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && leq(a, b)) raw.morphisms.push_back({mor_name(a, b), objects[a], objects[b]});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (leq(a, b) && leq(b, c)) raw.composites.push_back({id_of(b, c), id_of(a, b), id_of(a, c)});
    return validate_category(raw);
}

CatPtr one() {
    return poset("One", {"*"}, [](int, int) { return true; }, [](int, int) { return std::string(); });
}

CatPtr arrow() {
    return poset("Arrow", {"0", "1"}, [](int a, int b) { return a <= b; }, [](int, int) { return std::string("i"); });
}

CatPtr chain2() {
    return poset("Chain2", {"0", "1", "2"}, [](int a, int b) { return a <= b; }, [](int a, int b) {
        if (a == 0 && b == 1) return std::string("a");
        if (a == 1 && b == 2) return std::string("b");
        return std::string("ba");
    });
}

CatPtr span() {
    // objects in declared order a, b, c with b the apex
    return poset("Span", {"a", "b", "c"}, [](int x, int y) { return x == y || (x == 1 && y != 1); },
                 [](int, int y) { return std::string(y == 0 ? "p" : "q"); });
}

CatPtr walking_iso() {
    RawCategory raw;
    raw.name = "WalkingIso";
    raw.objects = {"0", "1"};
    raw.morphisms = {{"u", "0", "1"}, {"v", "1", "0"}};
    raw.composites = {{"id_0", "id_0", "id_0"}, {"id_1", "id_1", "id_1"}, {"u", "id_0", "u"}, {"id_1", "u", "u"},
                      {"v", "id_1", "v"},       {"id_0", "v", "v"},       {"v", "u", "id_0"}, {"u", "v", "id_1"}};
    return validate_category(raw);
}

CatPtr fs2() {
    // maps between {}, {0}, {0,1}; a map is its image vector
    struct Map {
        int dom, cod;
        std::vector<int> img;
    };
    const std::vector<std::string> objs{"S0", "S1", "S2"};
    std::map<std::tuple<int, int, std::vector<int>>, std::string> names{
        {{0, 0, {}}, "id_S0"}, {{0, 1, {}}, "e1"},      {{0, 2, {}}, "e2"},      {{1, 1, {0}}, "id_S1"},
        {{1, 2, {0}}, "x0"},   {{1, 2, {1}}, "x1"},     {{2, 1, {0, 0}}, "t"},   {{2, 2, {0, 1}}, "id_S2"},
        {{2, 2, {1, 0}}, "sw"}, {{2, 2, {0, 0}}, "c0"}, {{2, 2, {1, 1}}, "c1"}};
    std::vector<Map> maps;
    for (int d = 0; d < 3; ++d)
        for (int c = 0; c < 3; ++c) {
            int count = 1;
            for (int k = 0; k < d; ++k) count *= c;
            for (int code = 0; code < count; ++code) {
                std::vector<int> img;
                int x = code;
                for (int k = 0; k < d; ++k) {
                    img.push_back(x % c);
                    x /= c;
                }
                maps.push_back({d, c, img});
            }
        }
    RawCategory raw;
    raw.name = "FS2";
    raw.objects = objs;
    auto name_of = [&](const Map& m) { return names.at({m.dom, m.cod, m.img}); };
    // declared order follows the names table so ids stay stable
    const std::vector<std::string> order{"e1", "e2", "x0", "x1", "t", "sw", "c0", "c1"};
    for (const auto& id : order)
        for (const auto& m : maps)
            if (name_of(m) == id) raw.morphisms.push_back({id, objs[m.dom], objs[m.cod]});
    for (const auto& f : maps)
        for (const auto& g : maps) {
            if (f.cod != g.dom) continue;
            Map h{f.dom, g.cod, {}};
            for (int v : f.img) h.img.push_back(g.img[v]);
            raw.composites.push_back({name_of(g), name_of(f), name_of(h)});
        }
    return validate_category(raw);
}

CatPtr g1() {
    RawCategory raw;
    raw.name = "G1";
    raw.objects = {"*"};
    raw.morphisms = {{"s", "*", "*"}};
    raw.composites = {{"id_*", "id_*", "id_*"}, {"s", "id_*", "s"}, {"id_*", "s", "s"}, {"s", "s", "id_*"}};
    return validate_category(raw);
}

CatPtr g0() {
    return poset("G0", {"*"}, [](int, int) { return true; }, [](int, int) { return std::string(); });
}

CatPtr discrete(int n) {
    std::vector<std::string> objs;
    for (int k = 0; k < n; ++k) objs.push_back(std::to_string(k));
    return poset("Disc" + std::to_string(n), objs, [](int a, int b) { return a == b; },
                 [](int, int) { return std::string(); });
}

Functor functor_from_ids(const std::string& name, const CatPtr& src, const CatPtr& tgt,
                         const std::vector<std::pair<std::string, std::string>>& obj,
                         const std::vector<std::pair<std::string, std::string>>& mor) {
    Functor F{name, src, tgt, std::vector<int>(src->num_objects(), -1), std::vector<int>(src->num_morphisms(), -1)};
    for (const auto& [a, x] : obj) F.ob[src->object_index(a)] = tgt->object_index(x);
    for (const auto& [f, g] : mor) F.mo[src->morphism_index(f)] = tgt->morphism_index(g);
    for (int a = 0; a < src->num_objects(); ++a)
        if (F.ob[a] >= 0 && F.mo[src->identity(a)] < 0) F.mo[src->identity(a)] = tgt->identity(F.ob[a]);
    // thin targets determine the remaining morphisms
    if (tgt->is_thin())
        for (int f = 0; f < src->num_morphisms(); ++f)
            if (F.mo[f] < 0 && F.ob[src->dom(f)] >= 0 && F.ob[src->cod(f)] >= 0) {
                const auto& h = tgt->hom(F.ob[src->dom(f)], F.ob[src->cod(f)]);
                if (!h.empty()) F.mo[f] = h[0];
            }
    return checked_functor(F);
}

NatTrans thin_nat(const std::string& name, const Functor& F, const Functor& G) {
    NatTrans a{name, F, G, std::vector<int>(F.ob.size(), -1)};
    for (std::size_t x = 0; x < F.ob.size(); ++x) {
        const auto& h = F.tgt->hom(F.ob[x], G.ob[x]);
        if (h.size() != 1) throw ShapeMismatch("no unique component for " + name, F.src->object(static_cast<int>(x)));
        a.comp[x] = h[0];
    }
    return checked_nat(a);
}

Functor galois_left() {
    return functor_from_ids("f", arrow(), chain2(), {{"0", "0"}, {"1", "2"}}, {});
}

Functor galois_right() {
    return functor_from_ids("g", chain2(), arrow(), {{"0", "0"}, {"1", "0"}, {"2", "1"}}, {});
}

Adjunction arrow_to_terminal() {
    auto A = arrow();
    auto O = one();
    auto F = constant_functor(A, O, 0);
    F.name = "!";
    auto G = constant_functor(O, A, 1);
    G.name = "1";
    auto unit = thin_nat("eta", identity_functor(A), compose(G, F));
    NatTrans counit{"eps", compose(F, G), identity_functor(O), {O->identity(0)}};
    return verify_adjunction("! -| 1", F, G, unit, counit);
}

MateSquare bc_counterexample() {
    auto top = arrow_to_terminal();
    auto bottom = identity_adjunction(top.C());
    auto X = identity_functor(top.C());
    auto Y = constant_functor(top.D(), top.C(), 1);
    Y.name = "1";
    MateSquare sq{top, bottom, X, Y, std::nullopt, std::nullopt};
    sq.tau = identity_nat(compose(X, top.G));
    sq.tau->tgt = compose(bottom.G, Y);
    return mate(sq);
}

RelCat rel_arrow() { return make_relcat("RelArrow", arrow(), std::vector<std::string>{"i"}); }

RelCat rel_g1() { return maximal_relcat("G1", g1()); }

RelCat rel_g0() { return maximal_relcat("G0", g0()); }

} // namespace catmate::fixtures
