#include "catmate/construct.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace catmate {

namespace {

std::string join_ids(const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += xs[i];
    }
    return s;
}

std::string functor_label(const Functor& F) {
    std::vector<std::string> parts;
    for (int x : F.ob) parts.push_back(F.tgt->object(x));
    std::string s = "[" + join_ids(parts);
    if (!F.tgt->is_thin()) {
        std::vector<std::string> ms;
        for (int f = 0; f < F.src->num_morphisms(); ++f)
            if (!F.src->is_identity(f)) ms.push_back(F.tgt->mor_id(F.mo[f]));
        if (!ms.empty()) s += "|" + join_ids(ms);
    }
    return s + "]";
}

std::vector<int> functor_key(const Functor& F) {
    std::vector<int> k(F.ob);
    k.insert(k.end(), F.mo.begin(), F.mo.end());
    return k;
}

} // namespace

std::vector<Functor> enumerate_functors(const CatPtr& C, const CatPtr& D, const Budget& budget) {
    const int n = C->num_objects();
    std::vector<int> free_mors;
    for (int f = 0; f < C->num_morphisms(); ++f)
        if (!C->is_identity(f)) free_mors.push_back(f);
    // position of each morphism in assignment order; identities are fixed
    // as soon as their object is assigned, so they get position -1
    std::vector<int> pos(C->num_morphisms(), -1);
    for (std::size_t k = 0; k < free_mors.size(); ++k) pos[free_mors[k]] = static_cast<int>(k);
    // composition constraints (g, f, g o f) checked once the last of the
    // three free morphisms involved is assigned
    std::vector<std::vector<std::array<int, 3>>> checks(free_mors.size() + 1);
    for (int g = 0; g < C->num_morphisms(); ++g)
        for (int f : C->in(C->dom(g))) {
            if (C->is_identity(g) || C->is_identity(f)) continue;
            int h = C->compose_unchecked(g, f);
            int last = std::max({pos[g], pos[f], pos[h]});
            checks[static_cast<std::size_t>(last)].push_back({g, f, h});
        }

    std::vector<Functor> result;
    Functor cur{"F", C, D, std::vector<int>(n, -1), std::vector<int>(C->num_morphisms(), -1)};

    std::function<void(std::size_t)> assign_mor = [&](std::size_t k) {
        if (k == free_mors.size()) {
            if (result.size() >= budget.max_objects)
                throw SizeBudgetExceeded("more than " + std::to_string(budget.max_objects) + " functors " + C->name() +
                                         " -> " + D->name());
            result.push_back(cur);
            result.back().name = "F" + std::to_string(result.size() - 1);
            return;
        }
        int f = free_mors[k];
        for (int g : D->hom(cur.ob[C->dom(f)], cur.ob[C->cod(f)])) {
            cur.mo[f] = g;
            bool ok = true;
            for (const auto& c : checks[k]) {
                if (D->compose_unchecked(cur.mo[c[0]], cur.mo[c[1]]) != cur.mo[c[2]]) {
                    ok = false;
                    break;
                }
            }
            if (ok) assign_mor(k + 1);
        }
        cur.mo[f] = -1;
    };
    std::function<void(int)> assign_obj = [&](int a) {
        if (a == n) {
            assign_mor(0);
            return;
        }
        for (int x = 0; x < D->num_objects(); ++x) {
            cur.ob[a] = x;
            cur.mo[C->identity(a)] = D->identity(x);
            assign_obj(a + 1);
        }
    };
    assign_obj(0);
    return result;
}

namespace {

std::vector<NatTrans> enumerate_nats_impl(const Functor& F, const Functor& G, bool isos_only) {
    if (!same_cat(F.src, G.src) || !same_cat(F.tgt, G.tgt)) throw ShapeMismatch("enumerate_nats needs parallel functors");
    const FinCat& C = *F.src;
    const FinCat& D = *F.tgt;
    const int n = C.num_objects();
    std::vector<std::vector<int>> checks(n);
    for (int f = 0; f < C.num_morphisms(); ++f) {
        if (C.is_identity(f)) continue;
        checks[std::max(C.dom(f), C.cod(f))].push_back(f);
    }
    std::vector<NatTrans> result;
    std::vector<int> comp(n, -1);
    std::function<void(int)> go = [&](int a) {
        if (a == n) {
            result.push_back(NatTrans{"t" + std::to_string(result.size()), F, G, comp});
            return;
        }
        for (int m : D.hom(F.ob[a], G.ob[a])) {
            if (isos_only && !D.is_iso(m)) continue;
            comp[a] = m;
            bool ok = true;
            for (int f : checks[a]) {
                if (D.compose_unchecked(G.mo[f], comp[C.dom(f)]) != D.compose_unchecked(comp[C.cod(f)], F.mo[f])) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(a + 1);
        }
        comp[a] = -1;
    };
    go(0);
    return result;
}

} // namespace

std::vector<NatTrans> enumerate_nats(const Functor& F, const Functor& G) { return enumerate_nats_impl(F, G, false); }

std::vector<NatTrans> enumerate_nat_isos(const Functor& F, const Functor& G) { return enumerate_nats_impl(F, G, true); }

int FunctorCategory::object_of_key(const std::vector<int>& ob, const std::vector<int>& mo) const {
    std::vector<int> k(ob);
    k.insert(k.end(), mo.begin(), mo.end());
    auto it = obj_index.find(k);
    return it == obj_index.end() ? -1 : it->second;
}

int FunctorCategory::object_of(const Functor& F) const { return object_of_key(F.ob, F.mo); }

int FunctorCategory::morphism_of_key(int src, int tgt, const std::vector<int>& comp) const {
    std::vector<int> k;
    k.reserve(comp.size() + 2);
    k.push_back(src);
    k.push_back(tgt);
    k.insert(k.end(), comp.begin(), comp.end());
    auto it = mor_index.find(k);
    return it == mor_index.end() ? -1 : it->second;
}

int FunctorCategory::morphism_of(const NatTrans& a) const {
    int s = object_of(a.src), t = object_of(a.tgt);
    if (s < 0 || t < 0) return -1;
    return morphism_of_key(s, t, a.comp);
}

FunctorCatPtr functor_category(const CatPtr& I, const CatPtr& C, const Budget& budget) {
    auto fc = std::make_shared<FunctorCategory>();
    fc->shape = I;
    fc->base = C;
    fc->objects = enumerate_functors(I, C, budget);
    std::vector<std::string> obj_ids;
    for (std::size_t k = 0; k < fc->objects.size(); ++k) {
        auto& F = fc->objects[k];
        F.name = functor_label(F);
        obj_ids.push_back(F.name);
        fc->obj_index.emplace(functor_key(F), static_cast<int>(k));
    }
    std::vector<Morphism> mors;
    std::vector<int> ids(fc->objects.size(), -1);
    for (std::size_t s = 0; s < fc->objects.size(); ++s)
        for (std::size_t t = 0; t < fc->objects.size(); ++t) {
            auto nats = enumerate_nats(fc->objects[s], fc->objects[t]);
            for (auto& a : nats) {
                bool is_id = s == t && a == identity_nat(fc->objects[s]);
                if (is_id)
                    a.name = "id_" + obj_ids[s];
                else {
                    a.name = obj_ids[s] + "=>" + obj_ids[t];
                    if (!C->is_thin()) {
                        std::vector<std::string> cs;
                        for (int m : a.comp) cs.push_back(C->mor_id(m));
                        a.name += "{" + join_ids(cs) + "}";
                    }
                }
                int idx = static_cast<int>(mors.size());
                if (is_id) ids[s] = idx;
                mors.push_back({a.name, static_cast<int>(s), static_cast<int>(t)});
                std::vector<int> key{static_cast<int>(s), static_cast<int>(t)};
                key.insert(key.end(), a.comp.begin(), a.comp.end());
                fc->mor_index.emplace(std::move(key), idx);
                fc->morphisms.push_back(std::move(a));
                if (mors.size() > budget.max_morphisms)
                    throw SizeBudgetExceeded("functor category " + C->name() + "^" + I->name() + " exceeds " +
                                             std::to_string(budget.max_morphisms) + " morphisms");
            }
        }
    const FunctorCategory* raw = fc.get();
    auto comp = [raw, &C, &mors](int g, int f) {
        const NatTrans& b = raw->morphisms[g];
        const NatTrans& a = raw->morphisms[f];
        std::vector<int> cs(a.comp.size());
        for (std::size_t x = 0; x < cs.size(); ++x) cs[x] = C->compose_unchecked(b.comp[x], a.comp[x]);
        return raw->morphism_of_key(mors[f].dom, mors[g].cod, cs);
    };
    fc->cat = FinCat::build(C->name() + "^" + I->name(), obj_ids, mors, ids, comp);
    return fc;
}

CatPtr product_category(const CatPtr& I, const CatPtr& J) {
    const int nJ = J->num_objects();
    const int mJ = J->num_morphisms();
    std::vector<std::string> objs;
    for (int a = 0; a < I->num_objects(); ++a)
        for (int b = 0; b < nJ; ++b) objs.push_back("(" + I->object(a) + "," + J->object(b) + ")");
    std::vector<Morphism> mors;
    for (int f = 0; f < I->num_morphisms(); ++f)
        for (int g = 0; g < mJ; ++g)
            mors.push_back({"(" + I->mor_id(f) + "," + J->mor_id(g) + ")", I->dom(f) * nJ + J->dom(g),
                            I->cod(f) * nJ + J->cod(g)});
    std::vector<int> ids;
    for (int a = 0; a < I->num_objects(); ++a)
        for (int b = 0; b < nJ; ++b) ids.push_back(I->identity(a) * mJ + J->identity(b));
    auto comp = [&](int x, int y) {
        return I->compose_unchecked(x / mJ, y / mJ) * mJ + J->compose_unchecked(x % mJ, y % mJ);
    };
    return FinCat::build(I->name() + "x" + J->name(), std::move(objs), std::move(mors), std::move(ids), comp);
}

Functor product_projection(const CatPtr& P, const CatPtr& I, const CatPtr& J, int which) {
    const int nJ = J->num_objects();
    const int mJ = J->num_morphisms();
    Functor F{which == 0 ? "pr1" : "pr2", P, which == 0 ? I : J, {}, {}};
    for (int x = 0; x < P->num_objects(); ++x) F.ob.push_back(which == 0 ? x / nJ : x % nJ);
    for (int m = 0; m < P->num_morphisms(); ++m) F.mo.push_back(which == 0 ? m / mJ : m % mJ);
    return F;
}

Functor diagonal(const FunctorCatPtr& CI) {
    const FinCat& C = *CI->base;
    const FinCat& I = *CI->shape;
    Functor D{"Delta", CI->base, CI->cat, {}, {}};
    for (int c = 0; c < C.num_objects(); ++c) {
        int k = CI->object_of_key(std::vector<int>(I.num_objects(), c),
                                  std::vector<int>(I.num_morphisms(), C.identity(c)));
        D.ob.push_back(k);
    }
    for (int f = 0; f < C.num_morphisms(); ++f)
        D.mo.push_back(CI->morphism_of_key(D.ob[C.dom(f)], D.ob[C.cod(f)], std::vector<int>(I.num_objects(), f)));
    return D;
}

Functor evaluation(const FunctorCatPtr& CI, int obj) {
    Functor E{"ev_" + CI->shape->object(obj), CI->cat, CI->base, {}, {}};
    for (const auto& F : CI->objects) E.ob.push_back(F.ob[obj]);
    for (const auto& a : CI->morphisms) E.mo.push_back(a.comp[obj]);
    return E;
}

NatTrans evaluation_along(const FunctorCatPtr& CI, int mor) {
    const FinCat& I = *CI->shape;
    NatTrans a{"ev_" + I.mor_id(mor), evaluation(CI, I.dom(mor)), evaluation(CI, I.cod(mor)), {}};
    for (const auto& F : CI->objects) a.comp.push_back(F.mo[mor]);
    return a;
}

Functor postcompose(const Functor& P, const FunctorCatPtr& AI, const FunctorCatPtr& BI) {
    if (!same_cat(P.src, AI->base) || !same_cat(P.tgt, BI->base) || !same_cat(AI->shape, BI->shape))
        throw ShapeMismatch("postcompose: shapes do not match");
    Functor R{P.name + "_*", AI->cat, BI->cat, {}, {}};
    for (const auto& X : AI->objects) {
        int k = BI->object_of(compose(P, X));
        if (k < 0) throw ShapeMismatch("postcompose: image functor missing from target category");
        R.ob.push_back(k);
    }
    for (std::size_t m = 0; m < AI->morphisms.size(); ++m) {
        const auto& a = AI->morphisms[m];
        std::vector<int> cs;
        for (int c : a.comp) cs.push_back(P.mo[c]);
        R.mo.push_back(BI->morphism_of_key(R.ob[AI->cat->dom(static_cast<int>(m))], R.ob[AI->cat->cod(static_cast<int>(m))], cs));
    }
    return R;
}

NatTrans postcompose(const NatTrans& a, const FunctorCatPtr& AI, const FunctorCatPtr& BI) {
    Functor S = postcompose(a.src, AI, BI);
    Functor T = postcompose(a.tgt, AI, BI);
    NatTrans r{a.name + "_*", S, T, {}};
    for (std::size_t x = 0; x < AI->objects.size(); ++x) {
        const auto& X = AI->objects[x];
        std::vector<int> cs;
        for (int i : X.ob) cs.push_back(a.comp[i]);
        r.comp.push_back(BI->morphism_of_key(S.ob[x], T.ob[x], cs));
    }
    return r;
}

Functor precompose(const Functor& u, const FunctorCatPtr& CI, const FunctorCatPtr& CK) {
    if (!same_cat(u.tgt, CI->shape) || !same_cat(u.src, CK->shape) || !same_cat(CI->base, CK->base))
        throw ShapeMismatch("precompose: shapes do not match");
    Functor R{u.name + "^*", CI->cat, CK->cat, {}, {}};
    for (const auto& X : CI->objects) R.ob.push_back(CK->object_of(compose(X, u)));
    for (std::size_t m = 0; m < CI->morphisms.size(); ++m) {
        const auto& a = CI->morphisms[m];
        std::vector<int> cs;
        for (int k : u.ob) cs.push_back(a.comp[k]);
        R.mo.push_back(CK->morphism_of_key(R.ob[CI->cat->dom(static_cast<int>(m))], R.ob[CI->cat->cod(static_cast<int>(m))], cs));
    }
    return R;
}

bool is_isomorphism(const Functor& F) {
    if (F.src->num_objects() != F.tgt->num_objects() || F.src->num_morphisms() != F.tgt->num_morphisms()) return false;
    std::vector<char> seen_o(F.tgt->num_objects(), 0), seen_m(F.tgt->num_morphisms(), 0);
    for (int x : F.ob) {
        if (x < 0 || seen_o[x]) return false;
        seen_o[x] = 1;
    }
    for (int m : F.mo) {
        if (m < 0 || seen_m[m]) return false;
        seen_m[m] = 1;
    }
    return true;
}

Functor inverse_isomorphism(const Functor& F) {
    if (!is_isomorphism(F)) throw ShapeMismatch(F.name + " is not an isomorphism");
    Functor G{F.name + "^-1", F.tgt, F.src, std::vector<int>(F.ob.size()), std::vector<int>(F.mo.size())};
    for (std::size_t a = 0; a < F.ob.size(); ++a) G.ob[F.ob[a]] = static_cast<int>(a);
    for (std::size_t f = 0; f < F.mo.size(); ++f) G.mo[F.mo[f]] = static_cast<int>(f);
    return G;
}

TwistData twist(const CatPtr& I, const CatPtr& J, const CatPtr& C, const Budget& budget) {
    TwistData t;
    t.I = I;
    t.J = J;
    t.C = C;
    t.product = product_category(I, J);
    t.flat = functor_category(t.product, C, budget);
    t.CI = functor_category(I, C, budget);
    t.CJ = functor_category(J, C, budget);
    t.CI_J = functor_category(J, t.CI->cat, budget);
    t.CJ_I = functor_category(I, t.CJ->cat, budget);
    const int nJ = J->num_objects();
    const int mJ = J->num_morphisms();
    const FinCat& P = *t.product;

    // X(a,b), X(f,g) with product indexing
    auto Xob = [&](const Functor& X, int a, int b) { return X.ob[a * nJ + b]; };
    auto Xmo = [&](const Functor& X, int f, int g) { return X.mo[f * mJ + g]; };

    auto slice_J = [&](const Functor& X, int b) {  // X(-,b) in C^I
        std::vector<int> ob, mo;
        for (int a = 0; a < I->num_objects(); ++a) ob.push_back(Xob(X, a, b));
        for (int f = 0; f < I->num_morphisms(); ++f) mo.push_back(Xmo(X, f, J->identity(b)));
        return t.CI->object_of_key(ob, mo);
    };
    auto slice_I = [&](const Functor& X, int a) {  // X(a,-) in C^J
        std::vector<int> ob, mo;
        for (int b = 0; b < nJ; ++b) ob.push_back(Xob(X, a, b));
        for (int g = 0; g < mJ; ++g) mo.push_back(Xmo(X, I->identity(a), g));
        return t.CJ->object_of_key(ob, mo);
    };

    Functor to_IJ{"curry_J", t.flat->cat, t.CI_J->cat, {}, {}};
    Functor to_JI{"curry_I", t.flat->cat, t.CJ_I->cat, {}, {}};
    for (const auto& X : t.flat->objects) {
        std::vector<int> ob, mo;
        for (int b = 0; b < nJ; ++b) ob.push_back(slice_J(X, b));
        for (int g = 0; g < mJ; ++g) {
            std::vector<int> cs;
            for (int a = 0; a < I->num_objects(); ++a) cs.push_back(Xmo(X, I->identity(a), g));
            mo.push_back(t.CI->morphism_of_key(ob[J->dom(g)], ob[J->cod(g)], cs));
        }
        to_IJ.ob.push_back(t.CI_J->object_of_key(ob, mo));

        std::vector<int> ob2, mo2;
        for (int a = 0; a < I->num_objects(); ++a) ob2.push_back(slice_I(X, a));
        for (int f = 0; f < I->num_morphisms(); ++f) {
            std::vector<int> cs;
            for (int b = 0; b < nJ; ++b) cs.push_back(Xmo(X, f, J->identity(b)));
            mo2.push_back(t.CJ->morphism_of_key(ob2[I->dom(f)], ob2[I->cod(f)], cs));
        }
        to_JI.ob.push_back(t.CJ_I->object_of_key(ob2, mo2));
    }
    for (std::size_t m = 0; m < t.flat->morphisms.size(); ++m) {
        const auto& al = t.flat->morphisms[m];
        int s = t.flat->cat->dom(static_cast<int>(m)), d = t.flat->cat->cod(static_cast<int>(m));
        const auto& X = t.flat->objects[s];
        const auto& Y = t.flat->objects[d];
        std::vector<int> cs;
        for (int b = 0; b < nJ; ++b) {
            std::vector<int> inner;
            for (int a = 0; a < I->num_objects(); ++a) inner.push_back(al.comp[a * nJ + b]);
            cs.push_back(t.CI->morphism_of_key(slice_J(X, b), slice_J(Y, b), inner));
        }
        to_IJ.mo.push_back(t.CI_J->morphism_of_key(to_IJ.ob[s], to_IJ.ob[d], cs));
        std::vector<int> cs2;
        for (int a = 0; a < I->num_objects(); ++a) {
            std::vector<int> inner;
            for (int b = 0; b < nJ; ++b) inner.push_back(al.comp[a * nJ + b]);
            cs2.push_back(t.CJ->morphism_of_key(slice_I(X, a), slice_I(Y, a), inner));
        }
        to_JI.mo.push_back(t.CJ_I->morphism_of_key(to_JI.ob[s], to_JI.ob[d], cs2));
    }
    (void)P;
    t.flat_to_CI_J = to_IJ;
    t.flat_to_CJ_I = to_JI;
    t.CI_J_to_flat = inverse_isomorphism(to_IJ);
    t.CJ_I_to_flat = inverse_isomorphism(to_JI);
    t.CI_J_to_CJ_I = compose(t.flat_to_CJ_I, t.CI_J_to_flat);
    t.CJ_I_to_CI_J = compose(t.flat_to_CI_J, t.CJ_I_to_flat);
    t.CI_J_to_CJ_I.name = "twist";
    t.CJ_I_to_CI_J.name = "twist^-1";
    return t;
}

FullSub full_subcategory(const CatPtr& C, const std::vector<int>& objects, const std::string& name) {
    std::vector<int> sorted(objects);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> local(C->num_objects(), -1);
    std::vector<std::string> obj_ids;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        local[sorted[k]] = static_cast<int>(k);
        obj_ids.push_back(C->object(sorted[k]));
    }
    std::vector<Morphism> mors;
    std::vector<int> mor_local(C->num_morphisms(), -1), mor_global;
    for (int f = 0; f < C->num_morphisms(); ++f) {
        if (local[C->dom(f)] < 0 || local[C->cod(f)] < 0) continue;
        mor_local[f] = static_cast<int>(mors.size());
        mor_global.push_back(f);
        mors.push_back({C->mor_id(f), local[C->dom(f)], local[C->cod(f)]});
    }
    std::vector<int> ids;
    for (int a : sorted) ids.push_back(mor_local[C->identity(a)]);
    auto comp = [&](int g, int f) { return mor_local[C->compose_unchecked(mor_global[g], mor_global[f])]; };
    FullSub s;
    s.cat = FinCat::build(name, obj_ids, mors, ids, comp);
    s.objects = sorted;
    s.inclusion = Functor{"incl", s.cat, C, sorted, mor_global};
    return s;
}

} // namespace catmate
