#include "catmate/universal.hpp"

#include <algorithm>
#include <map>

namespace catmate {

namespace {

// Cocones (co = true) or cones at a fixed apex, by backtracking over the
// shape objects in declared order.
std::vector<Cocone> legs_at(const Functor& D, int apex, bool co) {
    const auto& I = *D.src;
    const auto& C = *D.tgt;
    const int n = I.num_objects();
    // morphisms whose later endpoint is k, checked once leg k is placed
    std::vector<std::vector<int>> due(n);
    for (int f = 0; f < I.num_morphisms(); ++f)
        if (!I.is_identity(f)) due[std::max(I.dom(f), I.cod(f))].push_back(f);
    std::vector<Cocone> out;
    std::vector<int> legs(n, -1);
    auto ok = [&](int k) {
        for (int f : due[k]) {
            int a = I.dom(f), b = I.cod(f), Df = D.mo[f];
            if (co ? C.compose_unchecked(legs[b], Df) != legs[a] : C.compose_unchecked(Df, legs[a]) != legs[b])
                return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            out.push_back({D, apex, legs});
            return;
        }
        const auto& cands = co ? C.hom(D.ob[k], apex) : C.hom(apex, D.ob[k]);
        for (int l : cands) {
            legs[k] = l;
            if (ok(k)) self(self, k + 1);
        }
        legs[k] = -1;
    };
    rec(rec, 0);
    return out;
}

// u |-> u o legs (co) or legs o u must be a bijection from the hom-set onto
// the cocones at every other apex.
bool universal(const Cocone& c, const std::vector<std::vector<Cocone>>& all, bool co) {
    const auto& C = *c.diagram.tgt;
    for (int other = 0; other < C.num_objects(); ++other) {
        const auto& hom = co ? C.hom(c.apex, other) : C.hom(other, c.apex);
        if (hom.size() != all[other].size()) return false;
        std::vector<std::vector<int>> images;
        images.reserve(hom.size());
        for (int u : hom) {
            std::vector<int> img(c.legs.size());
            for (std::size_t i = 0; i < c.legs.size(); ++i)
                img[i] = co ? C.compose_unchecked(u, c.legs[i]) : C.compose_unchecked(c.legs[i], u);
            images.push_back(std::move(img));
        }
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    }
    return true;
}

std::optional<Cocone> find_universal(const Functor& D, bool co) {
    const auto& C = *D.tgt;
    std::vector<std::vector<Cocone>> all(C.num_objects());
    for (int a = 0; a < C.num_objects(); ++a) all[a] = legs_at(D, a, co);
    std::vector<int> apexes(C.num_objects());
    for (int a = 0; a < C.num_objects(); ++a) apexes[a] = a;
    std::sort(apexes.begin(), apexes.end(), [&](int x, int y) { return C.object(x) < C.object(y); });
    for (int a : apexes) {
        auto cands = all[a];
        std::sort(cands.begin(), cands.end(), [&](const Cocone& x, const Cocone& y) {
            return std::lexicographical_compare(
                x.legs.begin(), x.legs.end(), y.legs.begin(), y.legs.end(),
                [&](int f, int g) { return C.mor_id(f) < C.mor_id(g); });
        });
        for (const auto& c : cands)
            if (universal(c, all, co)) return c;
    }
    return std::nullopt;
}

bool check_universal(const Cocone& c, bool co) {
    const auto& C = *c.diagram.tgt;
    std::vector<std::vector<Cocone>> all(C.num_objects());
    for (int a = 0; a < C.num_objects(); ++a) all[a] = legs_at(c.diagram, a, co);
    auto mine = legs_at(c.diagram, c.apex, co);
    bool present = std::any_of(mine.begin(), mine.end(), [&](const Cocone& x) { return x.legs == c.legs; });
    return present && universal(c, all, co);
}

int factor(const Cocone& u, int other, const std::vector<int>& legs, bool co) {
    const auto& C = *u.diagram.tgt;
    int found = -1;
    const auto& hom = co ? C.hom(u.apex, other) : C.hom(other, u.apex);
    for (int f : hom) {
        bool ok = true;
        for (std::size_t i = 0; i < legs.size() && ok; ++i)
            ok = (co ? C.compose_unchecked(f, u.legs[i]) : C.compose_unchecked(u.legs[i], f)) == legs[i];
        if (!ok) continue;
        if (found >= 0) return -1;
        found = f;
    }
    return found;
}

CatPtr one_category() {
    return FinCat::build("One", {"*"}, {{"id_*", 0, 0}}, {0}, [](int, int) { return 0; });
}

} // namespace

std::vector<Cocone> cocones_at(const Functor& D, int apex) { return legs_at(D, apex, true); }
std::vector<Cone> cones_at(const Functor& D, int apex) { return legs_at(D, apex, false); }

std::optional<Cocone> colimit(const Functor& D) { return find_universal(D, true); }
std::optional<Cone> limit(const Functor& D) { return find_universal(D, false); }

bool is_colimit(const Cocone& c) { return check_universal(c, true); }
bool is_limit(const Cone& c) { return check_universal(c, false); }

int factor_cocone(const Cocone& universal, int target, const std::vector<int>& legs) {
    return factor(universal, target, legs, true);
}

int factor_cone(const Cone& universal, int source, const std::vector<int>& legs) {
    return factor(universal, source, legs, false);
}

std::optional<Cocone> copower(int n, int obj, const CatPtr& C) {
    std::vector<std::string> objs;
    for (int k = 0; k < n; ++k) objs.push_back(std::to_string(k));
    std::vector<Morphism> mors;
    std::vector<int> ids;
    for (int k = 0; k < n; ++k) {
        mors.push_back({"id_" + objs[k], k, k});
        ids.push_back(k);
    }
    auto S = FinCat::build("Disc" + std::to_string(n), objs, mors, ids, [](int g, int) { return g; });
    return colimit(constant_functor(S, C, obj));
}

std::optional<Cone> power(int n, int obj, const CatPtr& C) {
    std::vector<std::string> objs;
    for (int k = 0; k < n; ++k) objs.push_back(std::to_string(k));
    std::vector<Morphism> mors;
    std::vector<int> ids;
    for (int k = 0; k < n; ++k) {
        mors.push_back({"id_" + objs[k], k, k});
        ids.push_back(k);
    }
    auto S = FinCat::build("Disc" + std::to_string(n), objs, mors, ids, [](int g, int) { return g; });
    return limit(constant_functor(S, C, obj));
}

CommaCategory comma_category(const Functor& F, const Functor& G, const Budget& budget) {
    if (F.tgt != G.tgt && !same_cat(F.tgt, G.tgt))
        throw ShapeMismatch("comma of functors with different targets: " + F.name + ", " + G.name);
    const auto& A = *F.src;
    const auto& B = *G.src;
    const auto& C = *F.tgt;
    CommaCategory out;
    std::vector<std::string> obj_ids;
    std::map<std::tuple<int, int, int>, int> obj_of;
    for (int a = 0; a < A.num_objects(); ++a)
        for (int b = 0; b < B.num_objects(); ++b)
            for (int h : C.hom(F.ob[a], G.ob[b])) {
                obj_of[{a, b, h}] = static_cast<int>(out.objects.size());
                out.objects.emplace_back(a, b, h);
                obj_ids.push_back("(" + A.object(a) + "," + B.object(b) + "," + C.mor_id(h) + ")");
                if (out.objects.size() > budget.max_objects)
                    throw SizeBudgetExceeded("comma " + F.name + "|" + G.name + " exceeds the object budget");
            }
    struct Mor {
        int s, t, f, g;
    };
    std::vector<Mor> mors;
    std::map<std::tuple<int, int, int, int>, int> mor_of;
    const int n = static_cast<int>(out.objects.size());
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            auto [a, b, h] = out.objects[s];
            auto [a2, b2, h2] = out.objects[t];
            for (int f : A.hom(a, a2))
                for (int g : B.hom(b, b2))
                    if (C.compose_unchecked(G.mo[g], h) == C.compose_unchecked(h2, F.mo[f])) {
                        mor_of[{s, t, f, g}] = static_cast<int>(mors.size());
                        mors.push_back({s, t, f, g});
                        if (mors.size() > budget.max_morphisms)
                            throw SizeBudgetExceeded("comma " + F.name + "|" + G.name +
                                                     " exceeds the morphism budget");
                    }
        }
    std::vector<Morphism> records;
    std::vector<int> ids(n, -1);
    for (std::size_t k = 0; k < mors.size(); ++k) {
        const auto& m = mors[k];
        records.push_back({"(" + A.mor_id(m.f) + "," + B.mor_id(m.g) + "):" + obj_ids[m.s] + "->" + obj_ids[m.t],
                           m.s, m.t});
        if (m.s == m.t && A.is_identity(m.f) && B.is_identity(m.g)) ids[m.s] = static_cast<int>(k);
    }
    auto comp = [&](int g2, int f2) {
        const auto& x = mors[f2];
        const auto& y = mors[g2];
        return mor_of.at({x.s, y.t, A.compose_unchecked(y.f, x.f), B.compose_unchecked(y.g, x.g)});
    };
    out.cat = FinCat::build(F.name + "|" + G.name, obj_ids, records, ids, comp);
    out.left = {"P_" + F.name, out.cat, F.src, {}, {}};
    out.right = {"P_" + G.name, out.cat, G.src, {}, {}};
    for (const auto& [a, b, h] : out.objects) {
        out.left.ob.push_back(a);
        out.right.ob.push_back(b);
    }
    for (const auto& m : mors) {
        out.left.mo.push_back(m.f);
        out.right.mo.push_back(m.g);
    }
    return out;
}

std::optional<KanExtension> kan_extension(KanSide side, const Functor& K, const Functor& X) {
    if (K.src != X.src && !same_cat(K.src, X.src))
        throw ShapeMismatch("Kan extension of " + X.name + " along " + K.name + " with different sources");
    const auto& J = *K.tgt;
    const bool left = side == KanSide::Left;
    auto one = one_category();
    KanExtension out;
    out.side = side;
    out.along = K;
    out.diagram = X;
    out.ext = {(left ? "Lan_" : "Ran_") + K.name + " " + X.name, K.tgt, X.tgt,
               std::vector<int>(J.num_objects(), -1), std::vector<int>(J.num_morphisms(), -1)};
    std::vector<std::map<std::tuple<int, int, int>, int>> lookup(J.num_objects());
    for (int j = 0; j < J.num_objects(); ++j) {
        auto at = constant_functor(one, K.tgt, j);
        at.name = J.object(j);
        auto comma = left ? comma_category(K, at) : comma_category(at, K);
        auto D = compose(X, left ? comma.left : comma.right);
        auto u = left ? colimit(D) : limit(D);
        if (!u) return std::nullopt;
        for (std::size_t k = 0; k < comma.objects.size(); ++k) lookup[j][comma.objects[k]] = static_cast<int>(k);
        out.ext.ob[j] = u->apex;
        out.commas.push_back(std::move(comma));
        out.pointwise.push_back(std::move(*u));
    }
    for (int m = 0; m < J.num_morphisms(); ++m) {
        const int s = J.dom(m), t = J.cod(m);
        if (left) {
            // (i, *, h) over s goes to (i, *, m o h) over t
            std::vector<int> legs;
            for (const auto& [i, b, h] : out.commas[s].objects)
                legs.push_back(out.pointwise[t].legs[lookup[t].at({i, b, J.compose_unchecked(m, h)})]);
            out.ext.mo[m] = factor_cocone(out.pointwise[s], out.ext.ob[t], legs);
        } else {
            // (*, i, h) under t comes from (*, i, h o m) under s
            std::vector<int> legs;
            for (const auto& [a, i, h] : out.commas[t].objects)
                legs.push_back(out.pointwise[s].legs[lookup[s].at({a, i, J.compose_unchecked(h, m)})]);
            out.ext.mo[m] = factor_cone(out.pointwise[t], out.ext.ob[s], legs);
        }
        if (out.ext.mo[m] < 0) throw NotAFunctor("no unique induced map for " + J.mor_id(m), J.mor_id(m));
    }
    out.ext = checked_functor(out.ext);
    const auto& I = *K.src;
    auto ext_K = compose(out.ext, K);
    std::vector<int> comp(I.num_objects());
    for (int i = 0; i < I.num_objects(); ++i) {
        const int j = K.ob[i];
        const int id = J.identity(j);
        comp[i] = out.pointwise[j].legs[lookup[j].at(left ? std::make_tuple(i, 0, id) : std::make_tuple(0, i, id))];
    }
    if (left)
        out.cell = checked_nat({"eta", X, ext_K, comp});
    else
        out.cell = checked_nat({"eps", ext_K, X, comp});
    return out;
}

bool trivial_endomorphisms(const FinCat& J, int obj) { return J.hom(obj, obj).size() == 1; }

EvaluationAdjoints evaluation_adjoints(const CatPtr& C, const CatPtr& Jcat, int J, const Budget& budget) {
    return evaluation_adjoints(functor_category(Jcat, C, budget), J);
}

EvaluationAdjoints evaluation_adjoints(const FunctorCatPtr& CJ, int J) {
    const auto& C = CJ->base;
    const auto& Jc = *CJ->shape;
    const auto& CJc = *CJ->cat;
    EvaluationAdjoints out;
    out.CJ = CJ;
    out.J = J;
    out.ev = evaluation(CJ, J);
    auto one = one_category();
    auto K = constant_functor(one, CJ->shape, J);
    K.name = Jc.object(J);

    auto side = [&](KanSide s) -> std::optional<Adjunction> {
        const bool left = s == KanSide::Left;
        std::vector<KanExtension> ext;
        for (int c = 0; c < C->num_objects(); ++c) {
            auto X = constant_functor(one, C, c);
            X.name = C->object(c);
            auto k = kan_extension(s, K, X);
            if (!k) return std::nullopt;
            ext.push_back(std::move(*k));
        }
        Functor P{left ? "J_!" : "J_*", C, CJ->cat, {}, {}};
        for (const auto& k : ext) {
            int o = CJ->object_of(k.ext);
            if (o < 0) throw ShapeMismatch("extension missing from the functor category");
            P.ob.push_back(o);
        }
        for (int f = 0; f < C->num_morphisms(); ++f) {
            const auto& src = ext[C->dom(f)];
            const auto& tgt = ext[C->cod(f)];
            std::vector<int> comp(Jc.num_objects());
            for (int j = 0; j < Jc.num_objects(); ++j) {
                std::vector<int> legs;
                for (std::size_t o = 0; o < src.commas[j].objects.size(); ++o)
                    legs.push_back(left ? C->compose_unchecked(tgt.pointwise[j].legs[o], f)
                                        : C->compose_unchecked(f, src.pointwise[j].legs[o]));
                comp[j] = left ? factor_cocone(src.pointwise[j], tgt.ext.ob[j], legs)
                               : factor_cone(tgt.pointwise[j], src.ext.ob[j], legs);
            }
            P.mo.push_back(CJ->morphism_of_key(P.ob[C->dom(f)], P.ob[C->cod(f)], comp));
        }
        P = checked_functor(P);
        auto evP = compose(out.ev, P);
        auto Pev = compose(P, out.ev);
        auto idC = identity_functor(C);
        auto idCJ = identity_functor(CJ->cat);
        // the (co)unit on the C side is the Kan cell at *
        std::vector<int> base(C->num_objects());
        for (int c = 0; c < C->num_objects(); ++c) base[c] = ext[c].cell.comp[0];
        // the (co)unit on the C^J side is induced by X(h)
        std::vector<int> diag(CJc.num_objects());
        for (int x = 0; x < CJc.num_objects(); ++x) {
            const auto& Xf = CJ->objects[x];
            const auto& k = ext[Xf.ob[J]];
            std::vector<int> comp(Jc.num_objects());
            for (int j = 0; j < Jc.num_objects(); ++j) {
                std::vector<int> legs;
                for (const auto& [a, b, h] : k.commas[j].objects) legs.push_back(Xf.mo[h]);
                comp[j] = left ? factor_cocone(k.pointwise[j], Xf.ob[j], legs)
                               : factor_cone(k.pointwise[j], Xf.ob[j], legs);
            }
            diag[x] = left ? CJ->morphism_of_key(P.ob[Xf.ob[J]], x, comp) : CJ->morphism_of_key(x, P.ob[Xf.ob[J]], comp);
        }
        if (left) {
            NatTrans unit{"eta", idC, evP, base};
            NatTrans counit{"eps", Pev, idCJ, diag};
            return verify_adjunction("J_! -| ev_" + Jc.object(J), P, out.ev, unit, counit);
        }
        NatTrans unit{"eta", idCJ, Pev, diag};
        NatTrans counit{"eps", evP, idC, base};
        return verify_adjunction("ev_" + Jc.object(J) + " -| J_*", out.ev, P, unit, counit);
    };
    out.shriek = side(KanSide::Left);
    out.star = side(KanSide::Right);
    if (out.shriek) out.shriek_ff = is_iso(out.shriek->unit);
    if (out.star) out.star_ff = is_iso(out.star->counit);
    return out;
}

} // namespace catmate
