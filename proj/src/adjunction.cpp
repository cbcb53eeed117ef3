#include "catmate/adjunction.hpp"

#include "catmate/construct.hpp"

#include <algorithm>

namespace catmate {

namespace {

bool typed(const NatTrans& a) {
    const auto& D = *a.src.tgt;
    if (a.comp.size() != a.src.ob.size()) return false;
    for (std::size_t x = 0; x < a.comp.size(); ++x) {
        int m = a.comp[x];
        if (m < 0 || m >= D.num_morphisms() || D.dom(m) != a.src.ob[x] || D.cod(m) != a.tgt.ob[x]) return false;
    }
    return true;
}

int first_mistyped(const NatTrans& a) {
    const auto& D = *a.src.tgt;
    for (std::size_t x = 0; x < a.comp.size(); ++x) {
        int m = a.comp[x];
        if (m < 0 || m >= D.num_morphisms() || D.dom(m) != a.src.ob[x] || D.cod(m) != a.tgt.ob[x])
            return static_cast<int>(x);
    }
    return -1;
}

bool is_identity_functor(const Functor& F) {
    if (!same_cat(F.src, F.tgt)) return false;
    for (std::size_t a = 0; a < F.ob.size(); ++a)
        if (F.ob[a] != static_cast<int>(a)) return false;
    for (std::size_t f = 0; f < F.mo.size(); ++f)
        if (F.mo[f] != static_cast<int>(f)) return false;
    return true;
}

// The unique morphism in the list satisfying pred, or -1.
template <class Pred>
int unique_in(const std::vector<int>& hom, Pred pred) {
    int found = -1;
    for (int k : hom)
        if (pred(k)) {
            if (found >= 0) return -1;
            found = k;
        }
    return found;
}

} // namespace

bool is_adjunction(const Functor& F, const Functor& G, const NatTrans& unit, const NatTrans& counit,
                   std::string* witness) {
    auto fail = [&](const std::string& w) {
        if (witness) *witness = w;
        return false;
    };
    const auto& C = *F.src;
    const auto& D = *F.tgt;
    if (!same_cat(G.src, F.tgt) || !same_cat(G.tgt, F.src)) return fail("");
    if (unit.src != identity_functor(F.src) || unit.tgt != compose(G, F)) return fail("");
    if (counit.src != compose(F, G) || counit.tgt != identity_functor(F.tgt)) return fail("");
    if (int x = first_mistyped(unit); x >= 0) return fail(C.object(x));
    if (int x = first_mistyped(counit); x >= 0) return fail(D.object(x));
    std::string w;
    if (!is_natural(unit, &w)) return fail(w);
    if (!is_natural(counit, &w)) return fail(w);
    for (int c = 0; c < C.num_objects(); ++c)
        if (D.compose_unchecked(counit.comp[F.ob[c]], F.mo[unit.comp[c]]) != D.identity(F.ob[c]))
            return fail(C.object(c));
    for (int d = 0; d < D.num_objects(); ++d)
        if (C.compose_unchecked(G.mo[counit.comp[d]], unit.comp[G.ob[d]]) != C.identity(G.ob[d]))
            return fail(D.object(d));
    return true;
}

Adjunction verify_adjunction(std::string name, Functor F, Functor G, NatTrans unit, NatTrans counit) {
    std::string w;
    if (!is_adjunction(F, G, unit, counit, &w))
        throw TriangleFailure(name + " fails the adjunction laws" + (w.empty() ? "" : " at " + w), w);
    return {std::move(name), std::move(F), std::move(G), std::move(unit), std::move(counit)};
}

Adjunction identity_adjunction(const CatPtr& C) {
    auto id = identity_functor(C);
    return {"id_" + C->name(), id, id, identity_nat(id), identity_nat(id)};
}

int transpose_right(const Adjunction& adj, int c, int k) {
    return adj.C()->compose(adj.G.mo[k], adj.unit.comp[c]);
}

int transpose_left(const Adjunction& adj, int d, int h) {
    return adj.D()->compose(adj.counit.comp[d], adj.F.mo[h]);
}

std::vector<HomBijection> hom_bijection(const Adjunction& adj) {
    const auto& C = *adj.C();
    const auto& D = *adj.D();
    std::vector<HomBijection> out;
    for (int c = 0; c < C.num_objects(); ++c)
        for (int d = 0; d < D.num_objects(); ++d) {
            HomBijection b{c, d, {}};
            for (int k : D.hom(adj.F.ob[c], d)) b.pairs.emplace_back(k, transpose_right(adj, c, k));
            out.push_back(std::move(b));
        }
    return out;
}

std::optional<Adjunction> find_left_adjoint(const Functor& G, const std::string& name) {
    const auto& D = *G.src;
    const auto& C = *G.tgt;
    Functor F{name.empty() ? "L" + G.name : name, G.tgt, G.src, {}, {}};
    std::vector<int> eta;
    for (int c = 0; c < C.num_objects(); ++c) {
        // objects (d, h : c -> Gd) of c|G in id order
        std::vector<std::pair<int, int>> cands;
        for (int d = 0; d < D.num_objects(); ++d)
            for (int h : C.hom(c, G.ob[d])) cands.emplace_back(d, h);
        std::sort(cands.begin(), cands.end(), [&](auto x, auto y) {
            return std::make_pair(D.object(x.first), C.mor_id(x.second)) <
                   std::make_pair(D.object(y.first), C.mor_id(y.second));
        });
        bool found = false;
        for (auto [d, h] : cands) {
            bool initial = std::all_of(cands.begin(), cands.end(), [&](auto o) {
                auto [d2, h2] = o;
                return unique_in(D.hom(d, d2), [&](int k) { return C.compose_unchecked(G.mo[k], h) == h2; }) >= 0;
            });
            if (initial) {
                F.ob.push_back(d);
                eta.push_back(h);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    for (int f = 0; f < C.num_morphisms(); ++f) {
        const int a = C.dom(f), b = C.cod(f);
        const int target = C.compose_unchecked(eta[b], f);
        F.mo.push_back(unique_in(D.hom(F.ob[a], F.ob[b]),
                                 [&](int k) { return C.compose_unchecked(G.mo[k], eta[a]) == target; }));
    }
    F = checked_functor(F);
    std::vector<int> eps;
    for (int d = 0; d < D.num_objects(); ++d) {
        const int Gd = G.ob[d];
        eps.push_back(unique_in(D.hom(F.ob[Gd], d),
                                [&](int k) { return C.compose_unchecked(G.mo[k], eta[Gd]) == C.identity(Gd); }));
    }
    NatTrans unit{"eta", identity_functor(G.tgt), compose(G, F), eta};
    NatTrans counit{"eps", compose(F, G), identity_functor(G.src), eps};
    return verify_adjunction(F.name + " -| " + G.name, F, G, unit, counit);
}

std::optional<Adjunction> find_right_adjoint(const Functor& F, const std::string& name) {
    const auto& C = *F.src;
    const auto& D = *F.tgt;
    Functor G{name.empty() ? "R" + F.name : name, F.tgt, F.src, {}, {}};
    std::vector<int> eps;
    for (int d = 0; d < D.num_objects(); ++d) {
        // objects (c, k : Fc -> d) of F|d in id order
        std::vector<std::pair<int, int>> cands;
        for (int c = 0; c < C.num_objects(); ++c)
            for (int k : D.hom(F.ob[c], d)) cands.emplace_back(c, k);
        std::sort(cands.begin(), cands.end(), [&](auto x, auto y) {
            return std::make_pair(C.object(x.first), D.mor_id(x.second)) <
                   std::make_pair(C.object(y.first), D.mor_id(y.second));
        });
        bool found = false;
        for (auto [c, k] : cands) {
            bool terminal = std::all_of(cands.begin(), cands.end(), [&](auto o) {
                auto [c2, k2] = o;
                return unique_in(C.hom(c2, c), [&](int g) { return D.compose_unchecked(k, F.mo[g]) == k2; }) >= 0;
            });
            if (terminal) {
                G.ob.push_back(c);
                eps.push_back(k);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    for (int m = 0; m < D.num_morphisms(); ++m) {
        const int a = D.dom(m), b = D.cod(m);
        const int target = D.compose_unchecked(m, eps[a]);
        G.mo.push_back(unique_in(C.hom(G.ob[a], G.ob[b]),
                                 [&](int g) { return D.compose_unchecked(eps[b], F.mo[g]) == target; }));
    }
    G = checked_functor(G);
    std::vector<int> eta;
    for (int c = 0; c < C.num_objects(); ++c) {
        const int Fc = F.ob[c];
        eta.push_back(unique_in(C.hom(c, G.ob[Fc]),
                                [&](int g) { return D.compose_unchecked(eps[Fc], F.mo[g]) == D.identity(Fc); }));
    }
    NatTrans unit{"eta", identity_functor(F.src), compose(G, F), eta};
    NatTrans counit{"eps", compose(F, G), identity_functor(F.tgt), eps};
    return verify_adjunction(F.name + " -| " + G.name, F, G, unit, counit);
}

std::vector<Adjunction> enumerate_adjunctions(const CatPtr& C, const CatPtr& D, const Budget& budget) {
    std::vector<Adjunction> out;
    int k = 0;
    for (const auto& G : enumerate_functors(D, C, budget)) {
        auto named = G;
        named.name = "G" + std::to_string(k++);
        if (auto adj = find_left_adjoint(named, "F" + named.name.substr(1))) out.push_back(std::move(*adj));
    }
    return out;
}

Adjunction compose_adjunctions(const Adjunction& inner, const Adjunction& outer) {
    const auto& F1 = inner.F;
    const auto& G1 = inner.G;
    const auto& F2 = outer.F;
    const auto& G2 = outer.G;
    if (!same_cat(F1.tgt, F2.src)) throw ShapeMismatch("cannot compose " + outer.name + " after " + inner.name);
    auto F = compose(F2, F1);
    auto G = compose(G1, G2);
    // G1 eta2 F1 o eta1 and eps2 o F2 eps1 G2, componentwise
    const auto& C = *F1.src;
    const auto& E = *F2.tgt;
    NatTrans unit{"eta", identity_functor(F1.src), compose(G, F), std::vector<int>(C.num_objects())};
    for (int c = 0; c < C.num_objects(); ++c)
        unit.comp[c] = C.compose_unchecked(G1.mo[outer.unit.comp[F1.ob[c]]], inner.unit.comp[c]);
    NatTrans counit{"eps", compose(F, G), identity_functor(F2.tgt), std::vector<int>(E.num_objects())};
    for (int e = 0; e < E.num_objects(); ++e)
        counit.comp[e] = E.compose_unchecked(outer.counit.comp[e], F2.mo[inner.counit.comp[G2.ob[e]]]);
    return verify_adjunction(F.name + " -| " + G.name, F, G, unit, counit);
}

void check_square_shape(const MateSquare& sq) {
    const auto& t = sq.top;
    const auto& b = sq.bottom;
    if (!same_cat(sq.X.src, t.C()) || !same_cat(sq.X.tgt, b.C()) || !same_cat(sq.Y.src, t.D()) ||
        !same_cat(sq.Y.tgt, b.D()))
        throw ShapeMismatch("legs do not connect " + t.name + " to " + b.name);
    if (sq.sigma) {
        if (sq.sigma->src != compose(b.F, sq.X) || sq.sigma->tgt != compose(sq.Y, t.F) || !typed(*sq.sigma))
            throw ShapeMismatch("sigma is not a transformation F'X => YF");
    }
    if (sq.tau) {
        if (sq.tau->src != compose(sq.X, t.G) || sq.tau->tgt != compose(b.G, sq.Y) || !typed(*sq.tau))
            throw ShapeMismatch("tau is not a transformation XG => G'Y");
    }
}

NatTrans mate_of_sigma(const MateSquare& sq, const NatTrans& sigma) {
    MateSquare s = sq;
    s.sigma = sigma;
    s.tau.reset();
    check_square_shape(s);
    const auto& t = sq.top;
    const auto& b = sq.bottom;
    const auto& Cp = *b.C();
    const auto& D = *t.D();
    NatTrans tau{"tau", compose(sq.X, t.G), compose(b.G, sq.Y), std::vector<int>(D.num_objects())};
    for (int d = 0; d < D.num_objects(); ++d) {
        const int Gd = t.G.ob[d];
        const int XGd = sq.X.ob[Gd];
        int m = b.unit.comp[XGd];
        m = Cp.compose_unchecked(b.G.mo[sigma.comp[Gd]], m);
        m = Cp.compose_unchecked(b.G.mo[sq.Y.mo[t.counit.comp[d]]], m);
        tau.comp[d] = m;
    }
    return tau;
}

NatTrans mate_of_tau(const MateSquare& sq, const NatTrans& tau) {
    MateSquare s = sq;
    s.tau = tau;
    s.sigma.reset();
    check_square_shape(s);
    const auto& t = sq.top;
    const auto& b = sq.bottom;
    const auto& Dp = *b.D();
    const auto& C = *t.C();
    NatTrans sigma{"sigma", compose(b.F, sq.X), compose(sq.Y, t.F), std::vector<int>(C.num_objects())};
    for (int c = 0; c < C.num_objects(); ++c) {
        int m = b.F.mo[sq.X.mo[t.unit.comp[c]]];
        m = Dp.compose_unchecked(b.F.mo[tau.comp[t.F.ob[c]]], m);
        m = Dp.compose_unchecked(b.counit.comp[sq.Y.ob[t.F.ob[c]]], m);
        sigma.comp[c] = m;
    }
    return sigma;
}

MateSquare mate(MateSquare sq) {
    if (sq.sigma)
        sq.tau = mate_of_sigma(sq, *sq.sigma);
    else if (sq.tau)
        sq.sigma = mate_of_tau(sq, *sq.tau);
    else
        throw ShapeMismatch("square has no cell to mate");
    return sq;
}

MateVerdict check_mate_pair(const MateSquare& sq) {
    if (!sq.sigma || !sq.tau) throw ShapeMismatch("check_mate_pair needs both cells");
    check_square_shape(sq);
    const auto& t = sq.top;
    const auto& b = sq.bottom;
    const auto& C = *t.C();
    const auto& D = *t.D();
    const auto& Cp = *b.C();
    const auto& sigma = *sq.sigma;
    const auto& tau = *sq.tau;
    MateVerdict v;
    v.unit_condition = true;
    for (int c = 0; c < C.num_objects() && v.unit_condition; ++c) {
        const int Xc = sq.X.ob[c];
        int lhs = Cp.compose_unchecked(b.G.mo[sigma.comp[c]], b.unit.comp[Xc]);
        int rhs = Cp.compose_unchecked(tau.comp[t.F.ob[c]], sq.X.mo[t.unit.comp[c]]);
        if (lhs != rhs) {
            v.unit_condition = false;
            v.witness = C.object(c);
        }
    }
    v.hom_condition = true;
    for (int c = 0; c < C.num_objects() && v.hom_condition; ++c)
        for (int d = 0; d < D.num_objects() && v.hom_condition; ++d)
            for (int k : D.hom(t.F.ob[c], d)) {
                const int Xc = sq.X.ob[c];
                int lhs = Cp.compose_unchecked(tau.comp[d], sq.X.mo[C.compose_unchecked(t.G.mo[k], t.unit.comp[c])]);
                int rhs = Cp.compose_unchecked(b.G.mo[sq.Y.mo[k]], b.G.mo[sigma.comp[c]]);
                rhs = Cp.compose_unchecked(rhs, b.unit.comp[Xc]);
                if (lhs != rhs) {
                    v.hom_condition = false;
                    if (v.witness.empty()) v.witness = "(" + C.object(c) + "," + D.object(d) + ")";
                    break;
                }
            }
    v.mates = v.unit_condition && v.hom_condition;
    return v;
}

MateSquare paste(PasteKind kind, const MateSquare& s1, const MateSquare& s2) {
    check_square_shape(s1);
    check_square_shape(s2);
    auto full1 = (s1.sigma && s1.tau) ? s1 : mate(s1);
    auto full2 = (s2.sigma && s2.tau) ? s2 : mate(s2);
    MateSquare out;
    if (kind == PasteKind::Vertical) {
        if (full1.bottom.F != full2.top.F || full1.bottom.G != full2.top.G)
            throw ShapeMismatch("vertical pasting needs the middle adjunction to match");
        out.top = full1.top;
        out.bottom = full2.bottom;
        out.X = compose(full2.X, full1.X);
        out.Y = compose(full2.Y, full1.Y);
        // Y' sigma o sigma'_X and tau'_Y o X' tau
        out.sigma = vertical(whisker(full2.Y, *full1.sigma), whisker(*full2.sigma, full1.X));
        out.tau = vertical(whisker(*full2.tau, full1.Y), whisker(full2.X, *full1.tau));
    } else {
        if (full1.Y != full2.X) throw ShapeMismatch("horizontal pasting needs the shared leg to match");
        out.top = compose_adjunctions(full1.top, full2.top);
        out.bottom = compose_adjunctions(full1.bottom, full2.bottom);
        out.X = full1.X;
        out.Y = full2.Y;
        // sigma2_F1 o F2' sigma1 and G1' tau2 o tau1_G2
        out.sigma = vertical(whisker(*full2.sigma, full1.top.F), whisker(full2.bottom.F, *full1.sigma));
        out.tau = vertical(whisker(full1.bottom.G, *full2.tau), whisker(*full1.tau, full2.top.G));
    }
    out.sigma->name = "sigma";
    out.tau->name = "tau";
    // functor names from whiskering differ from the composite names; the
    // comparisons downstream are extensional
    check_square_shape(out);
    return out;
}

MateSquare identity_square(const Adjunction& adj) {
    MateSquare sq{adj, adj, identity_functor(adj.C()), identity_functor(adj.D()), std::nullopt, std::nullopt};
    sq.sigma = identity_nat(adj.F);
    sq.sigma->src = compose(adj.F, sq.X);
    sq.sigma->tgt = compose(sq.Y, adj.F);
    sq.tau = identity_nat(adj.G);
    sq.tau->src = compose(sq.X, adj.G);
    sq.tau->tgt = compose(adj.G, sq.Y);
    return sq;
}

ConjugateVerdict conjugate_iso_check(const MateSquare& sq) {
    if (!sq.sigma || !sq.tau) throw ShapeMismatch("conjugate_iso_check needs both cells");
    if (!is_identity_functor(sq.X) || !is_identity_functor(sq.Y))
        throw ShapeMismatch("conjugate_iso_check needs identity legs");
    auto v = check_mate_pair(sq);
    if (!v.mates) throw NotMates("cells are not conjugate", v.witness);
    return {is_iso(*sq.sigma), is_iso(*sq.tau)};
}

} // namespace catmate
