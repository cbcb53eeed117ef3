#include "catmate/beck_chevalley.hpp"

#include "catmate/construct.hpp"
#include "catmate/universal.hpp"

#include <map>

namespace catmate {

namespace {

std::string first_non_iso(const NatTrans& a) {
    const auto& D = *a.src.tgt;
    for (std::size_t x = 0; x < a.comp.size(); ++x)
        if (!D.is_iso(a.comp[x])) return a.src.src->object(static_cast<int>(x));
    return {};
}

BCReport verdict(NatTrans cell, BCRoute route) {
    BCReport r;
    r.holds = is_iso(cell);
    if (!r.holds) r.witness = first_non_iso(cell);
    r.mate_cell = std::move(cell);
    r.route = route;
    return r;
}

MateSquare filled(const MateSquare& sq) {
    check_square_shape(sq);
    if (sq.sigma && sq.tau) return sq;
    return mate(sq);
}

} // namespace

const char* route_name(BCRoute r) {
    switch (r) {
    case BCRoute::Direct: return "direct";
    case BCRoute::FFRightAdjoints: return "ff-right-adjoints";
    case BCRoute::Equivalences: return "equivalences";
    case BCRoute::FFLeftAdjoints: return "ff-left-adjoints";
    case BCRoute::Interchange: return "interchange";
    }
    return "unknown";
}

NatTrans vertical_right_mate(const MateSquare& sq, const NatTrans& tau, const Adjunction& X_S,
                             const Adjunction& Y_T) {
    if (X_S.F != sq.X || Y_T.F != sq.Y) throw MissingAdjunction("leg adjunctions do not start at X and Y");
    // rows Y -| T over X -| S, legs G and G'; tau sits in the sigma slot
    MateSquare t{Y_T, X_S, sq.top.G, sq.bottom.G, tau, std::nullopt};
    auto rho = mate_of_sigma(t, tau);
    rho.name = "rho";
    return rho;
}

BCReport bc_check(const MateSquare& sq, BCDirection dir, bool dual, const LegAdjunctions& legs) {
    auto full = filled(sq);
    if (dir == BCDirection::Horizontal) {
        auto cell = dual ? mate_of_sigma(full, *full.sigma) : mate_of_tau(full, *full.tau);
        return verdict(std::move(cell), BCRoute::Direct);
    }
    if (dual) {
        if (!legs.X_S || !legs.Y_T) throw MissingAdjunction("vertical dual check needs X -| S and Y -| T");
        return verdict(vertical_right_mate(full, *full.tau, *legs.X_S, *legs.Y_T), BCRoute::Direct);
    }
    if (!legs.M_X || !legs.N_Y) throw MissingAdjunction("vertical check needs M -| X and N -| Y");
    if (legs.M_X->G != full.X || legs.N_Y->G != full.Y)
        throw MissingAdjunction("leg adjunctions do not end at X and Y");
    // rows M -| X over N -| Y, legs F' and F; sigma sits in the tau slot
    MateSquare t{*legs.M_X, *legs.N_Y, full.bottom.F, full.top.F, std::nullopt, *full.sigma};
    return verdict(mate_of_tau(t, *full.sigma), BCRoute::Direct);
}

InterchangeCertificate bc_interchange(const MateSquare& sq, const Adjunction& X_S, const Adjunction& Y_T) {
    auto full = filled(sq);
    const auto& tau = *full.tau;
    InterchangeCertificate out{mate_of_tau(full, tau), vertical_right_mate(full, tau, X_S, Y_T),
                               compose_adjunctions(full.top, Y_T), compose_adjunctions(X_S, full.bottom)};
    MateSquare conj{out.upper, out.lower, identity_functor(full.top.C()), identity_functor(full.bottom.D()),
                    out.sigma, out.rho};
    conj.sigma->src = compose(out.lower.F, conj.X);
    conj.sigma->tgt = compose(conj.Y, out.upper.F);
    conj.tau->src = compose(conj.X, out.upper.G);
    conj.tau->tgt = compose(out.lower.G, conj.Y);
    auto v = check_mate_pair(conj);
    out.conjugate = v.mates;
    if (!v.mates) out.witness = v.witness;

    const auto& C = *full.top.C();
    const auto& Cp = *full.bottom.C();
    const auto& F = full.top.F;
    const auto& G = full.top.G;
    const auto& S = X_S.G;
    out.sharp_identity = true;
    for (int c = 0; c < C.num_objects(); ++c) {
        const int Xc = full.X.ob[c];
        int inner = Cp.compose_unchecked(full.bottom.G.mo[out.sigma.comp[c]], full.bottom.unit.comp[Xc]);
        int lhs = C.compose_unchecked(S.mo[inner], X_S.unit.comp[c]);
        int rhs = C.compose_unchecked(G.mo[Y_T.unit.comp[F.ob[c]]], full.top.unit.comp[c]);
        rhs = C.compose_unchecked(out.rho.comp[full.Y.ob[F.ob[c]]], rhs);
        if (lhs != rhs) {
            out.sharp_identity = false;
            if (out.witness.empty()) out.witness = C.object(c);
            break;
        }
    }
    out.horizontal_holds = is_iso(out.sigma);
    out.vertical_dual_holds = is_iso(out.rho);
    if (out.witness.empty() && !out.horizontal_holds) out.witness = first_non_iso(out.sigma);

    const bool X_ff = is_iso(X_S.unit);
    const bool S_ff = is_iso(X_S.counit);
    const bool Y_ff = is_iso(Y_T.unit);
    const bool T_ff = is_iso(Y_T.counit);
    if (is_iso(tau) && X_ff && T_ff)
        out.sufficient = BCRoute::FFRightAdjoints;
    else if (X_ff && S_ff && Y_ff && T_ff)
        out.sufficient = BCRoute::Equivalences;
    return out;
}

BCReport bc_sufficient(const MateSquare& sq, const Adjunction& M_X, const Adjunction& N_Y) {
    auto full = filled(sq);
    if (M_X.G != full.X || N_Y.G != full.Y) throw MissingAdjunction("leg adjunctions do not end at X and Y");
    const auto& tau = *full.tau;
    BCReport r;
    r.route = BCRoute::FFLeftAdjoints;
    auto direct = mate_of_tau(full, tau);
    if (!is_iso(tau)) {
        r.hypothesis_met = false;
        r.holds = false;
        r.mate_cell = direct;
        r.notes.push_back("tau is not invertible");
        return r;
    }
    auto upper = compose_adjunctions(M_X, full.top);     // FM -| XG
    auto lower = compose_adjunctions(full.bottom, N_Y);  // NF' -| G'Y
    MateSquare conj{upper, lower, identity_functor(full.bottom.C()), identity_functor(full.top.D()), std::nullopt,
                    tau};
    conj.tau->src = compose(conj.X, upper.G);
    conj.tau->tgt = compose(lower.G, conj.Y);
    auto rho = mate_of_tau(conj, *conj.tau);

    const auto& C = *full.top.C();
    const auto& Dp = *full.bottom.D();
    const auto& Y = full.Y;
    const auto& F = full.top.F;
    NatTrans sigma{"sigma", compose(full.bottom.F, full.X), compose(Y, F), std::vector<int>(C.num_objects())};
    for (int c = 0; c < C.num_objects(); ++c) {
        const int Xc = full.X.ob[c];
        int m = N_Y.unit.comp[full.bottom.F.ob[Xc]];
        m = Dp.compose_unchecked(Y.mo[rho.comp[Xc]], m);
        m = Dp.compose_unchecked(Y.mo[F.mo[M_X.counit.comp[c]]], m);
        sigma.comp[c] = m;
    }
    if (sigma.comp != direct.comp) r.notes.push_back("assembled mate differs from the direct mate");
    r.mate_cell = sigma;
    r.holds = is_iso(sigma);
    if (!r.holds) r.witness = first_non_iso(sigma);

    const bool M_ff = is_iso(M_X.unit);
    const bool X_ff = is_iso(M_X.counit);
    const bool N_ff = is_iso(N_Y.unit);
    const bool Y_ff = is_iso(N_Y.counit);
    if (X_ff && N_ff) {
        r.notes.push_back("clause 1: X and N fully faithful");
    } else if ((M_ff && N_ff) || (X_ff && Y_ff)) {
        auto isos = enumerate_nat_isos(sigma.src, sigma.tgt);
        r.notes.push_back(std::string("clause 2: ") + (M_ff && N_ff ? "M and N" : "X and Y") +
                          " fully faithful; " + (isos.empty() ? "no" : "some") + " isomorphism F'X = YF");
        if (isos.empty() && r.holds) r.notes.push_back("mate invertible although no isomorphism was enumerated");
    } else {
        r.hypothesis_met = false;
        r.holds = false;
        r.notes.push_back("no clause applies");
    }
    return r;
}

std::vector<MateSquare> bc_counterexamples(const std::vector<Adjunction>& adjunctions, std::size_t limit,
                                           const Budget& budget) {
    std::vector<MateSquare> out;
    for (const auto& top : adjunctions)
        for (const auto& bottom : adjunctions)
            for (const auto& X : enumerate_functors(top.C(), bottom.C(), budget))
                for (const auto& Y : enumerate_functors(top.D(), bottom.D(), budget))
                    for (const auto& tau : enumerate_nat_isos(compose(X, top.G), compose(bottom.G, Y))) {
                        MateSquare sq{top, bottom, X, Y, std::nullopt, tau};
                        auto sigma = mate_of_tau(sq, tau);
                        if (is_iso(sigma)) continue;
                        sq.sigma = sigma;
                        out.push_back(std::move(sq));
                        if (out.size() >= limit) return out;
                    }
    return out;
}

std::vector<PointwiseColimitReport> pointwise_colimit_squares(const CatPtr& C, const CatPtr& I, const CatPtr& Jcat,
                                                              const Budget& budget) {
    auto CJ = functor_category(Jcat, C, budget);
    auto xs = enumerate_functors(I, CJ->cat, budget);
    const int nJ = Jcat->num_objects();
    std::vector<PointwiseColimitReport> out(nJ);
    std::vector<Functor> ev;
    for (int j = 0; j < nJ; ++j) {
        out[j].J = j;
        out[j].diagrams = xs.size();
        out[j].report.holds = true;
        out[j].report.notes.push_back("top and bottom rows restricted to diagrams with colimits");
        ev.push_back(evaluation(CJ, j));
    }
    // colimits of constant diagrams give the bottom counit
    std::map<int, std::optional<Cocone>> const_colim;
    auto colim_const = [&](int d) -> const std::optional<Cocone>& {
        auto it = const_colim.find(d);
        if (it == const_colim.end()) it = const_colim.emplace(d, colimit(constant_functor(I, C, d))).first;
        return it->second;
    };
    auto fail = [&](PointwiseColimitReport& r, const std::string& w) {
        if (r.report.holds) r.report.witness = w;
        r.report.holds = false;
    };
    for (const auto& X : xs) {
        auto top = colimit(X);
        if (!top) continue;
        for (int j = 0; j < nJ; ++j) {
            auto& r = out[j];
            ++r.with_colimit;
            auto bottom = colimit(compose(ev[j], X));
            if (!bottom) {
                ++r.pointwise_missing;
                fail(r, describe(X));
                continue;
            }
            const int d = CJ->objects[top->apex].ob[j];
            const auto& kappa = colim_const(d);
            if (!kappa) {
                fail(r, describe(X));
                continue;
            }
            std::vector<int> legs;
            for (int i = 0; i < I->num_objects(); ++i)
                legs.push_back(C->compose(kappa->legs[i], CJ->morphisms[top->legs[i]].comp[j]));
            int u = factor_cocone(*bottom, kappa->apex, legs);
            int eps = factor_cocone(*kappa, d, std::vector<int>(I->num_objects(), C->identity(d)));
            if (u < 0 || eps < 0) {
                fail(r, describe(X));
                continue;
            }
            if (C->is_iso(C->compose(eps, u)))
                ++r.iso;
            else
                fail(r, describe(X));
        }
    }
    return out;
}

} // namespace catmate
