#include "catmate/hocolim.hpp"

#include "catmate/beck_chevalley.hpp"
#include "catmate/universal.hpp"

#include <algorithm>

namespace catmate {

namespace {

LocPtr loc_of(const RelCat& rc, const LocalizeOptions& opt) {
    return std::make_shared<LocalizationResult>(localize_exact(rc, opt));
}

// Ho F of a homotopical F is an absolute derived functor outright.
DerivedFunctorCert hom_cert(const Functor& F, const LocPtr& src, const LocPtr& tgt, bool left) {
    auto c = homotopical_cert(F, src, tgt, left);
    c.absolute = Absoluteness::Certified;
    c.probes = {"homotopical"};
    return c;
}

// Identity cell between two extensionally equal functors.
NatTrans identity_between(const Functor& A, const Functor& B) {
    if (A != B) throw ShapeMismatch(A.name + " and " + B.name + " differ");
    NatTrans t{"id", A, B, {}};
    for (int a = 0; a < A.src->num_objects(); ++a) t.comp.push_back(A.tgt->identity(A.ob[a]));
    return t;
}

Adjunction ho_adjunction(const Adjunction& adj, const LocalizationResult& lc, const LocalizationResult& ld) {
    auto F = ho_functor(adj.F, lc, ld);
    auto G = ho_functor(adj.G, ld, lc);
    auto unit = ho_nat(adj.unit, lc, lc);
    auto counit = ho_nat(adj.counit, ld, ld);
    unit.src = identity_functor(lc.ho);
    counit.tgt = identity_functor(ld.ho);
    return verify_adjunction("Ho(" + adj.name + ")", F, G, unit, counit);
}

// F_* -| G_* on diagram categories.
Adjunction postcompose_adjunction(const Adjunction& adj, const FunctorCatPtr& AI, const FunctorCatPtr& BI) {
    auto F = postcompose(adj.F, AI, BI);
    auto G = postcompose(adj.G, BI, AI);
    auto unit = postcompose(adj.unit, AI, AI);
    auto counit = postcompose(adj.counit, BI, BI);
    unit.src = identity_functor(AI->cat);
    unit.tgt = compose(G, F);
    counit.src = compose(F, G);
    counit.tgt = identity_functor(BI->cat);
    return verify_adjunction(adj.name + " pointwise", F, G, unit, counit);
}

int max_hom(const FinCat& J) {
    std::size_t m = 0;
    for (int a = 0; a < J.num_objects(); ++a)
        for (int b = 0; b < J.num_objects(); ++b) m = std::max(m, J.hom(a, b).size());
    return static_cast<int>(m);
}

struct Setup {
    FunctorCatPtr CJ;
    RelCat rcJ;
    std::shared_ptr<const HocolimStructure> base;
    std::shared_ptr<const HocolimStructure> diagrams;
};

Setup pointwise_setup(const RelCat& rc, const CatPtr& I, const CatPtr& Jcat, const HocolimOptions& opt) {
    Setup s;
    s.CJ = functor_category(Jcat, rc.cat, opt.budget);
    s.rcJ = diagram_relcat(rc, s.CJ);
    auto hC = build_hocolim(rc, I, opt);
    if (!hC) throw MissingAdjunction(rc.name + " has no homotopy " + I->name() + "-colimits", rc.name);
    auto hCJ = build_hocolim(s.rcJ, I, opt);
    if (!hCJ) throw MissingAdjunction(s.rcJ.name + " has no homotopy " + I->name() + "-colimits", s.rcJ.name);
    s.base = std::make_shared<const HocolimStructure>(std::move(*hC));
    s.diagrams = std::make_shared<const HocolimStructure>(std::move(*hCJ));
    return s;
}

} // namespace

const char* provenance_name(HocolimProvenance p) {
    switch (p) {
    case HocolimProvenance::Searched: return "searched";
    case HocolimProvenance::DerivedColimit: return "derived-colimit";
    case HocolimProvenance::Transferred: return "transferred";
    }
    return "?";
}

const char* pointwise_route_name(PointwiseRoute r) {
    return r == PointwiseRoute::ViaJstar ? "via-Jstar" : "via-Jshriek";
}

std::optional<HocolimStructure> build_hocolim(const RelCat& rc, const CatPtr& I, const HocolimOptions& opt) {
    return build_hocolim(rc, functor_category(I, rc.cat, opt.budget), opt);
}

std::optional<HocolimStructure> build_hocolim(const RelCat& rc, const FunctorCatPtr& CI, const HocolimOptions& opt) {
    if (!same_cat(CI->base, rc.cat)) throw ShapeMismatch("diagram category is not over " + rc.cat->name());
    HocolimStructure hs;
    hs.rc = rc;
    hs.shape = CI->shape;
    hs.CI = CI;
    hs.rc_diag = diagram_relcat(rc, CI);
    hs.loc_base = loc_of(rc, opt.loc);
    hs.loc_diag = loc_of(hs.rc_diag, opt.loc);
    hs.delta = diagonal(CI);
    hs.ho_delta = ho_functor(hs.delta, *hs.loc_base, *hs.loc_diag);
    hs.ho_delta.name = "HoDelta";
    hs.strict = find_left_adjoint(hs.delta, "colim");
    if (hs.strict) hs.strict->F.name = "colim";
    const std::string name = "hocolim_" + CI->shape->name();

    if (opt.route != HocolimRoute::Search && hs.strict) {
        try {
            const auto& colim = hs.strict->F;
            DerivedFunctorCert Fc;
            if (is_homotopical(colim, hs.rc_diag, rc))
                Fc = hom_cert(colim, hs.loc_diag, hs.loc_base, true);
            else if (opt.retraction)
                Fc = certified(derive_via_retraction(colim, *opt.retraction, rc, opt.loc), opt.budget);
            else
                throw PreconditionFailure("colim is not homotopical and no retraction was supplied");
            auto Gc = hom_cert(hs.delta, hs.loc_base, hs.loc_diag, false);
            auto da = derived_adjunction(*hs.strict, Fc, Gc);
            hs.adjunction = da.adj;
            hs.adjunction.F.name = name;
            hs.adjunction.G = hs.ho_delta;
            hs.adjunction.name = name + " -| HoDelta";
            hs.provenance = HocolimProvenance::DerivedColimit;
            return hs;
        } catch (const Error&) {
            if (opt.route == HocolimRoute::DerivedColimit) return std::nullopt;
        }
    }
    if (opt.route == HocolimRoute::DerivedColimit) return std::nullopt;
    auto found = find_left_adjoint(hs.ho_delta, name + " -| HoDelta");
    if (!found) return std::nullopt;
    hs.adjunction = *found;
    hs.adjunction.F.name = name;
    hs.provenance = HocolimProvenance::Searched;
    return hs;
}

bool ho_delta_commutes(const HocolimStructure& hs) {
    return compose(hs.ho_delta, hs.loc_base->H) == compose(hs.loc_diag->H, hs.delta);
}

bool unit_couniversal(const HocolimStructure& hs, std::string* witness) {
    const FinCat& A = *hs.loc_diag->ho;
    const FinCat& B = *hs.loc_base->ho;
    const auto& L = hs.hocolim();
    const auto& R = hs.ho_delta;
    for (int x = 0; x < A.num_objects(); ++x) {
        const int u = hs.unit().comp[x];
        for (int c = 0; c < B.num_objects(); ++c) {
            for (int g : A.hom(x, R.ob[c])) {
                int hits = 0;
                for (int f : B.hom(L.ob[x], c))
                    if (A.compose(R.mo[f], u) == g) ++hits;
                if (hits != 1) {
                    if (witness) *witness = A.object(x);
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<NatTrans> strict_comparison(const HocolimStructure& hs) {
    if (!hs.strict) return std::nullopt;
    MateSquare sq{*hs.strict, hs.adjunction, hs.loc_diag->H, hs.loc_base->H, std::nullopt, std::nullopt};
    auto tau = identity_between(compose(sq.X, sq.top.G), compose(sq.bottom.G, sq.Y));
    auto sigma = mate_of_tau(sq, tau);
    sigma.name = "hocolim H => H colim";
    return sigma;
}

HocolimComparison compare_hocolims(const HocolimStructure& a, const HocolimStructure& b) {
    HocolimComparison out;
    out.same_right_adjoint = a.ho_delta == b.ho_delta;
    if (!out.same_right_adjoint) return out;
    MateSquare sq{a.adjunction, b.adjunction, identity_functor(a.loc_diag->ho), identity_functor(a.loc_base->ho),
                  std::nullopt, std::nullopt};
    auto tau = identity_between(compose(sq.X, sq.top.G), compose(sq.bottom.G, sq.Y));
    out.cell = mate_of_tau(sq, tau);
    out.iso = is_iso(out.cell);
    return out;
}

FubiniVerdict fubini_check(const RelCat& rc, const CatPtr& I, const CatPtr& J, const HocolimOptions& opt) {
    auto tw = twist(I, J, rc.cat, opt.budget);
    auto flat = build_hocolim(rc, tw.flat, opt);
    if (!flat) throw MissingStructure("no homotopy colimits over " + tw.product->name(), tw.product->name());
    auto outer = build_hocolim(rc, tw.CI, opt);
    if (!outer) throw MissingStructure("no homotopy colimits over " + I->name(), I->name());
    auto inner = build_hocolim(diagram_relcat(rc, tw.CI), tw.CI_J, opt);
    if (!inner) throw MissingStructure("no homotopy colimits over " + J->name() + " in diagrams", J->name());

    FubiniVerdict v{*flat, *inner, *outer, {}, false, false, {}, {}, {}, false};
    v.twist = ho_functor(tw.flat_to_CI_J, *flat->loc_diag, *inner->loc_diag);
    v.twist_iso = is_isomorphism(v.twist);
    auto R_flat = compose(v.twist, flat->ho_delta);
    auto R_iter = compose(inner->ho_delta, outer->ho_delta);
    v.right_adjoints_equal = R_flat == R_iter;
    if (!v.right_adjoints_equal) {
        for (int c = 0; c < R_flat.src->num_objects() && v.witness.empty(); ++c)
            if (R_flat.ob[c] != R_iter.ob[c]) v.witness = R_flat.src->object(c);
        if (v.witness.empty()) v.witness = "morphisms";
    }
    v.composite = compose_adjunctions(inner->adjunction, outer->adjunction);
    if (!v.twist_iso || !v.right_adjoints_equal) return v;

    // hocolim_{IxJ} carried to (C^I)^J along the twist
    auto Tinv = inverse_isomorphism(v.twist);
    auto F = compose(flat->hocolim(), Tinv);
    NatTrans unit{"eta", identity_functor(v.twist.tgt), compose(R_flat, F), {}};
    for (int y = 0; y < v.twist.tgt->num_objects(); ++y)
        unit.comp.push_back(v.twist.mo[flat->unit().comp[Tinv.ob[y]]]);
    NatTrans counit{"eps", compose(F, R_flat), identity_functor(F.tgt), flat->adjunction.counit.comp};
    auto carried = verify_adjunction("hocolim_" + tw.product->name() + " twisted", F, R_flat, unit, counit);

    MateSquare sq{v.composite, carried, identity_functor(v.twist.tgt), identity_functor(F.tgt), std::nullopt,
                  identity_between(v.composite.G, carried.G)};
    sq = mate(sq);
    v.comparison = *sq.sigma;
    v.comparison.name = "hocolim_IxJ => hocolim_I hocolim_J";
    auto cv = conjugate_iso_check(sq);
    v.conjugate_iso = cv.sigma_iso && cv.tau_iso;
    return v;
}

HocolimStructure transfer_hocolim(const RelCat& rc, const CatPtr& I, const CatPtr& Jcat, int J,
                                  const HocolimOptions& opt) {
    if (!trivial_endomorphisms(*Jcat, J))
        throw EndomorphismObstruction(Jcat->object(J) + " has non-identity endomorphisms", Jcat->object(J));
    auto CJ = functor_category(Jcat, rc.cat, opt.budget);
    auto ea = evaluation_adjoints(CJ, J);
    if (!ea.shriek || !ea.star) throw MissingStructure("evaluation at " + Jcat->object(J) + " lacks an adjoint", Jcat->object(J));
    auto rcJ = diagram_relcat(rc, CJ);
    if (!is_homotopical(ea.shriek->F, rc, rcJ) || !is_homotopical(ea.star->G, rc, rcJ))
        throw MissingStructure("J_! and J_* must be homotopical here", Jcat->object(J));
    if (!is_iso(ea.star->counit)) throw MissingStructure("ev_J J_* is not the identity up to iso", Jcat->object(J));
    auto given = build_hocolim(rcJ, I, opt);
    if (!given) throw MissingStructure(rcJ.name + " has no homotopy " + I->name() + "-colimits", rcJ.name);

    HocolimStructure hs;
    hs.rc = rc;
    hs.shape = I;
    hs.CI = functor_category(I, rc.cat, opt.budget);
    hs.rc_diag = diagram_relcat(rc, hs.CI);
    hs.loc_base = loc_of(rc, opt.loc);
    hs.loc_diag = loc_of(hs.rc_diag, opt.loc);
    hs.delta = diagonal(hs.CI);
    hs.ho_delta = ho_functor(hs.delta, *hs.loc_base, *hs.loc_diag);
    hs.ho_delta.name = "HoDelta";
    hs.strict = find_left_adjoint(hs.delta, "colim");
    hs.provenance = HocolimProvenance::Transferred;

    auto shriek = ho_adjunction(postcompose_adjunction(*ea.shriek, hs.CI, given->CI), *hs.loc_diag, *given->loc_diag);
    auto star = ho_adjunction(*ea.star, *given->loc_base, *hs.loc_base);
    auto chain = compose_adjunctions(compose_adjunctions(shriek, given->adjunction), star);
    const auto& L = chain.F;

    // phi : Ho(ev_* Delta J_*) => Ho Delta from the counit ev_J J_* => id
    NatTrans phi{"phi", chain.G, hs.ho_delta, {}};
    for (int c = 0; c < rc.cat->num_objects(); ++c)
        phi.comp.push_back(hs.ho_delta.mo[ho_of(*hs.loc_base, ea.star->counit.comp[c])]);
    phi = checked_nat(phi);
    auto unit = vertical(whisker(phi, L), chain.unit);
    auto counit = vertical(chain.counit, whisker(L, inverse(phi)));
    const std::string name = "hocolim_" + I->name();
    hs.adjunction = verify_adjunction(name + " -| HoDelta", L, hs.ho_delta, unit, counit);
    hs.adjunction.F.name = name;
    return hs;
}

bool PointwisenessReport::all_iso() const {
    return std::all_of(iso.begin(), iso.end(), [](bool b) { return b; });
}

bool PointwisenessReport::natural() const {
    return std::all_of(naturality.begin(), naturality.end(), [](const NaturalitySquare& s) { return s.commutes; });
}

std::vector<NaturalitySquare> naturality_in_J(const PointwisenessReport& report, const std::vector<NatTrans>& cells) {
    const auto& hC = *report.base;
    const auto& hCJ = *report.diagrams;
    const FinCat& Jc = *report.CJ->shape;
    auto pos = [&](int J) {
        auto it = std::find(report.objects.begin(), report.objects.end(), J);
        if (it == report.objects.end()) throw ShapeMismatch("no cell at " + Jc.object(J));
        return static_cast<std::size_t>(it - report.objects.begin());
    };
    std::vector<NaturalitySquare> out;
    for (int j = 0; j < Jc.num_morphisms(); ++j) {
        NaturalitySquare s;
        s.j = j;
        s.id = Jc.mor_id(j);
        auto evj = evaluation_along(report.CJ, j);
        auto Hevj = ho_nat(evj, *hCJ.loc_base, *hC.loc_base);
        auto Hevj_star = ho_nat(postcompose(evj, hCJ.CI, hC.CI), *hCJ.loc_diag, *hC.loc_diag);
        const auto& a = cells[pos(Jc.dom(j))];
        const auto& b = cells[pos(Jc.cod(j))];
        // componentwise, so that a planted cell with wrong endpoints is
        // reported rather than thrown
        const FinCat& E = *hC.loc_base->ho;
        for (int x = 0; x < hCJ.loc_diag->ho->num_objects() && s.witness.empty(); ++x) {
            const int f = hC.hocolim().mo[Hevj_star.comp[x]];
            const int g = Hevj.comp[hCJ.hocolim().ob[x]];
            const int bx = b.comp[x];
            const int ax = a.comp[x];
            const bool ok = E.cod(f) == E.dom(bx) && E.cod(ax) == E.dom(g) &&
                            E.compose(bx, f) == E.compose(g, ax);
            if (!ok) s.witness = hCJ.loc_diag->ho->object(x);
        }
        s.commutes = s.witness.empty();
        out.push_back(std::move(s));
    }
    return out;
}

bool strict_degeneration(const PointwisenessReport& r, std::string* witness) {
    const auto& hC = *r.base;
    const auto& hCJ = *r.diagrams;
    auto kC = strict_comparison(hC);
    auto kCJ = strict_comparison(hCJ);
    if (!kC || !kCJ) throw MissingStructure("strict colimits are missing", hC.rc.name);
    const FinCat& E = *hC.loc_base->ho;
    const auto& HC = hC.loc_base->H;
    const auto& HD = hCJ.loc_diag->H;
    for (std::size_t k = 0; k < r.objects.size(); ++k) {
        const int J = r.objects[k];
        auto ea = evaluation_adjoints(r.CJ, J);
        auto ev_star = postcompose(ea.ev, hCJ.CI, hC.CI);
        auto Hev = ho_functor(ea.ev, *hCJ.loc_base, *hC.loc_base);
        MateSquare sq{*hCJ.strict, *hC.strict, ev_star, ea.ev, std::nullopt, std::nullopt};
        auto strict = mate_of_tau(sq, identity_between(compose(sq.X, sq.top.G), compose(sq.bottom.G, sq.Y)));
        for (int x = 0; x < hCJ.CI->cat->num_objects(); ++x) {
            const int l = E.compose(Hev.mo[kCJ->comp[x]], r.cells[k].comp[HD.ob[x]]);
            const int rr = E.compose(HC.mo[strict.comp[x]], kC->comp[ev_star.ob[x]]);
            if (l != rr) {
                if (witness) *witness = r.CJ->shape->object(J) + "/" + hCJ.CI->cat->object(x);
                return false;
            }
        }
    }
    return true;
}

bool stable_powers(const RelCat& rc, int max_n) {
    const auto& C = rc.cat;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Cone> P;
        for (int a = 0; a < C->num_objects(); ++a) {
            auto p = power(n, a, C);
            if (!p) return false;
            P.push_back(std::move(*p));
        }
        for (int w : rc.weq_list()) {
            const auto& src = P[C->dom(w)];
            const auto& tgt = P[C->cod(w)];
            std::vector<int> legs;
            for (int l : src.legs) legs.push_back(C->compose(w, l));
            int m = factor_cone(tgt, src.apex, legs);
            if (m < 0 || !rc.is_weq(m)) return false;
        }
    }
    return true;
}

PointwisenessReport pointwise_via_Jstar(const RelCat& rc, const CatPtr& I, const CatPtr& Jcat,
                                        const HocolimOptions& opt) {
    auto s = pointwise_setup(rc, I, Jcat, opt);
    const auto& hC = *s.base;
    const auto& hCJ = *s.diagrams;
    PointwisenessReport r;
    r.route = PointwiseRoute::ViaJstar;
    r.base = s.base;
    r.diagrams = s.diagrams;
    r.CJ = s.CJ;

    const bool terminal = rc.cat->terminal_object() >= 0;
    const bool preorder = Jcat->is_thin();
    const bool powers = stable_powers(rc, max_hom(*Jcat));
    r.hypotheses.push_back(std::string("terminal object: ") + (terminal ? "yes" : "no"));
    r.hypotheses.push_back(std::string("index category a preorder: ") + (preorder ? "yes" : "no"));
    r.hypotheses.push_back(std::string("powers stable under weak equivalences: ") + (powers ? "yes" : "no"));
    if (terminal && preorder)
        r.hypotheses.push_back("J_* homotopical by the terminal-object and preorder route");
    else if (powers)
        r.hypotheses.push_back("J_* homotopical by the stable-powers route");

    for (int J = 0; J < Jcat->num_objects(); ++J) {
        const std::string Jid = Jcat->object(J);
        auto ea = evaluation_adjoints(s.CJ, J);
        auto Hev = ho_functor(ea.ev, *hCJ.loc_base, *hC.loc_base);
        auto Hev_star = ho_functor(postcompose(ea.ev, hCJ.CI, hC.CI), *hCJ.loc_diag, *hC.loc_diag);
        if (!ea.star) {
            if (!find_right_adjoint(Hev)) throw MissingAdjunction("Ho ev_" + Jid + " has no right adjoint", Jid);
            throw CompositionHypothesisFailed("J_* does not exist at " + Jid + " (terminal object: " +
                                                  (terminal ? "yes" : "no") + ", preorder: " + (preorder ? "yes" : "no") +
                                                  ", stable powers: " + (powers ? "yes" : "no") +
                                                  "); Ho Delta composing with R J_* is not established",
                                              Jid);
        }
        std::string w;
        if (!is_homotopical(ea.star->G, rc, s.rcJ, &w))
            throw CompositionHypothesisFailed("J_* at " + Jid + " is not homotopical", w);
        if (!(terminal && preorder) && !powers)
            r.hypotheses.push_back("J_* at " + Jid + " homotopical by direct check");

        auto Y_T = ho_adjunction(*ea.star, *hCJ.loc_base, *hC.loc_base);
        auto X_S = ho_adjunction(postcompose_adjunction(*ea.star, hCJ.CI, hC.CI), *hCJ.loc_diag, *hC.loc_diag);
        MateSquare sq{hCJ.adjunction, hC.adjunction, Hev_star, Hev, std::nullopt, std::nullopt};
        sq.tau = identity_between(compose(sq.X, sq.top.G), compose(sq.bottom.G, sq.Y));
        auto cert = bc_interchange(sq, X_S, Y_T);
        auto sigma = cert.sigma;
        sigma.name = "sigma_" + Jid;
        r.objects.push_back(J);
        r.iso.push_back(is_iso(sigma));
        r.interchange_agrees.push_back(cert.horizontal_holds == cert.vertical_dual_holds && cert.conjugate);
        r.cells.push_back(std::move(sigma));
    }
    r.naturality = naturality_in_J(r, r.cells);
    return r;
}

PointwisenessReport pointwise_via_Jshriek(const RelCat& rc, const CatPtr& I, const CatPtr& Jcat,
                                          const HocolimOptions& opt) {
    auto s = pointwise_setup(rc, I, Jcat, opt);
    const auto& hC = *s.base;
    const auto& hCJ = *s.diagrams;
    PointwisenessReport r;
    r.route = PointwiseRoute::ViaJshriek;
    r.base = s.base;
    r.diagrams = s.diagrams;
    r.CJ = s.CJ;
    const bool initial = rc.cat->initial_object() >= 0;
    const bool preorder = Jcat->is_thin();
    r.hypotheses.push_back(std::string("initial object: ") + (initial ? "yes" : "no"));
    r.hypotheses.push_back(std::string("index category a preorder: ") + (preorder ? "yes" : "no"));

    for (int J = 0; J < Jcat->num_objects(); ++J) {
        const std::string Jid = Jcat->object(J);
        auto ea = evaluation_adjoints(s.CJ, J);
        if (!ea.shriek) throw MissingAdjunction("ev_" + Jid + " has no left adjoint", Jid);
        if (!ea.shriek_ff) throw NotFullyFaithful("J_! at " + Jid + " is not fully faithful", Jid);
        for (const auto* base : {&rc, &hC.rc_diag}) {
            auto v = ff_LJshriek(*base, Jcat, J, opt);
            if (!v.ff) throw NotFullyFaithful("L J_! at " + Jid + " over " + base->name + " is not fully faithful", v.witness);
        }
        r.hypotheses.push_back("L J_! at " + Jid + " fully faithful on both levels");

        auto Hev = ho_functor(ea.ev, *hCJ.loc_base, *hC.loc_base);
        auto Hev_star = ho_functor(postcompose(ea.ev, hCJ.CI, hC.CI), *hCJ.loc_diag, *hC.loc_diag);
        auto left_of = [&](const Adjunction& strict, const FunctorCatPtr* diag) {
            const auto& lc = diag ? *hC.loc_diag : *hC.loc_base;
            const auto& ld = diag ? *hCJ.loc_diag : *hCJ.loc_base;
            const auto& R = diag ? Hev_star : Hev;
            auto a = diag ? postcompose_adjunction(strict, hC.CI, hCJ.CI) : strict;
            if (is_homotopical(a.F, lc.rc, ld.rc)) return ho_adjunction(a, lc, ld);
            auto found = find_left_adjoint(R, "L J_! -| Ho ev_J");
            if (!found) throw MissingAdjunction("Ho ev_" + Jid + " has no left adjoint", Jid);
            return *found;
        };
        auto A_base = left_of(*ea.shriek, nullptr);
        auto A_diag = left_of(*ea.shriek, &s.CJ);

        auto top = compose(Hev, hCJ.hocolim());
        auto bot = compose(hC.hocolim(), Hev_star);
        if (enumerate_nat_isos(bot, top).empty())
            throw NoObjectwiseIso("hocolim o Ho ev_" + Jid + " and Ho ev_" + Jid + " o hocolim are not isomorphic", Jid);

        // alpha : hocolim L J_! => L J_! hocolim, conjugate to the identity
        // Ho ev_J o Ho Delta = Ho Delta o Ho ev_J
        auto upper = compose_adjunctions(A_diag, hCJ.adjunction);
        auto lower = compose_adjunctions(hC.adjunction, A_base);
        MateSquare sq{lower, upper, identity_functor(lower.C()), identity_functor(lower.D()), std::nullopt,
                      std::nullopt};
        auto alpha = mate_of_tau(sq, identity_between(lower.G, upper.G));
        alpha.name = "alpha_" + Jid;

        const auto& theta = A_diag.unit;
        const auto& theta_p = A_base.unit;
        const auto& LJs = A_diag.F;
        auto lhs = vertical(whisker(upper.G, alpha), vertical(whisker(whisker(Hev_star, hCJ.unit()), LJs), theta));
        auto rhs = vertical(whisker(hC.ho_delta, whisker(theta_p, hC.hocolim())), hC.unit());
        r.alpha_compatible.push_back(lhs.comp == rhs.comp);

        // beta_J^-1 = theta'^-1_{hocolim Ho ev_J} o (Ho ev_J) alpha_{Ho ev_J} o ((Ho ev_J) hocolim zeta)^-1
        const auto& zeta = A_diag.counit;
        auto A = whisker(Hev, whisker(hCJ.hocolim(), zeta));
        auto B = whisker(whisker(Hev, alpha), Hev_star);
        auto C = inverse(whisker(theta_p, bot));
        auto beta = inverse(vertical(C, vertical(B, inverse(A))));
        beta.name = "beta_" + Jid;

        auto eq_l = whisker(Hev_star, hCJ.unit());
        auto eq_r = vertical(whisker(hC.ho_delta, beta), whisker(hC.unit(), Hev_star));
        r.unit_equation.push_back(eq_l.comp == eq_r.comp);
        r.objects.push_back(J);
        r.iso.push_back(is_iso(beta));
        r.alpha.push_back(std::move(alpha));
        r.cells.push_back(std::move(beta));
    }
    r.naturality = naturality_in_J(r, r.cells);
    return r;
}

FFVerdict ff_LJshriek(const RelCat& rc, const CatPtr& Jcat, int J, const HocolimOptions& opt) {
    const std::string Jid = Jcat->object(J);
    auto ea = evaluation_adjoints(rc.cat, Jcat, J, opt.budget);
    if (!ea.shriek) throw PreconditionFailure("ev_" + Jid + " has no left adjoint", Jid);
    FFVerdict v;
    v.eta_iso = ea.shriek_ff;
    if (!v.eta_iso) throw PreconditionFailure("J_! at " + Jid + " is not fully faithful", Jid);
    auto rcJ = diagram_relcat(rc, ea.CJ);
    auto loc = loc_of(rc, opt.loc);
    auto locJ = loc_of(rcJ, opt.loc);
    const auto& adj = *ea.shriek;
    auto Gc = hom_cert(adj.G, locJ, loc, false);
    DerivedFunctorCert Fc;
    v.homotopical = is_homotopical(adj.F, rc, rcJ);
    try {
        Fc = v.homotopical ? hom_cert(adj.F, loc, locJ, true) : derive_left_from_right_adjoint(adj, Gc);
    } catch (const NoLeftAdjoint& e) {
        throw PreconditionFailure(std::string("J_! is not derivable: ") + e.what(), Jid);
    }
    if (Fc.absolute == Absoluteness::Failed) throw PreconditionFailure("L J_! is not absolute", Jid);
    DerivedAdjunction da;
    try {
        da = derived_adjunction(adj, Fc, Gc);
    } catch (const NoSolution& e) {
        throw PreconditionFailure(std::string("J_! -| ev_J is not derivable: ") + e.what(), Jid);
    }
    const auto& lambda = Fc.cell;
    const FinCat& HoC = *loc->ho;
    v.lambda_iso = is_iso(lambda);
    v.equation = true;
    for (int c = 0; c < rc.cat->num_objects() && v.equation; ++c) {
        int l = HoC.compose(Gc.cell.comp[adj.F.ob[c]], loc->H.mo[adj.unit.comp[c]]);
        int r = HoC.compose(Gc.derived.mo[lambda.comp[c]], da.adj.unit.comp[loc->H.ob[c]]);
        if (l != r) {
            v.equation = false;
            v.witness = rc.cat->object(c);
        }
    }
    v.unit_iso = is_iso(da.adj.unit);
    if (v.witness.empty() && !v.unit_iso)
        for (int x = 0; x < HoC.num_objects(); ++x)
            if (!HoC.is_iso(da.adj.unit.comp[x])) {
                v.witness = HoC.object(x);
                break;
            }
    v.ff = v.eta_iso && v.lambda_iso && v.equation && v.unit_iso;
    return v;
}

} // namespace catmate
