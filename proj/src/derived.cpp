#include "catmate/derived.hpp"

#include "catmate/fixtures.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace catmate {

namespace {

NatTrans nat(std::string name, Functor src, Functor tgt, std::vector<int> comp) {
    return {std::move(name), std::move(src), std::move(tgt), std::move(comp)};
}

// Checks Nat(X, L) -> Nat(XH, K), t |-> cell o tH (left) or Nat(L, X) ->
// Nat(K, XH), t |-> tH o cell (right) is a bijection for every X.
bool kan_property(bool left, const Functor& H, const Functor& K, const Functor& L, const NatTrans& cell,
                  const Budget& budget, std::string* witness, std::size_t* candidates = nullptr) {
    const FinCat& E = *K.tgt;
    const int n = H.src->num_objects();
    auto xs = enumerate_functors(L.src, L.tgt, budget);
    if (candidates) *candidates = xs.size();
    for (const auto& X : xs) {
        auto XH = compose(X, H);
        auto ts = left ? enumerate_nats(X, L) : enumerate_nats(L, X);
        const std::size_t target = (left ? enumerate_nats(XH, K) : enumerate_nats(K, XH)).size();
        std::unordered_set<std::vector<int>, VecHash> image;
        for (const auto& t : ts) {
            std::vector<int> c(n);
            for (int a = 0; a < n; ++a) {
                const int ta = t.comp[H.ob[a]];
                c[a] = left ? E.compose(cell.comp[a], ta) : E.compose(ta, cell.comp[a]);
            }
            image.insert(std::move(c));
        }
        if (image.size() != ts.size() || image.size() != target) {
            if (witness) *witness = describe(X);
            return false;
        }
    }
    return true;
}

std::string derived_name(DerivedKind k, const std::string& base) {
    switch (k) {
    case DerivedKind::Left: return "L" + base;
    case DerivedKind::Right: return "R" + base;
    case DerivedKind::TotalLeft: return "LL" + base;
    case DerivedKind::TotalRight: return "RR" + base;
    }
    return base;
}

// Natural transformations F => G whose component at every object satisfies pred.
template <class Pred>
std::vector<NatTrans> solutions(const Functor& F, const Functor& G, Pred pred) {
    std::vector<NatTrans> out;
    for (auto& t : enumerate_nats(F, G)) {
        bool ok = true;
        for (std::size_t a = 0; a < t.comp.size() && ok; ++a) ok = pred(static_cast<int>(a), t.comp[a]);
        if (ok) out.push_back(std::move(t));
    }
    return out;
}

DerivedFunctorCert ensure_certified(const DerivedFunctorCert& c, const Budget& budget) {
    auto out = c.absolute == Absoluteness::Unchecked ? certified(c, budget) : c;
    if (out.absolute == Absoluteness::Failed)
        throw PreconditionFailure(out.derived.name + " is not an absolute derived functor", out.derived.name);
    return out;
}

} // namespace

const char* kind_name(DerivedKind k) {
    switch (k) {
    case DerivedKind::Left: return "left";
    case DerivedKind::Right: return "right";
    case DerivedKind::TotalLeft: return "total-left";
    case DerivedKind::TotalRight: return "total-right";
    }
    return "unknown";
}

const char* absoluteness_name(Absoluteness a) {
    switch (a) {
    case Absoluteness::Unchecked: return "unchecked";
    case Absoluteness::Certified: return "certified";
    case Absoluteness::Failed: return "failed";
    case Absoluteness::Partial: return "partial";
    }
    return "unknown";
}

DeformationRetraction validate_retraction(const RetractionData& data, const LocalizeOptions& opt) {
    const FinCat& C = *data.rc.cat;
    const bool left = data.side == RetractionSide::Left;
    if (static_cast<int>(data.Qob.size()) != C.num_objects() || static_cast<int>(data.Qmo.size()) != C.num_morphisms() ||
        static_cast<int>(data.q.size()) != C.num_objects())
        throw ShapeMismatch("retraction data does not cover " + C.name());
    std::vector<char> in0(C.num_objects(), 0);
    for (int c : data.objects) in0.at(c) = 1;

    for (int c = 0; c < C.num_objects(); ++c) {
        const int Qc = data.Qob[c];
        if (!in0.at(Qc)) throw ShapeMismatch("Q sends " + C.object(c) + " outside C0", C.object(c));
        const int qc = data.q[c];
        if (left ? (C.dom(qc) != Qc || C.cod(qc) != c) : (C.dom(qc) != c || C.cod(qc) != Qc))
            throw ShapeMismatch("q at " + C.object(c) + " has the wrong shape", C.object(c));
        if (!data.rc.is_weq(qc))
            throw QNotWeq("q at " + C.object(c) + " (" + C.mor_id(qc) + ") is not a weak equivalence", C.object(c));
    }
    for (int f = 0; f < C.num_morphisms(); ++f) {
        const int Qf = data.Qmo[f];
        if (C.dom(Qf) != data.Qob[C.dom(f)] || C.cod(Qf) != data.Qob[C.cod(f)])
            throw ShapeMismatch("Q on " + C.mor_id(f) + " has the wrong shape", C.mor_id(f));
        const int a = C.dom(f), b = C.cod(f);
        const bool ok = left ? C.compose(data.q[b], Qf) == C.compose(f, data.q[a])
                             : C.compose(Qf, data.q[a]) == C.compose(data.q[b], f);
        if (!ok) throw SquareFailure("the square at " + C.mor_id(f) + " does not commute", C.mor_id(f));
    }

    DeformationRetraction r;
    r.data = data;
    r.sub = full_subcategory(data.rc.cat, data.objects, C.name() + "0");
    r.to_sub.assign(C.num_morphisms(), -1);
    std::vector<int> w0;
    for (int k = 0; k < r.sub.cat->num_morphisms(); ++k) {
        r.to_sub[r.sub.inclusion.mo[k]] = k;
        if (data.rc.is_weq(r.sub.inclusion.mo[k])) w0.push_back(k);
    }
    std::vector<int> obj_to_sub(C.num_objects(), -1);
    for (std::size_t k = 0; k < data.objects.size(); ++k) obj_to_sub[data.objects[k]] = static_cast<int>(k);
    r.rc0 = make_relcat(data.rc.name + "0", r.sub.cat, w0);
    r.loc = std::make_shared<LocalizationResult>(localize_exact(data.rc, opt));
    r.loc0 = std::make_shared<LocalizationResult>(localize_exact(r.rc0, opt));

    r.H0Q = Functor{"H0Q", data.rc.cat, r.loc0->ho, {}, {}};
    for (int c = 0; c < C.num_objects(); ++c) r.H0Q.ob.push_back(obj_to_sub[data.Qob[c]]);
    for (int f = 0; f < C.num_morphisms(); ++f) r.H0Q.mo.push_back(r.loc0->H.mo[r.to_sub[data.Qmo[f]]]);
    std::string w;
    if (!is_functor(r.H0Q, &w)) throw HoQNotFunctorial("H0 Q is not a functor", w);
    for (int f : data.rc.weq_list())
        if (!r.loc0->ho->is_iso(r.H0Q.mo[f]))
            throw HoQNotFunctorial("H0 Q does not invert " + C.mor_id(f), C.mor_id(f));
    r.Qt = induced_functor(*r.loc, r.H0Q, "Q~");
    return r;
}

DeformationRetraction trivial_retraction(const RelCat& rc, RetractionSide side) {
    const FinCat& C = *rc.cat;
    RetractionData d{side, rc, {}, {}, {}, {}};
    for (int c = 0; c < C.num_objects(); ++c) {
        d.objects.push_back(c);
        d.Qob.push_back(c);
        d.q.push_back(C.identity(c));
    }
    for (int f = 0; f < C.num_morphisms(); ++f) d.Qmo.push_back(f);
    return validate_retraction(d);
}

RetractionData retraction_data(const RelCat& rc, RetractionSide side, const std::vector<std::string>& objects,
                               const std::vector<std::pair<std::string, std::string>>& Qob,
                               const std::vector<std::pair<std::string, std::string>>& Qmo,
                               const std::vector<std::pair<std::string, std::string>>& q) {
    const FinCat& C = *rc.cat;
    RetractionData d{side, rc, {}, {}, std::vector<int>(C.num_morphisms(), -1), {}};
    for (const auto& o : objects) d.objects.push_back(C.object_index(o));
    for (int c = 0; c < C.num_objects(); ++c) d.Qob.push_back(c);
    for (const auto& [a, b] : Qob) d.Qob[C.object_index(a)] = C.object_index(b);
    for (int c = 0; c < C.num_objects(); ++c) d.q.push_back(C.identity(c));
    for (const auto& [a, m] : q) d.q[C.object_index(a)] = C.morphism_index(m);
    for (const auto& [f, g] : Qmo) d.Qmo[C.morphism_index(f)] = C.morphism_index(g);
    for (int f = 0; f < C.num_morphisms(); ++f) {
        if (d.Qmo[f] >= 0) continue;
        if (C.is_identity(f))
            d.Qmo[f] = C.identity(d.Qob[C.dom(f)]);
        else if (d.Qob[C.dom(f)] == C.dom(f) && d.Qob[C.cod(f)] == C.cod(f))
            d.Qmo[f] = f;
        else
            throw ShapeMismatch("Q is not given on " + C.mor_id(f), C.mor_id(f));
    }
    return d;
}

RetractionEquivalence retraction_equivalence(const DeformationRetraction& ret) {
    const bool left = ret.data.side == RetractionSide::Left;
    auto HoI = ho_functor(ret.sub.inclusion, *ret.loc0, *ret.loc);
    auto idC = identity_functor(ret.loc->ho);
    auto idC0 = identity_functor(ret.loc0->ho);
    auto IQ = compose(HoI, ret.Qt);
    auto QI = compose(ret.Qt, HoI);
    std::vector<int> a, b;
    for (int c = 0; c < ret.data.rc.cat->num_objects(); ++c) a.push_back(ret.loc->H.mo[ret.data.q[c]]);
    for (int c : ret.data.objects) b.push_back(ret.loc0->H.mo[ret.to_sub[ret.data.q[c]]]);
    RetractionEquivalence e{left ? nat("Hq", IQ, idC, a) : nat("Hq", idC, IQ, a),
                            left ? nat("H0q", QI, idC0, b) : nat("H0q", idC0, QI, b)};
    e.natural = is_natural(e.around_C) && is_natural(e.around_C0);
    e.invertible = is_iso(e.around_C) && is_iso(e.around_C0);
    return e;
}

Functor DerivedFunctorCert::extended() const { return total() ? compose(tgt->H, base) : base; }

DerivedFunctorCert derive_via_retraction(const Functor& F, const DeformationRetraction& ret,
                                         const std::optional<RelCat>& tgt, const LocalizeOptions& opt) {
    if (!same_cat(F.src, ret.data.rc.cat)) throw ShapeMismatch(F.name + " does not start at " + ret.data.rc.cat->name());
    const bool left = ret.data.side == RetractionSide::Left;
    const FinCat& C = *F.src;
    auto FI = compose(F, ret.sub.inclusion);
    DerivedFunctorCert cert;
    cert.base = F;
    cert.src = ret.loc;
    Functor K = F;
    Functor onC0;
    if (!tgt) {
        cert.kind = left ? DerivedKind::Left : DerivedKind::Right;
        for (int w : ret.rc0.weq_list())
            if (!F.tgt->is_iso(FI.mo[w]))
                throw PreconditionFailure(F.name + " does not invert " + ret.sub.cat->mor_id(w), ret.sub.cat->mor_id(w));
        onC0 = induced_functor(*ret.loc0, FI);
    } else {
        if (!same_cat(tgt->cat, F.tgt)) throw ShapeMismatch(F.name + " does not land in " + tgt->cat->name());
        cert.kind = left ? DerivedKind::TotalLeft : DerivedKind::TotalRight;
        std::string w;
        if (!is_homotopical(FI, ret.rc0, *tgt, &w))
            throw PreconditionFailure(F.name + " restricted to C0 is not homotopical", w);
        cert.tgt = std::make_shared<LocalizationResult>(localize_exact(*tgt, opt));
        K = compose(cert.tgt->H, F);
        onC0 = induced_functor(*ret.loc0, compose(cert.tgt->H, FI));
    }
    cert.derived = compose(onC0, ret.Qt);
    cert.derived.name = derived_name(cert.kind, F.name);
    std::vector<int> comp;
    for (int c = 0; c < C.num_objects(); ++c) comp.push_back(K.mo[ret.data.q[c]]);
    auto DH = compose(cert.derived, ret.loc->H);
    cert.cell = checked_nat(left ? nat("lambda", DH, K, comp) : nat("rho", K, DH, comp));
    return cert;
}

DerivedFunctorCert homotopical_cert(const Functor& F, const LocPtr& src, const LocPtr& tgt, bool left) {
    DerivedFunctorCert cert;
    cert.base = F;
    cert.kind = left ? DerivedKind::TotalLeft : DerivedKind::TotalRight;
    cert.src = src;
    cert.tgt = tgt;
    cert.derived = ho_functor(F, *src, *tgt);
    auto K = compose(tgt->H, F);
    cert.cell = identity_nat(K);
    cert.cell.name = left ? "lambda" : "rho";
    if (left)
        cert.cell.src = compose(cert.derived, src->H);
    else
        cert.cell.tgt = compose(cert.derived, src->H);
    return cert;
}

std::vector<CatPtr> default_probes(const DerivedFunctorCert& cert) {
    return {fixtures::one(), fixtures::arrow(), fixtures::walking_iso(), cert.derived.tgt};
}

KanVerdict verify_kan(const DerivedFunctorCert& cert, const std::vector<CatPtr>& probes, const Budget& budget) {
    KanVerdict v;
    const auto& H = cert.src->H;
    const auto K = cert.extended();
    if (!is_natural(cert.cell, &v.witness)) {
        v.absolute = Absoluteness::Failed;
        return v;
    }
    v.kan = kan_property(cert.left(), H, K, cert.derived, cert.cell, budget, &v.witness, &v.candidates);
    if (!v.kan) {
        v.absolute = Absoluteness::Failed;
        return v;
    }
    const auto family = probes.empty() ? default_probes(cert) : probes;
    for (const auto& E : family) {
        std::vector<Functor> ys;
        try {
            ys = enumerate_functors(K.tgt, E, budget);
        } catch (const SizeBudgetExceeded&) {
            v.probes_skipped.push_back(E->name());
            continue;
        }
        for (const auto& Y : ys) {
            std::string w;
            bool ok = false;
            try {
                ok = kan_property(cert.left(), H, compose(Y, K), compose(Y, cert.derived), whisker(Y, cert.cell), budget,
                                  &w);
            } catch (const SizeBudgetExceeded&) {
                v.probes_skipped.push_back(E->name());
                break;
            }
            if (!ok) {
                v.absolute = Absoluteness::Failed;
                v.witness = E->name() + ": " + describe(Y) + " / " + w;
                return v;
            }
        }
        if (v.probes_skipped.empty() || v.probes_skipped.back() != E->name()) v.probes_checked.push_back(E->name());
    }
    v.absolute = v.probes_skipped.empty() ? Absoluteness::Certified : Absoluteness::Partial;
    return v;
}

DerivedFunctorCert certified(DerivedFunctorCert cert, const Budget& budget) {
    auto v = verify_kan(cert, {}, budget);
    cert.absolute = v.absolute;
    cert.probes = v.probes_checked;
    return cert;
}

NatTrans derived_nat(const NatTrans& sigma, const DerivedFunctorCert& a, const DerivedFunctorCert& b) {
    if (a.kind != b.kind || !same_cat(a.src->ho, b.src->ho) || (a.total() && !same_cat(a.tgt->ho, b.tgt->ho)))
        throw ShapeMismatch("derived transformations need certs of the same kind and localizations");
    if (sigma.src != a.base || sigma.tgt != b.base) throw ShapeMismatch(sigma.name + " does not run between the bases");
    const FinCat& E = *a.derived.tgt;
    std::vector<int> s = sigma.comp;
    if (a.total())
        for (auto& m : s) m = a.tgt->H.mo[m];
    const bool left = a.left();
    auto sols = solutions(a.derived, b.derived, [&](int c, int t) {
        return left ? E.compose(s[c], a.cell.comp[c]) == E.compose(b.cell.comp[c], t)
                    : E.compose(t, a.cell.comp[c]) == E.compose(b.cell.comp[c], s[c]);
    });
    if (sols.size() != 1)
        throw NoSolution(std::to_string(sols.size()) + " candidates for the derived transformation of " + sigma.name,
                         sigma.name);
    auto out = sols.front();
    out.name = (left ? "L" : "R") + sigma.name;
    return out;
}

DerivedFunctorCert postcompose_cert(const Functor& Y, const DerivedFunctorCert& cert) {
    if (cert.total()) throw ShapeMismatch("postcompose_cert takes a plain cert; compose total certs instead");
    auto out = cert;
    out.base = compose(Y, cert.base);
    out.derived = compose(Y, cert.derived);
    out.cell = whisker(Y, cert.cell);
    out.absolute = Absoluteness::Unchecked;
    out.probes.clear();
    return out;
}

DerivedAdjunction derived_adjunction(const Adjunction& adj, const DerivedFunctorCert& Fc, const DerivedFunctorCert& Gc) {
    if (Fc.kind != DerivedKind::TotalLeft || Gc.kind != DerivedKind::TotalRight)
        throw ShapeMismatch("derived adjunctions need a total left and a total right derived functor");
    if (Fc.base != adj.F || Gc.base != adj.G) throw ShapeMismatch("certs do not belong to " + adj.name);
    auto F = ensure_certified(Fc, {});
    auto G = ensure_certified(Gc, {});
    const auto& HC = F.src->H;
    const auto& HD = F.tgt->H;
    const FinCat& HoC = *F.src->ho;
    const FinCat& HoD = *F.tgt->ho;
    const auto& LF = F.derived;
    const auto& RG = G.derived;

    DerivedAdjunction out;
    auto units = solutions(identity_functor(F.src->ho), compose(RG, LF), [&](int c, int m) {
        const int Fc_ = adj.F.ob[c];
        return HoC.compose(RG.mo[F.cell.comp[c]], m) == HoC.compose(G.cell.comp[Fc_], HC.mo[adj.unit.comp[c]]);
    });
    auto counits = solutions(compose(LF, RG), identity_functor(F.tgt->ho), [&](int d, int m) {
        const int Gd = adj.G.ob[d];
        return HoD.compose(HD.mo[adj.counit.comp[d]], F.cell.comp[Gd]) == HoD.compose(m, LF.mo[G.cell.comp[d]]);
    });
    out.unit_solutions = units.size();
    out.counit_solutions = counits.size();
    if (units.size() != 1) throw NoSolution(std::to_string(units.size()) + " solutions for the derived unit", adj.name);
    if (counits.size() != 1)
        throw NoSolution(std::to_string(counits.size()) + " solutions for the derived counit", adj.name);
    auto eta = units.front();
    auto eps = counits.front();
    eta.name = "eta.";
    eps.name = "eps.";
    out.adj = verify_adjunction(LF.name + " -| " + RG.name, LF, RG, eta, eps);
    out.unit_square = out.counit_square = true;
    return out;
}

DerivedFunctorCert derive_left_from_right_adjoint(const Adjunction& adj, const DerivedFunctorCert& Gc) {
    if (Gc.kind != DerivedKind::TotalRight || Gc.base != adj.G)
        throw ShapeMismatch("need a total right derived functor of " + adj.G.name);
    auto G = ensure_certified(Gc, {});
    auto found = find_left_adjoint(G.derived, "LL" + adj.F.name);
    if (!found) throw NoLeftAdjoint(G.derived.name + " has no left adjoint", G.derived.name);
    const auto& Fd = found->F;
    const FinCat& HoD = *G.src->ho;
    const auto& HC = G.tgt->H;
    DerivedFunctorCert cert;
    cert.base = adj.F;
    cert.kind = DerivedKind::TotalLeft;
    cert.src = G.tgt;
    cert.tgt = G.src;
    cert.derived = Fd;
    std::vector<int> comp;
    for (int c = 0; c < adj.C()->num_objects(); ++c) {
        const int Fc = adj.F.ob[c];
        int m = Fd.mo[HC.mo[adj.unit.comp[c]]];
        m = HoD.compose(Fd.mo[G.cell.comp[Fc]], m);
        m = HoD.compose(found->counit.comp[Fc], m);
        comp.push_back(m);
    }
    cert.cell = checked_nat(nat("lambda", compose(Fd, HC), compose(G.src->H, adj.F), comp));
    return certified(cert);
}

DerivedFunctorCert composite_cert(const DerivedFunctorCert& first, const DerivedFunctorCert& second) {
    if (!first.total() || first.kind != second.kind) throw ShapeMismatch("composite certs need total certs of one kind");
    if (!same_cat(first.base.tgt, second.base.src) || !same_cat(first.tgt->ho, second.src->ho))
        throw ShapeMismatch(first.base.name + " and " + second.base.name + " do not compose");
    DerivedFunctorCert c;
    c.kind = first.kind;
    c.base = compose(second.base, first.base);
    c.derived = compose(second.derived, first.derived);
    c.src = first.src;
    c.tgt = second.tgt;
    const FinCat& E = *second.derived.tgt;
    std::vector<int> comp;
    for (int x = 0; x < first.base.src->num_objects(); ++x) {
        const int Fx = first.base.ob[x];
        comp.push_back(first.left() ? E.compose(second.cell.comp[Fx], second.derived.mo[first.cell.comp[x]])
                                    : E.compose(second.derived.mo[first.cell.comp[x]], second.cell.comp[Fx]));
    }
    auto DH = compose(c.derived, c.src->H);
    auto K = compose(c.tgt->H, c.base);
    c.cell = checked_nat(first.left() ? nat("lambda", DH, K, comp) : nat("rho", K, DH, comp));
    return c;
}

CompositionVerdict composes_check(const DerivedFunctorCert& first, const DerivedFunctorCert& second,
                                  const std::optional<DerivedFunctorCert>& composite, const Budget& budget) {
    CompositionVerdict v;
    auto c = composite_cert(first, second);
    v.kan = verify_kan(c, {}, budget);
    v.composes = v.kan.kan;
    v.witness = v.kan.witness;
    if (composite) {
        try {
            auto theta = derived_nat(identity_nat(c.base), *composite, c);
            v.agrees = v.composes && is_iso(theta);
        } catch (const NoSolution&) {
            v.agrees = false;
        }
    }
    return v;
}

AdjointComposition adjoint_composition_check(const DerivedFunctorCert& F1, const DerivedFunctorCert& G1,
                                             const DerivedFunctorCert& F2, const DerivedFunctorCert& G2,
                                             const Budget& budget) {
    return {composes_check(F1, F2, std::nullopt, budget), composes_check(G2, G1, std::nullopt, budget)};
}

DerivedMateVerdict derived_mate_check(const MateSquare& sq, const DerivedSquareCerts& certs, const Budget& budget) {
    if (!sq.sigma || !sq.tau) throw ShapeMismatch("derived mates need both cells");
    const auto& locC = certs.F.src;
    const auto& locD = certs.F.tgt;
    const auto& locCp = certs.Fp.src;
    const auto& locDp = certs.Fp.tgt;
    std::string w;
    if (!is_homotopical(sq.X, locC->rc, locCp->rc, &w)) throw NotHomotopical("X is not homotopical", w);
    if (!is_homotopical(sq.Y, locD->rc, locDp->rc, &w)) throw NotHomotopical("Y is not homotopical", w);
    auto Xl = homotopical_cert(sq.X, locC, locCp, true);
    auto Yl = homotopical_cert(sq.Y, locD, locDp, true);
    auto Xr = homotopical_cert(sq.X, locC, locCp, false);
    auto Yr = homotopical_cert(sq.Y, locD, locDp, false);

    auto check = [&](const DerivedFunctorCert& a, const DerivedFunctorCert& b, const char* what) {
        auto v = composes_check(a, b, std::nullopt, budget);
        if (!v.composes) throw CompositionHypothesisFailed(std::string(what) + " do not compose", v.witness);
        return composite_cert(a, b);
    };
    auto FpX = check(Xl, certs.Fp, "Ho X and LF'");
    auto YF = check(certs.F, Yl, "LF and Ho Y");
    auto XG = check(certs.G, Xr, "RG and Ho X");
    auto GpY = check(Yr, certs.Gp, "Ho Y and RG'");

    DerivedMateVerdict out;
    out.sigma = derived_nat(*sq.sigma, FpX, YF);
    out.tau = derived_nat(*sq.tau, XG, GpY);
    auto top = derived_adjunction(sq.top, certs.F, certs.G).adj;
    auto bottom = derived_adjunction(sq.bottom, certs.Fp, certs.Gp).adj;
    out.derived = MateSquare{top, bottom, Xl.derived, Yl.derived, out.sigma, out.tau};
    auto v = check_mate_pair(out.derived);
    out.mates = v.mates;
    out.witness = v.witness;
    return out;
}

DeformationRetraction lift_retraction_pointwise(const DeformationRetraction& ret, const CatPtr& I,
                                                const Budget& budget, const LocalizeOptions& opt) {
    const auto& C = ret.data.rc.cat;
    Functor Q{"Q", C, C, ret.data.Qob, ret.data.Qmo};
    std::string w;
    if (!is_functor(Q, &w)) throw QNotFunctorial("Q is only a functor after localization", w);
    auto CI = functor_category(I, C, budget);
    std::set<int> in0(ret.data.objects.begin(), ret.data.objects.end());
    RetractionData d;
    d.side = ret.data.side;
    d.rc = diagram_relcat(ret.data.rc, CI);
    const bool left = d.side == RetractionSide::Left;
    for (std::size_t x = 0; x < CI->objects.size(); ++x) {
        const auto& X = CI->objects[x];
        if (std::all_of(X.ob.begin(), X.ob.end(), [&](int c) { return in0.count(c) > 0; }))
            d.objects.push_back(static_cast<int>(x));
        d.Qob.push_back(CI->object_of(compose(Q, X)));
    }
    for (const auto& a : CI->morphisms) {
        std::vector<int> comp;
        for (int m : a.comp) comp.push_back(Q.mo[m]);
        const int QX = d.Qob[CI->object_of(a.src)], QY = d.Qob[CI->object_of(a.tgt)];
        d.Qmo.push_back(CI->morphism_of_key(QX, QY, comp));
    }
    for (std::size_t x = 0; x < CI->objects.size(); ++x) {
        const auto& X = CI->objects[x];
        std::vector<int> comp;
        for (int i : X.ob) comp.push_back(ret.data.q[i]);
        const int QX = d.Qob[x], self = static_cast<int>(x);
        d.q.push_back(left ? CI->morphism_of_key(QX, self, comp) : CI->morphism_of_key(self, QX, comp));
    }
    return validate_retraction(d, opt);
}

} // namespace catmate
