#include "catmate/suite.hpp"

#include "catmate/beck_chevalley.hpp"
#include "catmate/construct.hpp"
#include "catmate/errors.hpp"
#include "catmate/hocolim.hpp"

#include "json.hpp"

#include <cctype>
#include <chrono>
#include <functional>
#include <sstream>

namespace catmate {

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Undecided: return "undecided";
    case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

std::size_t Report::count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

int Report::exit_code() const {
    if (count(CheckStatus::Fail)) return 1;
    if (count(CheckStatus::Undecided)) return 2;
    return 0;
}

const char* const kSuites[] = {"mates", "bc", "localization", "derived", "hocolim", "all", nullptr};

bool is_suite(const std::string& name) {
    for (auto s = kSuites; *s; ++s)
        if (name == *s) return true;
    return false;
}

namespace {

struct Outcome {
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
};

Outcome pass(std::string w = {}) { return {CheckStatus::Pass, std::move(w)}; }
Outcome fail(std::string w) { return {CheckStatus::Fail, std::move(w)}; }
Outcome skip(std::string w) { return {CheckStatus::Skipped, std::move(w)}; }
Outcome verdict(bool ok, const std::string& w) { return ok ? pass() : fail(w); }

std::string cell_string(const NatTrans& a) {
    std::string s = "tau {";
    for (int x = 0; x < a.domain()->num_objects(); ++x)
        s += (x ? ", " : "") + a.domain()->object(x) + ": " + a.codomain()->mor_id(a.comp[x]);
    return s + "}";
}

bool is_precondition(const Error& e) {
    static const char* kinds[] = {"CompositionHypothesisFailed", "MissingAdjunction", "NotFullyFaithful",
                                  "MissingStructure",            "PreconditionFailure", "EndomorphismObstruction",
                                  "NotHomotopical",              "NoLeftAdjoint",       "NoObjectwiseIso",
                                  "NoInitialObject"};
    for (const char* k : kinds)
        if (e.kind() == k) return true;
    return false;
}

class Runner {
public:
    Runner(const Workspace& ws, const SuiteConfig& cfg, Report& out) : ws_(ws), cfg_(cfg), out_(out) {}

    void check(const std::string& id, const std::string& anchor, const std::function<Outcome()>& body) {
        CheckRecord rec;
        rec.id = id;
        rec.anchor = anchor;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const SizeBudgetExceeded& e) {
            o = {CheckStatus::Undecided, e.what()};
        } catch (const UndecidedLocalization& e) {
            o = {CheckStatus::Undecided, e.what()};
        } catch (const Error& e) {
            o = is_precondition(e) ? skip(e.what()) : fail(e.what());
        } catch (const std::exception& e) {
            o = fail(e.what());
        }
        rec.status = o.status;
        rec.witness = o.witness;
        rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out_.checks.push_back(std::move(rec));
    }

    void mates();
    void bc();
    void localization();
    void derived();
    void hocolim();

private:
    struct Row {
        std::string name;
        Adjunction adj;
    };
    struct Square {
        std::size_t top, bottom;
        MateSquare sq;
    };

    bool small(const CatPtr& c) const { return static_cast<std::size_t>(c->num_objects()) <= cfg_.max_categories_objects; }

    // Corpus adjunctions on small categories with the identity adjunctions
    // of the categories they touch.
    const std::vector<Row>& rows() {
        if (rows_built_) return rows_;
        rows_built_ = true;
        std::vector<CatPtr> cats;
        auto note = [&](const CatPtr& c) {
            for (const auto& d : cats)
                if (same_cat(c, d)) return;
            cats.push_back(c);
        };
        for (const auto& n : ws_.adjunctions.order) {
            const auto& a = ws_.adjunctions.at(n);
            if (!small(a.C()) || !small(a.D())) continue;
            rows_.push_back({n, a});
            note(a.C());
            note(a.D());
        }
        for (const auto& c : cats) rows_.push_back({"id_" + c->name(), identity_adjunction(c)});
        return rows_;
    }

    // Every square between two rows, one per pair of legs and cell tau,
    // capped per pair.
    std::vector<Square> squares(std::size_t t, std::size_t b) {
        const auto& R = rows();
        const Adjunction& top = R[t].adj;
        const Adjunction& bottom = R[b].adj;
        std::vector<Square> out;
        for (const auto& X : enumerate_functors(top.C(), bottom.C(), cfg_.budget))
            for (const auto& Y : enumerate_functors(top.D(), bottom.D(), cfg_.budget))
                for (const auto& tau : enumerate_nats(compose(X, top.G), compose(bottom.G, Y))) {
                    if (out.size() >= cfg_.max_squares) return out;
                    MateSquare sq{top, bottom, X, Y, std::nullopt, tau};
                    out.push_back({t, b, mate(sq)});
                }
        return out;
    }

    const std::vector<Square>& all_squares() {
        if (squares_built_) return squares_;
        squares_built_ = true;
        for (std::size_t t = 0; t < rows().size(); ++t)
            for (std::size_t b = 0; b < rows().size(); ++b)
                for (auto& s : squares(t, b)) squares_.push_back(std::move(s));
        return squares_;
    }

    std::string pair_name(std::size_t t, std::size_t b) { return rows()[t].name + "/" + rows()[b].name; }

    CatPtr named_category(const std::string& n) const {
        if (ws_.categories.has(n)) return ws_.categories.at(n);
        return nullptr;
    }

    LocPtr loc(const RelCat& rc) {
        for (const auto& [key, l] : locs_)
            if (key.name == rc.name && same_cat(key.cat, rc.cat) && key.weq == rc.weq) return l;
        LocalizeOptions o;
        o.bound = cfg_.bound;
        auto l = std::make_shared<LocalizationResult>(localize_exact(rc, o));
        locs_.push_back({rc, l});
        return l;
    }

    std::vector<CatPtr> probes() const {
        std::vector<CatPtr> out;
        for (const auto& n : cfg_.probes)
            if (auto c = named_category(n)) out.push_back(c);
        return out;
    }

    // Relative categories on c: those in the workspace, then W = isos.
    std::vector<RelCat> relcats_on(const CatPtr& c) const {
        std::vector<RelCat> out;
        for (const auto& n : ws_.relcats.order)
            if (same_cat(ws_.relcats.at(n).cat, c)) out.push_back(ws_.relcats.at(n));
        out.push_back(minimal_relcat(c->name(), c));
        return out;
    }

    std::optional<DerivedFunctorCert> left_cert(const Adjunction& adj, const RelCat& rC, const RelCat& rD,
                                                const std::optional<DerivedFunctorCert>& G) {
        if (is_homotopical(adj.F, rC, rD)) return homotopical_cert(adj.F, loc(rC), loc(rD), true);
        if (G) {
            try {
                return derive_left_from_right_adjoint(adj, *G);
            } catch (const NoLeftAdjoint&) {
            }
        }
        return std::nullopt;
    }

    std::optional<DerivedFunctorCert> right_cert(const Adjunction& adj, const RelCat& rC, const RelCat& rD) {
        if (is_homotopical(adj.G, rD, rC)) return homotopical_cert(adj.G, loc(rD), loc(rC), false);
        for (const auto& n : ws_.retractions.order) {
            const auto& e = ws_.retractions.at(n);
            const auto& d = e.ret.data;
            if (d.side == RetractionSide::Right && d.rc.name == rD.name && same_cat(d.rc.cat, rD.cat) && d.rc.weq == rD.weq)
                return derive_via_retraction(adj.G, e.ret, rC);
        }
        return std::nullopt;
    }

    const Workspace& ws_;
    const SuiteConfig& cfg_;
    Report& out_;
    bool rows_built_ = false;
    std::vector<Row> rows_;
    bool squares_built_ = false;
    std::vector<Square> squares_;
    std::vector<std::pair<RelCat, LocPtr>> locs_;
};

void Runner::mates() {
    const auto& R = rows();
    for (std::size_t t = 0; t < R.size(); ++t)
        for (std::size_t b = 0; b < R.size(); ++b) {
            const std::string pn = pair_name(t, b);
            std::vector<Square> sqs;
            check("mates/round-trip/" + pn, "mating is a bijection between sigma and tau cells", [&] {
                sqs = squares(t, b);
                if (sqs.empty()) return skip("no squares between these rows");
                std::size_t k = 0;
                for (const auto& s : sqs) {
                    if (mate_of_sigma(s.sq, *s.sq.sigma) != *s.sq.tau) return fail("tau #" + std::to_string(k));
                    if (mate_of_tau(s.sq, mate_of_sigma(s.sq, *s.sq.sigma)) != *s.sq.sigma)
                        return fail("sigma #" + std::to_string(k));
                    ++k;
                }
                // and every sigma cell directly, on the same leg pairs
                const Adjunction& top = R[t].adj;
                const Adjunction& bottom = R[b].adj;
                std::vector<std::pair<Functor, Functor>> legs;
                for (const auto& s : sqs)
                    if (legs.empty() || legs.back().first != s.sq.X || legs.back().second != s.sq.Y)
                        legs.push_back({s.sq.X, s.sq.Y});
                for (const auto& [X, Y] : legs) {
                    MateSquare sq{top, bottom, X, Y, std::nullopt, std::nullopt};
                    for (const auto& sigma : enumerate_nats(compose(bottom.F, X), compose(Y, top.F))) {
                        if (mate_of_tau(sq, mate_of_sigma(sq, sigma)) != sigma) return fail(cell_string(sigma));
                        ++k;
                    }
                }
                return pass(std::to_string(k) + " cells");
            });
            check("mates/conditions/" + pn, "mates satisfy the unit and hom-set conditions", [&] {
                if (sqs.empty()) return skip("no squares between these rows");
                for (const auto& s : sqs) {
                    auto v = check_mate_pair(s.sq);
                    if (!v.mates || v.unit_condition != v.hom_condition) return fail(v.witness);
                }
                return pass();
            });
            const Adjunction& top = R[t].adj;
            const Adjunction& bottom = R[b].adj;
            if (same_cat(top.C(), bottom.C()) && same_cat(top.D(), bottom.D()))
                check("mates/conjugates/" + pn, "a conjugate pair is invertible on one side iff on the other", [&] {
                    std::size_t n = 0;
                    for (const auto& s : sqs) {
                        if (s.sq.X != identity_functor(top.C()) || s.sq.Y != identity_functor(top.D())) continue;
                        auto v = conjugate_iso_check(s.sq);
                        ++n;
                        if (v.sigma_iso != v.tau_iso) return fail(cell_string(*s.sq.tau));
                    }
                    return n ? pass(std::to_string(n) + " conjugate pairs") : skip("no identity-leg squares");
                });
        }

    auto pasting = [&](PasteKind kind) {
        const auto& all = all_squares();
        std::size_t n = 0;
        for (const auto& s1 : all)
            for (const auto& s2 : all) {
                if (kind == PasteKind::Vertical) {
                    if (s1.bottom != s2.top || !same_cat(s1.sq.X.tgt, s2.sq.X.src) || !same_cat(s1.sq.Y.tgt, s2.sq.Y.src))
                        continue;
                } else {
                    if (!same_cat(s1.sq.top.D(), s2.sq.top.C()) || !same_cat(s1.sq.bottom.D(), s2.sq.bottom.C()) ||
                        s1.sq.Y != s2.sq.X)
                        continue;
                }
                auto p = paste(kind, s1.sq, s2.sq);
                ++n;
                if (mate_of_sigma(p, *p.sigma) != *p.tau)
                    return fail(rows()[s1.top].name + " over " + rows()[s2.bottom].name);
            }
        return n ? pass(std::to_string(n) + " composable pairs") : skip("no composable pairs");
    };
    check("mates/pasting/vertical", "vertical pasting of mates gives mates", [&] { return pasting(PasteKind::Vertical); });
    check("mates/pasting/horizontal", "horizontal pasting of mates gives mates",
          [&] { return pasting(PasteKind::Horizontal); });
}

void Runner::bc() {
    const auto& R = rows();
    for (std::size_t t = 0; t < R.size(); ++t)
        for (std::size_t b = 0; b < R.size(); ++b)
            check("bc/interchange/" + pair_name(t, b),
                  "the horizontal condition holds iff the vertical dual condition holds", [&] {
                      std::size_t n = 0;
                      for (const auto& s : squares(t, b)) {
                          auto XS = find_right_adjoint(s.sq.X);
                          auto YT = find_right_adjoint(s.sq.Y);
                          if (!XS || !YT) continue;
                          auto cert = bc_interchange(s.sq, *XS, *YT);
                          ++n;
                          if (!cert.conjugate || !cert.sharp_identity || cert.horizontal_holds != cert.vertical_dual_holds)
                              return fail(cell_string(*s.sq.tau));
                      }
                      return n ? pass(std::to_string(n) + " squares") : skip("no squares with right adjoint legs");
                  });

    check("bc/counterexample", "an invertible cell need not have an invertible mate", [&] {
        std::vector<Adjunction> pool;
        for (const auto& r : R) pool.push_back(r.adj);
        auto found = bc_counterexamples(pool, 1, cfg_.budget);
        if (found.empty()) return skip("none among the given adjunctions");
        const auto& sq = found.front();
        auto r = bc_check(sq, BCDirection::Horizontal, false);
        if (!is_iso(*sq.tau) || r.holds) return fail("search returned a square that is not a counterexample");
        return pass(sq.top.name + " over " + sq.bottom.name + ", mate not invertible at " + r.witness);
    });

    for (const auto& triple : cfg_.colimit_squares) {
        if (triple.size() != 3) continue;
        auto C = named_category(triple[0]);
        auto I = named_category(triple[1]);
        auto J = named_category(triple[2]);
        if (!C || !I || !J) continue;
        check("bc/colimit-evaluation/" + triple[0] + "/" + triple[1] + "/" + triple[2],
              "colimits in a diagram category are computed pointwise where they exist", [&] {
                  for (const auto& r : pointwise_colimit_squares(C, I, J, cfg_.budget))
                      if (!r.report.holds) return fail("J = " + J->object(r.J) + " at " + r.report.witness);
                  return pass();
              });
    }
}

void Runner::localization() {
    for (const auto& n : ws_.relcats.order) {
        const RelCat& rc = ws_.relcats.at(n);
        LocalizeOptions o;
        o.bound = cfg_.bound;
        std::optional<LocalizationResult> res;
        check("localization/exact/" + n, "the homotopy category is the quotient of zig-zag words", [&] {
            res = localize(rc, o);
            if (!res->exact()) return Outcome{CheckStatus::Undecided, "bound " + std::to_string(res->bound)};
            return pass(std::to_string(res->ho->num_objects()) + " objects, " +
                        std::to_string(res->ho->num_morphisms()) + " morphisms");
        });
        if (!res || !res->exact()) continue;
        check("localization/inverts/" + n, "H inverts every weak equivalence", [&] {
            for (int f : rc.weq_list())
                if (!res->ho->is_iso(res->H.mo[f])) return fail(rc.cat->mor_id(f));
            return pass();
        });
        for (const auto& E : probes())
            check("localization/precomposition/" + n + "/" + E->name(),
                  "precomposition with H is fully faithful onto functors inverting W", [&] {
                      auto v = precomposition_check(*res, E, cfg_.budget);
                      return verdict(v.holds(), v.witness);
                  });
    }
}

void Runner::derived() {
    for (const auto& n : ws_.retractions.order) {
        const auto& e = ws_.retractions.at(n);
        check("derived/retraction/" + n, "a deformation retraction is an equivalence of homotopy categories", [&] {
            auto eq = retraction_equivalence(e.ret);
            return verdict(eq.natural && eq.invertible, "retraction equivalence");
        });
        const CatPtr& C = e.ret.data.rc.cat;
        for (const auto& fn : ws_.functors.order) {
            const Functor& F = ws_.functors.at(fn);
            if (!same_cat(F.src, C)) continue;
            check("derived/kan/" + n + "/" + fn, "a retraction derives F as an absolute Kan extension", [&] {
                auto cert = derive_via_retraction(F, e.ret, relcats_on(F.tgt).front());
                auto v = verify_kan(cert, probes(), cfg_.budget);
                return verdict(v.kan, v.witness);
            });
        }
    }

    struct Derivable {
        std::string label;
        Adjunction adj;
        RelCat rC, rD;
        DerivedFunctorCert F, G;
    };
    std::vector<Derivable> derivable;
    for (const auto& n : ws_.adjunctions.order) {
        const Adjunction& adj = ws_.adjunctions.at(n);
        for (const auto& rC : relcats_on(adj.C()))
            for (const auto& rD : relcats_on(adj.D())) {
                const std::string label = n + "/" + rC.name + "/" + rD.name;
                check("derived/adjunction/" + label, "derived unit and counit exist uniquely and form an adjunction", [&] {
                    auto G = right_cert(adj, rC, rD);
                    auto F = left_cert(adj, rC, rD, G);
                    if (!F || !G) return skip("no derivation route for both functors");
                    auto d = derived_adjunction(adj, *F, *G);
                    std::string w;
                    bool ok = d.unit_solutions == 1 && d.counit_solutions == 1 && d.unit_square && d.counit_square &&
                              is_adjunction(d.adj.F, d.adj.G, d.adj.unit, d.adj.counit, &w);
                    if (ok) derivable.push_back({label, adj, rC, rD, *F, *G});
                    return verdict(ok, w.empty() ? adj.name : w);
                });
            }
    }
    for (const auto& a : derivable)
        for (const auto& b : derivable) {
            if (!same_cat(a.adj.D(), b.adj.C()) || a.rD.weq != b.rC.weq || a.rD.name != b.rC.name) continue;
            check("derived/adjoint-composition/" + a.label + "/" + b.label,
                  "derived left adjoints compose iff derived right adjoints compose", [&] {
                      auto v = adjoint_composition_check(a.F, a.G, b.F, b.G, cfg_.budget);
                      return verdict(v.left.composes == v.right.composes,
                                     v.left.witness.empty() ? v.right.witness : v.left.witness);
                  });
        }
}

void Runner::hocolim() {
    for (const auto& n : ws_.relcats.order) {
        const RelCat& rc = ws_.relcats.at(n);
        if (!small(rc.cat)) continue;
        HocolimOptions opt;
        opt.budget = cfg_.budget;
        opt.loc.bound = cfg_.bound;
        for (const auto& In : cfg_.shapes) {
            auto I = named_category(In);
            if (!I) continue;
            const std::string base = n + "/" + In;
            bool built = false;
            check("hocolim/build/" + base, "hocolim is left adjoint to the constant-diagram functor", [&] {
                auto hs = build_hocolim(rc, I, opt);
                if (!hs) return skip("Ho Delta has no left adjoint");
                std::string w;
                bool ok = ho_delta_commutes(*hs) && unit_couniversal(*hs, &w);
                built = ok;
                return verdict(ok, w);
            });
            if (!built) continue;
            for (const auto& Jn : cfg_.jcats) {
                auto J = named_category(Jn);
                if (!J) continue;
                const std::string id = base + "/" + Jn;
                auto pointwise = [&](const PointwisenessReport& r) {
                    for (std::size_t k = 0; k < r.cells.size(); ++k)
                        if (!r.iso[k]) return fail("J = " + J->object(r.objects[k]));
                    for (const auto& sq : r.naturality)
                        if (!sq.commutes) return fail(sq.id + " at " + sq.witness);
                    return pass();
                };
                check("hocolim/pointwise-Jstar/" + id, "hocolim commutes with evaluation via right adjoints",
                      [&] { return pointwise(pointwise_via_Jstar(rc, I, J, opt)); });
                check("hocolim/pointwise-Jshriek/" + id, "hocolim commutes with evaluation via left adjoints", [&] {
                    auto r = pointwise_via_Jshriek(rc, I, J, opt);
                    for (std::size_t k = 0; k < r.unit_equation.size(); ++k)
                        if (!r.unit_equation[k]) return fail("unit equation at J = " + J->object(r.objects[k]));
                    return pointwise(r);
                });
                check("hocolim/fubini/" + id, "hocolim over a product is the iterated hocolim", [&] {
                    auto v = fubini_check(rc, I, J, opt);
                    return verdict(v.twist_iso && v.right_adjoints_equal && v.conjugate_iso, v.witness);
                });
            }
        }
    }
}

} // namespace

Report run_suite(const Workspace& ws, const std::string& suite, const SuiteConfig& config) {
    Report r;
    r.suite = suite;
    Runner run(ws, config, r);
    const bool all = suite == "all";
    if (all || suite == "mates") run.mates();
    if (all || suite == "bc") run.bc();
    if (all || suite == "localization") run.localization();
    if (all || suite == "derived") run.derived();
    if (all || suite == "hocolim") run.hocolim();
    return r;
}

std::string report_json(const Report& r, const SuiteConfig& config, bool with_runtime) {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["suite"] = r.suite;
    j["config"] = {{"bound", config.bound},
                   {"budget", {{"max_objects", config.budget.max_objects}, {"max_morphisms", config.budget.max_morphisms}}},
                   {"probes", config.probes}};
    j["summary"] = {{"pass", r.count(CheckStatus::Pass)},
                    {"fail", r.count(CheckStatus::Fail)},
                    {"undecided", r.count(CheckStatus::Undecided)},
                    {"skipped", r.count(CheckStatus::Skipped)},
                    {"total", r.checks.size()}};
    j["exit_code"] = r.exit_code();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["anchor"] = c.anchor;
        e["status"] = status_name(c.status);
        e["witness"] = c.witness;
        if (with_runtime) e["runtime_ms"] = c.runtime_ms;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string report_text(const Report& r) {
    std::ostringstream out;
    for (const auto& c : r.checks) {
        std::string s = status_name(c.status);
        for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out << s << "  " << c.id << "  (" << c.anchor << ")";
        if (!c.witness.empty()) out << "  " << c.witness;
        out << "\n";
    }
    out << "suite " << r.suite << ": " << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail)
        << " fail, " << r.count(CheckStatus::Undecided) << " undecided, " << r.count(CheckStatus::Skipped)
        << " skipped\n";
    return out.str();
}

} // namespace catmate
