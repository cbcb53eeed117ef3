#include "catmate/workspace.hpp"

#include "catmate/errors.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace catmate {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto p = line.find('#');
    return p == std::string::npos ? line : line.substr(0, p);
}

[[noreturn]] void invalid(const std::string& entity, int line, const std::string& msg) {
    throw ValidationError(entity + " (line " + std::to_string(line) + "): " + msg, entity);
}

// Endomorphisms standing in for an undeclared id_<obj>, mirroring the
// fallback in validate_category.
std::set<std::string> identity_standins(const RawCategory& raw) {
    std::set<std::string> declared;
    for (const auto& m : raw.morphisms) declared.insert(m.id);
    std::map<std::string, bool> acts;
    for (const auto& m : raw.morphisms)
        if (m.dom == m.cod && !declared.count("id_" + m.dom)) acts[m.id] = false;
    std::set<std::string> broken;
    for (const auto& c : raw.composites) {
        if (c.g == c.f && c.h == c.g && acts.count(c.g)) acts[c.g] = true;
        if (acts.count(c.g) && c.h != c.f) broken.insert(c.g);
        if (acts.count(c.f) && c.h != c.g) broken.insert(c.f);
    }
    std::set<std::string> objs;
    for (const auto& m : raw.morphisms) {
        auto it = acts.find(m.id);
        if (it != acts.end() && it->second && !broken.count(m.id)) objs.insert(m.dom);
    }
    return objs;
}

void add_identity_composites(RawCategory& raw) {
    std::set<std::string> declared;
    for (const auto& m : raw.morphisms) declared.insert(m.id);
    std::set<std::pair<std::string, std::string>> have;
    for (const auto& c : raw.composites) have.insert({c.g, c.f});
    auto standins = identity_standins(raw);
    auto add = [&](const std::string& g, const std::string& f, const std::string& h) {
        if (have.insert({g, f}).second) raw.composites.push_back({g, f, h});
    };
    for (const auto& o : raw.objects) {
        std::string id = "id_" + o;
        if (declared.count(id) || standins.count(o)) continue;
        add(id, id, id);
        for (const auto& m : raw.morphisms) {
            if (m.dom == o) add(m.id, id, m.id);
            if (m.cod == o) add(id, m.id, m.id);
        }
    }
}

struct Parser {
    Workspace& ws;
    int line = 0;

    void expect(bool ok, const std::string& msg) const {
        if (!ok) throw ParseError(line, msg);
    }

    void fresh(bool taken, const std::string& kind, const std::string& name) const {
        if (taken) throw ParseError(line, "duplicate " + kind + " name " + name);
    }

    CatPtr category(const std::string& name, const std::string& owner, int at) const {
        if (!ws.categories.has(name)) invalid(owner, at, "unknown category " + name);
        return ws.categories.at(name);
    }

    // name, "id", or a composite G.F (F applied first)
    Functor functor_expr(const std::string& expr, const CatPtr& hint, const std::string& owner, int at) const {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : expr) {
            if (ch == '.') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
        std::optional<Functor> acc;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            Functor next;
            if (*it == "id") {
                CatPtr c = acc ? acc->tgt : hint;
                if (!c) invalid(owner, at, "cannot infer the category of id in " + expr);
                next = identity_functor(c);
            } else {
                if (!ws.functors.has(*it)) invalid(owner, at, "unknown functor " + *it);
                next = ws.functors.at(*it);
            }
            try {
                acc = acc ? compose(next, *acc) : next;
            } catch (const Error& e) {
                invalid(owner, at, e.what());
            }
        }
        acc->name = expr;
        return *acc;
    }

    void run(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string raw_line;
        std::vector<std::string> block;  // header tokens of the open block
        int block_line = 0;
        RawCategory rawcat;
        std::vector<std::string> weqs;
        std::vector<std::pair<std::string, std::string>> obmap, momap, comps;

        while (std::getline(in, raw_line)) {
            ++line;
            auto t = tokens(strip_comment(raw_line));
            if (t.empty()) continue;
            const std::string& kw = t[0];

            if (!block.empty()) {
                const std::string& kind = block[0];
                if (kw == "end") {
                    expect(t.size() == 1, "trailing tokens after end");
                    close(block, block_line, rawcat, weqs, obmap, momap, comps);
                    block.clear();
                } else if (kind == "category" && kw == "object") {
                    expect(t.size() == 2, "expected: object <id>");
                    rawcat.objects.push_back(t[1]);
                } else if (kind == "category" && kw == "morphism") {
                    expect(t.size() == 6 && t[2] == ":" && t[4] == "->", "expected: morphism <id> : <dom> -> <cod>");
                    rawcat.morphisms.push_back({t[1], t[3], t[5]});
                } else if (kind == "category" && kw == "compose") {
                    expect(t.size() == 6 && t[2] == "." && t[4] == "=", "expected: compose <g> . <f> = <h>");
                    rawcat.composites.push_back({t[1], t[3], t[5]});
                } else if (kind == "relcat" && kw == "weq") {
                    expect(t.size() == 2, "expected: weq <mor>");
                    weqs.push_back(t[1]);
                } else if (kind == "functor" && (kw == "obj" || kw == "mor")) {
                    expect(t.size() == 4 && t[2] == "|->", "expected: " + kw + " <a> |-> <b>");
                    (kw == "obj" ? obmap : momap).push_back({t[1], t[3]});
                } else if (kind == "nat" && kw == "at") {
                    expect(t.size() == 4 && t[2] == "=", "expected: at <obj> = <mor>");
                    comps.push_back({t[1], t[3]});
                } else {
                    throw ParseError(line, "unexpected '" + kw + "' inside " + kind + " " + block[1]);
                }
                continue;
            }

            if (kw == "category") {
                expect(t.size() == 2, "expected: category <name>");
                fresh(ws.categories.has(t[1]), "category", t[1]);
                rawcat = RawCategory{};
                rawcat.name = t[1];
            } else if (kw == "relcat") {
                expect(t.size() == 4 && t[2] == "from", "expected: relcat <name> from <category>");
                fresh(ws.relcats.has(t[1]), "relcat", t[1]);
                weqs.clear();
            } else if (kw == "functor") {
                expect(t.size() == 6 && t[2] == ":" && t[4] == "->", "expected: functor <name> : <src> -> <tgt>");
                fresh(ws.functors.has(t[1]), "functor", t[1]);
                obmap.clear();
                momap.clear();
            } else if (kw == "nat") {
                expect(t.size() == 6 && t[2] == ":" && t[4] == "=>", "expected: nat <name> : <F> => <G>");
                fresh(ws.nats.has(t[1]), "nat", t[1]);
                comps.clear();
            } else if (kw == "adjunction") {
                expect(t.size() == 10 && t[2] == "=" && t[4] == "-|" && t[6] == "unit" && t[8] == "counit",
                       "expected: adjunction <name> = <F> -| <G> unit <nat> counit <nat>");
                fresh(ws.adjunctions.has(t[1]), "adjunction", t[1]);
                adjunction(t);
                continue;
            } else if (kw == "retraction") {
                retraction(t);
                continue;
            } else {
                throw ParseError(line, "unknown keyword '" + kw + "'");
            }
            block = t;
            block_line = line;
        }
        if (!block.empty()) throw ParseError(block_line, block[0] + " " + block[1] + " is missing its end");
    }

    void close(const std::vector<std::string>& h, int at, RawCategory& rawcat, const std::vector<std::string>& weqs,
               const std::vector<std::pair<std::string, std::string>>& obmap,
               const std::vector<std::pair<std::string, std::string>>& momap,
               const std::vector<std::pair<std::string, std::string>>& comps) {
        const std::string& kind = h[0];
        const std::string& name = h[1];
        try {
            if (kind == "category") {
                add_identity_composites(rawcat);
                ws.categories.add(name, validate_category(rawcat));
            } else if (kind == "relcat") {
                CatPtr c = category(h[3], name, at);
                ws.relcats.add(name, make_relcat(name, c, weqs));
            } else if (kind == "functor") {
                ws.functors.add(name, build_functor(name, category(h[3], name, at), category(h[5], name, at), obmap,
                                                    momap, at));
            } else if (kind == "nat") {
                CatPtr hint;
                if (h[3] != "id") hint = functor_expr(h[3], nullptr, name, at).src;
                else if (h[5] != "id") hint = functor_expr(h[5], nullptr, name, at).src;
                Functor F = functor_expr(h[3], hint, name, at);
                Functor G = functor_expr(h[5], hint, name, at);
                const FinCat& A = *F.src;
                const FinCat& B = *F.tgt;
                std::vector<int> comp(A.num_objects(), -1);
                for (const auto& [a, m] : comps) {
                    int x = A.find_object(a);
                    if (x < 0) invalid(name, at, "unknown object " + a);
                    int f = B.find_morphism(m);
                    if (f < 0) invalid(name, at, "unknown morphism " + m);
                    if (comp[x] >= 0) invalid(name, at, "component at " + a + " given twice");
                    comp[x] = f;
                }
                for (int x = 0; x < A.num_objects(); ++x) {
                    if (comp[x] >= 0) continue;
                    // default to the identity where both functors agree
                    if (F.ob[x] != G.ob[x]) invalid(name, at, "missing component at " + A.object(x));
                    comp[x] = B.identity(F.ob[x]);
                }
                ws.nats.add(name, checked_nat(NatTrans{name, F, G, comp}));
            }
        } catch (const ValidationError&) {
            throw;
        } catch (const Error& e) {
            invalid(name, at, e.what());
        }
    }

    Functor build_functor(const std::string& name, const CatPtr& S, const CatPtr& T,
                          const std::vector<std::pair<std::string, std::string>>& obmap,
                          const std::vector<std::pair<std::string, std::string>>& momap, int at) const {
        Functor F{name, S, T, std::vector<int>(S->num_objects(), -1), std::vector<int>(S->num_morphisms(), -1)};
        for (const auto& [a, b] : obmap) {
            int x = S->find_object(a);
            if (x < 0) invalid(name, at, "unknown object " + a + " in " + S->name());
            int y = T->find_object(b);
            if (y < 0) invalid(name, at, "unknown object " + b + " in " + T->name());
            if (F.ob[x] >= 0) invalid(name, at, "object " + a + " mapped twice");
            F.ob[x] = y;
        }
        for (int x = 0; x < S->num_objects(); ++x)
            if (F.ob[x] < 0) invalid(name, at, "object " + S->object(x) + " is not mapped");
        for (const auto& [f, g] : momap) {
            int m = S->find_morphism(f);
            if (m < 0) invalid(name, at, "unknown morphism " + f + " in " + S->name());
            int n = T->find_morphism(g);
            if (n < 0) invalid(name, at, "unknown morphism " + g + " in " + T->name());
            if (F.mo[m] >= 0) invalid(name, at, "morphism " + f + " mapped twice");
            F.mo[m] = n;
        }
        for (int m = 0; m < S->num_morphisms(); ++m) {
            if (F.mo[m] >= 0) continue;
            if (!S->is_identity(m)) invalid(name, at, "morphism " + S->mor_id(m) + " is not mapped");
            F.mo[m] = T->identity(F.ob[S->dom(m)]);
        }
        try {
            return checked_functor(std::move(F));
        } catch (const Error& e) {
            invalid(name, at, e.what());
        }
    }

    void adjunction(const std::vector<std::string>& t) {
        const std::string& name = t[1];
        auto need = [&](bool ok, const std::string& what) {
            if (!ok) invalid(name, line, "unknown " + what);
        };
        need(ws.functors.has(t[3]), "functor " + t[3]);
        need(ws.functors.has(t[5]), "functor " + t[5]);
        need(ws.nats.has(t[7]), "nat " + t[7]);
        need(ws.nats.has(t[9]), "nat " + t[9]);
        try {
            ws.adjunctions.add(name, verify_adjunction(name, ws.functors.at(t[3]), ws.functors.at(t[5]),
                                                       ws.nats.at(t[7]), ws.nats.at(t[9])));
        } catch (const Error& e) {
            invalid(name, line, e.what());
        }
    }

    // retraction <name> on <relcat> [left|right] sub <obj>... Q { ... } q { ... }
    void retraction(const std::vector<std::string>& t) {
        expect(t.size() >= 4 && t[2] == "on", "expected: retraction <name> on <relcat> ...");
        const std::string& name = t[1];
        fresh(ws.retractions.has(name), "retraction", name);
        RetractionEntry e;
        e.relcat = t[3];
        std::size_t i = 4;
        if (i < t.size() && (t[i] == "left" || t[i] == "right")) {
            e.side = t[i] == "left" ? RetractionSide::Left : RetractionSide::Right;
            ++i;
        }
        expect(i < t.size() && t[i] == "sub", "expected 'sub' in retraction " + name);
        for (++i; i < t.size() && t[i] != "Q"; ++i) e.sub.push_back(t[i]);
        auto group = [&](const std::string& key, const std::string& arrow) {
            std::vector<std::pair<std::string, std::string>> out;
            expect(i < t.size() && t[i] == key, "expected '" + key + "' in retraction " + name);
            expect(i + 1 < t.size() && t[i + 1] == "{", "expected '{' after " + key);
            i += 2;
            while (true) {
                expect(i < t.size(), "unterminated " + key + " group");
                if (t[i] == "}") {
                    ++i;
                    break;
                }
                expect(i + 2 < t.size() && t[i + 1] == arrow, "expected: <a> " + arrow + " <b> in " + key);
                out.push_back({t[i], t[i + 2]});
                i += 3;
                if (i < t.size() && t[i] == ";") ++i;
            }
            return out;
        };
        e.Q = group("Q", "|->");
        e.q = group("q", "=");
        expect(i == t.size(), "trailing tokens in retraction " + name);

        if (!ws.relcats.has(e.relcat)) invalid(name, line, "unknown relcat " + e.relcat);
        const RelCat& rc = ws.relcats.at(e.relcat);
        std::vector<std::pair<std::string, std::string>> Qob, Qmo;
        for (const auto& p : e.Q) (rc.cat->find_object(p.first) >= 0 ? Qob : Qmo).push_back(p);
        try {
            e.ret = validate_retraction(retraction_data(rc, e.side, e.sub, Qob, Qmo, e.q));
        } catch (const Error& err) {
            invalid(name, line, err.what());
        }
        ws.retractions.add(name, std::move(e));
    }
};

bool is_named_identity(const FinCat& c, int f) { return c.is_identity(f) && c.mor_id(f) == "id_" + c.object(c.dom(f)); }

} // namespace

void parse_into(Workspace& ws, std::string_view text) {
    Parser p{ws};
    p.run(text);
}

Workspace parse(std::string_view text) {
    Workspace ws;
    parse_into(ws, text);
    return ws;
}

std::string serialize_category(const FinCat& c) {
    // auto identities come first on reparse; otherwise spell them out so the
    // morphism order survives
    bool short_form = true;
    for (int a = 0; a < c.num_objects(); ++a)
        if (c.identity(a) != a || !is_named_identity(c, a)) short_form = false;
    auto implicit = [&](int f) { return short_form && is_named_identity(c, f); };
    std::ostringstream out;
    out << "category " << c.name() << "\n";
    for (int a = 0; a < c.num_objects(); ++a) out << "  object " << c.object(a) << "\n";
    for (int f = 0; f < c.num_morphisms(); ++f)
        if (!implicit(f))
            out << "  morphism " << c.mor_id(f) << " : " << c.object(c.dom(f)) << " -> " << c.object(c.cod(f)) << "\n";
    for (int g = 0; g < c.num_morphisms(); ++g) {
        if (implicit(g)) continue;
        for (int f : c.in(c.dom(g))) {
            if (implicit(f)) continue;
            out << "  compose " << c.mor_id(g) << " . " << c.mor_id(f) << " = " << c.mor_id(c.compose_unchecked(g, f))
                << "\n";
        }
    }
    out << "end\n";
    return out.str();
}

std::string serialize(const Workspace& ws) {
    std::ostringstream out;
    for (const auto& n : ws.categories.order) out << serialize_category(*ws.categories.at(n)) << "\n";
    for (const auto& n : ws.relcats.order) {
        const RelCat& rc = ws.relcats.at(n);
        out << "relcat " << n << " from " << rc.cat->name() << "\n";
        for (int f = 0; f < rc.cat->num_morphisms(); ++f)
            if (rc.is_weq(f) && !rc.cat->is_iso(f)) out << "  weq " << rc.cat->mor_id(f) << "\n";
        out << "end\n\n";
    }
    for (const auto& n : ws.functors.order) {
        const Functor& F = ws.functors.at(n);
        out << "functor " << n << " : " << F.src->name() << " -> " << F.tgt->name() << "\n";
        for (int a = 0; a < F.src->num_objects(); ++a)
            out << "  obj " << F.src->object(a) << " |-> " << F.tgt->object(F.ob[a]) << "\n";
        for (int f = 0; f < F.src->num_morphisms(); ++f)
            if (!F.src->is_identity(f)) out << "  mor " << F.src->mor_id(f) << " |-> " << F.tgt->mor_id(F.mo[f]) << "\n";
        out << "end\n\n";
    }
    for (const auto& n : ws.nats.order) {
        const NatTrans& a = ws.nats.at(n);
        out << "nat " << n << " : " << a.src.name << " => " << a.tgt.name << "\n";
        for (int x = 0; x < a.domain()->num_objects(); ++x)
            out << "  at " << a.domain()->object(x) << " = " << a.codomain()->mor_id(a.comp[x]) << "\n";
        out << "end\n\n";
    }
    for (const auto& n : ws.adjunctions.order) {
        const Adjunction& adj = ws.adjunctions.at(n);
        out << "adjunction " << n << " = " << adj.F.name << " -| " << adj.G.name << " unit " << adj.unit.name
            << " counit " << adj.counit.name << "\n";
    }
    if (!ws.adjunctions.order.empty()) out << "\n";
    for (const auto& n : ws.retractions.order) {
        const RetractionEntry& e = ws.retractions.at(n);
        out << "retraction " << n << " on " << e.relcat << (e.side == RetractionSide::Left ? " left" : " right")
            << " sub";
        for (const auto& s : e.sub) out << " " << s;
        out << " Q {";
        for (std::size_t k = 0; k < e.Q.size(); ++k) out << (k ? " ; " : " ") << e.Q[k].first << " |-> " << e.Q[k].second;
        out << " } q {";
        for (std::size_t k = 0; k < e.q.size(); ++k) out << (k ? " ; " : " ") << e.q[k].first << " = " << e.q[k].second;
        out << " }\n";
    }
    return out.str();
}

namespace {

template <class T, class Eq>
bool same_kind(const Named<T>& a, const Named<T>& b, const std::string& kind, Eq eq, std::string* witness) {
    auto fail = [&](const std::string& w) {
        if (witness) *witness = kind + " " + w;
        return false;
    };
    if (a.order != b.order) {
        std::set<std::string> sa(a.order.begin(), a.order.end()), sb(b.order.begin(), b.order.end());
        for (const auto& n : sa)
            if (!sb.count(n)) return fail(n);
        for (const auto& n : sb)
            if (!sa.count(n)) return fail(n);
    }
    for (const auto& n : a.order)
        if (!eq(a.at(n), b.at(n))) return fail(n);
    return true;
}

} // namespace

bool equivalent(const Workspace& a, const Workspace& b, std::string* witness) {
    return same_kind(a.categories, b.categories, "category",
                     [](const CatPtr& x, const CatPtr& y) { return same_cat(x, y); }, witness) &&
           same_kind(a.relcats, b.relcats, "relcat",
                     [](const RelCat& x, const RelCat& y) { return same_cat(x.cat, y.cat) && x.weq == y.weq; },
                     witness) &&
           same_kind(a.functors, b.functors, "functor", [](const Functor& x, const Functor& y) { return x == y; },
                     witness) &&
           same_kind(a.nats, b.nats, "nat", [](const NatTrans& x, const NatTrans& y) { return x == y; }, witness) &&
           same_kind(a.adjunctions, b.adjunctions, "adjunction",
                     [](const Adjunction& x, const Adjunction& y) {
                         return x.F == y.F && x.G == y.G && x.unit == y.unit && x.counit == y.counit;
                     },
                     witness) &&
           same_kind(a.retractions, b.retractions, "retraction",
                     [](const RetractionEntry& x, const RetractionEntry& y) {
                         const auto& d = x.ret.data;
                         const auto& e = y.ret.data;
                         return x.relcat == y.relcat && d.side == e.side && d.objects == e.objects && d.Qob == e.Qob &&
                                d.Qmo == e.Qmo && d.q == e.q;
                     },
                     witness);
}

RelCat relcat_named(const Workspace& ws, const std::string& name) {
    if (ws.relcats.has(name)) return ws.relcats.at(name);
    if (ws.categories.has(name)) return minimal_relcat(name, ws.categories.at(name));
    throw ValidationError("no relative category or category named " + name, name);
}

} // namespace catmate
