#include "catmate/localization.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <optional>
#include <set>

namespace catmate {

std::vector<int> RelCat::weq_list() const {
    std::vector<int> out;
    for (std::size_t f = 0; f < weq.size(); ++f)
        if (weq[f]) out.push_back(static_cast<int>(f));
    return out;
}

RelCat make_relcat(std::string name, CatPtr cat, const std::vector<int>& weq) {
    RelCat rc{std::move(name), cat, std::vector<char>(cat->num_morphisms(), 0)};
    for (int f : weq) {
        if (f < 0 || f >= cat->num_morphisms()) throw DanglingId("weak equivalence index out of range", std::to_string(f));
        rc.weq[f] = 1;
    }
    for (int f = 0; f < cat->num_morphisms(); ++f)
        if (cat->is_iso(f)) rc.weq[f] = 1;
    return rc;
}

RelCat make_relcat(std::string name, CatPtr cat, const std::vector<std::string>& weq_ids) {
    std::vector<int> ix;
    for (const auto& id : weq_ids) ix.push_back(cat->morphism_index(id));
    return make_relcat(std::move(name), std::move(cat), ix);
}

RelCat minimal_relcat(std::string name, CatPtr cat) { return make_relcat(std::move(name), std::move(cat), std::vector<int>{}); }

RelCat maximal_relcat(std::string name, CatPtr cat) {
    std::vector<int> all(cat->num_morphisms());
    for (int f = 0; f < cat->num_morphisms(); ++f) all[f] = f;
    return make_relcat(std::move(name), std::move(cat), all);
}

RelCat saturate(const RelCat& rc) {
    RelCat out = rc;
    const FinCat& C = *rc.cat;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int g = 0; g < C.num_morphisms(); ++g)
            for (int f : C.in(C.dom(g))) {
                int h = C.compose_unchecked(g, f);
                int n = out.weq[g] + out.weq[f] + out.weq[h];
                if (n == 2) {
                    out.weq[g] = out.weq[f] = out.weq[h] = 1;
                    changed = true;
                }
            }
    }
    return out;
}

RelCat diagram_relcat(const RelCat& rc, const FunctorCatPtr& CI) {
    std::vector<int> w;
    for (std::size_t m = 0; m < CI->morphisms.size(); ++m) {
        const auto& a = CI->morphisms[m];
        if (std::all_of(a.comp.begin(), a.comp.end(), [&](int c) { return rc.is_weq(c); })) w.push_back(static_cast<int>(m));
    }
    return make_relcat(rc.name + "^" + CI->shape->name(), CI->cat, w);
}

std::string word_string(const FinCat& c, const Word& w) {
    std::string s;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (!s.empty()) s += ".";
        s += c.mor_id(it->mor);
        if (it->inv) s += "^-1";
    }
    return s;
}

int default_bound(const RelCat& rc) { return 2 * rc.cat->num_morphisms() + 4; }

namespace {

struct Relation {
    std::vector<int> lhs, rhs;  // letter indices
};

// Bounded coset enumeration for Ho(a, -). Nodes stand for classes of
// zig-zag words out of a; new nodes are only defined at depth <= L and a
// relation is only scanned from a node when it fits under L.
class CosetRun {
public:
    CosetRun(const RelCat& rc, int a, int L, std::size_t cap, const std::vector<std::vector<int>>& letters_at,
             const std::vector<std::vector<Relation>>& rels, const std::vector<int>& letter_src,
             const std::vector<int>& letter_tgt)
        : C_(*rc.cat), L_(L), cap_(cap), nl_(2 * C_.num_morphisms()), letters_at_(letters_at), rels_(rels),
          letter_src_(letter_src), letter_tgt_(letter_tgt) {
        add_node(a, 0);
    }

    // false when the node cap was hit
    bool run() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t n0 = 0; n0 < parent_.size(); ++n0) {
                int n = static_cast<int>(n0);
                if (find(n) != n) continue;
                for (const auto& r : rels_[obj_[n]]) {
                    n = find(n);
                    int len = static_cast<int>(std::max(r.lhs.size(), r.rhs.size()));
                    if (depth_[n] + len > L_) continue;
                    int x = trace_fill(n, r.lhs, changed);
                    int y = trace_fill(n, r.rhs, changed);
                    if (x < 0 || y < 0) return false;
                    if (find(x) != find(y)) {
                        merge(x, y);
                        changed = true;
                    }
                }
                n = find(n);
                if (depth_[n] + 1 <= L_) {
                    for (int l : letters_at_[obj_[n]]) {
                        if (edge(n, l) >= 0) continue;
                        if (parent_.size() >= cap_) return false;
                        int t = add_node(letter_tgt_[l], depth_[n] + 1);
                        edges_[n][l] = t;
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    bool complete_and_consistent() {
        for (std::size_t n0 = 0; n0 < parent_.size(); ++n0) {
            int n = static_cast<int>(n0);
            if (find(n) != n) continue;
            for (int l : letters_at_[obj_[n]])
                if (edge(n, l) < 0) return false;
            for (const auto& r : rels_[obj_[n]]) {
                int x = trace(n, r.lhs), y = trace(n, r.rhs);
                if (x < 0 || y < 0 || x != y) return false;
            }
        }
        return true;
    }

    // live nodes in shortlex order of their least word, with that word
    void normal_forms(std::vector<int>& order, std::vector<std::vector<int>>& words) {
        std::vector<int> seen(parent_.size(), -1);
        std::deque<int> q;
        int root = find(0);
        seen[root] = 0;
        order.push_back(root);
        words.push_back({});
        q.push_back(root);
        while (!q.empty()) {
            int n = q.front();
            q.pop_front();
            std::vector<int> base = words[seen[n]];
            for (int l : letters_at_[obj_[n]]) {
                int t = edge(n, l);
                if (t < 0 || seen[t] >= 0) continue;
                seen[t] = static_cast<int>(order.size());
                order.push_back(t);
                auto w = base;
                w.push_back(l);
                words.push_back(std::move(w));
                q.push_back(t);
            }
        }
        node_slot_ = std::move(seen);
    }

    int edge(int n, int l) {
        int t = edges_[find(n)][l];
        return t < 0 ? -1 : find(t);
    }
    int obj(int n) const { return obj_[n]; }
    int slot(int n) const { return node_slot_[n]; }

private:
    int add_node(int obj, int depth) {
        parent_.push_back(static_cast<int>(parent_.size()));
        obj_.push_back(obj);
        depth_.push_back(depth);
        edges_.emplace_back(nl_, -1);
        return static_cast<int>(parent_.size()) - 1;
    }

    int find(int n) {
        while (parent_[n] != n) {
            parent_[n] = parent_[parent_[n]];
            n = parent_[n];
        }
        return n;
    }

    int trace(int n, const std::vector<int>& w) {
        int cur = find(n);
        for (int l : w) {
            cur = edge(cur, l);
            if (cur < 0) return -1;
        }
        return cur;
    }

    int trace_fill(int n, const std::vector<int>& w, bool& changed) {
        int cur = find(n);
        for (int l : w) {
            int t = edge(cur, l);
            if (t < 0) {
                if (parent_.size() >= cap_) return -1;
                t = add_node(letter_tgt_[l], depth_[cur] + 1);
                edges_[cur][l] = t;
                changed = true;
            }
            cur = t;
        }
        return cur;
    }

    void merge(int a, int b) {
        std::deque<std::pair<int, int>> q{{a, b}};
        while (!q.empty()) {
            auto [x, y] = q.front();
            q.pop_front();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            parent_[y] = x;
            depth_[x] = std::min(depth_[x], depth_[y]);
            for (int l = 0; l < nl_; ++l) {
                int ty = edges_[y][l];
                if (ty < 0) continue;
                int tx = edges_[x][l];
                if (tx < 0)
                    edges_[x][l] = ty;
                else
                    q.emplace_back(tx, ty);
            }
        }
    }

    const FinCat& C_;
    int L_;
    std::size_t cap_;
    int nl_;
    const std::vector<std::vector<int>>& letters_at_;
    const std::vector<std::vector<Relation>>& rels_;
    const std::vector<int>& letter_src_;
    const std::vector<int>& letter_tgt_;
    std::vector<int> parent_, obj_, depth_;
    std::vector<std::vector<int>> edges_;
    std::vector<int> node_slot_;
};

struct Alphabet {
    std::vector<std::vector<int>> letters_at;
    std::vector<std::vector<Relation>> rels;
    std::vector<int> src, tgt;
};

Alphabet make_alphabet(const RelCat& rc) {
    const FinCat& C = *rc.cat;
    const int m = C.num_morphisms();
    Alphabet A;
    A.letters_at.assign(C.num_objects(), {});
    A.rels.assign(C.num_objects(), {});
    A.src.assign(2 * m, -1);
    A.tgt.assign(2 * m, -1);
    for (int f = 0; f < m; ++f) {
        if (C.is_identity(f)) continue;
        A.src[f] = C.dom(f);
        A.tgt[f] = C.cod(f);
        A.letters_at[C.dom(f)].push_back(f);
    }
    for (int w = 0; w < m; ++w) {
        if (C.is_identity(w) || !rc.is_weq(w)) continue;
        A.src[m + w] = C.cod(w);
        A.tgt[m + w] = C.dom(w);
        A.letters_at[C.cod(w)].push_back(m + w);
    }
    for (int f = 0; f < m; ++f) {
        if (C.is_identity(f)) continue;
        for (int g : C.out(C.cod(f))) {
            if (C.is_identity(g)) continue;
            int h = C.compose_unchecked(g, f);
            Relation r{{f, g}, {}};
            if (!C.is_identity(h)) r.rhs.push_back(h);
            A.rels[C.dom(f)].push_back(std::move(r));
        }
    }
    for (int w = 0; w < m; ++w) {
        if (C.is_identity(w) || !rc.is_weq(w)) continue;
        A.rels[C.dom(w)].push_back({{w, m + w}, {}});
        A.rels[C.cod(w)].push_back({{m + w, w}, {}});
    }
    return A;
}

struct RunOutcome {
    bool ok = false;
    // per source object: node order and normal forms (letter indices)
    std::vector<std::vector<std::vector<int>>> nfs;
};

RunOutcome run_all(const RelCat& rc, const Alphabet& A, int L, std::size_t cap,
                   std::vector<std::unique_ptr<CosetRun>>* keep = nullptr) {
    RunOutcome out;
    std::size_t used = 0;
    for (int a = 0; a < rc.cat->num_objects(); ++a) {
        auto r = std::make_unique<CosetRun>(rc, a, L, cap > used ? cap - used : 0, A.letters_at, A.rels, A.src, A.tgt);
        if (!r->run() || !r->complete_and_consistent()) return out;
        std::vector<int> order;
        std::vector<std::vector<int>> words;
        r->normal_forms(order, words);
        used += order.size();
        out.nfs.push_back(std::move(words));
        if (keep) keep->push_back(std::move(r));
    }
    out.ok = true;
    return out;
}

} // namespace

int LocalizationResult::letter_index(const Letter& l) const {
    return l.inv ? rc.cat->num_morphisms() + l.mor : l.mor;
}

int LocalizationResult::classify(int src, const Word& w) const {
    if (!exact()) return -1;
    const Tree& t = trees.at(src);
    int n = 0;
    for (const auto& l : w) {
        if (rc.cat->is_identity(l.mor)) continue;
        n = t.edges[n][letter_index(l)];
        if (n < 0) return -1;
    }
    return t.node_mor[n];
}

LocalizationResult localize(const RelCat& rc_in, const LocalizeOptions& opt) {
    RelCat rc = opt.saturate ? saturate(rc_in) : rc_in;
    const FinCat& C = *rc.cat;
    const int m = C.num_morphisms();
    LocalizationResult res;
    res.rc = rc;
    res.bound = opt.bound < 0 ? default_bound(rc) : opt.bound;
    if (res.bound < 1) return res;
    Alphabet A = make_alphabet(rc);

    RunOutcome prev = run_all(rc, A, res.bound - 1, opt.node_cap);
    if (!prev.ok) return res;
    std::vector<std::unique_ptr<CosetRun>> runs;
    RunOutcome cur = run_all(rc, A, res.bound, opt.node_cap, &runs);
    if (!cur.ok || cur.nfs != prev.nfs) return res;

    // assemble Ho C: objects of C, morphisms = live nodes of every run
    auto to_word = [m](const std::vector<int>& ls) {
        Word w;
        for (int l : ls) w.push_back(l < m ? Letter{l, false} : Letter{l - m, true});
        return w;
    };
    std::vector<Morphism> mors;
    std::vector<int> ids(C.num_objects());
    res.trees.resize(C.num_objects());
    std::vector<std::vector<int>> first_mor(C.num_objects());
    std::set<std::string> used_names;
    for (int a = 0; a < C.num_objects(); ++a) {
        auto& r = *runs[a];
        std::vector<int> order;
        std::vector<std::vector<int>> words;
        r.normal_forms(order, words);
        auto& tree = res.trees[a];
        tree.node_mor.assign(order.size(), -1);
        tree.edges.assign(order.size(), std::vector<int>(2 * m, -1));
        for (std::size_t k = 0; k < order.size(); ++k) {
            int idx = static_cast<int>(mors.size());
            Word w = to_word(words[k]);
            std::string name = w.empty() ? C.mor_id(C.identity(a)) : word_string(C, w);
            while (used_names.count(name)) name += "'";
            used_names.insert(name);
            mors.push_back({name, a, r.obj(order[k])});
            if (k == 0) ids[a] = idx;
            tree.node_mor[k] = idx;
            res.normal_form.push_back(std::move(w));
        }
        for (std::size_t k = 0; k < order.size(); ++k)
            for (int l = 0; l < 2 * m; ++l) {
                if (A.src[l] != r.obj(order[k])) continue;
                int t = r.edge(order[k], l);
                if (t >= 0) tree.edges[k][l] = r.slot(t);
            }
    }
    for (auto& t : res.trees) {
        t.mor_node.assign(mors.size(), -1);
        for (std::size_t k = 0; k < t.node_mor.size(); ++k) t.mor_node[t.node_mor[k]] = static_cast<int>(k);
    }
    auto comp = [&](int g, int f) {
        const auto& tree = res.trees[mors[f].dom];
        int n = tree.mor_node[f];
        for (const auto& l : res.normal_form[g]) n = tree.edges[n][l.inv ? m + l.mor : l.mor];
        return tree.node_mor[n];
    };
    std::vector<std::string> objs = C.object_ids();
    res.ho = FinCat::build("Ho(" + rc.name + ")", objs, mors, ids, comp);
    res.H = Functor{"H", rc.cat, res.ho, {}, {}};
    for (int a = 0; a < C.num_objects(); ++a) res.H.ob.push_back(a);
    for (int f = 0; f < m; ++f) {
        const auto& tree = res.trees[C.dom(f)];
        res.H.mo.push_back(C.is_identity(f) ? tree.node_mor[0] : tree.node_mor[tree.edges[0][f]]);
    }
    res.status = LocStatus::Exact;
    return res;
}

LocalizationResult localize_exact(const RelCat& rc, const LocalizeOptions& opt) {
    auto r = localize(rc, opt);
    if (!r.exact())
        throw UndecidedLocalization("localization of " + rc.name + " undecided at bound " + std::to_string(r.bound),
                                    rc.name);
    return r;
}

bool is_homotopical(const Functor& F, const RelCat& src, const RelCat& tgt, std::string* witness) {
    if (!same_cat(F.src, src.cat) || !same_cat(F.tgt, tgt.cat)) throw ShapeMismatch(F.name + " does not match the relative categories");
    for (int f = 0; f < F.src->num_morphisms(); ++f)
        if (src.is_weq(f) && !tgt.is_weq(F.mo[f])) {
            if (witness) *witness = F.src->mor_id(f);
            return false;
        }
    return true;
}

Functor ho_functor(const Functor& F, const LocalizationResult& src, const LocalizationResult& tgt) {
    if (!src.exact() || !tgt.exact()) throw UndecidedLocalization("Ho F needs exact localizations", src.exact() ? tgt.rc.name : src.rc.name);
    std::string w;
    if (!is_homotopical(F, src.rc, tgt.rc, &w)) throw NotHomotopical(F.name + " does not preserve weak equivalences", w);
    const FinCat& D = *tgt.ho;
    Functor R{"Ho" + F.name, src.ho, tgt.ho, F.ob, {}};
    for (int m = 0; m < src.ho->num_morphisms(); ++m) {
        int acc = D.identity(F.ob[src.ho->dom(m)]);
        for (const auto& l : src.normal_form[m]) {
            int step = tgt.H.mo[F.mo[l.mor]];
            if (l.inv) step = D.inverse(step);
            acc = D.compose(step, acc);
        }
        R.mo.push_back(acc);
    }
    return R;
}

Functor induced_functor(const LocalizationResult& loc, const Functor& K, const std::string& name) {
    if (!loc.exact()) throw UndecidedLocalization("induced functor needs an exact localization", loc.rc.name);
    const FinCat& E = *K.tgt;
    for (int w : loc.rc.weq_list())
        if (!E.is_iso(K.mo[w]))
            throw NotHomotopical(K.name + " does not invert " + loc.rc.cat->mor_id(w), loc.rc.cat->mor_id(w));
    Functor R{name.empty() ? K.name + "~" : name, loc.ho, K.tgt, K.ob, {}};
    for (int m = 0; m < loc.ho->num_morphisms(); ++m) {
        int acc = E.identity(K.ob[loc.ho->dom(m)]);
        for (const auto& l : loc.normal_form[m]) {
            int step = K.mo[l.mor];
            if (l.inv) step = E.inverse(step);
            acc = E.compose(step, acc);
        }
        R.mo.push_back(acc);
    }
    return R;
}

NatTrans ho_nat(const NatTrans& a, const LocalizationResult& src, const LocalizationResult& tgt) {
    NatTrans r{"Ho" + a.name, ho_functor(a.src, src, tgt), ho_functor(a.tgt, src, tgt), {}};
    for (int c : a.comp) r.comp.push_back(tgt.H.mo[c]);
    return r;
}

bool check_initial_preserved(const RelCat& rc, const LocalizationResult& loc) {
    int z = rc.cat->initial_object();
    if (z < 0) throw NoInitialObject(rc.cat->name() + " has no initial object", rc.cat->name());
    if (!loc.exact()) throw UndecidedLocalization("localization of " + rc.name + " is not exact", rc.name);
    int hz = loc.H.ob[z];
    for (int y = 0; y < loc.ho->num_objects(); ++y)
        if (loc.ho->hom(hz, y).size() != 1) return false;
    return true;
}

PrecompositionVerdict precomposition_check(const LocalizationResult& loc, const CatPtr& E, const Budget& budget) {
    if (!loc.exact()) throw UndecidedLocalization("precomposition needs an exact localization", loc.rc.name);
    PrecompositionVerdict v;
    auto from_ho = enumerate_functors(loc.ho, E, budget);
    v.functors = from_ho.size();
    std::vector<Functor> pulled;
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& A : from_ho) {
        pulled.push_back(compose(A, loc.H));
        seen.insert({pulled.back().ob, pulled.back().mo});
    }
    v.injective = seen.size() == pulled.size();
    if (!v.injective) v.witness = "two functors out of Ho agree after H";

    v.onto_inverting = true;
    for (const auto& F : enumerate_functors(loc.rc.cat, E, budget)) {
        bool inverts = true;
        for (int w : loc.rc.weq_list()) inverts = inverts && E->is_iso(F.mo[w]);
        if (!inverts) continue;
        ++v.inverting;
        if (!seen.count({F.ob, F.mo}) && v.onto_inverting) {
            v.onto_inverting = false;
            v.witness = describe(F);
        }
    }

    v.bijective_on_nats = true;
    for (std::size_t a = 0; a < from_ho.size(); ++a)
        for (std::size_t b = 0; b < from_ho.size(); ++b) {
            auto upstairs = enumerate_nats(from_ho[a], from_ho[b]);
            auto downstairs = enumerate_nats(pulled[a], pulled[b]);
            std::set<std::vector<int>> images;
            for (const auto& t : upstairs) images.insert(whisker(t, loc.H).comp);
            v.transformations += upstairs.size();
            bool ok = images.size() == upstairs.size() && images.size() == downstairs.size();
            for (const auto& t : downstairs) ok = ok && images.count(t.comp);
            if (!ok && v.bijective_on_nats) {
                v.bijective_on_nats = false;
                v.witness = describe(from_ho[a]) + " => " + describe(from_ho[b]);
            }
        }
    return v;
}

} // namespace catmate
