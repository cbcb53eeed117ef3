#include "catmate/category.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace catmate {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void mix(std::uint64_t& h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= kFnvPrime;
    }
}

void mix(std::uint64_t& h, const std::string& s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= kFnvPrime;
    }
    mix(h, s.size());
}

} // namespace

std::size_t VecHash::operator()(const std::vector<int>& v) const noexcept {
    std::uint64_t h = kFnvOffset;
    for (int x : v) mix(h, static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)));
    return static_cast<std::size_t>(h);
}

CatPtr FinCat::build(std::string name, std::vector<std::string> objects, std::vector<Morphism> morphisms,
                     std::vector<int> identities, const ComposeFn& compose) {
    std::shared_ptr<FinCat> c(new FinCat());
    c->name_ = std::move(name);
    c->objects_ = std::move(objects);
    c->morphisms_ = std::move(morphisms);
    c->identities_ = std::move(identities);
    if (c->identities_.size() != c->objects_.size())
        throw ShapeMismatch("identity table does not match object count in " + c->name_);
    const int n = c->num_objects();
    for (const auto& m : c->morphisms_) {
        if (m.dom < 0 || m.dom >= n || m.cod < 0 || m.cod >= n)
            throw DanglingId("morphism " + m.id + " has an endpoint outside " + c->name_, m.id);
    }
    c->index();
    c->table_.assign(c->morphisms_.size(), {});
    for (int g = 0; g < c->num_morphisms(); ++g) {
        const auto& ins = c->in_[c->morphisms_[g].dom];
        c->table_[g].resize(ins.size());
        for (std::size_t k = 0; k < ins.size(); ++k) {
            int f = ins[k];
            int h = compose(g, f);
            if (h < 0 || h >= c->num_morphisms() || c->morphisms_[h].dom != c->morphisms_[f].dom ||
                c->morphisms_[h].cod != c->morphisms_[g].cod)
                throw BadComposite("composite of " + c->mor_id(g) + " . " + c->mor_id(f) + " has the wrong shape",
                                   c->mor_id(g) + " . " + c->mor_id(f));
            c->table_[g][k] = h;
        }
    }
    // inverses and fingerprint need the table
    c->inverse_.assign(c->morphisms_.size(), -1);
    for (int f = 0; f < c->num_morphisms(); ++f) {
        const int a = c->dom(f), b = c->cod(f);
        for (int g : c->hom(b, a)) {
            if (c->compose_unchecked(g, f) == c->identities_[a] && c->compose_unchecked(f, g) == c->identities_[b]) {
                c->inverse_[f] = g;
                break;
            }
        }
    }
    std::uint64_t h = kFnvOffset;
    for (const auto& o : c->objects_) mix(h, o);
    for (const auto& m : c->morphisms_) {
        mix(h, m.id);
        mix(h, static_cast<std::uint64_t>(m.dom));
        mix(h, static_cast<std::uint64_t>(m.cod));
    }
    for (int id : c->identities_) mix(h, static_cast<std::uint64_t>(id));
    for (const auto& row : c->table_)
        for (int x : row) mix(h, static_cast<std::uint64_t>(x));
    c->fingerprint_ = h;
    return c;
}

void FinCat::index() {
    const std::size_t n = objects_.size();
    obj_lookup_.clear();
    mor_lookup_.clear();
    for (std::size_t i = 0; i < n; ++i) obj_lookup_.emplace(objects_[i], static_cast<int>(i));
    for (std::size_t i = 0; i < morphisms_.size(); ++i) mor_lookup_.emplace(morphisms_[i].id, static_cast<int>(i));
    homs_.assign(n * n, {});
    out_.assign(n, {});
    in_.assign(n, {});
    pos_in_.assign(morphisms_.size(), -1);
    thin_ = true;
    for (std::size_t i = 0; i < morphisms_.size(); ++i) {
        const auto& m = morphisms_[i];
        auto& hs = homs_[static_cast<std::size_t>(m.dom) * n + m.cod];
        hs.push_back(static_cast<int>(i));
        if (hs.size() > 1) thin_ = false;
        out_[m.dom].push_back(static_cast<int>(i));
        pos_in_[i] = static_cast<int>(in_[m.cod].size());
        in_[m.cod].push_back(static_cast<int>(i));
    }
}

int FinCat::find_object(std::string_view id) const {
    auto it = obj_lookup_.find(std::string(id));
    return it == obj_lookup_.end() ? -1 : it->second;
}

int FinCat::find_morphism(std::string_view id) const {
    auto it = mor_lookup_.find(std::string(id));
    return it == mor_lookup_.end() ? -1 : it->second;
}

int FinCat::object_index(std::string_view id) const {
    int i = find_object(id);
    if (i < 0) throw DanglingId("unknown object " + std::string(id) + " in " + name_, std::string(id));
    return i;
}

int FinCat::morphism_index(std::string_view id) const {
    int i = find_morphism(id);
    if (i < 0) throw DanglingId("unknown morphism " + std::string(id) + " in " + name_, std::string(id));
    return i;
}

int FinCat::compose(int g, int f) const {
    if (g < 0 || f < 0 || g >= num_morphisms() || f >= num_morphisms() || morphisms_[f].cod != morphisms_[g].dom)
        throw ShapeMismatch("morphisms are not composable in " + name_);
    return table_[g][pos_in_[f]];
}

int FinCat::compose_path(const std::vector<int>& path) const {
    if (path.empty()) throw ShapeMismatch("empty path has no composite");
    int acc = path[0];
    for (std::size_t i = 1; i < path.size(); ++i) acc = compose(path[i], acc);
    return acc;
}

int FinCat::initial_object() const {
    for (int a = 0; a < num_objects(); ++a) {
        bool ok = true;
        for (int b = 0; b < num_objects() && ok; ++b) ok = hom(a, b).size() == 1;
        if (ok) return a;
    }
    return -1;
}

int FinCat::terminal_object() const {
    for (int b = 0; b < num_objects(); ++b) {
        bool ok = true;
        for (int a = 0; a < num_objects() && ok; ++a) ok = hom(a, b).size() == 1;
        if (ok) return b;
    }
    return -1;
}

bool same_cat(const FinCat& a, const FinCat& b) {
    if (&a == &b) return true;
    if (a.fingerprint() != b.fingerprint()) return false;
    if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return false;
    for (int i = 0; i < a.num_objects(); ++i)
        if (a.object(i) != b.object(i) || a.identity(i) != b.identity(i)) return false;
    for (int f = 0; f < a.num_morphisms(); ++f) {
        const auto& x = a.morphism(f);
        const auto& y = b.morphism(f);
        if (x.id != y.id || x.dom != y.dom || x.cod != y.cod) return false;
    }
    for (int g = 0; g < a.num_morphisms(); ++g)
        for (int f : a.in(a.dom(g)))
            if (a.compose_unchecked(g, f) != b.compose_unchecked(g, f)) return false;
    return true;
}

CatPtr validate_category(const RawCategory& raw, const Budget& budget) {
    std::vector<std::string> objects;
    std::unordered_map<std::string, int> obj_ix;
    for (const auto& o : raw.objects) {
        if (obj_ix.count(o)) throw DuplicateId("object " + o + " declared twice in " + raw.name, o);
        obj_ix.emplace(o, static_cast<int>(objects.size()));
        objects.push_back(o);
    }
    if (objects.size() > budget.max_objects)
        throw SizeBudgetExceeded(raw.name + " has " + std::to_string(objects.size()) + " objects");

    std::set<std::string> declared;
    for (const auto& m : raw.morphisms) {
        if (declared.count(m.id)) throw DuplicateId("morphism " + m.id + " declared twice in " + raw.name, m.id);
        declared.insert(m.id);
    }
    // an undeclared id_<obj> falls back to a declared endomorphism that the
    // table treats as an identity, so constructed categories round-trip
    std::vector<std::string> ident(objects.size());
    for (std::size_t a = 0; a < objects.size(); ++a) ident[a] = "id_" + objects[a];
    {
        std::map<std::string, bool> acts;
        for (const auto& m : raw.morphisms)
            if (m.dom == m.cod && !declared.count("id_" + m.dom)) acts[m.id] = false;
        std::set<std::string> broken;
        for (const auto& cmp : raw.composites) {
            if (cmp.g == cmp.f && cmp.h == cmp.g && acts.count(cmp.g)) acts[cmp.g] = true;
            if (acts.count(cmp.g) && cmp.h != cmp.f) broken.insert(cmp.g);
            if (acts.count(cmp.f) && cmp.h != cmp.g) broken.insert(cmp.f);
        }
        for (const auto& m : raw.morphisms) {
            auto it = acts.find(m.id);
            if (it == acts.end() || !it->second || broken.count(m.id)) continue;
            auto o = obj_ix.find(m.dom);
            if (o != obj_ix.end() && ident[o->second] == "id_" + m.dom) ident[o->second] = m.id;
        }
    }
    std::vector<Morphism> mors;
    std::unordered_map<std::string, int> mor_ix;
    std::vector<int> ids(objects.size(), -1);
    for (std::size_t a = 0; a < objects.size(); ++a) {
        const std::string& id = ident[a];
        if (!declared.count(id)) {
            ids[a] = static_cast<int>(mors.size());
            mor_ix.emplace(id, ids[a]);
            mors.push_back({id, static_cast<int>(a), static_cast<int>(a)});
        }
    }
    for (const auto& m : raw.morphisms) {
        auto d = obj_ix.find(m.dom);
        auto c = obj_ix.find(m.cod);
        if (d == obj_ix.end()) throw DanglingId("morphism " + m.id + " has unknown domain " + m.dom, m.dom);
        if (c == obj_ix.end()) throw DanglingId("morphism " + m.id + " has unknown codomain " + m.cod, m.cod);
        if (mor_ix.count(m.id)) throw DuplicateId("morphism " + m.id + " clashes with an identity", m.id);
        mor_ix.emplace(m.id, static_cast<int>(mors.size()));
        mors.push_back({m.id, d->second, c->second});
    }
    for (std::size_t a = 0; a < objects.size(); ++a) {
        if (ids[a] >= 0) continue;
        int f = mor_ix.at(ident[a]);
        if (mors[f].dom != static_cast<int>(a) || mors[f].cod != static_cast<int>(a))
            throw IdentityViolation("declared identity " + ident[a] + " is not an endomorphism", mors[f].id);
        ids[a] = f;
    }
    if (mors.size() > budget.max_morphisms)
        throw SizeBudgetExceeded(raw.name + " has " + std::to_string(mors.size()) + " morphisms");

    const int m = static_cast<int>(mors.size());
    std::unordered_map<std::uint64_t, int> table;
    auto key = [m](int g, int f) { return static_cast<std::uint64_t>(g) * static_cast<std::uint64_t>(m) + f; };
    auto lookup = [&](const std::string& id) {
        auto it = mor_ix.find(id);
        if (it == mor_ix.end()) throw DanglingId("composite mentions unknown morphism " + id, id);
        return it->second;
    };
    for (const auto& cmp : raw.composites) {
        int g = lookup(cmp.g), f = lookup(cmp.f), h = lookup(cmp.h);
        std::string w = cmp.g + " . " + cmp.f;
        if (mors[f].cod != mors[g].dom) throw BadComposite("entry " + w + " is not a composable pair", w);
        if (mors[h].dom != mors[f].dom || mors[h].cod != mors[g].cod)
            throw BadComposite("entry " + w + " = " + cmp.h + " has the wrong endpoints", w);
        auto [it, fresh] = table.emplace(key(g, f), h);
        if (!fresh && it->second != h) throw BadComposite("entry " + w + " given two values", w);
    }
    std::vector<std::vector<int>> out_of(objects.size());
    for (int f = 0; f < m; ++f) out_of[mors[f].dom].push_back(f);
    for (int f = 0; f < m; ++f)
        for (int g : out_of[mors[f].cod])
            if (!table.count(key(g, f))) {
                std::string w = mors[g].id + " . " + mors[f].id;
                throw MissingComposite("no entry for " + w + " in " + raw.name, w);
            }
    auto comp = [&](int g, int f) { return table.at(key(g, f)); };
    for (int f = 0; f < m; ++f) {
        if (comp(ids[mors[f].cod], f) != f || comp(f, ids[mors[f].dom]) != f)
            throw IdentityViolation("identity law fails at " + mors[f].id, mors[f].id);
    }
    for (int f = 0; f < m; ++f)
        for (int g : out_of[mors[f].cod]) {
            int gf = comp(g, f);
            for (int h : out_of[mors[g].cod]) {
                if (comp(comp(h, g), f) != comp(h, gf)) {
                    std::string w = mors[h].id + " . " + mors[g].id + " . " + mors[f].id;
                    throw AssociativityViolation("associativity fails for " + w, w);
                }
            }
        }
    return FinCat::build(raw.name, std::move(objects), std::move(mors), std::move(ids), comp);
}

RawCategory to_raw(const FinCat& c) {
    RawCategory raw;
    raw.name = c.name();
    raw.objects = c.object_ids();
    for (int f = 0; f < c.num_morphisms(); ++f)
        raw.morphisms.push_back({c.mor_id(f), c.object(c.dom(f)), c.object(c.cod(f))});
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int f : c.in(c.dom(g))) raw.composites.push_back({c.mor_id(g), c.mor_id(f), c.mor_id(c.compose_unchecked(g, f))});
    return raw;
}

bool is_functor(const Functor& F, std::string* witness) {
    auto fail = [&](const std::string& w) {
        if (witness) *witness = w;
        return false;
    };
    const FinCat& C = *F.src;
    const FinCat& D = *F.tgt;
    if (static_cast<int>(F.ob.size()) != C.num_objects() || static_cast<int>(F.mo.size()) != C.num_morphisms())
        return fail("<size>");
    for (int a = 0; a < C.num_objects(); ++a)
        if (F.ob[a] < 0 || F.ob[a] >= D.num_objects()) return fail(C.object(a));
    for (int f = 0; f < C.num_morphisms(); ++f) {
        int g = F.mo[f];
        if (g < 0 || g >= D.num_morphisms() || D.dom(g) != F.ob[C.dom(f)] || D.cod(g) != F.ob[C.cod(f)])
            return fail(C.mor_id(f));
    }
    for (int a = 0; a < C.num_objects(); ++a)
        if (F.mo[C.identity(a)] != D.identity(F.ob[a])) return fail(C.mor_id(C.identity(a)));
    for (int g = 0; g < C.num_morphisms(); ++g)
        for (int f : C.in(C.dom(g)))
            if (F.mo[C.compose_unchecked(g, f)] != D.compose_unchecked(F.mo[g], F.mo[f]))
                return fail(C.mor_id(g) + " . " + C.mor_id(f));
    return true;
}

Functor checked_functor(Functor F) {
    std::string w;
    if (!is_functor(F, &w)) throw NotAFunctor(F.name + " fails functoriality", w);
    return F;
}

bool is_natural(const NatTrans& a, std::string* witness) {
    auto fail = [&](const std::string& w) {
        if (witness) *witness = w;
        return false;
    };
    if (!same_cat(a.src.src, a.tgt.src) || !same_cat(a.src.tgt, a.tgt.tgt)) return fail("<shape>");
    const FinCat& C = *a.src.src;
    const FinCat& D = *a.src.tgt;
    if (static_cast<int>(a.comp.size()) != C.num_objects()) return fail("<size>");
    for (int x = 0; x < C.num_objects(); ++x) {
        int m = a.comp[x];
        if (m < 0 || m >= D.num_morphisms() || D.dom(m) != a.src.ob[x] || D.cod(m) != a.tgt.ob[x])
            return fail(C.object(x));
    }
    for (int f = 0; f < C.num_morphisms(); ++f) {
        int lhs = D.compose_unchecked(a.tgt.mo[f], a.comp[C.dom(f)]);
        int rhs = D.compose_unchecked(a.comp[C.cod(f)], a.src.mo[f]);
        if (lhs != rhs) return fail(C.mor_id(f));
    }
    return true;
}

NatTrans checked_nat(NatTrans a) {
    std::string w;
    if (!is_natural(a, &w)) throw NotNatural(a.name + " fails naturality", w);
    return a;
}

bool operator==(const Functor& a, const Functor& b) {
    return a.ob == b.ob && a.mo == b.mo && same_cat(a.src, b.src) && same_cat(a.tgt, b.tgt);
}

bool operator==(const NatTrans& a, const NatTrans& b) { return a.comp == b.comp && a.src == b.src && a.tgt == b.tgt; }

Functor identity_functor(const CatPtr& c) {
    Functor F{"id", c, c, {}, {}};
    F.ob.resize(c->num_objects());
    F.mo.resize(c->num_morphisms());
    for (int a = 0; a < c->num_objects(); ++a) F.ob[a] = a;
    for (int f = 0; f < c->num_morphisms(); ++f) F.mo[f] = f;
    return F;
}

Functor constant_functor(const CatPtr& src, const CatPtr& tgt, int obj) {
    Functor F{"const_" + tgt->object(obj), src, tgt, std::vector<int>(src->num_objects(), obj),
              std::vector<int>(src->num_morphisms(), tgt->identity(obj))};
    return F;
}

Functor compose(const Functor& G, const Functor& F) {
    if (!same_cat(F.tgt, G.src)) throw ShapeMismatch("cannot compose " + G.name + " after " + F.name);
    Functor H{G.name + "." + F.name, F.src, G.tgt, {}, {}};
    H.ob.resize(F.ob.size());
    H.mo.resize(F.mo.size());
    for (std::size_t a = 0; a < F.ob.size(); ++a) H.ob[a] = G.ob[F.ob[a]];
    for (std::size_t f = 0; f < F.mo.size(); ++f) H.mo[f] = G.mo[F.mo[f]];
    return H;
}

NatTrans identity_nat(const Functor& F) {
    NatTrans a{"id_" + F.name, F, F, std::vector<int>(F.ob.size())};
    for (std::size_t x = 0; x < F.ob.size(); ++x) a.comp[x] = F.tgt->identity(F.ob[x]);
    return a;
}

NatTrans vertical(const NatTrans& b, const NatTrans& a) {
    if (a.tgt != b.src) throw ShapeMismatch("vertical composite needs matching middle functor");
    NatTrans c{b.name + "." + a.name, a.src, b.tgt, std::vector<int>(a.comp.size())};
    const FinCat& D = *a.src.tgt;
    for (std::size_t x = 0; x < a.comp.size(); ++x) c.comp[x] = D.compose_unchecked(b.comp[x], a.comp[x]);
    return c;
}

NatTrans horizontal(const NatTrans& b, const NatTrans& a) {
    if (!same_cat(a.src.tgt, b.src.src)) throw ShapeMismatch("horizontal composite needs matching middle category");
    NatTrans c{b.name + "*" + a.name, compose(b.src, a.src), compose(b.tgt, a.tgt), std::vector<int>(a.comp.size())};
    const FinCat& E = *b.src.tgt;
    for (std::size_t x = 0; x < a.comp.size(); ++x)
        c.comp[x] = E.compose_unchecked(b.comp[a.tgt.ob[x]], b.src.mo[a.comp[x]]);
    return c;
}

NatTrans whisker(const Functor& K, const NatTrans& a) {
    if (!same_cat(a.src.tgt, K.src)) throw ShapeMismatch("cannot whisker " + a.name + " by " + K.name);
    NatTrans c{K.name + a.name, compose(K, a.src), compose(K, a.tgt), std::vector<int>(a.comp.size())};
    for (std::size_t x = 0; x < a.comp.size(); ++x) c.comp[x] = K.mo[a.comp[x]];
    return c;
}

NatTrans whisker(const NatTrans& a, const Functor& K) {
    if (!same_cat(K.tgt, a.src.src)) throw ShapeMismatch("cannot whisker " + a.name + " by " + K.name);
    NatTrans c{a.name + "_" + K.name, compose(a.src, K), compose(a.tgt, K), std::vector<int>(K.ob.size())};
    for (std::size_t x = 0; x < K.ob.size(); ++x) c.comp[x] = a.comp[K.ob[x]];
    return c;
}

NatTrans compose_whisker(WhiskerKind kind, const NatTrans& b, const NatTrans& a) {
    switch (kind) {
    case WhiskerKind::Vertical: return vertical(b, a);
    case WhiskerKind::Horizontal: return horizontal(b, a);
    default: throw ShapeMismatch("whiskering needs a functor operand");
    }
}

NatTrans compose_whisker(WhiskerKind kind, const Functor& K, const NatTrans& a) {
    if (kind != WhiskerKind::LeftWhisker) throw ShapeMismatch("functor on the left requires left-whisker");
    return whisker(K, a);
}

NatTrans compose_whisker(WhiskerKind kind, const NatTrans& a, const Functor& K) {
    if (kind != WhiskerKind::RightWhisker) throw ShapeMismatch("functor on the right requires right-whisker");
    return whisker(a, K);
}

bool is_iso(const NatTrans& a) {
    const FinCat& D = *a.src.tgt;
    return std::all_of(a.comp.begin(), a.comp.end(), [&](int m) { return D.is_iso(m); });
}

NatTrans inverse(const NatTrans& a) {
    const FinCat& D = *a.src.tgt;
    NatTrans b{a.name + "^-1", a.tgt, a.src, std::vector<int>(a.comp.size())};
    for (std::size_t x = 0; x < a.comp.size(); ++x) {
        b.comp[x] = D.inverse(a.comp[x]);
        if (b.comp[x] < 0) throw ShapeMismatch(a.name + " is not invertible at " + a.src.src->object(static_cast<int>(x)));
    }
    return b;
}

bool is_fully_faithful(const Functor& F) {
    const FinCat& C = *F.src;
    const FinCat& D = *F.tgt;
    for (int a = 0; a < C.num_objects(); ++a)
        for (int b = 0; b < C.num_objects(); ++b) {
            const auto& hs = C.hom(a, b);
            const auto& ht = D.hom(F.ob[a], F.ob[b]);
            if (hs.size() != ht.size()) return false;
            std::set<int> images;
            for (int f : hs) images.insert(F.mo[f]);
            if (images.size() != hs.size()) return false;
        }
    return true;
}

std::string describe(const Functor& F) {
    std::string s = F.name + " : " + F.src->name() + " -> " + F.tgt->name() + " {";
    for (int a = 0; a < F.src->num_objects(); ++a) {
        if (a) s += ", ";
        s += F.src->object(a) + "|->" + F.tgt->object(F.ob[a]);
    }
    return s + "}";
}

} // namespace catmate
