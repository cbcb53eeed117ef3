#pragma once

#include "catmate/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace catmate {

// Caps on the size of any constructed category. Functor categories grow
// fast; exceeding a cap throws SizeBudgetExceeded instead of hanging.
struct Budget {
    std::size_t max_objects = 500;
    std::size_t max_morphisms = 5000;
};

struct Morphism {
    std::string id;
    int dom = -1;
    int cod = -1;
};

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

// A finite category with a total composition table. Objects and morphisms
// are addressed by dense indices in declared order; string ids are kept
// for reports and the text format.
class FinCat {
public:
    using ComposeFn = std::function<int(int g, int f)>;

    // Trusted constructor for categories that are correct by construction.
    // Shapes are checked, laws are not (see validate_category for that).
    static CatPtr build(std::string name, std::vector<std::string> objects, std::vector<Morphism> morphisms,
                        std::vector<int> identities, const ComposeFn& compose);

    const std::string& name() const { return name_; }
    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms_.size()); }

    const std::string& object(int a) const { return objects_.at(a); }
    const Morphism& morphism(int f) const { return morphisms_.at(f); }
    const std::string& mor_id(int f) const { return morphisms_.at(f).id; }
    int dom(int f) const { return morphisms_[f].dom; }
    int cod(int f) const { return morphisms_[f].cod; }

    // -1 when absent
    int find_object(std::string_view id) const;
    int find_morphism(std::string_view id) const;
    // throw DanglingId when absent
    int object_index(std::string_view id) const;
    int morphism_index(std::string_view id) const;

    int identity(int a) const { return identities_[a]; }
    bool is_identity(int f) const { return identities_[morphisms_[f].dom] == f; }

    // g o f; throws ShapeMismatch unless cod(f) == dom(g)
    int compose(int g, int f) const;
    // unchecked variant for hot loops
    int compose_unchecked(int g, int f) const { return table_[g][pos_in_[f]]; }
    // composes a path given in application order: path[0] first
    int compose_path(const std::vector<int>& path) const;

    const std::vector<int>& hom(int a, int b) const { return homs_[static_cast<std::size_t>(a) * objects_.size() + b]; }
    const std::vector<int>& out(int a) const { return out_[a]; }
    const std::vector<int>& in(int b) const { return in_[b]; }

    bool is_thin() const { return thin_; }
    // two-sided inverse or -1
    int inverse(int f) const { return inverse_[f]; }
    bool is_iso(int f) const { return inverse_[f] >= 0; }

    int initial_object() const;   // lexicographically first initial object, or -1
    int terminal_object() const;  // lexicographically first terminal object, or -1

    std::uint64_t fingerprint() const { return fingerprint_; }

    std::vector<std::string> object_ids() const { return objects_; }

private:
    FinCat() = default;
    void index();

    std::string name_;
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<int> identities_;
    std::unordered_map<std::string, int> obj_lookup_;
    std::unordered_map<std::string, int> mor_lookup_;
    std::vector<std::vector<int>> homs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<int> pos_in_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    bool thin_ = true;
    std::uint64_t fingerprint_ = 0;
};

// Extensional equality: same ids, same shapes, same composition table.
bool same_cat(const FinCat& a, const FinCat& b);
inline bool same_cat(const CatPtr& a, const CatPtr& b) { return a == b || (a && b && same_cat(*a, *b)); }

// Parsed, unvalidated category description.
struct RawCategory {
    struct Mor {
        std::string id, dom, cod;
    };
    struct Comp {
        std::string g, f, h;
    };
    std::string name;
    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<Comp> composites;
};

// Exhaustive validation: totality, associativity over every composable
// triple, identity laws. Identities are auto-created as id_<obj> unless a
// morphism with that id is declared.
CatPtr validate_category(const RawCategory& raw, const Budget& budget = {});
RawCategory to_raw(const FinCat& c);

struct Functor {
    std::string name;
    CatPtr src;
    CatPtr tgt;
    std::vector<int> ob;
    std::vector<int> mo;

    int obj(int a) const { return ob[a]; }
    int mor(int f) const { return mo[f]; }
};

struct NatTrans {
    std::string name;
    Functor src;
    Functor tgt;
    std::vector<int> comp;

    int at(int a) const { return comp[a]; }
    const CatPtr& domain() const { return src.src; }
    const CatPtr& codomain() const { return src.tgt; }
};

// witness is filled with the first failing id when provided
bool is_functor(const Functor& F, std::string* witness = nullptr);
Functor checked_functor(Functor F);
bool is_natural(const NatTrans& a, std::string* witness = nullptr);
NatTrans checked_nat(NatTrans a);

bool operator==(const Functor& a, const Functor& b);
inline bool operator!=(const Functor& a, const Functor& b) { return !(a == b); }
bool operator==(const NatTrans& a, const NatTrans& b);
inline bool operator!=(const NatTrans& a, const NatTrans& b) { return !(a == b); }

Functor identity_functor(const CatPtr& c);
Functor constant_functor(const CatPtr& src, const CatPtr& tgt, int obj);
Functor compose(const Functor& G, const Functor& F);  // G o F
NatTrans identity_nat(const Functor& F);

enum class WhiskerKind { Vertical, Horizontal, LeftWhisker, RightWhisker };

NatTrans vertical(const NatTrans& b, const NatTrans& a);     // b o a
NatTrans horizontal(const NatTrans& b, const NatTrans& a);   // b * a : G o F => G' o F'
NatTrans whisker(const Functor& K, const NatTrans& a);       // K a
NatTrans whisker(const NatTrans& a, const Functor& K);       // a K
// Dispatcher over the four kinds; operands are given in the order the
// composite is written, e.g. (b, a) for b o a and (K, a) for K a.
NatTrans compose_whisker(WhiskerKind kind, const NatTrans& b, const NatTrans& a);
NatTrans compose_whisker(WhiskerKind kind, const Functor& K, const NatTrans& a);
NatTrans compose_whisker(WhiskerKind kind, const NatTrans& a, const Functor& K);

bool is_iso(const NatTrans& a);
NatTrans inverse(const NatTrans& a);  // throws ShapeMismatch when not invertible

// Fully faithful: bijective on every hom-set.
bool is_fully_faithful(const Functor& F);

std::string describe(const Functor& F);

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
};

} // namespace catmate
