#pragma once

#include "catmate/category.hpp"
#include "catmate/construct.hpp"

#include <string>
#include <vector>

namespace catmate {

// A category with a distinguished set of weak equivalences. Identities and
// isomorphisms are always included.
struct RelCat {
    std::string name;
    CatPtr cat;
    std::vector<char> weq;  // indexed by morphism

    bool is_weq(int f) const { return weq[f] != 0; }
    std::vector<int> weq_list() const;
};

RelCat make_relcat(std::string name, CatPtr cat, const std::vector<int>& weq);
RelCat make_relcat(std::string name, CatPtr cat, const std::vector<std::string>& weq_ids);
RelCat minimal_relcat(std::string name, CatPtr cat);  // W = isomorphisms
RelCat maximal_relcat(std::string name, CatPtr cat);  // W = everything
// Closes W under 2-out-of-3.
RelCat saturate(const RelCat& rc);
// Pointwise weak equivalences on C^I.
RelCat diagram_relcat(const RelCat& rc, const FunctorCatPtr& CI);

// Zig-zag words are lists of letters in application order: the word
// [f, w^-1] means "first f, then the formal inverse of w".
struct Letter {
    int mor = -1;
    bool inv = false;
    bool operator==(const Letter& o) const { return mor == o.mor && inv == o.inv; }
};
using Word = std::vector<Letter>;

// Written in composition order, e.g. "w^-1.f".
std::string word_string(const FinCat& c, const Word& w);

enum class LocStatus { Exact, Undecided };

struct LocalizeOptions {
    int bound = -1;                // word length; -1 selects 2*|Mor|+4
    bool saturate = false;         // close W under 2-out-of-3 first
    std::size_t node_cap = 200000; // total coset nodes before giving up
};

struct LocalizationResult {
    RelCat rc;
    LocStatus status = LocStatus::Undecided;
    int bound = 0;
    CatPtr ho;                     // null unless exact
    Functor H;
    std::vector<Word> normal_form; // per ho morphism

    // Cayley graph of Ho(a, -) for every source object a; node 0 is the
    // identity class and node_mor maps nodes to ho morphisms.
    struct Tree {
        std::vector<std::vector<int>> edges;  // node x letter -> node
        std::vector<int> node_mor;
        std::vector<int> mor_node;            // ho morphism -> node, -1 if other source
    };
    std::vector<Tree> trees;

    bool exact() const { return status == LocStatus::Exact; }
    int letter_index(const Letter& l) const;
    // ho morphism represented by a word starting at src, or -1
    int classify(int src, const Word& w) const;
    const Word& normal_form_of(int ho_mor) const { return normal_form.at(ho_mor); }
};

int default_bound(const RelCat& rc);
LocalizationResult localize(const RelCat& rc, const LocalizeOptions& opt = {});
// Throws UndecidedLocalization instead of returning an undecided result.
LocalizationResult localize_exact(const RelCat& rc, const LocalizeOptions& opt = {});

bool is_homotopical(const Functor& F, const RelCat& src, const RelCat& tgt, std::string* witness = nullptr);

// Ho F with Ho F o H_src = H_tgt o F, read off normal forms.
Functor ho_functor(const Functor& F, const LocalizationResult& src, const LocalizationResult& tgt);
NatTrans ho_nat(const NatTrans& a, const LocalizationResult& src, const LocalizationResult& tgt);

// The functor Ho C -> E through which K : C -> E factors; K must invert
// every weak equivalence (NotHomotopical otherwise).
Functor induced_functor(const LocalizationResult& loc, const Functor& K, const std::string& name = "");

// Precomposition with H from functors Ho C -> E to functors C -> E: injective,
// onto the functors inverting W, and bijective on transformations between
// any two images.
struct PrecompositionVerdict {
    std::size_t functors = 0;        // Ho C -> E
    std::size_t inverting = 0;       // C -> E inverting W
    std::size_t transformations = 0; // pairs checked, summed over all A, B
    bool injective = false;
    bool onto_inverting = false;
    bool bijective_on_nats = false;
    std::string witness;

    bool holds() const { return injective && onto_inverting && bijective_on_nats; }
};
PrecompositionVerdict precomposition_check(const LocalizationResult& loc, const CatPtr& E, const Budget& budget = {});

// H applied to a morphism of the underlying category.
inline int ho_of(const LocalizationResult& loc, int f) { return loc.H.mo[f]; }

// Whether H(0) is initial in Ho C for the initial object 0 of C; throws
// NoInitialObject when C has none.
bool check_initial_preserved(const RelCat& rc, const LocalizationResult& loc);

} // namespace catmate
