#pragma once

#include "catmate/category.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace catmate {

// Every functor C -> D, in lexicographic order of (object images in
// declared order, then morphism images). Throws SizeBudgetExceeded when the
// count passes budget.max_objects.
std::vector<Functor> enumerate_functors(const CatPtr& C, const CatPtr& D, const Budget& budget = {});

// Every natural transformation F => G in lexicographic order of components.
std::vector<NatTrans> enumerate_nats(const Functor& F, const Functor& G);

// Natural isomorphisms F => G only.
std::vector<NatTrans> enumerate_nat_isos(const Functor& F, const Functor& G);

// C^I realised concretely. Objects are functors, morphisms natural
// transformations; both are kept alongside the tabulated category so the
// structure can be read back.
struct FunctorCategory {
    CatPtr shape;
    CatPtr base;
    CatPtr cat;
    std::vector<Functor> objects;
    std::vector<NatTrans> morphisms;

    int object_of(const Functor& F) const;       // -1 when absent
    int morphism_of(const NatTrans& a) const;    // -1 when absent
    int object_of_key(const std::vector<int>& ob, const std::vector<int>& mo) const;
    int morphism_of_key(int src, int tgt, const std::vector<int>& comp) const;

    std::unordered_map<std::vector<int>, int, VecHash> obj_index;
    std::unordered_map<std::vector<int>, int, VecHash> mor_index;
};
using FunctorCatPtr = std::shared_ptr<const FunctorCategory>;

FunctorCatPtr functor_category(const CatPtr& I, const CatPtr& C, const Budget& budget = {});

// Objects (a,b), morphisms (f,g), componentwise composition. Object (a,b)
// has index a*|Ob J| + b and morphism (f,g) index f*|Mor J| + g.
CatPtr product_category(const CatPtr& I, const CatPtr& J);
Functor product_projection(const CatPtr& P, const CatPtr& I, const CatPtr& J, int which);

// Delta : C -> C^I and evaluation at an object or along a morphism.
Functor diagonal(const FunctorCatPtr& CI);
Functor evaluation(const FunctorCatPtr& CI, int obj);
NatTrans evaluation_along(const FunctorCatPtr& CI, int mor);  // ev_j : ev_J => ev_J'

// P_* : A^I -> B^I and its action on transformations.
Functor postcompose(const Functor& P, const FunctorCatPtr& AI, const FunctorCatPtr& BI);
NatTrans postcompose(const NatTrans& a, const FunctorCatPtr& AI, const FunctorCatPtr& BI);
// u^* : C^I -> C^K for u : K -> I
Functor precompose(const Functor& u, const FunctorCatPtr& CI, const FunctorCatPtr& CK);

// Twist isomorphisms between C^{IxJ}, (C^I)^J and (C^J)^I.
struct TwistData {
    CatPtr I, J, C;
    CatPtr product;          // I x J
    FunctorCatPtr flat;      // C^{IxJ}
    FunctorCatPtr CI;        // C^I
    FunctorCatPtr CJ;        // C^J
    FunctorCatPtr CI_J;      // (C^I)^J
    FunctorCatPtr CJ_I;      // (C^J)^I
    Functor flat_to_CI_J, CI_J_to_flat;
    Functor flat_to_CJ_I, CJ_I_to_flat;
    Functor CI_J_to_CJ_I, CJ_I_to_CI_J;
};
TwistData twist(const CatPtr& I, const CatPtr& J, const CatPtr& C, const Budget& budget = {});

// Checks a functor is an isomorphism of categories (bijective on objects and
// morphisms; functoriality is assumed checked separately).
bool is_isomorphism(const Functor& F);
Functor inverse_isomorphism(const Functor& F);

// Full subcategory on the given objects (declared order kept) with its
// inclusion.
struct FullSub {
    CatPtr cat;
    Functor inclusion;
    std::vector<int> objects;  // object indices in the ambient category
};
FullSub full_subcategory(const CatPtr& C, const std::vector<int>& objects, const std::string& name);

} // namespace catmate
