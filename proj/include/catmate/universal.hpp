#pragma once

#include "catmate/adjunction.hpp"
#include "catmate/category.hpp"
#include "catmate/construct.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace catmate {

// A cocone under D has legs D(i) -> apex with leg_B o D(f) = leg_A for
// f : A -> B. A cone has legs apex -> D(i) with D(f) o leg_A = leg_B.
struct Cocone {
    Functor diagram;
    int apex = -1;
    std::vector<int> legs;  // per object of the shape
};
using Cone = Cocone;

std::vector<Cocone> cocones_at(const Functor& D, int apex);
std::vector<Cone> cones_at(const Functor& D, int apex);

// Universal cocone (cone) with the lexicographically least apex id, then
// leg ids; absent when none exists.
std::optional<Cocone> colimit(const Functor& D);
std::optional<Cone> limit(const Functor& D);

bool is_colimit(const Cocone& c);
bool is_limit(const Cone& c);

// The unique u : apex -> target with u o leg_i = legs_i (dually
// leg_i o u = legs_i for cones), or -1.
int factor_cocone(const Cocone& universal, int target, const std::vector<int>& legs);
int factor_cone(const Cone& universal, int source, const std::vector<int>& legs);

// n-fold coproduct and product of one object; legs are the (co)projections.
std::optional<Cocone> copower(int n, int obj, const CatPtr& C);
std::optional<Cone> power(int n, int obj, const CatPtr& C);

// F|G for F : A -> C, G : B -> C. Objects are (a, b, h : Fa -> Gb).
struct CommaCategory {
    CatPtr cat;
    Functor left;   // to A
    Functor right;  // to B
    std::vector<std::tuple<int, int, int>> objects;
};
CommaCategory comma_category(const Functor& F, const Functor& G, const Budget& budget = {});

// Pointwise Kan extension of X : I -> C along K : I -> J. For the left
// extension the cell is the unit X => Lan(X) K, for the right one the
// counit Ran(X) K => X. The per-object (co)limits are kept.
enum class KanSide { Left, Right };
struct KanExtension {
    KanSide side = KanSide::Left;
    Functor along;
    Functor diagram;
    Functor ext;
    NatTrans cell;
    std::vector<CommaCategory> commas;  // per object of J
    std::vector<Cocone> pointwise;      // per object of J
};
std::optional<KanExtension> kan_extension(KanSide side, const Functor& K, const Functor& X);

// J_! -| ev_J -| J_* on C^J. Each side is absent when a needed (co)power is
// missing.
struct EvaluationAdjoints {
    FunctorCatPtr CJ;
    int J = -1;
    Functor ev;
    std::optional<Adjunction> shriek;  // J_! -| ev_J
    std::optional<Adjunction> star;    // ev_J -| J_*
    bool shriek_ff = false;            // unit invertible
    bool star_ff = false;              // counit invertible
};
EvaluationAdjoints evaluation_adjoints(const CatPtr& C, const CatPtr& Jcat, int J, const Budget& budget = {});
EvaluationAdjoints evaluation_adjoints(const FunctorCatPtr& CJ, int J);

// Whether End(J) = {id_J}.
bool trivial_endomorphisms(const FinCat& J, int obj);

} // namespace catmate
