#pragma once

#include "catmate/category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace catmate {

// F -| G with F : C -> D, unit id_C => GF and counit FG => id_D.
struct Adjunction {
    std::string name;
    Functor F;
    Functor G;
    NatTrans unit;
    NatTrans counit;

    const CatPtr& C() const { return F.src; }
    const CatPtr& D() const { return F.tgt; }
};

// Checks shapes, naturality and both triangle identities. Any defect is
// reported as TriangleFailure with the offending object as witness.
Adjunction verify_adjunction(std::string name, Functor F, Functor G, NatTrans unit, NatTrans counit);
bool is_adjunction(const Functor& F, const Functor& G, const NatTrans& unit, const NatTrans& counit,
                   std::string* witness = nullptr);
Adjunction identity_adjunction(const CatPtr& C);

// k : Fc -> d  |->  Gk o eta_c, and back via eps_d o Fh.
int transpose_right(const Adjunction& adj, int c, int k);
int transpose_left(const Adjunction& adj, int d, int h);

// The hom-set bijection D(Fc, d) -> C(c, Gd) for every pair, as a table of
// (k, transpose) pairs.
struct HomBijection {
    int c = -1;
    int d = -1;
    std::vector<std::pair<int, int>> pairs;
};
std::vector<HomBijection> hom_bijection(const Adjunction& adj);

// Initial objects of c|G for every c, or absent when one is missing.
std::optional<Adjunction> find_left_adjoint(const Functor& G, const std::string& name = "");
// Terminal objects of F|d for every d.
std::optional<Adjunction> find_right_adjoint(const Functor& F, const std::string& name = "");

// Every adjunction F -| G with F : C -> D, one per right adjoint G that has
// a left adjoint.
std::vector<Adjunction> enumerate_adjunctions(const CatPtr& C, const CatPtr& D, const Budget& budget = {});

// inner : C -> D, outer : D -> E gives F2 F1 -| G1 G2.
Adjunction compose_adjunctions(const Adjunction& inner, const Adjunction& outer);

// Top row F -| G between C and D, bottom row F' -| G' between C' and D',
// legs X : C -> C' and Y : D -> D'. sigma : F'X => YF, tau : XG => G'Y.
struct MateSquare {
    Adjunction top;
    Adjunction bottom;
    Functor X;
    Functor Y;
    std::optional<NatTrans> sigma;
    std::optional<NatTrans> tau;
};

// Throws ShapeMismatch when the boundary does not line up.
void check_square_shape(const MateSquare& sq);

// G'Y eps o G' sigma_G o eta'_XG
NatTrans mate_of_sigma(const MateSquare& sq, const NatTrans& sigma);
// eps'_YF o F' tau_F o F'X eta
NatTrans mate_of_tau(const MateSquare& sq, const NatTrans& tau);
// Fills whichever cell is missing; recomputes tau when both are present.
MateSquare mate(MateSquare sq);

struct MateVerdict {
    bool mates = false;
    bool unit_condition = false;  // sigma^# = tau_F o X eta
    bool hom_condition = false;   // the hom-set rectangle for all c, d
    std::string witness;
};
MateVerdict check_mate_pair(const MateSquare& sq);

enum class PasteKind { Vertical, Horizontal };
// Vertical: s1 sits above s2 (s1.bottom == s2.top). Horizontal: s1 on the
// left, s2 on the right (s1.Y == s2.X).
MateSquare paste(PasteKind kind, const MateSquare& s1, const MateSquare& s2);

// Square with identity legs and identity cells on one adjunction.
MateSquare identity_square(const Adjunction& adj);

struct ConjugateVerdict {
    bool sigma_iso = false;
    bool tau_iso = false;
};
// X and Y must be identities; throws NotMates when the cells disagree.
ConjugateVerdict conjugate_iso_check(const MateSquare& sq);

} // namespace catmate
