#pragma once

#include "catmate/adjunction.hpp"
#include "catmate/category.hpp"
#include "catmate/construct.hpp"
#include "catmate/localization.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace catmate {

using LocPtr = std::shared_ptr<const LocalizationResult>;

// Left: q_C : QC -> C. Right: q_C : C -> QC.
enum class RetractionSide { Left, Right };

// Raw retraction data, all indices in the ambient category C. Q need not be
// a functor.
struct RetractionData {
    RetractionSide side = RetractionSide::Left;
    RelCat rc;
    std::vector<int> objects;  // C0
    std::vector<int> Qob;      // per object of C, an object of C0
    std::vector<int> Qmo;      // per morphism of C, a morphism between C0 objects
    std::vector<int> q;        // per object of C
};

struct DeformationRetraction {
    RetractionData data;
    FullSub sub;
    RelCat rc0;        // C0 with the weak equivalences it inherits
    LocPtr loc;        // Ho C
    LocPtr loc0;       // Ho C0
    Functor H0Q;       // C -> Ho C0
    Functor Qt;        // Ho C -> Ho C0 induced by H0Q
    std::vector<int> to_sub;  // C morphism -> C0 morphism, -1 outside C0
};

// Checks q_C in W, the squares q_C' o Qf = f o q_C (or their right-handed
// duals), and that H0 Q is a functor inverting W.
DeformationRetraction validate_retraction(const RetractionData& data, const LocalizeOptions& opt = {});
// C0 = C, Q = id, q = id.
DeformationRetraction trivial_retraction(const RelCat& rc, RetractionSide side = RetractionSide::Left);
// Retraction data by ids: Q on objects and on non-identity morphisms, q on
// objects outside C0 (identities elsewhere).
RetractionData retraction_data(const RelCat& rc, RetractionSide side, const std::vector<std::string>& objects,
                               const std::vector<std::pair<std::string, std::string>>& Qob,
                               const std::vector<std::pair<std::string, std::string>>& Qmo,
                               const std::vector<std::pair<std::string, std::string>>& q);

// Ho I o Qt => id (Hq) and Qt o Ho I => id (H0 q on C0), or the reverse
// directions for right retractions; both are natural isomorphisms.
struct RetractionEquivalence {
    NatTrans around_C;
    NatTrans around_C0;
    bool natural = false;
    bool invertible = false;
};
RetractionEquivalence retraction_equivalence(const DeformationRetraction& ret);

enum class DerivedKind { Left, Right, TotalLeft, TotalRight };
enum class Absoluteness { Unchecked, Certified, Failed, Partial };
const char* kind_name(DerivedKind k);
const char* absoluteness_name(Absoluteness a);

// LF : Ho C -> D with lambda : LF o H => F, RF with rho : F => RF o H; the
// total kinds replace F by H_D o F.
struct DerivedFunctorCert {
    Functor base;
    Functor derived;
    NatTrans cell;
    DerivedKind kind = DerivedKind::Left;
    Absoluteness absolute = Absoluteness::Unchecked;
    std::vector<std::string> probes;  // probe categories checked
    LocPtr src;
    LocPtr tgt;  // total kinds only

    bool left() const { return kind == DerivedKind::Left || kind == DerivedKind::TotalLeft; }
    bool total() const { return kind == DerivedKind::TotalLeft || kind == DerivedKind::TotalRight; }
    // F, or H_D o F for the total kinds
    Functor extended() const;
};

// LF = Fbar o Qt with cell F q_C (total: Ho(F|C0) o Qt with cell H_D F q_C).
// The kind follows the retraction's side; tgt selects the total version.
DerivedFunctorCert derive_via_retraction(const Functor& F, const DeformationRetraction& ret,
                                         const std::optional<RelCat>& tgt = std::nullopt,
                                         const LocalizeOptions& opt = {});

// Ho F with the identity cell, for homotopical F.
DerivedFunctorCert homotopical_cert(const Functor& F, const LocPtr& src, const LocPtr& tgt, bool left);

struct KanVerdict {
    bool kan = false;
    Absoluteness absolute = Absoluteness::Unchecked;
    std::size_t candidates = 0;                 // functors X : Ho C -> D tried
    std::vector<std::string> probes_checked;
    std::vector<std::string> probes_skipped;    // over budget
    std::string witness;
};
// One, Arrow, WalkingIso and the cert's own codomain.
std::vector<CatPtr> default_probes(const DerivedFunctorCert& cert);
// The Kan bijection against every functor X out of Ho C, then the same for
// Y o cert along every Y : D -> E for each probe E.
KanVerdict verify_kan(const DerivedFunctorCert& cert, const std::vector<CatPtr>& probes = {},
                      const Budget& budget = {});
// cert with absolute filled in by verify_kan on the default probes.
DerivedFunctorCert certified(DerivedFunctorCert cert, const Budget& budget = {});

// The unique L sigma with sigma o lambda = lambda' o (L sigma)_H (right:
// (R sigma)_H o rho = rho' o sigma); NoSolution otherwise.
NatTrans derived_nat(const NatTrans& sigma, const DerivedFunctorCert& a, const DerivedFunctorCert& b);

// Y o cert along Y : D -> E.
DerivedFunctorCert postcompose_cert(const Functor& Y, const DerivedFunctorCert& cert);

struct DerivedAdjunction {
    Adjunction adj;  // LF -| RG on Ho C, Ho D
    std::size_t unit_solutions = 0;
    std::size_t counit_solutions = 0;
    bool unit_square = false;    // RG lambda o eta._H = rho_F o H eta
    bool counit_square = false;  // H eps o lambda_G = eps._H o LF rho
};
DerivedAdjunction derived_adjunction(const Adjunction& adj, const DerivedFunctorCert& F, const DerivedFunctorCert& G);

// Fdot -| RG found by adjoint search, with lambda = eps._{HF} o Fdot rho_F o Fdot H eta.
DerivedFunctorCert derive_left_from_right_adjoint(const Adjunction& adj, const DerivedFunctorCert& G);

// Composite cert for second o first, total kinds only. Left cells are
// lambda'_F o LF' lambda, right cells RF' rho o rho'_F.
DerivedFunctorCert composite_cert(const DerivedFunctorCert& first, const DerivedFunctorCert& second);

struct CompositionVerdict {
    bool composes = false;
    KanVerdict kan;
    std::optional<bool> agrees;  // with the supplied cert for the composite
    std::string witness;
};
CompositionVerdict composes_check(const DerivedFunctorCert& first, const DerivedFunctorCert& second,
                                  const std::optional<DerivedFunctorCert>& composite = std::nullopt,
                                  const Budget& budget = {});

// Both sides of composing two derived adjunctions: left adjoints compose iff
// right adjoints do.
struct AdjointComposition {
    CompositionVerdict left;
    CompositionVerdict right;
};
AdjointComposition adjoint_composition_check(const DerivedFunctorCert& F1, const DerivedFunctorCert& G1,
                                             const DerivedFunctorCert& F2, const DerivedFunctorCert& G2,
                                             const Budget& budget = {});

// Certs for the four rows of a square of derivable adjunctions.
struct DerivedSquareCerts {
    DerivedFunctorCert F, G, Fp, Gp;
};
struct DerivedMateVerdict {
    bool mates = false;
    NatTrans sigma;  // L sigma : LF' Ho X => Ho Y LF
    NatTrans tau;    // R tau : Ho X RG => RG' Ho Y
    MateSquare derived;
    std::string witness;
};
// Needs sigma and tau in sq and homotopical legs; the localizations come
// from the certs.
DerivedMateVerdict derived_mate_check(const MateSquare& sq, const DerivedSquareCerts& certs,
                                      const Budget& budget = {});

// (C0^I, Q^I, q^I) on the diagram relative category; Q must be a functor.
DeformationRetraction lift_retraction_pointwise(const DeformationRetraction& ret, const CatPtr& I,
                                                const Budget& budget = {}, const LocalizeOptions& opt = {});

} // namespace catmate
