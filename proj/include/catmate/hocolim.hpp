#pragma once

#include "catmate/adjunction.hpp"
#include "catmate/category.hpp"
#include "catmate/construct.hpp"
#include "catmate/derived.hpp"
#include "catmate/localization.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace catmate {

enum class HocolimProvenance { Searched, DerivedColimit, Transferred };
const char* provenance_name(HocolimProvenance p);

// Auto tries the derived colimit first and falls back to the search.
enum class HocolimRoute { Auto, Search, DerivedColimit };

struct HocolimOptions {
    LocalizeOptions loc;
    Budget budget;
    HocolimRoute route = HocolimRoute::Auto;
    // Retraction on the diagram relative category used to derive colim when
    // colim itself is not homotopical.
    std::optional<DeformationRetraction> retraction;
};

// hocolim_I -| Ho Delta between Ho(C^I) and Ho C.
struct HocolimStructure {
    RelCat rc;
    CatPtr shape;
    FunctorCatPtr CI;
    RelCat rc_diag;
    LocPtr loc_base;
    LocPtr loc_diag;
    Functor delta;
    Functor ho_delta;
    Adjunction adjunction;
    HocolimProvenance provenance = HocolimProvenance::Searched;
    std::optional<Adjunction> strict;  // colim -| Delta when every diagram has a colimit

    const Functor& hocolim() const { return adjunction.F; }
    const NatTrans& unit() const { return adjunction.unit; }
};

std::optional<HocolimStructure> build_hocolim(const RelCat& rc, const CatPtr& I, const HocolimOptions& opt = {});
// Same over a given diagram category, which must be C^I for C = rc.cat.
std::optional<HocolimStructure> build_hocolim(const RelCat& rc, const FunctorCatPtr& CI,
                                              const HocolimOptions& opt = {});

// Ho Delta o H_C = H_{C^I} o Delta.
bool ho_delta_commutes(const HocolimStructure& hs);
// Every unit component X -> Ho Delta(hocolim X) is initial among arrows into
// the image of Ho Delta: each g : X -> Ho Delta(c) factors uniquely.
bool unit_couniversal(const HocolimStructure& hs, std::string* witness = nullptr);

// The mate hocolim o H_{C^I} => H_C o colim of the identity
// H_{C^I} o Delta = Ho Delta o H_C; absent without a strict colimit.
std::optional<NatTrans> strict_comparison(const HocolimStructure& hs);

// Conjugate left adjoints of two structures on the same Ho Delta; the cell
// runs from b's hocolim to a's.
struct HocolimComparison {
    bool same_right_adjoint = false;
    NatTrans cell;
    bool iso = false;
};
HocolimComparison compare_hocolims(const HocolimStructure& a, const HocolimStructure& b);

struct FubiniVerdict {
    HocolimStructure flat;   // over I x J on C
    HocolimStructure inner;  // over J on C^I
    HocolimStructure outer;  // over I on C
    Functor twist;           // Ho(C^{IxJ}) -> Ho((C^I)^J)
    bool twist_iso = false;
    bool right_adjoints_equal = false;  // Ho twist o Ho Delta_{IxJ} = Ho Delta_J o Ho Delta_I
    std::string witness;
    Adjunction composite;    // hocolim_I hocolim_J -| Ho Delta_J Ho Delta_I
    NatTrans comparison;     // hocolim_{IxJ} o twist^-1 => hocolim_I o hocolim_J
    bool conjugate_iso = false;
};
FubiniVerdict fubini_check(const RelCat& rc, const CatPtr& I, const CatPtr& J, const HocolimOptions& opt = {});

// hocolim_I on rc assembled as Ho ev_J o hocolim_I o L(J_!)_* from the
// structure on rc^{Jcat}, transported along Ho Delta ev_J J_* = Ho Delta.
HocolimStructure transfer_hocolim(const RelCat& rc, const CatPtr& I, const CatPtr& Jcat, int J,
                                  const HocolimOptions& opt = {});

enum class PointwiseRoute { ViaJstar, ViaJshriek };
const char* pointwise_route_name(PointwiseRoute r);

struct NaturalitySquare {
    int j = -1;
    std::string id;
    bool commutes = false;
    std::string witness;  // first diagram where the square fails
};

// sigma_J (or beta_J) : hocolim o Ho ev_J => Ho ev_J o hocolim per object
// J of Jcat, with the naturality square for every j : J -> J'.
struct PointwisenessReport {
    PointwiseRoute route = PointwiseRoute::ViaJstar;
    std::shared_ptr<const HocolimStructure> base;      // on C
    std::shared_ptr<const HocolimStructure> diagrams;  // on C^Jcat
    FunctorCatPtr CJ;
    std::vector<int> objects;
    std::vector<NatTrans> cells;
    std::vector<bool> iso;
    std::vector<NaturalitySquare> naturality;
    std::vector<std::string> hypotheses;
    std::vector<bool> interchange_agrees;  // via J_*: horizontal and vertical-dual verdicts
    std::vector<bool> unit_equation;       // via J_!: Ho ev_J eta = Ho Delta beta_J o eta'_{Ho ev_J}
    std::vector<NatTrans> alpha;           // via J_!: hocolim L J_! => L J_! hocolim
    std::vector<bool> alpha_compatible;    // the composite-unit equation for alpha

    bool all_iso() const;
    bool natural() const;
};

// The naturality squares for a family of cells indexed like report.objects.
std::vector<NaturalitySquare> naturality_in_J(const PointwisenessReport& report, const std::vector<NatTrans>& cells);

PointwisenessReport pointwise_via_Jstar(const RelCat& rc, const CatPtr& I, const CatPtr& Jcat,
                                        const HocolimOptions& opt = {});
PointwisenessReport pointwise_via_Jshriek(const RelCat& rc, const CatPtr& I, const CatPtr& Jcat,
                                          const HocolimOptions& opt = {});

// With W = isos: for every J and diagram X,
// Ho ev_J(k'_X) o cell_{HX} = H(strict mate_X) o k_{ev_J X}, where k, k' are
// the strict comparisons and the strict mate is that of colim -| Delta
// against evaluation.
bool strict_degeneration(const PointwisenessReport& report, std::string* witness = nullptr);

// L J_! -| Ho ev_J with its unit checked through
// rho_F o H_C eta = (Ho ev_J) lambda o eta._{H_C}.
struct FFVerdict {
    bool ff = false;
    bool eta_iso = false;     // J_! fully faithful
    bool lambda_iso = false;
    bool equation = false;
    bool unit_iso = false;    // eta. invertible
    bool homotopical = false; // L J_! = Ho J_!
    std::string witness;
};
FFVerdict ff_LJshriek(const RelCat& rc, const CatPtr& Jcat, int J, const HocolimOptions& opt = {});

// C has n-fold powers for n <= max_n and they preserve weak equivalences.
bool stable_powers(const RelCat& rc, int max_n);

} // namespace catmate
