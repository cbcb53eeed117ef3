#pragma once

#include "catmate/adjunction.hpp"
#include "catmate/category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace catmate {

enum class BCDirection { Horizontal, Vertical };
enum class BCRoute { Direct, FFRightAdjoints, Equivalences, FFLeftAdjoints, Interchange };
const char* route_name(BCRoute r);

struct BCReport {
    bool holds = false;
    NatTrans mate_cell;
    BCRoute route = BCRoute::Direct;
    std::string witness;          // first object where the mate is not invertible
    bool hypothesis_met = true;   // false when a sufficient criterion does not apply
    std::vector<std::string> notes;
};

// Adjunctions on the legs. Left ones are M -| X and N -| Y, right ones
// X -| S and Y -| T.
struct LegAdjunctions {
    std::optional<Adjunction> M_X;
    std::optional<Adjunction> N_Y;
    std::optional<Adjunction> X_S;
    std::optional<Adjunction> Y_T;
};

// Horizontal: the mate of tau (or, dual, of sigma) along the rows.
// Vertical: the same with the legs' adjunctions as rows; the non-dual
// vertical check mates sigma through M -| X and N -| Y, the dual one mates
// tau through X -| S and Y -| T. Missing cells are filled by mating.
BCReport bc_check(const MateSquare& sq, BCDirection dir, bool dual, const LegAdjunctions& legs = {});

// Vertical right mate rho : GT => SG' of tau.
NatTrans vertical_right_mate(const MateSquare& sq, const NatTrans& tau, const Adjunction& X_S,
                             const Adjunction& Y_T);

struct InterchangeCertificate {
    NatTrans sigma;               // horizontal left mate of tau
    NatTrans rho;                 // vertical right mate of tau
    Adjunction upper;             // YF -| GT
    Adjunction lower;             // F'X -| SG'
    bool conjugate = false;
    bool sharp_identity = false;  // sigma^# = rho_YF o G theta'_F o eta
    bool horizontal_holds = false;
    bool vertical_dual_holds = false;
    // ff-right-adjoints (tau invertible, X and T fully faithful) forces the
    // condition; equivalences (X and Y equivalences) makes it equivalent to
    // tau being invertible.
    std::optional<BCRoute> sufficient;
    std::string witness;
};
InterchangeCertificate bc_interchange(const MateSquare& sq, const Adjunction& X_S, const Adjunction& Y_T);

// Sufficient criteria from left adjoints of the legs. The mate is assembled
// as YF zeta o Y rho_X o theta'_F'X with rho the conjugate of tau for
// FM -| XG and NF' -| G'Y.
BCReport bc_sufficient(const MateSquare& sq, const Adjunction& M_X, const Adjunction& N_Y);

// Squares between the given adjunctions (any top, any bottom, every pair of
// legs, every invertible tau) whose horizontal mate is not invertible; the
// search stops after limit hits.
std::vector<MateSquare> bc_counterexamples(const std::vector<Adjunction>& adjunctions, std::size_t limit = 1,
                                           const Budget& budget = {});

// The square of a colimit adjunction against evaluation at J, on the full
// subcategories of diagrams that have colimits: top colim -| Delta on
// (C^J)^I, bottom colim -| Delta on C^I, both legs ev_J, filled with the
// identity. The mate at a diagram X is eps'_{(colim X)J} o colim(ev_J eta_X).
struct PointwiseColimitReport {
    int J = -1;
    BCReport report;
    std::size_t diagrams = 0;          // X : I -> C^J enumerated
    std::size_t with_colimit = 0;      // X with a colimit in C^J
    std::size_t pointwise_missing = 0; // ev_J X without a colimit in C
    std::size_t iso = 0;               // mate components that are invertible
};
std::vector<PointwiseColimitReport> pointwise_colimit_squares(const CatPtr& C, const CatPtr& I, const CatPtr& Jcat,
                                                              const Budget& budget = {});

} // namespace catmate
