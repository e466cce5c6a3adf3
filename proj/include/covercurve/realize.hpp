#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "covercurve/conditions.hpp"
#include "covercurve/homology.hpp"
#include "covercurve/pairing.hpp"
#include "covercurve/surface.hpp"

namespace covercurve {

// One resolution of a projection self-crossing through a fresh basic
// 1-handle. The recorded delta is the exact homology change
// zeta_C (x + g' y) in the stabilized frame.
struct ResolutionStep {
    StabStep frame;
    Elt gprime = 0;
    Subgroup stab;      // C = G_delta at the time of the step
    CycleClass delta;   // class(after) - class(before), in the post frame
};

// Class-neutral stabilization used for connect-sums and reconnections.
struct BridgeStep {
    StabStep frame;
};

struct ResolveOutcome {
    BandedSurface surface;
    MulticurveDiagram curve;
    ResolutionStep step;
};

ResolveOutcome resolve_crossing(const BandedSurface& surface, const MulticurveDiagram& curve,
                                const CrossingRec& crossing, Elt gprime);

// Representative choice of Lemma-style greedy repair: given the positive
// double cosets of the crossings (as arbitrary representatives), returns
// representatives g_i' in the same cosets with sum (g_i' - g_i'^{-1}) = 0 and
// every order-2 element appearing an even number of times. The first
// `forced` entries are pinned to the given values.
std::vector<Elt> choose_reps(const FiniteGroup& G, const Subgroup& C, const std::vector<Elt>& reps,
                             std::size_t forced = 0);

// Feasibility oracle used by tests: exhaustive search over all
// representative tuples.
bool choose_reps_feasible_bruteforce(const FiniteGroup& G, const Subgroup& C,
                                     const std::vector<Elt>& reps);

struct UnitalOutcome {
    BandedSurface surface;
    MulticurveDiagram curve;
    std::vector<StabStep> steps;  // connector and bridge handles added
};

// Geometric realization of a purely-unital vector on 1-handle frames:
// w = sum over frames of (a_i x_i + b_i y_i) with unit coefficients. Errors:
// NotPurelyUnital when w is not of the required shape, ConditionsFail when
// isotropy/parity fail.
UnitalOutcome realize_purely_unital(const BandedSurface& surface, const CycleClass& w,
                                    const std::vector<StabStep>& frames);

struct CertificateCurveOutcome {
    BandedSurface surface;
    MulticurveDiagram curve;
    CycleClass u;
    std::vector<StabStep> steps;
    std::vector<ResolutionStep> resolutions;  // used while simplifying u
};

// Builds a relatively geometric u with <u,v> = zeta_v, stabilizing by a dual
// handle when needed and resolving the u-curve's own crossings.
CertificateCurveOutcome certificate_curve(const BandedSurface& surface, const CycleClass& v,
                                          const MulticurveDiagram& rep);

// Homology action of the lifted Dehn twist power: x +- (pair(x,t) * t)/|G_t|,
// division exact or NotDivisible.
CycleClass twist_apply(const BandedSurface& surface, const CycleClass& x, const CycleClass& t,
                       bool inverse);

struct Certificate {
    // surfaces: the final stabilized surface plus the chain of steps from the
    // input surface (for auditing and re-verification)
    BandedSurface final_surface;
    std::uint64_t base_token = 0;
    std::vector<StabStep> all_steps;
    CurveWord curve;       // delta_1: simple word with simple projection
    CycleClass claimed_v;  // target class, final frame
    CycleClass w;          // purely-unital correction, final frame
    CycleClass u;          // primitivity certificate class, final frame
    GroupRingElt zeta_v;
    Subgroup stabilizer_v;
    std::vector<ResolutionStep> resolutions;  // of delta_0, in order
};

struct Obstruction {
    std::string condition;  // isotropy | parity | primitivity | coherence | separating-image
    std::optional<ConditionReport> report;
};

using RealizeResult = std::variant<Certificate, Obstruction>;

// Full Theorem-B pipeline: condition checks, connected invariant
// representative, crossing resolutions, purely-unital realization,
// primitivity certificate, and the twist bookkeeping identity.
RealizeResult realize_class(const BandedSurface& surface, const CycleClass& v,
                            int max_handles = 64);

struct VerifyResult {
    bool ok = false;
    std::string diagnosis;  // empty when ok
};

VerifyResult verify_certificate(const Certificate& cert);

// Diagram of a word traversed once at projection level (used to check that
// a certificate's curve word has a simple projection).
MulticurveDiagram word_projection_diagram(const BandedSurface& surface,
                                          const std::vector<Pass>& word);

// delta_0 construction: connected G_v-invariant representative from the
// coherence data, with cover-level self-crossings removed by equivariant
// smoothing and reconnection. Returns the diagram plus any bridge handles it
// had to attach. Throws RealizationIncomplete when the heuristic fails.
struct EmbedOutcome {
    BandedSurface surface;
    MulticurveDiagram curve;
    std::vector<StabStep> bridges;
};
EmbedOutcome embedded_invariant_representative(const BandedSurface& surface, const CycleClass& v,
                                               int max_handles);

}  // namespace covercurve
