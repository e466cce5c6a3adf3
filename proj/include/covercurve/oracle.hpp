#pragma once

#include "covercurve/homology.hpp"
#include "covercurve/pairing.hpp"
#include "covercurve/surface.hpp"

namespace covercurve {

// Brute-force ground truth computed in the explicit cover: |G| disk copies,
// branches instantiated per sheet, and every quantity recounted from the
// definitions instead of the local formulas.

struct ElevationCensus {
    int component_count = 0;
    std::vector<Subgroup> component_stabilizers;  // one per component
};

// <v,w> computed literally as sum_g (v, gw) g: for each deck element the
// signed crossing count of the lifted diagrams is taken sheet by sheet.
GroupRingElt oracle_pair(const BandedSurface& surface, const CycleClass& v, const CycleClass& w);

// q(v) computed as the mod-2 count of S~-orbits: counts |gamma ∩ g gamma|
// branch pair by branch pair, verifies divisibility by |S~|, divides.
ParityVector oracle_parity(const BandedSurface& surface, const CycleClass& v);

// Census of the full preimage of a curve word.
ElevationCensus oracle_elevation_census(const BandedSurface& surface,
                                        const std::vector<Pass>& word);

}  // namespace covercurve
