#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covercurve/algebra.hpp"

namespace covercurve {

// Base surface Y as a disk with n bands. Slots 0..2n-1 sit on the boundary
// circle in counterclockwise order; band i occupies slots slot[0], slot[1]
// and carries the classifying label phi. Arc s is the boundary arc from slot
// s to slot s+1 (mod 2n); boundary components are orbits of s -> partner(s+1).
//
// Conventions fixed throughout: sheet transport is right multiplication
// (entering band i at slot[0] maps sheet h to h*phi_i), the deck group acts
// by left multiplication, and the surface orientation is the ccw order of
// the slots.
struct Band {
    int slot0 = 0, slot1 = 0;
    Elt phi = 0;
};

struct Pass {
    int band = 0;
    int dir = +1;  // +1 enters slot0 and exits slot1; -1 the reverse
};

struct ValidationReport {
    int genus = 0;
    int boundary_components = 0;
    int delta0_face = 0;
    bool phi_surjective = false;
    bool delta0_trivial = false;  // phi(boundary word of Delta0) = 1
};

// Record of one basic g-handle attachment. The hyperbolic classes spawned by
// the handle live in homology.hpp (they need CycleClass).
struct StabStep {
    int xi_band = 0, eta_band = 0;
    Elt label = 0;     // g
    Elt drag = 0;      // k: the handle's based classes are k*e_xi, k*e_eta
    int insert_arc = 0;  // arc of the pre-surface that received the block
    std::uint64_t pre_token = 0, post_token = 0;
};

class BandedSurface {
public:
    BandedSurface(FiniteGroup G, std::vector<Band> bands, int delta0_arc);

    const FiniteGroup& group() const { return G_; }
    int band_count() const { return static_cast<int>(bands_.size()); }
    int slot_count() const { return 2 * band_count(); }
    const Band& band(int i) const { return bands_[i]; }
    int delta0_arc() const { return delta0_arc_; }
    std::uint64_t token() const { return token_; }

    // slot -> (band, end)
    int band_of_slot(int s) const { return slot_band_[s]; }
    int end_of_slot(int s) const { return slot_end_[s]; }
    int partner_slot(int s) const;

    int face_of_arc(int arc) const { return face_of_arc_[arc]; }
    int face_count() const { return face_count_; }
    // Boundary word of the face containing `arc`, starting from that arc.
    std::vector<Pass> boundary_word(int arc) const;

    Elt transport(Elt h, const Pass& p) const;
    Elt phi_of_word(const std::vector<Pass>& word) const;

    ValidationReport validate() const;  // throws on malformed input

    // Signed intersection matrix of the band core loops in H_1(Y).
    std::vector<std::vector<int>> base_intersection_matrix() const;

    // Attach a basic g-handle along the given arc of Delta0 (defaults to the
    // current distinguished arc). The xi/eta bands are appended as indices
    // n, n+1; old band indices are unchanged. `drag` shifts the handle's
    // based classes and is recorded in the step.
    std::pair<BandedSurface, StabStep> attach_basic_handle(Elt g, std::optional<int> at_arc = {},
                                                           Elt drag = 0) const;

private:
    void rebuild();
    FiniteGroup G_;
    std::vector<Band> bands_;
    int delta0_arc_ = 0;
    std::uint64_t token_ = 0;
    std::vector<int> slot_band_, slot_end_, face_of_arc_;
    int face_count_ = 0;
};

// A curve on Y as a cyclic band-pass word plus a base sheet for elevations.
struct CurveWord {
    std::vector<Pass> word;
    Elt base_sheet = 0;
};

// Oriented multicurve drawn on the disk: band passes plus disk chords. The
// diagram is equivariant under the stabilizer subgroup `stab` = C; every
// stored strand stands for the whole C-orbit of branches, so sheet labels
// are representatives of right cosets C*rep. Plain (trivial-C) diagrams are
// the special case used everywhere a free realization suffices.
struct Chord {
    int from_pass = 0;  // chord starts at the exit stub of this pass
    int to_pass = 0;    // and ends at the entry stub of this pass
    Elt rep = 0;        // sheet of the chord (coset representative)
};

struct MulticurveDiagram {
    std::uint64_t surface_token = 0;
    Subgroup stab;  // C
    std::vector<Pass> passes;
    std::vector<std::vector<int>> stacking;  // per band: pass ids, slot0-ccw order
    std::vector<Chord> chords;

    int out_chord(int pass) const;  // chord leaving `pass`
    int in_chord(int pass) const;
};

// Stub addresses used for crossing computations. Global ccw order is (slot
// ascending, pos ascending).
struct StubPos {
    int slot = 0;
    int pos = 0;
    bool operator<(const StubPos& o) const { return slot != o.slot ? slot < o.slot : pos < o.pos; }
    bool operator==(const StubPos& o) const { return slot == o.slot && pos == o.pos; }
};

struct CrossingRec {
    int diagram1 = 0, chord1 = 0;  // diagram index within the overlay
    int diagram2 = 0, chord2 = 0;
    int sign = 0;   // orientation of (chord1, chord2) at the crossing
    Elt rep1 = 0, rep2 = 0;
};

// Overlay of one or more diagrams on a shared surface. Earlier diagrams'
// passes stack before later ones within every band.
class Overlay {
public:
    Overlay(const BandedSurface& surface, std::vector<const MulticurveDiagram*> diagrams);

    StubPos entry_stub(int diagram, int pass) const;
    StubPos exit_stub(int diagram, int pass) const;
    std::pair<StubPos, StubPos> chord_ends(int diagram, int chord) const;  // (tail, head)

    // All crossings between chords of diagram d1 and diagram d2 (d1 == d2
    // enumerates unordered self-crossings once).
    std::vector<CrossingRec> crossings(int d1, int d2) const;

    const BandedSurface& surface() const { return surface_; }
    const MulticurveDiagram& diagram(int d) const { return *diagrams_[d]; }

private:
    const BandedSurface& surface_;
    std::vector<const MulticurveDiagram*> diagrams_;
    // per band: merged count, and per (diagram, pass): stacking index
    std::vector<int> band_total_;
    std::vector<std::vector<int>> merged_index_;  // [diagram][pass] -> index in band
};

bool chords_cross(const StubPos& t1, const StubPos& h1, const StubPos& t2, const StubPos& h2,
                  int* sign);

// Self-crossings of a single diagram.
std::vector<CrossingRec> self_crossings(const BandedSurface& surface,
                                        const MulticurveDiagram& d);

// Structural well-formedness: stacking covers passes exactly once, chords
// pair up pass ends bijectively, and chord reps are transport-consistent
// modulo the stabilizer.
void validate_diagram(const BandedSurface& surface, const MulticurveDiagram& d);

// Number of connected components of the actual multicurve in the cover
// (branch level), and of its projection (coset level).
int branch_components(const BandedSurface& surface, const MulticurveDiagram& d);
int projection_components(const MulticurveDiagram& d);

// The single elevation of `curve` based at its base sheet, traversing the
// word ord(phi(word)) times. Trivial-stabilizer diagram, laps stacked
// visit-major in each band.
MulticurveDiagram unroll_elevation(const BandedSurface& surface, const CurveWord& curve);

// Diagram of the band core loops (one pass per listed band); used for the
// base intersection matrix and nonseparating tests.
MulticurveDiagram core_diagram(const BandedSurface& surface, const std::vector<int>& bands);

}  // namespace covercurve
