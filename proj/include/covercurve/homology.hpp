#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "covercurve/algebra.hpp"
#include "covercurve/lattice.hpp"
#include "covercurve/surface.hpp"

namespace covercurve {

// Element of H_1(X;Z) = ker(boundary: Z[G]^n -> Z[G]) in the coordinates
// (sheet g, band i) |-> coefficient of the band copy g*e_i. The boundary map
// sends e_i to phi_i - 1, so the cycle condition reads: for every sheet h,
// the signed pass counts incident to the disk copy h cancel.
struct CycleClass {
    std::uint64_t surface_token = 0;
    std::map<std::pair<Elt, int>, std::int64_t> coords;

    std::int64_t coeff(Elt g, int band) const;
    void add(Elt g, int band, std::int64_t c);
    bool is_zero() const { return coords.empty(); }
    bool zero_mod2() const;

    CycleClass operator+(const CycleClass& o) const;
    CycleClass operator-(const CycleClass& o) const;
    bool operator==(const CycleClass& o) const;
};

CycleClass zero_class(const BandedSurface& surface);
CycleClass unit_class(const BandedSurface& surface, Elt g, int band, std::int64_t c = 1);

// Left deck action: (g.v)_{h,i} = v_{g^{-1}h,i}.
CycleClass deck_act(const FiniteGroup& G, Elt g, const CycleClass& v);
// Z[G]-module action: a.v = sum_g a_g (g.v).
CycleClass module_act(const FiniteGroup& G, const GroupRingElt& a, const CycleClass& v);
CycleClass scalar_act(std::int64_t k, const CycleClass& v);

// Exact coordinate-wise division; throws NotDivisible.
CycleClass divide_exact(const CycleClass& v, std::int64_t d);

bool is_cycle(const BandedSurface& surface, const CycleClass& v);

// Coordinate-sum image in H_1(Y;Z) = Z^n.
std::vector<std::int64_t> augmentation(const BandedSurface& surface, const CycleClass& v);

struct StabilizerResult {
    Subgroup subgroup;
    bool cyclic = false;
    Elt generator = 0;  // meaningful when cyclic
};

StabilizerResult stabilizer(const BandedSurface& surface, const CycleClass& v);

// Class of a diagram: each pass contributes its full stabilizer orbit of
// band copies with the pass direction's sign.
CycleClass class_of(const BandedSurface& surface, const MulticurveDiagram& d);

// C-invariant realization of a C-invariant cycle. Strand multiplicities per
// (coset, band) equal the common coordinate; endpoint matching is the
// deterministic first-available rule per coset sheet. `variant` perturbs the
// matching (still deterministic) so tests can produce distinct realizations.
MulticurveDiagram realize(const BandedSurface& surface, const CycleClass& v, const Subgroup& C,
                          unsigned variant = 0);

// Hyperbolic classes spawned by a handle: x = drag * zeta_<g> * e_xi (the
// based elevation of the xi core), y = drag * e_eta.
std::pair<CycleClass, CycleClass> hyperbolic_basis(const BandedSurface& surface,
                                                   const StabStep& step);

// Reinterpret a class across a chain of stabilizations (band indices are
// stable; only the surface token changes). Throws FrameMismatch when the
// chain does not start at v's surface.
CycleClass include_class(const CycleClass& v, const std::vector<StabStep>& steps);

// Z-basis of the cycle lattice ker(boundary) as CycleClasses; rank is
// n|G| - |G| + 1.
std::vector<CycleClass> cycle_lattice_basis(const BandedSurface& surface);

// Coordinates of v over the full (g, band) index set, for lattice work.
std::vector<BigInt> dense_coords(const BandedSurface& surface, const CycleClass& v);

}  // namespace covercurve
