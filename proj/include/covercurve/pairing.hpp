#pragma once

#include "covercurve/algebra.hpp"
#include "covercurve/homology.hpp"
#include "covercurve/surface.hpp"

namespace covercurve {

// Parity vector q(v) in (Z/2)^{G_2^*}, stored sparsely over nonzero bits.
struct ParityVector {
    std::map<Elt, int> bits;  // only order-2 elements, values 0/1 (zeros dropped)

    bool is_zero() const { return bits.empty(); }
    int bit(Elt g) const {
        auto it = bits.find(g);
        return it == bits.end() ? 0 : it->second;
    }
    void set_bit(Elt g, int b) {
        if (b % 2)
            bits[g] = 1;
        else
            bits.erase(g);
    }
    bool operator==(const ParityVector& o) const { return bits == o.bits; }
};

// <v,w> = sum_g (v, gw) g, computed from free realizations by the local
// formula with trivial zeta factors: each crossing adds sign * h1 h2^{-1}.
GroupRingElt pair_classes(const BandedSurface& surface, const CycleClass& v, const CycleClass& w);

// <v,v> from a G_v-invariant realization via the self-intersection formula
// zeta * sum_i (g_i - g_i^{-1}) * zeta over projection crossings.
GroupRingElt self_pair(const BandedSurface& surface, const CycleClass& v);

// q(v): per order-2 element, the mod-2 count of projection self-crossings of
// a G_v-invariant representative whose local sheet index is the double coset
// of that element. Zero vector when v = 0 mod 2.
ParityVector parity(const BandedSurface& surface, const CycleClass& v, unsigned variant = 0);

// (v, g w): integer intersection number, read off pair_classes.
std::int64_t twisted_int_pairing(const BandedSurface& surface, const CycleClass& v,
                                 const CycleClass& w, Elt g);

}  // namespace covercurve
