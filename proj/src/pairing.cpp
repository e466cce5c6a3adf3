#include "covercurve/pairing.hpp"

namespace covercurve {

GroupRingElt pair_classes(const BandedSurface& surface, const CycleClass& v, const CycleClass& w) {
    if (v.surface_token != surface.token() || w.surface_token != surface.token())
        fail("FrameMismatch", "pairing classes across surface generations");
    const FiniteGroup& G = surface.group();
    Subgroup triv = Subgroup::trivial(G);
    MulticurveDiagram dv = realize(surface, v, triv);
    MulticurveDiagram dw = realize(surface, w, triv);
    Overlay ov(surface, {&dv, &dw});
    GroupRingElt out;
    for (const auto& c : ov.crossings(0, 1))
        out.add_coeff(G.mul(c.rep1, G.inv(c.rep2)), c.sign);
    return out;
}

GroupRingElt self_pair(const BandedSurface& surface, const CycleClass& v) {
    const FiniteGroup& G = surface.group();
    StabilizerResult st = stabilizer(surface, v);
    if (!st.cyclic) fail("NonCyclicStabilizer", "self-pairing needs a cyclic stabilizer");
    MulticurveDiagram d = realize(surface, v, st.subgroup);
    GroupRingElt inner;
    for (const auto& c : self_crossings(surface, d)) {
        Elt r = G.mul(c.rep1, G.inv(c.rep2));
        inner.add_coeff(r, c.sign);
        inner.add_coeff(G.inv(r), -c.sign);
    }
    GroupRingElt z = zeta(st.subgroup);
    return mul(G, mul(G, z, inner), z);
}

ParityVector parity(const BandedSurface& surface, const CycleClass& v, unsigned variant) {
    const FiniteGroup& G = surface.group();
    ParityVector q;
    if (v.zero_mod2()) return q;
    StabilizerResult st = stabilizer(surface, v);
    if (!st.cyclic) fail("NonCyclicStabilizer", "parity needs a cyclic stabilizer");
    MulticurveDiagram d = realize(surface, v, st.subgroup, variant);
    // count projection crossings per local sheet index double coset
    std::map<Elt, int> coset_counts;  // canonical representative -> count
    for (const auto& c : self_crossings(surface, d)) {
        Elt r = G.mul(c.rep1, G.inv(c.rep2));
        coset_counts[double_coset(G, st.subgroup, r, st.subgroup).representative] += 1;
    }
    for (Elt g : G.order_two_elements()) {
        Elt key = double_coset(G, st.subgroup, g, st.subgroup).representative;
        auto it = coset_counts.find(key);
        q.set_bit(g, it == coset_counts.end() ? 0 : it->second);
    }
    return q;
}

std::int64_t twisted_int_pairing(const BandedSurface& surface, const CycleClass& v,
                                 const CycleClass& w, Elt g) {
    return pair_classes(surface, v, w).coeff(g);
}

}  // namespace covercurve
