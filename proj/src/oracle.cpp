#include "covercurve/oracle.hpp"

#include <numeric>

namespace covercurve {

namespace {

// Branch-level instantiation of an overlay: for each sheet, the chords of
// each diagram whose branch set contains that sheet. Crossing enumeration
// then happens inside single disk copies, which is the definition.
struct LiftedChord {
    int diagram;
    int chord;
    StubPos tail, head;
    Elt sheet;  // actual branch sheet (not a coset representative)
};

std::vector<std::vector<LiftedChord>> lift_by_sheet(const Overlay& ov) {
    const FiniteGroup& G = ov.surface().group();
    std::vector<std::vector<LiftedChord>> per_sheet(G.order());
    for (int d = 0; d < 2; ++d) {
        const MulticurveDiagram& dg = ov.diagram(d);
        for (int ch = 0; ch < static_cast<int>(dg.chords.size()); ++ch) {
            auto [t, h] = ov.chord_ends(d, ch);
            for (Elt c : dg.stab.elements()) {
                Elt sheet = G.mul(c, dg.chords[ch].rep);
                per_sheet[sheet].push_back({d, ch, t, h, sheet});
            }
        }
    }
    return per_sheet;
}

}  // namespace

GroupRingElt oracle_pair(const BandedSurface& surface, const CycleClass& v, const CycleClass& w) {
    if (v.surface_token != surface.token() || w.surface_token != surface.token())
        fail("FrameMismatch", "pairing classes across surface generations");
    const FiniteGroup& G = surface.group();
    Subgroup triv = Subgroup::trivial(G);
    MulticurveDiagram dv = realize(surface, v, triv);
    MulticurveDiagram dw = realize(surface, w, triv);
    Overlay ov(surface, {&dv, &dw});
    GroupRingElt out;
    // (v, g w): translate the w-diagram by g on the left, then count crossings
    // sheet by sheet in the explicit cover.
    for (Elt g = 0; g < G.order(); ++g) {
        std::int64_t count = 0;
        for (Elt sheet = 0; sheet < G.order(); ++sheet) {
            for (int i = 0; i < static_cast<int>(dv.chords.size()); ++i) {
                if (dv.chords[i].rep != sheet) continue;
                auto [t1, h1] = ov.chord_ends(0, i);
                for (int j = 0; j < static_cast<int>(dw.chords.size()); ++j) {
                    if (G.mul(g, dw.chords[j].rep) != sheet) continue;
                    auto [t2, h2] = ov.chord_ends(1, j);
                    int sign = 0;
                    if (chords_cross(t1, h1, t2, h2, &sign)) count += sign;
                }
            }
        }
        out.add_coeff(g, count);
    }
    return out;
}

ParityVector oracle_parity(const BandedSurface& surface, const CycleClass& v) {
    const FiniteGroup& G = surface.group();
    ParityVector q;
    if (v.zero_mod2()) return q;
    StabilizerResult st = stabilizer(surface, v);
    if (!st.cyclic) fail("NonCyclicStabilizer", "parity needs a cyclic stabilizer");
    MulticurveDiagram d = realize(surface, v, st.subgroup);
    Overlay ov(surface, {&d, &d});
    const int n_chords = static_cast<int>(d.chords.size());
    for (Elt g : G.order_two_elements()) {
        // |gamma ∩ g gamma|: ordered branch pairs (strand of gamma, strand of
        // g gamma) meeting in one sheet; same-chord pairs are parallel copies
        std::int64_t points = 0;
        for (int i = 0; i < n_chords; ++i)
            for (int j = 0; j < n_chords; ++j) {
                if (i == j) continue;
                auto [t1, h1] = ov.chord_ends(0, i);
                auto [t2, h2] = ov.chord_ends(0, j);
                if (!chords_cross(t1, h1, t2, h2, nullptr)) continue;
                // sheets where branch i of gamma meets branch j of g*gamma
                for (Elt c : st.subgroup.elements()) {
                    Elt sheet = G.mul(c, d.chords[i].rep);
                    // need sheet in g * C * rep_j
                    Elt need = G.mul(G.inv(g), sheet);
                    Elt diff = G.mul(need, G.inv(d.chords[j].rep));
                    if (st.subgroup.contains(diff)) ++points;
                }
            }
        TwistedStabilizer ts = twisted_stabilizer(G, st.subgroup, g);
        if (points % ts.extension_order() != 0)
            fail("NotDivisible", "orbit count not divisible by |S~| in the oracle");
        q.set_bit(g, static_cast<int>((points / ts.extension_order()) % 2));
    }
    return q;
}

ElevationCensus oracle_elevation_census(const BandedSurface& surface,
                                        const std::vector<Pass>& word) {
    const FiniteGroup& G = surface.group();
    ElevationCensus out;
    // full preimage: strand (letter j, sheet s) -> (j+1, transport)
    const int k = static_cast<int>(word.size());
    std::vector<int> comp(static_cast<std::size_t>(k) * G.order(), -1);
    auto idx = [&](int j, Elt s) { return static_cast<std::size_t>(j) * G.order() + s; };
    for (Elt s0 = 0; s0 < G.order(); ++s0) {
        if (comp[idx(0, s0)] != -1) continue;
        int c = out.component_count++;
        int j = 0;
        Elt s = s0;
        while (comp[idx(j, s)] == -1) {
            comp[idx(j, s)] = c;
            s = surface.transport(s, word[j]);
            j = (j + 1) % k;
        }
    }
    out.component_stabilizers.resize(out.component_count, Subgroup::trivial(G));
    for (int c = 0; c < out.component_count; ++c) {
        std::set<Elt> stab;
        for (Elt g = 0; g < G.order(); ++g) {
            // g maps the component to the component containing the translated
            // start strand
            bool fixes = true;
            for (Elt s = 0; s < G.order() && fixes; ++s)
                if (comp[idx(0, s)] == c && comp[idx(0, G.mul(g, s))] != c) fixes = false;
            if (fixes) stab.insert(g);
        }
        out.component_stabilizers[c] = Subgroup::from_elements(G, std::move(stab));
    }
    return out;
}

}  // namespace covercurve
