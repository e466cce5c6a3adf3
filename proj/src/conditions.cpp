#include "covercurve/conditions.hpp"

#include <algorithm>

namespace covercurve {

CosetGraph coset_graph(const BandedSurface& surface, const Subgroup& C) {
    const FiniteGroup& G = surface.group();
    CosetGraph cg;
    cg.coset_of.assign(G.order(), -1);
    for (Elt g = 0; g < G.order(); ++g) {
        if (cg.coset_of[g] != -1) continue;
        int vtx = static_cast<int>(cg.coset_reps.size());
        cg.coset_reps.push_back(g);
        for (Elt c : C.elements()) cg.coset_of[G.mul(c, g)] = vtx;
    }
    const int V = static_cast<int>(cg.coset_reps.size());
    cg.edge_head.assign(V, std::vector<int>(surface.band_count(), -1));
    for (int u = 0; u < V; ++u)
        for (int i = 0; i < surface.band_count(); ++i)
            cg.edge_head[u][i] = cg.coset_of[G.mul(cg.coset_reps[u], surface.band(i).phi)];
    // BFS spanning tree rooted at the coset of the identity, with lifted
    // transports: vertex_transport[u] is the end sheet of the lift of the
    // tree path that starts at sheet 1.
    cg.tree_parent.assign(V, {-1, -1});
    cg.vertex_transport.assign(V, 0);
    std::vector<int> order{cg.coset_of[0]};
    std::vector<bool> seen(V, false);
    seen[cg.coset_of[0]] = true;
    cg.vertex_transport[cg.coset_of[0]] = 0;
    for (std::size_t q = 0; q < order.size(); ++q) {
        int u = order[q];
        for (int i = 0; i < surface.band_count(); ++i) {
            // forward edge u -> head, backward edge head -> u
            for (int dir : {+1, -1}) {
                int w = dir > 0 ? cg.edge_head[u][i] : -1;
                if (dir < 0) {
                    // find sources mapping into u along band i: iterate all
                    // vertices is fine at this scale
                    for (int s = 0; s < V; ++s)
                        if (cg.edge_head[s][i] == u && !seen[s]) {
                            seen[s] = true;
                            cg.tree_parent[s] = {u, ~i};  // ~i marks a reversed edge
                            const FiniteGroup& GG = surface.group();
                            cg.vertex_transport[s] = GG.mul(cg.vertex_transport[u],
                                                            GG.inv(surface.band(i).phi));
                            order.push_back(s);
                        }
                    continue;
                }
                if (w >= 0 && !seen[w]) {
                    seen[w] = true;
                    cg.tree_parent[w] = {u, i};
                    cg.vertex_transport[w] =
                        surface.group().mul(cg.vertex_transport[u], surface.band(i).phi);
                    order.push_back(w);
                }
            }
        }
    }
    return cg;
}

bool separating_image(const BandedSurface& surface, const CycleClass& v) {
    std::vector<std::int64_t> u = augmentation(surface, v);
    auto J = surface.base_intersection_matrix();
    for (int i = 0; i < surface.band_count(); ++i) {
        std::int64_t dot = 0;
        for (int j = 0; j < surface.band_count(); ++j) dot += J[i][j] * u[j];
        if (dot != 0) return false;
    }
    return true;
}

bool check_isotropy(const BandedSurface& surface, const CycleClass& v) {
    return self_pair(surface, v).is_zero();
}

bool check_parity(const BandedSurface& surface, const CycleClass& v) {
    return parity(surface, v).is_zero();
}

PrimitivityWitness check_primitivity(const BandedSurface& surface, const CycleClass& v) {
    const FiniteGroup& G = surface.group();
    StabilizerResult st = stabilizer(surface, v);
    if (!st.cyclic) fail("NonCyclicStabilizer", "primitivity needs a cyclic stabilizer");
    PrimitivityWitness w;
    GroupRingElt zv = zeta(st.subgroup);
    std::vector<GroupRingElt> gens;
    for (const auto& b : cycle_lattice_basis(surface)) gens.push_back(pair_classes(surface, b, v));
    w.ideal_generators = gens;
    w.pre_stabilization = lattice_equal(G, gens, {zv});
    if (w.pre_stabilization) {
        w.post_stabilization = true;
        return w;
    }
    // The paper repairs primitivity by one stabilization carrying a dual
    // curve that pairs to zeta_v; algebraically that makes zeta_v land in the
    // pairing ideal of the stabilized surface. Try each handle label.
    w.used_stabilization = true;
    for (Elt h = 0; h < G.order() && !w.post_stabilization; ++h) {
        auto [surf2, step] = surface.attach_basic_handle(h);
        CycleClass v2 = include_class(v, {step});
        std::vector<GroupRingElt> gens2;
        for (const auto& b : cycle_lattice_basis(surf2)) gens2.push_back(pair_classes(surf2, b, v2));
        // translate lattice membership: zeta_v in the Z-span of {g * gen}
        IntMat M(static_cast<int>(gens2.size()) * G.order(), G.order());
        int r = 0;
        for (const auto& a : gens2)
            for (Elt g = 0; g < G.order(); ++g) {
                for (auto& [hh, c] : a.coeffs()) M.at(r, G.mul(g, hh)) += c;
                ++r;
            }
        std::vector<BigInt> target(G.order(), 0);
        for (auto& [hh, c] : zv.coeffs()) target[hh] = c;
        if (in_row_lattice(M, target)) w.post_stabilization = true;
    }
    return w;
}

CoherenceWitness check_coherence(const BandedSurface& surface, const CycleClass& v) {
    const FiniteGroup& G = surface.group();
    StabilizerResult st = stabilizer(surface, v);
    if (!st.cyclic) fail("NonCyclicStabilizer", "coherence needs a cyclic stabilizer");
    CoherenceWitness w;
    const int d = st.subgroup.order();
    CosetGraph cg = coset_graph(surface, st.subgroup);
    const int V = static_cast<int>(cg.coset_reps.size());
    // pushforward f_*(v) on the coset graph, then exact division by d
    std::vector<std::vector<std::int64_t>> push(V, std::vector<std::int64_t>(surface.band_count(), 0));
    for (auto& [k, c] : v.coords) push[cg.coset_of[k.first]][k.second] += c;
    for (auto& row : push)
        for (std::int64_t x : row)
            if (x % d != 0) {
                w.divisible = false;
                return w;
            }
    w.divisible = true;
    // phi_{v,*} of the divided cycle via the non-tree loop decomposition
    Elt image = G.identity();
    for (int u = 0; u < V; ++u)
        for (int i = 0; i < surface.band_count(); ++i) {
            if (cg.tree_parent[cg.edge_head[u][i]] == std::make_pair(u, i)) continue;  // tree edge
            if (cg.tree_parent[u] == std::make_pair(cg.edge_head[u][i], ~i)) continue; // reversed tree edge
            std::int64_t z = push[u][i] / d;
            if (z == 0) continue;
            // loop monodromy: t_u * phi_i * t_head^{-1}, an element of C
            Elt mono = G.mul(G.mul(cg.vertex_transport[u], surface.band(i).phi),
                             G.inv(cg.vertex_transport[cg.edge_head[u][i]]));
            if (!st.subgroup.contains(mono)) fail("Internal", "loop monodromy left the stabilizer");
            Elt power = G.identity();
            std::int64_t reps = ((z % G.order()) + G.order()) % G.order();
            for (std::int64_t k = 0; k < reps; ++k) power = G.mul(power, mono);
            // adjust for negative z: mono^z with z mod ord(mono) handled above
            if (z < 0) {
                // reps computed from z mod |G| already reflects the sign
            }
            image = G.mul(image, power);
        }
    w.image = image;
    w.generates = Subgroup::generated(G, {image}) == st.subgroup;
    return w;
}

ConditionReport check_all(const BandedSurface& surface, const CycleClass& v) {
    if (separating_image(surface, v))
        fail("SeparatingImage", "projection of the class to the base is separating");
    ConditionReport r;
    r.self_pairing = self_pair(surface, v);
    r.isotropy = r.self_pairing.is_zero();
    r.parity_value = parity(surface, v);
    r.parity_ok = r.parity_value.is_zero();
    r.primitivity = check_primitivity(surface, v);
    r.primitive = r.primitivity.post_stabilization;
    r.coherence = check_coherence(surface, v);
    r.coherent = r.coherence.divisible && r.coherence.generates;
    r.overall = r.isotropy && r.parity_ok && r.primitive && r.coherent;
    return r;
}

}  // namespace covercurve
