#pragma once

#include <optional>
#include <string>

#include "covercurve/homology.hpp"
#include "covercurve/pairing.hpp"

namespace covercurve {

// Intermediate-cover data for the coherence check: the quotient X_v = X/G_v
// retracts to a graph with one vertex per right coset of G_v and one edge per
// (coset, band).
struct CosetGraph {
    std::vector<Elt> coset_reps;              // vertex -> min representative
    std::vector<int> coset_of;                // element -> vertex
    std::vector<std::vector<int>> edge_head;  // [vertex][band] -> head vertex
    std::vector<std::pair<int, int>> tree_parent;  // vertex -> (parent vertex, band), root = (-1,-1)
    std::vector<Elt> vertex_transport;        // monodromy of the tree path from the root
};

CosetGraph coset_graph(const BandedSurface& surface, const Subgroup& C);

struct PrimitivityWitness {
    bool pre_stabilization = false;   // I_v = Z[G] zeta_v on the given surface
    bool post_stabilization = false;  // after the dual-curve stabilization
    bool used_stabilization = false;
    std::vector<GroupRingElt> ideal_generators;  // pair(b_j, v) for the lattice basis
};

struct CoherenceWitness {
    bool divisible = false;
    bool generates = false;
    Elt image = 0;  // phi_{v,*}(f_*(v)/|G_v|)
};

struct ConditionReport {
    bool isotropy = false;
    GroupRingElt self_pairing;
    bool parity_ok = false;
    ParityVector parity_value;
    bool primitive = false;
    PrimitivityWitness primitivity;
    bool coherent = false;
    CoherenceWitness coherence;
    bool overall = false;
};

bool check_isotropy(const BandedSurface& surface, const CycleClass& v);
bool check_parity(const BandedSurface& surface, const CycleClass& v);
// Primitivity on the given surface; when it fails there, the report notes the
// paper's repair: re-check after the dual-curve stabilization built by
// realize_mod's certificate construction.
PrimitivityWitness check_primitivity(const BandedSurface& surface, const CycleClass& v);
CoherenceWitness check_coherence(const BandedSurface& surface, const CycleClass& v);

// Rejects classes whose projection to Y is separating (zero pairing with all
// of H_1(Y)); aggregates the four checks otherwise.
ConditionReport check_all(const BandedSurface& surface, const CycleClass& v);

bool separating_image(const BandedSurface& surface, const CycleClass& v);

}  // namespace covercurve
