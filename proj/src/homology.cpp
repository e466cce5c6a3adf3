#include "covercurve/homology.hpp"

#include <algorithm>
#include <numeric>

namespace covercurve {

std::int64_t CycleClass::coeff(Elt g, int band) const {
    auto it = coords.find({g, band});
    return it == coords.end() ? 0 : it->second;
}

void CycleClass::add(Elt g, int band, std::int64_t c) {
    auto key = std::make_pair(g, band);
    auto it = coords.find(key);
    std::int64_t v = (it == coords.end() ? 0 : it->second) + c;
    if (v == 0) {
        if (it != coords.end()) coords.erase(it);
    } else {
        coords[key] = v;
    }
}

bool CycleClass::zero_mod2() const {
    for (auto& [k, c] : coords)
        if (c % 2 != 0) return false;
    return true;
}

CycleClass CycleClass::operator+(const CycleClass& o) const {
    if (surface_token != o.surface_token) fail("FrameMismatch", "adding classes across generations");
    CycleClass r = *this;
    for (auto& [k, c] : o.coords) r.add(k.first, k.second, c);
    return r;
}

CycleClass CycleClass::operator-(const CycleClass& o) const {
    if (surface_token != o.surface_token) fail("FrameMismatch", "subtracting classes across generations");
    CycleClass r = *this;
    for (auto& [k, c] : o.coords) r.add(k.first, k.second, -c);
    return r;
}

bool CycleClass::operator==(const CycleClass& o) const {
    return surface_token == o.surface_token && coords == o.coords;
}

CycleClass zero_class(const BandedSurface& surface) {
    CycleClass v;
    v.surface_token = surface.token();
    return v;
}

CycleClass unit_class(const BandedSurface& surface, Elt g, int band, std::int64_t c) {
    CycleClass v = zero_class(surface);
    v.add(g, band, c);
    return v;
}

CycleClass deck_act(const FiniteGroup& G, Elt g, const CycleClass& v) {
    CycleClass r;
    r.surface_token = v.surface_token;
    for (auto& [k, c] : v.coords) r.add(G.mul(g, k.first), k.second, c);
    return r;
}

CycleClass module_act(const FiniteGroup& G, const GroupRingElt& a, const CycleClass& v) {
    CycleClass r;
    r.surface_token = v.surface_token;
    for (auto& [g, cg] : a.coeffs())
        for (auto& [k, c] : v.coords) r.add(G.mul(g, k.first), k.second, cg * c);
    return r;
}

CycleClass scalar_act(std::int64_t k, const CycleClass& v) {
    CycleClass r;
    r.surface_token = v.surface_token;
    for (auto& [key, c] : v.coords) r.add(key.first, key.second, k * c);
    return r;
}

CycleClass divide_exact(const CycleClass& v, std::int64_t d) {
    CycleClass r;
    r.surface_token = v.surface_token;
    for (auto& [key, c] : v.coords) {
        if (c % d != 0) fail("NotDivisible", "coordinate not divisible");
        r.add(key.first, key.second, c / d);
    }
    return r;
}

bool is_cycle(const BandedSurface& surface, const CycleClass& v) {
    // boundary of g*e_i is (g*phi_i) - g as a 0-chain over disk copies
    std::map<Elt, std::int64_t> bd;
    const FiniteGroup& G = surface.group();
    for (auto& [k, c] : v.coords) {
        bd[G.mul(k.first, surface.band(k.second).phi)] += c;
        bd[k.first] -= c;
    }
    for (auto& [g, c] : bd)
        if (c != 0) return false;
    return true;
}

std::vector<std::int64_t> augmentation(const BandedSurface& surface, const CycleClass& v) {
    std::vector<std::int64_t> out(surface.band_count(), 0);
    for (auto& [k, c] : v.coords) out[k.second] += c;
    return out;
}

StabilizerResult stabilizer(const BandedSurface& surface, const CycleClass& v) {
    const FiniteGroup& G = surface.group();
    std::set<Elt> elems;
    for (Elt g = 0; g < G.order(); ++g)
        if (deck_act(G, g, v) == v) elems.insert(g);
    StabilizerResult r;
    r.subgroup = Subgroup::from_elements(G, std::move(elems));
    Elt gen = r.subgroup.cyclic_generator(G);
    r.cyclic = gen >= 0;
    r.generator = r.cyclic ? gen : 0;
    return r;
}

CycleClass class_of(const BandedSurface& surface, const MulticurveDiagram& d) {
    validate_diagram(surface, d);
    const FiniteGroup& G = surface.group();
    CycleClass v = zero_class(surface);
    for (std::size_t p = 0; p < d.passes.size(); ++p) {
        Elt entry = d.chords[d.in_chord(static_cast<int>(p))].rep;
        const Pass& ps = d.passes[p];
        // band copy is indexed by its slot0-side sheet
        Elt copy = ps.dir > 0 ? entry : G.mul(entry, G.inv(surface.band(ps.band).phi));
        for (Elt c : d.stab.elements()) v.add(G.mul(c, copy), ps.band, ps.dir);
    }
    return v;
}

namespace {
std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}
}  // namespace

MulticurveDiagram realize(const BandedSurface& surface, const CycleClass& v, const Subgroup& C,
                          unsigned variant) {
    const FiniteGroup& G = surface.group();
    if (v.surface_token != surface.token()) fail("FrameMismatch", "class/surface token mismatch");
    if (!is_cycle(surface, v)) fail("NotClosed", "coordinates are not a cycle");
    for (Elt c : C.elements())
        if (!(deck_act(G, c, v) == v)) fail("NotInvariant", "class is not C-invariant");

    // right cosets C\G with min representatives
    std::vector<Elt> coset_rep_of(G.order(), -1);
    std::vector<Elt> reps;
    for (Elt g = 0; g < G.order(); ++g) {
        if (coset_rep_of[g] != -1) continue;
        for (Elt c : C.elements()) coset_rep_of[G.mul(c, g)] = g;
        reps.push_back(g);
    }

    MulticurveDiagram d;
    d.surface_token = surface.token();
    d.stab = C;
    d.stacking.resize(surface.band_count());

    // one pass per |coset coordinate| unit; invariance makes the coordinate
    // constant on each coset, and one coset-level pass already contributes
    // the whole orbit of band copies
    for (int band = 0; band < surface.band_count(); ++band)
        for (Elt r : reps) {
            std::int64_t c = v.coeff(r, band);
            for (std::int64_t k = 0; k < (c > 0 ? c : -c); ++k) {
                int p = static_cast<int>(d.passes.size());
                d.passes.push_back({band, c > 0 ? +1 : -1});
                d.stacking[band].push_back(p);
            }
        }

    // stubs per coset sheet: exits produce chords, entries consume them
    struct StubRef {
        int pass;
        Elt rep;  // exact sheet rep carried by the chord at this stub
        StubPos where;
    };
    auto stub_of = [&](int p, bool entry) {
        const Pass& ps = d.passes[p];
        const Band& b = surface.band(ps.band);
        int idx = 0, m = static_cast<int>(d.stacking[ps.band].size());
        for (int i = 0; i < m; ++i)
            if (d.stacking[ps.band][i] == p) idx = i;
        bool at_slot0 = (ps.dir > 0) == entry;
        return at_slot0 ? StubPos{b.slot0, idx} : StubPos{b.slot1, m - 1 - idx};
    };
    std::map<Elt, std::vector<StubRef>> exits, entries;
    {
        std::size_t p = 0;
        for (int band = 0; band < surface.band_count(); ++band)
            for (Elt r : reps) {
                std::int64_t c = v.coeff(r, band);
                for (std::int64_t k = 0; k < (c > 0 ? c : -c); ++k, ++p) {
                    Elt t = surface.band(band).phi;
                    int pi = static_cast<int>(p);
                    if (c > 0) {
                        // entry sheet r at slot0, exit sheet r*phi at slot1
                        entries[coset_rep_of[r]].push_back({pi, r, stub_of(pi, true)});
                        exits[coset_rep_of[G.mul(r, t)]].push_back(
                            {pi, G.mul(r, t), stub_of(pi, false)});
                    } else {
                        // dir -1: entry at slot1 with sheet r*phi, exit sheet r
                        entries[coset_rep_of[G.mul(r, t)]].push_back(
                            {pi, G.mul(r, t), stub_of(pi, true)});
                        exits[coset_rep_of[r]].push_back({pi, r, stub_of(pi, false)});
                    }
                }
            }
    }
    d.chords.clear();
    auto by_pos = [](const StubRef& a, const StubRef& b) { return a.where < b.where; };
    for (auto& [sheet, outs] : exits) {
        auto& ins = entries[sheet];
        if (outs.size() != ins.size()) fail("NotClosed", "unbalanced stubs in a coset sheet");
        std::sort(outs.begin(), outs.end(), by_pos);
        std::sort(ins.begin(), ins.end(), by_pos);
        std::size_t m = outs.size();
        for (std::size_t k = 0; k < m; ++k) {
            std::size_t kk = variant == 0 ? k : (k + splitmix(variant * 977 + sheet) % m) % m;
            // chord carries the exit rep; the entry side may differ by an
            // element of C, which validate_diagram accepts
            d.chords.push_back({outs[k].pass, ins[kk].pass, outs[k].rep});
        }
    }
    validate_diagram(surface, d);
    return d;
}

std::pair<CycleClass, CycleClass> hyperbolic_basis(const BandedSurface& surface,
                                                   const StabStep& step) {
    if (surface.token() != step.post_token) fail("FrameMismatch", "frame/surface mismatch");
    const FiniteGroup& G = surface.group();
    CycleClass x = zero_class(surface), y = zero_class(surface);
    Elt g = step.label;
    Elt p = G.identity();
    do {
        x.add(G.mul(step.drag, p), step.xi_band, 1);
        p = G.mul(p, g);
    } while (p != G.identity());
    y.add(step.drag, step.eta_band, 1);
    return {x, y};
}

CycleClass include_class(const CycleClass& v, const std::vector<StabStep>& steps) {
    CycleClass r = v;
    for (const auto& s : steps) {
        if (r.surface_token != s.pre_token) fail("FrameMismatch", "stabilization chain mismatch");
        r.surface_token = s.post_token;
    }
    return r;
}

std::vector<CycleClass> cycle_lattice_basis(const BandedSurface& surface) {
    const FiniteGroup& G = surface.group();
    const int n = surface.band_count(), N = G.order();
    // boundary matrix: rows = sheets, cols = (band i, sheet g) pairs
    IntMat M(N, n * N);
    for (int i = 0; i < n; ++i)
        for (Elt g = 0; g < N; ++g) {
            int col = i * N + g;
            M.at(G.mul(g, surface.band(i).phi), col) += 1;
            M.at(g, col) -= 1;
        }
    IntMat K = integer_kernel(M);
    std::vector<CycleClass> basis;
    for (int r = 0; r < K.rows; ++r) {
        CycleClass v = zero_class(surface);
        for (int i = 0; i < n; ++i)
            for (Elt g = 0; g < N; ++g) {
                const BigInt& c = K.at(r, i * N + g);
                if (c != 0) v.add(g, i, static_cast<std::int64_t>(c));
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BigInt> dense_coords(const BandedSurface& surface, const CycleClass& v) {
    const int N = surface.group().order();
    std::vector<BigInt> out(static_cast<std::size_t>(surface.band_count()) * N);
    for (auto& [k, c] : v.coords) out[static_cast<std::size_t>(k.second) * N + k.first] = c;
    return out;
}

}  // namespace covercurve
