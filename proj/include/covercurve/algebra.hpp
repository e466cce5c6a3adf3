#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace covercurve {

// Error taxonomy shared across the toolkit. The code string is stable and is
// what the CLI reports in JSON diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

using Elt = int;  // canonical dense index of a group element

// Finite group given by a verified multiplication table. Element 0 is always
// the identity. All higher-level structures (sheet labels, deck actions,
// group-ring coefficients) index into one of these.
class FiniteGroup {
public:
    FiniteGroup() = default;
    explicit FiniteGroup(std::vector<std::vector<Elt>> mul_table);

    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);  // order 2n
    static FiniteGroup symmetric(int n); // S_n via permutation generators
    // Enumerates the subgroup of S_degree generated by the given permutations
    // (one-line notation). Indices are assigned by BFS discovery order with
    // sorted generators, so the numbering is deterministic.
    static FiniteGroup from_permutations(int degree,
                                         const std::vector<std::vector<int>>& generators);

    int order() const { return static_cast<int>(mul_.size()); }
    Elt identity() const { return 0; }
    Elt mul(Elt a, Elt b) const { return mul_[a][b]; }
    Elt inv(Elt a) const { return inv_[a]; }
    Elt conj(Elt g, Elt a) const { return mul(mul(g, a), inv(g)); }
    int element_order(Elt a) const;

    // Elements g != 1 with g^2 = 1 (the index set of parity vectors).
    std::vector<Elt> order_two_elements() const;

    // FNV-1a over the multiplication table; embedded in serialized files to
    // catch cross-group index mixups.
    std::uint64_t hash() const { return hash_; }

    bool operator==(const FiniteGroup& o) const { return mul_ == o.mul_; }

private:
    void init_tables();
    std::vector<std::vector<Elt>> mul_;
    std::vector<Elt> inv_;
    std::uint64_t hash_ = 0;
};

// Sparse integral group-ring element. Zero coefficients are never stored.
class GroupRingElt {
public:
    GroupRingElt() = default;
    static GroupRingElt zero() { return {}; }
    static GroupRingElt unit(Elt g, std::int64_t c = 1);

    std::int64_t coeff(Elt g) const;
    void set_coeff(Elt g, std::int64_t c);
    void add_coeff(Elt g, std::int64_t c);
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Elt, std::int64_t>& coeffs() const { return coeffs_; }

    GroupRingElt operator+(const GroupRingElt& o) const;
    GroupRingElt operator-(const GroupRingElt& o) const;
    GroupRingElt operator-() const;
    bool operator==(const GroupRingElt& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const GroupRingElt& o) const { return !(*this == o); }

    std::string to_string(const FiniteGroup& G) const;

private:
    std::map<Elt, std::int64_t> coeffs_;
};

GroupRingElt mul(const FiniteGroup& G, const GroupRingElt& a, const GroupRingElt& b);
GroupRingElt scalar_mul(std::int64_t k, const GroupRingElt& a);

// The involution induced by g -> g^{-1}; an anti-automorphism of Z[G].
GroupRingElt involution(const FiniteGroup& G, const GroupRingElt& a);

// Subgroup as a sorted set of element indices, closure-verified on build.
class Subgroup {
public:
    Subgroup() = default;
    static Subgroup trivial(const FiniteGroup& G);
    static Subgroup whole(const FiniteGroup& G);
    static Subgroup generated(const FiniteGroup& G, const std::vector<Elt>& gens);
    // Wraps an element set, checking closure under product and inverse.
    static Subgroup from_elements(const FiniteGroup& G, std::set<Elt> elements);

    int order() const { return static_cast<int>(elements_.size()); }
    bool contains(Elt g) const { return elements_.count(g) != 0; }
    const std::set<Elt>& elements() const { return elements_; }
    bool is_trivial() const { return elements_.size() == 1; }

    bool is_cyclic(const FiniteGroup& G) const;
    // A generator when cyclic; -1 otherwise.
    Elt cyclic_generator(const FiniteGroup& G) const;

    bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

private:
    std::set<Elt> elements_;
};

// zeta_H = sum of the elements of H, the recurring stabilizer factor.
GroupRingElt zeta(const Subgroup& H);

// Right coset Hg as a sorted element set.
std::set<Elt> right_coset(const FiniteGroup& G, const Subgroup& H, Elt g);

// Double coset C g D with its canonical (minimum-index) representative.
struct DoubleCoset {
    std::set<Elt> elements;
    Elt representative = 0;  // min element index in the orbit

    bool contains(Elt g) const { return elements.count(g) != 0; }
    bool operator==(const DoubleCoset& o) const { return elements == o.elements; }
    bool operator<(const DoubleCoset& o) const { return representative < o.representative; }
};

DoubleCoset double_coset(const FiniteGroup& G, const Subgroup& C, Elt g, const Subgroup& D);

// S_{C,g} = Stab_{CxC}(g) for the action (c,d).g = c g d^{-1}, together with
// its graph-like projection, the involution iota, and the extension
// S~ = <g> |x S̄ of order 2|S|. Requires g of order 2.
struct TwistedStabilizer {
    std::vector<std::pair<Elt, Elt>> pairs;  // (c, d) with c g d^{-1} = g
    std::set<Elt> base;                      // projection to the first factor
    std::map<Elt, Elt> iota;                 // c -> d
    std::set<Elt> extension;                 // subgroup <base, g>
    Elt g = 0;

    int base_order() const { return static_cast<int>(base.size()); }
    int extension_order() const { return static_cast<int>(extension.size()); }
};

TwistedStabilizer twisted_stabilizer(const FiniteGroup& G, const Subgroup& C, Elt g);

}  // namespace covercurve
