#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "covercurve/algebra.hpp"

namespace covercurve {

using BigInt = boost::multiprecision::cpp_int;

// Dense big-integer matrix, row major. Sized for the lattices that arise
// here (a few hundred rows/columns), not for serious number theory.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Row-style Hermite normal form: returns H with the same row span as M,
// pivots positive, entries above each pivot reduced, zero rows dropped.
IntMat hermite_normal_form(const IntMat& M);

// Basis of the integer kernel {x : M x = 0} as rows of the result.
IntMat integer_kernel(const IntMat& M);

// One integer solution of M x = b, if any.
std::optional<std::vector<BigInt>> solve_integer(const IntMat& M, const std::vector<BigInt>& b);

// Membership of v in the row lattice of M.
bool in_row_lattice(const IntMat& M, const std::vector<BigInt>& v);

// Z-span comparison of the G-translate lattices of two generator families in
// Z[G] ~ Z^{|G|}: span{g*a : g in G, a in gensA} vs the same for gensB.
bool lattice_equal(const FiniteGroup& G, const std::vector<GroupRingElt>& gensA,
                   const std::vector<GroupRingElt>& gensB);

}  // namespace covercurve
