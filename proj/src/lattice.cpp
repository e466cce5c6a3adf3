#include "covercurve/lattice.hpp"

#include <algorithm>

namespace covercurve {

namespace {

// Reduce rows below `top` so a single pivot remains in column `col`,
// accumulating the same operations on an optional companion matrix.
void eliminate_column(IntMat& M, IntMat* U, int top, int col) {
    for (int r = top + 1; r < M.rows; ++r) {
        while (M.at(r, col) != 0) {
            if (M.at(top, col) == 0) {
                for (int c = 0; c < M.cols; ++c) std::swap(M.at(top, c), M.at(r, c));
                if (U)
                    for (int c = 0; c < U->cols; ++c) std::swap(U->at(top, c), U->at(r, c));
                continue;
            }
            BigInt q = M.at(r, col) / M.at(top, col);
            for (int c = 0; c < M.cols; ++c) M.at(r, c) -= q * M.at(top, c);
            if (U)
                for (int c = 0; c < U->cols; ++c) U->at(r, c) -= q * U->at(top, c);
            if (M.at(r, col) != 0) {
                for (int c = 0; c < M.cols; ++c) std::swap(M.at(top, c), M.at(r, c));
                if (U)
                    for (int c = 0; c < U->cols; ++c) std::swap(U->at(top, c), U->at(r, c));
            }
        }
    }
}

// Row HNF with optional transform tracking: U * original = result.
IntMat hnf_with_transform(IntMat M, IntMat* U) {
    if (U) {
        *U = IntMat(M.rows, M.rows);
        for (int i = 0; i < M.rows; ++i) U->at(i, i) = 1;
    }
    int row = 0;
    for (int col = 0; col < M.cols && row < M.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < M.rows; ++r)
            if (M.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = 0; c < M.cols; ++c) std::swap(M.at(row, c), M.at(pivot, c));
            if (U)
                for (int c = 0; c < U->cols; ++c) std::swap(U->at(row, c), U->at(pivot, c));
        }
        eliminate_column(M, U, row, col);
        if (M.at(row, col) < 0) {
            for (int c = 0; c < M.cols; ++c) M.at(row, c) = -M.at(row, c);
            if (U)
                for (int c = 0; c < U->cols; ++c) U->at(row, c) = -U->at(row, c);
        }
        for (int r = 0; r < row; ++r) {
            BigInt q;
            // floor division so entries above the pivot land in [0, pivot)
            BigInt num = M.at(r, col), den = M.at(row, col);
            q = num / den;
            if (num % den < 0) q -= 1;
            if (q != 0) {
                for (int c = 0; c < M.cols; ++c) M.at(r, c) -= q * M.at(row, c);
                if (U)
                    for (int c = 0; c < U->cols; ++c) U->at(r, c) -= q * U->at(row, c);
            }
        }
        ++row;
    }
    M.rows = row;  // zero rows (and their transform rows) are kept separately by callers
    M.a.resize(static_cast<std::size_t>(row) * M.cols);
    return M;
}

}  // namespace

IntMat hermite_normal_form(const IntMat& M) { return hnf_with_transform(M, nullptr); }

IntMat integer_kernel(const IntMat& M) {
    // Kernel of x -> x M? We want {x row vec : M x^T = 0}; work with columns of
    // M as the constraints. Transpose so rows of T are variables' coefficient
    // patterns, then run HNF with transform on T: zero rows of HNF correspond
    // to kernel combinations recorded in U.
    IntMat T(M.cols, M.rows);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) T.at(c, r) = M.at(r, c);
    IntMat U;
    IntMat H = hnf_with_transform(T, &U);
    // Rows of U beyond H.rows map onto zero rows: they span the kernel.
    IntMat K(M.cols - H.rows, M.cols);
    for (int r = H.rows; r < M.cols; ++r)
        for (int c = 0; c < M.cols; ++c) K.at(r - H.rows, c) = U.at(r, c);
    return K;
}

std::optional<std::vector<BigInt>> solve_integer(const IntMat& M, const std::vector<BigInt>& b) {
    // Solve M x = b by reducing [M^T | I] and expressing b over the row basis.
    IntMat T(M.cols, M.rows);
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) T.at(c, r) = M.at(r, c);
    IntMat U;
    IntMat H = hnf_with_transform(T, &U);  // U * M^T = H
    std::vector<BigInt> x(M.cols, 0), rem = b;
    for (int r = 0; r < H.rows; ++r) {
        int piv = -1;
        for (int c = 0; c < H.cols; ++c)
            if (H.at(r, c) != 0) {
                piv = c;
                break;
            }
        if (piv < 0) continue;
        if (rem[piv] % H.at(r, piv) != 0) continue;  // try further rows (staircase: won't help, but harmless)
        BigInt q = rem[piv] / H.at(r, piv);
        if (q == 0) continue;
        for (int c = 0; c < H.cols; ++c) rem[c] -= q * H.at(r, c);
        for (int c = 0; c < U.cols; ++c) x[c] += q * U.at(r, c);
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return x;
}

bool in_row_lattice(const IntMat& M, const std::vector<BigInt>& v) {
    IntMat H = hermite_normal_form(M);
    std::vector<BigInt> rem = v;
    for (int r = 0; r < H.rows; ++r) {
        int piv = -1;
        for (int c = 0; c < H.cols; ++c)
            if (H.at(r, c) != 0) {
                piv = c;
                break;
            }
        if (piv < 0) continue;
        if (rem[piv] % H.at(r, piv) != 0) return false;
        BigInt q = rem[piv] / H.at(r, piv);
        for (int c = 0; c < H.cols; ++c) rem[c] -= q * H.at(r, c);
    }
    for (const auto& x : rem)
        if (x != 0) return false;
    return true;
}

bool lattice_equal(const FiniteGroup& G, const std::vector<GroupRingElt>& gensA,
                   const std::vector<GroupRingElt>& gensB) {
    auto translates = [&](const std::vector<GroupRingElt>& gens) {
        IntMat M(static_cast<int>(gens.size()) * G.order(), G.order());
        int r = 0;
        for (const auto& a : gens)
            for (Elt g = 0; g < G.order(); ++g) {
                for (auto& [h, c] : a.coeffs()) M.at(r, G.mul(g, h)) = c;
                ++r;
            }
        return hermite_normal_form(M);
    };
    IntMat HA = translates(gensA), HB = translates(gensB);
    if (HA.rows != HB.rows || HA.cols != HB.cols) return false;
    return HA.a == HB.a;
}

}  // namespace covercurve
