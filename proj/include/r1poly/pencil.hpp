#pragma once

#include <vector>

#include "r1poly/combine.hpp"

namespace r1poly {

/// Dense row-major n x n complex matrix, 1-based accessors to mirror the
/// banded structure described below.
struct CMat {
    int n = 0;
    std::vector<cplx> a;

    explicit CMat(int dim = 0) : n(dim), a(static_cast<size_t>(dim) * dim, cplx(0.0)) {}
    cplx& at(int i, int j) { return a[static_cast<size_t>(i - 1) * n + (j - 1)]; }
    const cplx& at(int i, int j) const { return a[static_cast<size_t>(i - 1) * n + (j - 1)]; }
};

/// Q_n(lam) = det(lam G - H) with G lower triangular (unit subdiagonal from
/// row 2 plus one fill-in G(1,2)) and H upper bidiagonal.
struct PencilPair {
    int n = 0;
    CMat G, H;
};

PencilPair build_pencil(const R1Params& params, const AlphaSeq& alpha, int n);

/// det G_n; equals the leading coefficient kappa_{n-1} of Q_n.
cplx pencil_det_g(const PencilPair& pencil);

/// D = G^{-1} H via structured column solves; the result is lower Hessenberg.
CMat spectral_matrix(const PencilPair& pencil);

/// Characteristic polynomial det(lam I - M) of an upper Hessenberg matrix via
/// the leading-principal-minor recursion. spectral_matrix output must be
/// transposed first; charpoly_hessenberg(transpose(D)) equals Q_n / kappa_{n-1}.
ComplexPoly charpoly_hessenberg(const CMat& M);

CMat transpose(const CMat& M);

/// Monic charpoly of D for the pencil; eigenvalues of D are the zeros of Q_n.
ComplexPoly pencil_charpoly(const PencilPair& pencil);

}  // namespace r1poly
