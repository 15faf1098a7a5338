#include "r1poly/pencil.hpp"

#include <cmath>

namespace r1poly {

PencilPair build_pencil(const R1Params& params, const AlphaSeq& alpha, int n) {
    if (n < 1) throw ConfigError("pencil order must be >= 1");
    if (n > alpha.order) throw IndexOutOfRange(n);
    PencilPair pc;
    pc.n = n;
    pc.G = CMat(n);
    pc.H = CMat(n);
    pc.G.at(1, 1) = params.rho(0);
    pc.H.at(1, 1) = params.rho(0);
    if (n == 1) return pc;

    const cplx q1 = alpha.q_of[1];
    pc.G.at(1, 2) = params.tau(0) * alpha.q_of[2] / q1;
    pc.G.at(2, 2) = alpha.consts[1].s / q1;
    for (int k = 2; k <= n; ++k) pc.G.at(k, k - 1) = 1.0;
    for (int k = 3; k <= n; ++k) pc.G.at(k, k) = params.rho(k - 1);

    for (int k = 2; k <= n; ++k) pc.H.at(k, k) = -alpha.consts[k - 1].t / alpha.q_of[k - 1];
    for (int j = 1; j <= n - 1; ++j)
        pc.H.at(j, j + 1) = params.tau(j - 1) * alpha.q_of[j + 1] / alpha.q_of[j];
    return pc;
}

cplx pencil_det_g(const PencilPair& pencil) {
    const int n = pencil.n;
    if (n == 1) return pencil.G.at(1, 1);
    cplx det = pencil.G.at(1, 1) * pencil.G.at(2, 2) - pencil.G.at(1, 2);
    for (int k = 3; k <= n; ++k) det *= pencil.G.at(k, k);
    return det;
}

CMat spectral_matrix(const PencilPair& pencil) {
    const int n = pencil.n;
    CMat D(n);
    if (n == 1) {
        D.at(1, 1) = pencil.H.at(1, 1) / pencil.G.at(1, 1);
        return D;
    }
    const cplx g11 = pencil.G.at(1, 1);
    const cplx g12 = pencil.G.at(1, 2);
    const cplx g22 = pencil.G.at(2, 2);
    const cplx head = g11 * g22 - g12;
    if (std::abs(head) < 1e-300) throw SingularMatrix();
    for (int col = 1; col <= n; ++col) {
        const cplx h1 = pencil.H.at(1, col);
        const cplx h2 = pencil.H.at(2, col);
        // 2x2 head with G(2,1) = 1, then forward substitution down the diagonal
        const cplx x1 = (g22 * h1 - g12 * h2) / head;
        const cplx x2 = (g11 * h2 - h1) / head;
        D.at(1, col) = x1;
        D.at(2, col) = x2;
        cplx x_prev = x2;
        for (int k = 3; k <= n; ++k) {
            const cplx hk = pencil.H.at(k, col);
            const cplx gkk = pencil.G.at(k, k);
            if (std::abs(gkk) < 1e-300) throw SingularMatrix();
            const cplx xk = (hk - x_prev) / gkk;
            D.at(k, col) = xk;
            x_prev = xk;
        }
    }
    return D;
}

CMat transpose(const CMat& M) {
    CMat T(M.n);
    for (int i = 1; i <= M.n; ++i)
        for (int j = 1; j <= M.n; ++j) T.at(j, i) = M.at(i, j);
    return T;
}

ComplexPoly charpoly_hessenberg(const CMat& M) {
    const int n = M.n;
    std::vector<ComplexPoly> p(static_cast<size_t>(n) + 1);
    p[0] = ComplexPoly::one();
    for (int k = 1; k <= n; ++k) {
        ComplexPoly acc = ComplexPoly::linear(-M.at(k, k), 1.0) * p[k - 1];
        cplx subprod = 1.0;
        for (int j = k - 1; j >= 1; --j) {
            subprod *= M.at(j + 1, j);
            acc = acc + scaled(p[j - 1], -M.at(j, k) * subprod);
        }
        p[k] = acc;
    }
    return p[n];
}

ComplexPoly pencil_charpoly(const PencilPair& pencil) {
    return charpoly_hessenberg(transpose(spectral_matrix(pencil)));
}

}  // namespace r1poly
