#pragma once

#include <vector>

#include "r1poly/pencil.hpp"

namespace r1poly {

/// Laurent-side machinery built on top of a common-zero sequence.
/// sigma_l(k) = (-lam)^{-k} Q_k(lam)
/// sigma_r(0) = 1, sigma_r(k) = -Q_k(lam) / ((lam - 1) K_k) with
///   K_k = (tau_0 ... tau_{k-1}) q_{k+1} / q_1.
/// chi families couple consecutive sigmas through the pencil columns.
class LaurentContext {
public:
    LaurentContext(R1Params params, AlphaSeq alpha, std::vector<ComplexPoly> Q);

    const R1Params& params() const { return params_; }
    const AlphaSeq& alpha() const { return alpha_; }
    const std::vector<ComplexPoly>& Q() const { return Q_; }
    int max_order() const { return static_cast<int>(Q_.size()) - 1; }

    cplx K(int k) const;
    cplx sigma_l(int k, cplx lam) const;
    cplx sigma_r(int k, cplx lam) const;
    cplx sigma_r_prime(int k, cplx lam) const;
    cplx chi_l(int k, cplx lam) const;
    cplx chi_r(int k, cplx lam) const;

    std::vector<cplx> sigma_l_vec(int n, cplx lam) const;
    std::vector<cplx> sigma_r_vec(int n, cplx lam) const;
    /// Row vector sigma_l_vec(n, lam) * G_n; truncated chi ladder.
    std::vector<cplx> chi_tilde_vec(int n, cplx lam) const;

    /// tau_{n-1} q_{n+1} / q_n, the coupling constant of the truncated pencil.
    cplx coupling(int n) const;

    /// Bilinear form sigma_l_vec(lam) G_n sigma_r_vec(omega), done as an
    /// explicit product, and its closed form
    ///   [lam sigma_l(n)(lam) sigma_r(n-1)(omega)
    ///    + coupling(n) sigma_r(n)(omega) sigma_l(n-1)(lam)] / (omega - lam).
    cplx kernel_product(int n, cplx lam, cplx omega) const;
    cplx kernel_closed(int n, cplx lam, cplx omega) const;
    /// omega -> lam limit of the closed form.
    cplx kernel_confluent(int n, cplx lam) const;

    /// 1 / [coupling(n) sigma_r_prime(n, at_j) sigma_l(n-1, at_k)].
    cplx weight(int n, cplx at_j, cplx at_k) const;

private:
    R1Params params_;
    AlphaSeq alpha_;
    std::vector<ComplexPoly> Q_;
    std::vector<ComplexPoly> Qp_;  // derivatives
    mutable std::vector<cplx> tau_prod_;  // tau_0 ... tau_{k-1}, index k
};

/// Zeros of Q_n with lam = 1 removed by deflation; size n-1, sorted by
/// principal argument. residuals are |Q_n(z)| at the polished points.
struct ZeroSet {
    int n = 0;
    std::vector<cplx> zeros;
    std::vector<double> residuals;
};

ZeroSet interior_zeros(const LaurentContext& ctx, int n);

struct BiorthReport {
    int n = 0;
    double max_offdiag = 0.0;
    double max_diag_err = 0.0;   // max |B_jj - 1|
    double cross_check = 0.0;    // max |(BA - I)_{jk}| for the rank-one split
};

/// B_{jk} = sum_i sigma_r(i, z_j) chi_tilde_i(z_k) weight(n, z_j, z_k) over
/// i = 0..n-1 and the n-1 interior zeros; identity matrix when everything holds.
BiorthReport biorthogonality(const LaurentContext& ctx, int n);

struct MomentReport {
    int n = 0;
    double max_offdiag = 0.0;  // worst |V_m(j,k)|, j != k, over m = 1..n
    double min_diag = 0.0;     // smallest |V_m(k,k)|
    double scale = 0.0;        // largest |V_m(k,k)|
    double max_diag_err = 0.0; // worst |V_m(k,k) - z_k^{m-n}|
};

/// V_m(j,k) = sum_i sigma_r(i, z_j) z_k^{m-n} chi_tilde_i(z_k) weight(n, z_j, z_k),
/// expected to be diag(z_k^{m-n}) for m = 1..n.
MomentReport moment_check(const LaurentContext& ctx, int n);

}  // namespace r1poly
