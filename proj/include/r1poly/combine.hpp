#pragma once

#include <optional>
#include <span>
#include <vector>

#include "r1poly/r1.hpp"

namespace r1poly {

/// Coefficients of the three-term relation
///   (p_n lam + q_n) Q_{n+1} = (r_n lam^2 + s_n lam + t_n) Q_n
///                           + (u_n lam^2 + v_n lam + w_n) Q_{n-1}.
struct RecurrenceConstants {
    cplx p{}, q{}, r{}, s{}, t{}, u{}, v{}, w{};
};

/// Alpha sequence for Q_n = P_n + alpha_n P_{n-1}, plus the derived constants.
/// alpha[0..N]; consts[n] valid for 1 <= n <= N-1 (consts[0] unused);
/// p_of[n], q_of[n] valid for 1 <= n <= N; kappa[n] = rho_n ... rho_0 for 0 <= n <= N.
struct AlphaSeq {
    int order = 0;  // N
    bool common_zero_mode = false;
    std::vector<cplx> alpha;
    std::vector<RecurrenceConstants> consts;
    std::vector<cplx> p_of, q_of;
    std::vector<cplx> kappa;
};

/// Build the sequence that plants a common zero at lam = 1:
/// alpha_0 = tau_0/rho_0, alpha_1 = rho_0 (beta_0 - 1) unless overridden,
/// alpha_n = rho_{n-1} beta_{n-1} - rho_{n-1} + tau_{n-1}/alpha_{n-1} for n >= 2.
/// Requires gamma identically 0 and beta_0 away from {0, +1, -1}; an override
/// equal to rho_0 beta_0 is rejected because it kills q_1.
AlphaSeq build_alpha(const R1Params& params, int N,
                     std::optional<cplx> alpha1_override = std::nullopt);

/// Constants for arbitrary alpha and general (possibly nonzero) gamma,
/// valid whenever alpha[n-1..n+1] exist. Needs alpha.size() > n+1.
RecurrenceConstants general_constants(const R1Params& params, std::span<const cplx> alpha, int n);

/// Q_0 = 1, Q_n = P_n + alpha_n P_{n-1}.
std::vector<ComplexPoly> gen_q_direct(const std::vector<ComplexPoly>& P, const AlphaSeq& alpha);

/// Q_0..Q_N via the mixed recurrence (common-zero mode only):
///   Q_2     = q_1^{-1} (s_1 lam + t_1) Q_1 - tau_0 q_2 q_1^{-1} lam (lam - 1) Q_0
///   Q_{n+1} = (rho_n lam + t_n/q_n) Q_n + tau_{n-1} q_{n+1} q_n^{-1} lam Q_{n-1},  n >= 2.
std::vector<ComplexPoly> gen_q_mixed(const R1Params& params, const AlphaSeq& alpha, int N);

enum class CorollaryCase { none, alpha_eq_tau_over_rho, alpha_eq_rho_beta_gamma_zero };

struct CombinationReport {
    double max_abs_q_at_one = 0.0;   // max_n |Q_n(1)|, n >= 1
    bool common_zero_ok = false;
    double double_zero_residual = 0.0;  // |rho_1 alpha_1^2 - rho_0 beta_0 tau_1|
    bool double_zero_at_one = false;
    CorollaryCase corollary = CorollaryCase::none;
    bool deflated = false;           // clearance measured after deflating lam = 1
    double consecutive_clearance = 0.0;  // min distance between zero sets of Q_N, Q_{N-1}
};

CombinationReport validate_combination(const R1Params& params, const AlphaSeq& alpha,
                                       const std::vector<ComplexPoly>& Q);

}  // namespace r1poly
