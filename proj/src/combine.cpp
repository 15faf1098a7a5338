#include "r1poly/combine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace r1poly {

namespace {

double nonzero_floor(const R1Params& params, int n) {
    double m = 1.0;
    m = std::max(m, std::abs(params.rho(n)));
    m = std::max(m, std::abs(params.tau(n)));
    m = std::max(m, std::abs(params.beta(n)));
    return 1e-12 * m;
}

}  // namespace

AlphaSeq build_alpha(const R1Params& params, int N, std::optional<cplx> alpha1_override) {
    if (N < 1) throw ConfigError("order must be >= 1");
    params.ensure(N);
    for (int n = 0; n < N; ++n) {
        if (std::abs(params.gamma(n)) > 1e-14) throw NonConstantGamma();
    }
    const cplx b0 = params.beta(0);
    const double floor0 = nonzero_floor(params, 0);
    if (std::abs(b0) <= floor0 || std::abs(b0 - 1.0) <= floor0 || std::abs(b0 + 1.0) <= floor0)
        throw Beta0Inadmissible();

    AlphaSeq seq;
    seq.order = N;
    seq.common_zero_mode = true;
    seq.alpha.resize(static_cast<size_t>(N) + 1);
    seq.alpha[0] = params.tau(0) / params.rho(0);
    cplx a1 = alpha1_override.value_or(params.rho(0) * (b0 - 1.0));
    // alpha_1 = rho_0 beta_0 makes q_1 = alpha_0 (alpha_1 - rho_0 beta_0) vanish
    if (std::abs(a1 - params.rho(0) * b0) <= floor0) throw QVanished(1);
    if (std::abs(a1) <= floor0) throw AlphaVanished(1);
    seq.alpha[1] = a1;
    for (int n = 2; n <= N; ++n) {
        const cplx prev = seq.alpha[n - 1];
        const cplx a = params.rho(n - 1) * params.beta(n - 1) - params.rho(n - 1) +
                       params.tau(n - 1) / prev;
        if (std::abs(a) <= nonzero_floor(params, n - 1)) throw AlphaVanished(n);
        seq.alpha[n] = a;
    }

    seq.p_of.resize(static_cast<size_t>(N) + 1);
    seq.q_of.resize(static_cast<size_t>(N) + 1);
    for (int n = 1; n <= N; ++n) {
        const cplx am1 = seq.alpha[n - 1];
        seq.p_of[n] = am1 * params.rho(n - 1) - params.tau(n - 1);
        seq.q_of[n] = am1 * (seq.alpha[n] - params.rho(n - 1) * params.beta(n - 1));
        if (n < N && std::abs(seq.q_of[n]) <= nonzero_floor(params, n - 1)) throw QVanished(n);
    }

    seq.kappa.resize(static_cast<size_t>(N) + 1);
    cplx acc = 1.0;
    for (int n = 0; n <= N; ++n) {
        acc *= params.rho(n);
        seq.kappa[n] = acc;
    }

    seq.consts.resize(static_cast<size_t>(N));
    for (int n = 1; n <= N - 1; ++n) {
        RecurrenceConstants c;
        c.p = seq.p_of[n];
        c.q = seq.q_of[n];
        c.r = params.rho(n) * c.p;
        const cplx am1 = seq.alpha[n - 1];
        const cplx an = seq.alpha[n];
        c.s = c.p * seq.q_of[n + 1] / an +
              am1 * (params.tau(n) - params.rho(n - 1) * params.beta(n - 1) * params.rho(n));
        c.t = -(am1 * params.rho(n - 1) * params.beta(n - 1) / an) * seq.q_of[n + 1];
        c.u = params.tau(n - 1) * seq.p_of[n + 1];
        c.v = params.tau(n - 1) * seq.q_of[n + 1];
        c.w = 0.0;
        seq.consts[n] = c;
    }
    return seq;
}

RecurrenceConstants general_constants(const R1Params& params, std::span<const cplx> alpha, int n) {
    if (n < 1) throw IndexOutOfRange(n);
    if (alpha.size() < static_cast<size_t>(n) + 2) throw IndexOutOfRange(n + 1);
    const cplx am1 = alpha[n - 1], an = alpha[n], ap1 = alpha[n + 1];
    const cplx rm1 = params.rho(n - 1), rn = params.rho(n);
    const cplx bm1 = params.beta(n - 1), bn = params.beta(n);
    const cplx tm1 = params.tau(n - 1), tn = params.tau(n);
    const cplx gm1 = params.gamma(n - 1), gn = params.gamma(n);

    RecurrenceConstants c;
    c.p = am1 * rm1 - tm1;
    c.q = am1 * (an - rm1 * bm1) + tm1 * gm1;
    c.r = rn * c.p;
    c.s = ap1 * am1 * rm1 - ap1 * tm1 + am1 * tn - am1 * rm1 * rn * (bn + bm1) +
          rn * tm1 * (bn + gm1);
    c.t = -am1 * rm1 * bm1 * (ap1 - rn * bn) + gm1 * tm1 * (ap1 - bn * rn) - am1 * tn * gn;
    const cplx p_next = an * rn - tn;
    const cplx q_next = an * (ap1 - rn * bn) + tn * gn;
    c.u = tm1 * p_next;
    c.v = tm1 * (q_next - gm1 * p_next);
    c.w = -tm1 * gm1 * q_next;
    return c;
}

std::vector<ComplexPoly> gen_q_direct(const std::vector<ComplexPoly>& P, const AlphaSeq& alpha) {
    const int N = alpha.order;
    if (static_cast<int>(P.size()) < N + 1) throw IndexOutOfRange(N);
    std::vector<ComplexPoly> Q(static_cast<size_t>(N) + 1);
    Q[0] = ComplexPoly::one();
    for (int n = 1; n <= N; ++n) Q[n] = P[n] + scaled(P[n - 1], alpha.alpha[n]);
    return Q;
}

std::vector<ComplexPoly> gen_q_mixed(const R1Params& params, const AlphaSeq& alpha, int N) {
    if (!alpha.common_zero_mode) throw ConfigError("mixed recurrence needs the common-zero sequence");
    if (N > alpha.order) throw IndexOutOfRange(N);
    std::vector<ComplexPoly> Q(static_cast<size_t>(N) + 1);
    Q[0] = ComplexPoly::one();
    if (N >= 1) Q[1] = ComplexPoly::linear(-params.rho(0) * params.beta(0) + alpha.alpha[1], params.rho(0));
    if (N >= 2) {
        const cplx q1 = alpha.q_of[1];
        const auto& c1 = alpha.consts[1];
        // q_1 Q_2 = (s_1 lam + t_1) Q_1 - tau_0 q_2 lam (lam - 1)
        ComplexPoly rhs = ComplexPoly::linear(c1.t, c1.s) * Q[1];
        ComplexPoly lam_lam_minus_one;
        lam_lam_minus_one.coeffs = {0.0, -1.0, 1.0};
        rhs = rhs + scaled(lam_lam_minus_one, -params.tau(0) * alpha.q_of[2]);
        Q[2] = scaled(rhs, 1.0 / q1);
    }
    for (int n = 2; n <= N - 1; ++n) {
        const cplx qn = alpha.q_of[n];
        const auto& cn = alpha.consts[n];
        ComplexPoly a = ComplexPoly::linear(cn.t / qn, params.rho(n)) * Q[n];
        ComplexPoly lam = ComplexPoly::linear(0.0, 1.0);
        ComplexPoly b = scaled(lam * Q[n - 1], params.tau(n - 1) * alpha.q_of[n + 1] / qn);
        Q[n + 1] = a + b;
    }
    return Q;
}

CombinationReport validate_combination(const R1Params& params, const AlphaSeq& alpha,
                                       const std::vector<ComplexPoly>& Q) {
    CombinationReport rep;
    const int N = std::min<int>(alpha.order, static_cast<int>(Q.size()) - 1);
    double worst = 0.0;
    double scale = 0.0;
    for (int n = 1; n <= N; ++n) {
        worst = std::max(worst, std::abs(evaluate(Q[n], 1.0)));
        scale = std::max(scale, coefficient_scale(Q[n]));
    }
    rep.max_abs_q_at_one = worst;
    rep.common_zero_ok = alpha.common_zero_mode && worst <= 1e-10 * std::max(1.0, scale);

    if (alpha.order >= 1) {
        const cplx res = params.rho(1) * alpha.alpha[1] * alpha.alpha[1] -
                         params.rho(0) * params.beta(0) * params.tau(1);
        rep.double_zero_residual = std::abs(res);
        rep.double_zero_at_one = rep.double_zero_residual <= 1e-12 * std::max(1.0, std::abs(params.tau(1)));
    }

    for (int n = 1; n <= alpha.order && rep.corollary == CorollaryCase::none; ++n) {
        const double fl = nonzero_floor(params, n);
        if (std::abs(alpha.alpha[n] - params.tau(n) / params.rho(n)) <= fl)
            rep.corollary = CorollaryCase::alpha_eq_tau_over_rho;
        else if (std::abs(alpha.alpha[n] - params.rho(n - 1) * params.beta(n - 1)) <= fl &&
                 std::abs(params.gamma(n - 1)) <= 1e-14)
            rep.corollary = CorollaryCase::alpha_eq_rho_beta_gamma_zero;
    }

    if (N >= 2) {
        ComplexPoly qn = Q[N], qm = Q[N - 1];
        if (alpha.common_zero_mode) {
            qn = deflate_at(qn, 1.0, 1e-8);
            qm = deflate_at(qm, 1.0, 1e-8);
            rep.deflated = true;
        }
        auto zn = roots(qn);
        auto zm = roots(qm);
        double clearance = std::numeric_limits<double>::infinity();
        for (const auto& a : zn)
            for (const auto& b : zm) clearance = std::min(clearance, std::abs(a - b));
        rep.consecutive_clearance = zn.empty() || zm.empty() ? 0.0 : clearance;
    }
    return rep;
}

}  // namespace r1poly
