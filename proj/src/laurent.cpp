#include "r1poly/laurent.hpp"

#include <cmath>
#include <limits>

namespace r1poly {

LaurentContext::LaurentContext(R1Params params, AlphaSeq alpha, std::vector<ComplexPoly> Q)
    : params_(std::move(params)), alpha_(std::move(alpha)), Q_(std::move(Q)) {
    if (Q_.empty()) throw ConfigError("need at least Q_0");
    Qp_.reserve(Q_.size());
    for (const auto& q : Q_) Qp_.push_back(derivative(q));
}

cplx LaurentContext::K(int k) const {
    if (k < 1 || k + 1 > alpha_.order) throw IndexOutOfRange(k);
    if (tau_prod_.empty()) tau_prod_.push_back(1.0);
    while (static_cast<int>(tau_prod_.size()) <= k)
        tau_prod_.push_back(tau_prod_.back() * params_.tau(static_cast<int>(tau_prod_.size()) - 1));
    return tau_prod_[static_cast<size_t>(k)] * alpha_.q_of[static_cast<size_t>(k) + 1] /
           alpha_.q_of[1];
}

cplx LaurentContext::sigma_l(int k, cplx lam) const {
    if (k < 0 || k > max_order()) throw IndexOutOfRange(k);
    if (k == 0) return 1.0;
    if (std::abs(lam) < 1e-13) throw PoleAtZero();
    cplx denom = 1.0;
    const cplx m = -lam;
    for (int i = 0; i < k; ++i) denom *= m;
    return evaluate(Q_[static_cast<size_t>(k)], lam) / denom;
}

cplx LaurentContext::sigma_r(int k, cplx lam) const {
    if (k < 0 || k > max_order()) throw IndexOutOfRange(k);
    if (k == 0) return 1.0;
    if (std::abs(lam - 1.0) < 1e-12) throw PoleAtOne();
    return -evaluate(Q_[static_cast<size_t>(k)], lam) / ((lam - 1.0) * K(k));
}

cplx LaurentContext::sigma_r_prime(int k, cplx lam) const {
    if (k < 0 || k > max_order()) throw IndexOutOfRange(k);
    if (k == 0) return 0.0;
    if (std::abs(lam - 1.0) < 1e-12) throw PoleAtOne();
    const cplx lm1 = lam - 1.0;
    const cplx num = evaluate(Qp_[static_cast<size_t>(k)], lam) * lm1 -
                     evaluate(Q_[static_cast<size_t>(k)], lam);
    return -num / (K(k) * lm1 * lm1);
}

cplx LaurentContext::chi_l(int k, cplx lam) const {
    if (k == 0) return params_.rho(0) * sigma_l(0, lam) + sigma_l(1, lam);
    if (k == 1) {
        const cplx q1 = alpha_.q_of[1];
        return params_.tau(0) * alpha_.q_of[2] / q1 * sigma_l(0, lam) +
               alpha_.consts[1].s / q1 * sigma_l(1, lam) + sigma_l(2, lam);
    }
    return params_.rho(k) * sigma_l(k, lam) + sigma_l(k + 1, lam);
}

cplx LaurentContext::chi_r(int k, cplx lam) const {
    if (k == 0)
        return params_.rho(0) * sigma_r(0, lam) +
               params_.tau(0) * alpha_.q_of[2] / alpha_.q_of[1] * sigma_r(1, lam);
    if (k == 1) return sigma_r(0, lam) + alpha_.consts[1].s / alpha_.q_of[1] * sigma_r(1, lam);
    return sigma_r(k - 1, lam) + params_.rho(k) * sigma_r(k, lam);
}

std::vector<cplx> LaurentContext::sigma_l_vec(int n, cplx lam) const {
    std::vector<cplx> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = sigma_l(i, lam);
    return v;
}

std::vector<cplx> LaurentContext::sigma_r_vec(int n, cplx lam) const {
    std::vector<cplx> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = sigma_r(i, lam);
    return v;
}

std::vector<cplx> LaurentContext::chi_tilde_vec(int n, cplx lam) const {
    const auto pc = build_pencil(params_, alpha_, n);
    const auto sl = sigma_l_vec(n, lam);
    std::vector<cplx> out(static_cast<size_t>(n), cplx(0.0));
    for (int k = 1; k <= n; ++k) {
        cplx acc = 0.0;
        for (int i = 1; i <= n; ++i) acc += sl[static_cast<size_t>(i - 1)] * pc.G.at(i, k);
        out[static_cast<size_t>(k - 1)] = acc;
    }
    return out;
}

cplx LaurentContext::coupling(int n) const {
    if (n < 1 || n + 1 > alpha_.order) throw IndexOutOfRange(n);
    return params_.tau(n - 1) * alpha_.q_of[static_cast<size_t>(n) + 1] /
           alpha_.q_of[static_cast<size_t>(n)];
}

cplx LaurentContext::kernel_product(int n, cplx lam, cplx omega) const {
    const auto row = chi_tilde_vec(n, lam);
    const auto col = sigma_r_vec(n, omega);
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i) acc += row[static_cast<size_t>(i)] * col[static_cast<size_t>(i)];
    return acc;
}

cplx LaurentContext::kernel_closed(int n, cplx lam, cplx omega) const {
    if (std::abs(omega - lam) < 1e-12) throw CoincidentArguments();
    const cplx num = lam * sigma_l(n, lam) * sigma_r(n - 1, omega) +
                     coupling(n) * sigma_r(n, omega) * sigma_l(n - 1, lam);
    return num / (omega - lam);
}

cplx LaurentContext::kernel_confluent(int n, cplx lam) const {
    return lam * sigma_l(n, lam) * sigma_r_prime(n - 1, lam) +
           coupling(n) * sigma_r_prime(n, lam) * sigma_l(n - 1, lam);
}

cplx LaurentContext::weight(int n, cplx at_j, cplx at_k) const {
    const cplx denom = coupling(n) * sigma_r_prime(n, at_j) * sigma_l(n - 1, at_k);
    if (std::abs(denom) < 1e-300) throw DegenerateZero();
    return 1.0 / denom;
}

ZeroSet interior_zeros(const LaurentContext& ctx, int n) {
    if (n < 2 || n > ctx.max_order()) throw IndexOutOfRange(n);
    const auto& qn = ctx.Q()[static_cast<size_t>(n)];
    ComplexPoly reduced = deflate_at(qn, 1.0, 1e-8);
    auto z = roots(reduced);
    sort_by_argument(z);
    ZeroSet zs;
    zs.n = n;
    zs.zeros = std::move(z);
    zs.residuals.reserve(zs.zeros.size());
    const double scale = coefficient_scale(qn);
    for (const auto& zr : zs.zeros)
        zs.residuals.push_back(std::abs(evaluate(qn, zr)) / std::max(1.0, scale));
    return zs;
}

BiorthReport biorthogonality(const LaurentContext& ctx, int n) {
    BiorthReport rep;
    rep.n = n;
    const auto zs = interior_zeros(ctx, n);
    const int m = static_cast<int>(zs.zeros.size());

    std::vector<std::vector<cplx>> sr(static_cast<size_t>(m)), ct(static_cast<size_t>(m));
    std::vector<cplx> u(static_cast<size_t>(m)), v(static_cast<size_t>(m));
    const cplx C = ctx.coupling(n);
    for (int j = 0; j < m; ++j) {
        const cplx z = zs.zeros[static_cast<size_t>(j)];
        sr[static_cast<size_t>(j)] = ctx.sigma_r_vec(n, z);
        ct[static_cast<size_t>(j)] = ctx.chi_tilde_vec(n, z);
        u[static_cast<size_t>(j)] = 1.0 / (C * ctx.sigma_r_prime(n, z));
        v[static_cast<size_t>(j)] = 1.0 / ctx.sigma_l(n - 1, z);
    }

    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            cplx acc = 0.0;
            for (int i = 0; i < n; ++i)
                acc += sr[static_cast<size_t>(j)][static_cast<size_t>(i)] *
                       ct[static_cast<size_t>(k)][static_cast<size_t>(i)];
            const cplx b = acc * u[static_cast<size_t>(j)] * v[static_cast<size_t>(k)];
            if (j == k)
                rep.max_diag_err = std::max(rep.max_diag_err, std::abs(b - 1.0));
            else
                rep.max_offdiag = std::max(rep.max_offdiag, std::abs(b));
        }
    }

    // same identity with the roles of the two factorized matrices swapped
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
            cplx acc = 0.0;
            for (int i = 0; i < n; ++i)
                acc += ct[static_cast<size_t>(j)][static_cast<size_t>(i)] * v[static_cast<size_t>(j)] *
                       sr[static_cast<size_t>(k)][static_cast<size_t>(i)] * u[static_cast<size_t>(k)];
            const cplx expect = (j == k) ? cplx(1.0) : cplx(0.0);
            rep.cross_check = std::max(rep.cross_check, std::abs(acc - expect));
        }
    }
    return rep;
}

MomentReport moment_check(const LaurentContext& ctx, int n) {
    MomentReport rep;
    rep.n = n;
    const auto zs = interior_zeros(ctx, n);
    const int m = static_cast<int>(zs.zeros.size());
    const cplx C = ctx.coupling(n);

    std::vector<std::vector<cplx>> sr(static_cast<size_t>(m)), ct(static_cast<size_t>(m));
    std::vector<cplx> u(static_cast<size_t>(m)), v(static_cast<size_t>(m));
    for (int j = 0; j < m; ++j) {
        const cplx z = zs.zeros[static_cast<size_t>(j)];
        sr[static_cast<size_t>(j)] = ctx.sigma_r_vec(n, z);
        ct[static_cast<size_t>(j)] = ctx.chi_tilde_vec(n, z);
        u[static_cast<size_t>(j)] = 1.0 / (C * ctx.sigma_r_prime(n, z));
        v[static_cast<size_t>(j)] = 1.0 / ctx.sigma_l(n - 1, z);
    }

    rep.min_diag = std::numeric_limits<double>::infinity();
    for (int mm = 1; mm <= n; ++mm) {
        for (int k = 0; k < m; ++k) {
            const cplx zk = zs.zeros[static_cast<size_t>(k)];
            const cplx pw = std::pow(zk, cplx(static_cast<double>(mm - n)));
            for (int j = 0; j < m; ++j) {
                cplx acc = 0.0;
                for (int i = 0; i < n; ++i)
                    acc += sr[static_cast<size_t>(j)][static_cast<size_t>(i)] * pw *
                           ct[static_cast<size_t>(k)][static_cast<size_t>(i)];
                const cplx vjk = acc * u[static_cast<size_t>(j)] * v[static_cast<size_t>(k)];
                if (j == k) {
                    rep.min_diag = std::min(rep.min_diag, std::abs(vjk));
                    rep.scale = std::max(rep.scale, std::abs(vjk));
                    rep.max_diag_err = std::max(rep.max_diag_err, std::abs(vjk - pw));
                } else {
                    rep.max_offdiag = std::max(rep.max_offdiag, std::abs(vjk));
                }
            }
        }
    }
    return rep;
}

}  // namespace r1poly
