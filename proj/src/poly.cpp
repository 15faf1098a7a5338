#include "r1poly/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "r1poly/errors.hpp"

namespace r1poly {

ComplexPoly::ComplexPoly(std::vector<cplx> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(cplx(0.0));
    trim(*this);
}

ComplexPoly ComplexPoly::linear(cplx constant_term, cplx linear_term) {
    return ComplexPoly{{constant_term, linear_term}};
}

bool ComplexPoly::is_zero() const {
    return coeffs.size() == 1 && coeffs[0] == cplx(0.0);
}

void trim(ComplexPoly& p) {
    while (p.coeffs.size() > 1 && p.coeffs.back() == cplx(0.0)) p.coeffs.pop_back();
}

double coefficient_scale(const ComplexPoly& p) {
    double s = 0.0;
    for (const cplx& c : p.coeffs) s = std::max(s, std::abs(c));
    return s;
}

cplx evaluate(const ComplexPoly& p, cplx z) {
    cplx acc(0.0);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPoly derivative(const ComplexPoly& p) {
    if (p.degree() == 0) return ComplexPoly::zero();
    std::vector<cplx> d(p.coeffs.size() - 1);
    for (size_t k = 1; k < p.coeffs.size(); ++k) d[k - 1] = double(k) * p.coeffs[k];
    return ComplexPoly{std::move(d)};
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<cplx> c(std::max(a.coeffs.size(), b.coeffs.size()), cplx(0.0));
    for (size_t k = 0; k < a.coeffs.size(); ++k) c[k] += a.coeffs[k];
    for (size_t k = 0; k < b.coeffs.size(); ++k) c[k] += b.coeffs[k];
    return ComplexPoly{std::move(c)};
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<cplx> c(std::max(a.coeffs.size(), b.coeffs.size()), cplx(0.0));
    for (size_t k = 0; k < a.coeffs.size(); ++k) c[k] += a.coeffs[k];
    for (size_t k = 0; k < b.coeffs.size(); ++k) c[k] -= b.coeffs[k];
    return ComplexPoly{std::move(c)};
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    if (a.is_zero() || b.is_zero()) return ComplexPoly::zero();
    std::vector<cplx> c(a.coeffs.size() + b.coeffs.size() - 1, cplx(0.0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return ComplexPoly{std::move(c)};
}

ComplexPoly scaled(const ComplexPoly& p, cplx factor) {
    std::vector<cplx> c(p.coeffs);
    for (cplx& v : c) v *= factor;
    return ComplexPoly{std::move(c)};
}

ComplexPoly deflate_at(const ComplexPoly& p, cplx root, double tol) {
    const double scale = coefficient_scale(p);
    const cplx val = evaluate(p, root);
    if (std::abs(val) > tol * std::max(scale, 1e-300)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "deflate_at: |p(root)| = %.3e exceeds %.3e", std::abs(val),
                      tol * scale);
        throw NotARoot(buf);
    }
    const int n = p.degree();
    if (n < 1) throw NotARoot("deflate_at: constant polynomial has no roots");
    std::vector<cplx> q(static_cast<size_t>(n));
    cplx carry = p.coeffs[static_cast<size_t>(n)];
    for (int k = n - 1; k >= 0; --k) {
        q[static_cast<size_t>(k)] = carry;
        carry = p.coeffs[static_cast<size_t>(k)] + root * carry;
    }
    // carry is the remainder p(root); already bounded by the precondition.
    return ComplexPoly{std::move(q)};
}

ComplexPoly reverse_conj(const ComplexPoly& p, int n) {
    if (p.degree() > n)
        throw DegreeTooHigh("reverse_conj: polynomial degree " + std::to_string(p.degree()) +
                            " exceeds formal degree " + std::to_string(n));
    std::vector<cplx> c(static_cast<size_t>(n) + 1, cplx(0.0));
    for (size_t k = 0; k < p.coeffs.size(); ++k)
        c[static_cast<size_t>(n) - k] = std::conj(p.coeffs[k]);
    return ComplexPoly{std::move(c)};
}

ComplexPoly poly_from_roots(const std::vector<cplx>& rts, cplx leading) {
    ComplexPoly p = ComplexPoly::constant(leading);
    for (const cplx& r : rts) p = p * ComplexPoly::linear(-r, cplx(1.0));
    return p;
}

void sort_by_argument(std::vector<cplx>& zs) {
    std::sort(zs.begin(), zs.end(), [](const cplx& a, const cplx& b) {
        const double aa = std::arg(a), ab = std::arg(b);
        if (aa != ab) return aa < ab;
        return std::abs(a) < std::abs(b);
    });
}

namespace {

std::vector<cplx> quadratic_roots(cplx a, cplx b, cplx c) {
    if (c == cplx(0.0)) return {cplx(0.0), -b / a};
    // Citardauq form on the smaller root avoids cancellation; q != 0 since c != 0.
    const cplx disc = std::sqrt(b * b - 4.0 * a * c);
    const cplx q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc) : -0.5 * (b - disc);
    return {q / a, c / q};
}

}  // namespace

std::vector<cplx> roots(const ComplexPoly& input) {
    ComplexPoly p = input;
    trim(p);
    if (p.degree() < 1) throw Error("roots: degree must be at least 1");
    const double scale = coefficient_scale(p);

    std::vector<cplx> zs;
    // Exact zero roots come off first so the iteration never stalls at the origin.
    size_t nzero = 0;
    while (nzero < p.coeffs.size() - 1 && p.coeffs[nzero] == cplx(0.0)) ++nzero;
    for (size_t i = 0; i < nzero; ++i) zs.push_back(cplx(0.0));
    if (nzero > 0) p.coeffs.erase(p.coeffs.begin(), p.coeffs.begin() + static_cast<long>(nzero));

    const int n = p.degree();
    if (n == 1) {
        zs.push_back(-p.coeffs[0] / p.coeffs[1]);
        sort_by_argument(zs);
        return zs;
    }
    if (n == 2) {
        auto q = quadratic_roots(p.coeffs[2], p.coeffs[1], p.coeffs[0]);
        zs.insert(zs.end(), q.begin(), q.end());
        sort_by_argument(zs);
        return zs;
    }

    const cplx lead = p.leading();
    std::vector<cplx> a(p.coeffs);
    for (cplx& v : a) v /= lead;

    // Cauchy bound radius, equispaced starts with a fixed symmetry-breaking offset.
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[static_cast<size_t>(k)]));
    radius = std::min(1.0 + radius, 1e6);
    std::vector<cplx> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * std::numbers::pi * double(i) / double(n) + 0.376;
        z[static_cast<size_t>(i)] = radius * cplx(std::cos(th), std::sin(th));
    }

    const ComplexPoly pm{std::vector<cplx>(a)};
    const ComplexPoly pd = derivative(pm);
    constexpr int kMaxIter = 200;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        double step = 0.0;
        for (int i = 0; i < n; ++i) {
            const cplx zi = z[static_cast<size_t>(i)];
            const cplx pv = evaluate(pm, zi);
            if (pv == cplx(0.0)) continue;
            const cplx dv = evaluate(pd, zi);
            cplx newton = (dv == cplx(0.0)) ? cplx(1e-12) : pv / dv;
            cplx sum(0.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const cplx diff = zi - z[static_cast<size_t>(j)];
                if (diff != cplx(0.0)) sum += 1.0 / diff;
            }
            const cplx denom = 1.0 - newton * sum;
            const cplx w = (std::abs(denom) < 1e-290) ? newton : newton / denom;
            z[static_cast<size_t>(i)] = zi - w;
            step = std::max(step, std::abs(w) / (1.0 + std::abs(zi)));
        }
        if (step < 1e-15) break;
    }

    // One Newton polish per root against the original (unnormalized) polynomial.
    const ComplexPoly dp = derivative(p);
    for (int i = 0; i < n; ++i) {
        cplx& zi = z[static_cast<size_t>(i)];
        const cplx dv = evaluate(dp, zi);
        if (dv != cplx(0.0)) zi -= evaluate(p, zi) / dv;
    }

    double worst = 0.0;
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(evaluate(p, z[static_cast<size_t>(i)])));
    if (worst > 1e-10 * scale) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "root finder: worst residual %.3e exceeds %.3e after %d iterations", worst,
                      1e-10 * scale, kMaxIter);
        throw NoConvergence(buf);
    }

    zs.insert(zs.end(), z.begin(), z.end());
    sort_by_argument(zs);
    return zs;
}

double max_pairing_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw Error("max_pairing_distance: size mismatch");
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const cplx& x : a) {
        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (d < best) {
                best = d;
                bi = j;
            }
        }
        used[bi] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace r1poly
