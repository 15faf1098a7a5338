#pragma once

#include <complex>
#include <vector>

namespace r1poly {

using cplx = std::complex<double>;

/// Dense univariate polynomial over C, coefficients in ascending degree order.
/// Canonical form: leading coefficient nonzero, except the zero polynomial
/// which is stored as the single coefficient 0.
struct ComplexPoly {
    std::vector<cplx> coeffs{cplx(0.0)};

    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<cplx> c);

    static ComplexPoly zero() { return ComplexPoly{}; }
    static ComplexPoly one() { return ComplexPoly{{cplx(1.0)}}; }
    static ComplexPoly constant(cplx v) { return ComplexPoly{{v}}; }
    /// lam + shift, handy for recurrence factors.
    static ComplexPoly linear(cplx constant_term, cplx linear_term);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const;
    cplx leading() const { return coeffs.back(); }
};

/// Drop exactly-zero leading coefficients (keeps one coefficient for the zero poly).
void trim(ComplexPoly& p);

/// max_k |coeffs[k]|; the scale used by all relative tolerances on this poly.
double coefficient_scale(const ComplexPoly& p);

/// Horner evaluation.
cplx evaluate(const ComplexPoly& p, cplx z);

ComplexPoly derivative(const ComplexPoly& p);

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly scaled(const ComplexPoly& p, cplx factor);

/// Synthetic division by (lam - root). Requires |p(root)| <= tol * coefficient_scale(p),
/// otherwise throws NotARoot. Quotient has degree deg(p) - 1.
ComplexPoly deflate_at(const ComplexPoly& p, cplx root, double tol);

/// Reversed polynomial lam^n * conj(p(1/conj(lam))) relative to formal degree n.
/// Throws DegreeTooHigh if deg(p) > n.
ComplexPoly reverse_conj(const ComplexPoly& p, int n);

/// Monic-up-to-leading product of (lam - r) over the given roots.
ComplexPoly poly_from_roots(const std::vector<cplx>& rts, cplx leading = cplx(1.0));

/// All roots, counted with multiplicity, in deterministic order:
/// ascending principal argument, ties broken by ascending modulus.
/// Simultaneous-iteration solver with a Newton polish; throws NoConvergence
/// if any residual stays above 1e-10 * coefficient_scale(p).
std::vector<cplx> roots(const ComplexPoly& p);

/// The deterministic ordering used by roots().
void sort_by_argument(std::vector<cplx>& zs);

/// Greedy assignment distance between two equal-sized multisets of points.
double max_pairing_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace r1poly
