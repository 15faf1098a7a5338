#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "r1poly/poly.hpp"

namespace r1poly {

/// Coefficient sequences (rho_n, beta_n, tau_n, gamma_n) feeding the three-term
/// recurrence P_{n+1} = rho_n (lam - beta_n) P_n + tau_n (lam - gamma_n) P_{n-1}.
/// Sources are index rules or finite tables; values are memoized on first access
/// and admissibility (rho_n != 0, tau_n != 0) is checked lazily per index.
/// Call ensure(N) before sharing one instance across threads.
class R1Params {
  public:
    using Rule = std::function<cplx(int)>;

    R1Params() = default;
    R1Params(Rule rho, Rule beta, Rule tau, Rule gamma, std::string source);

    static R1Params from_tables(std::vector<cplx> rho, std::vector<cplx> beta,
                                std::vector<cplx> tau, std::vector<cplx> gamma = {});

    cplx rho(int n) const;
    cplx beta(int n) const;
    cplx tau(int n) const;
    cplx gamma(int n) const;

    /// Memoize indices 0..N and run the per-index admissibility checks now.
    void ensure(int N) const;

    const std::string& source() const { return source_; }

  private:
    struct Seq {
        Rule rule;
        mutable std::vector<cplx> vals;
        mutable std::vector<char> have;
        cplx at(int n, const char* name, bool nonzero) const;
    };
    Seq rho_, beta_, tau_, gamma_;
    std::string source_ = "custom";
};

/// P_0..P_N by the recurrence; P_0 = 1, P_1 = rho_0 (lam - beta_0).
std::vector<ComplexPoly> gen_p(const R1Params& params, int N);

/// For constant gamma, the shifted system (rho, beta - gamma, tau, 0) whose
/// polynomials are P_n(lam + gamma). Constancy is verified at every index the
/// derived sequence touches; violations throw NonConstantGamma.
R1Params shift_to_zero_gamma(const R1Params& params);

}  // namespace r1poly
