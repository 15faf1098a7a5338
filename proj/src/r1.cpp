#include "r1poly/r1.hpp"

#include <cmath>

#include "r1poly/errors.hpp"

namespace r1poly {

R1Params::R1Params(Rule rho, Rule beta, Rule tau, Rule gamma, std::string source)
    : source_(std::move(source)) {
    rho_.rule = std::move(rho);
    beta_.rule = std::move(beta);
    tau_.rule = std::move(tau);
    gamma_.rule = std::move(gamma);
}

R1Params R1Params::from_tables(std::vector<cplx> rho, std::vector<cplx> beta,
                               std::vector<cplx> tau, std::vector<cplx> gamma) {
    auto table = [](std::vector<cplx> v, const char* name) {
        return [v = std::move(v), name](int n) -> cplx {
            if (n < 0 || static_cast<size_t>(n) >= v.size()) throw IndexOutOfRange(name, n);
            return v[static_cast<size_t>(n)];
        };
    };
    const bool gamma_given = !gamma.empty();
    R1Params p(table(std::move(rho), "rho table"), table(std::move(beta), "beta table"),
               table(std::move(tau), "tau table"),
               gamma_given ? Rule(table(std::move(gamma), "gamma table"))
                           : Rule([](int) { return cplx(0.0); }),
               "tables");
    return p;
}

cplx R1Params::Seq::at(int n, const char* name, bool nonzero) const {
    if (n < 0) throw IndexOutOfRange(name, n);
    if (!rule) throw ConfigError(std::string(name) + " sequence not set");
    if (static_cast<size_t>(n) >= vals.size()) {
        vals.resize(static_cast<size_t>(n) + 1);
        have.resize(static_cast<size_t>(n) + 1, 0);
    }
    if (!have[static_cast<size_t>(n)]) {
        vals[static_cast<size_t>(n)] = rule(n);
        have[static_cast<size_t>(n)] = 1;
    }
    const cplx v = vals[static_cast<size_t>(n)];
    if (nonzero && std::abs(v) < 1e-300) throw InadmissibleParameter(name, n);
    return v;
}

cplx R1Params::rho(int n) const { return rho_.at(n, "rho", true); }
cplx R1Params::beta(int n) const { return beta_.at(n, "beta", false); }
cplx R1Params::tau(int n) const { return tau_.at(n, "tau", true); }
cplx R1Params::gamma(int n) const { return gamma_.at(n, "gamma", false); }

void R1Params::ensure(int N) const {
    for (int n = 0; n <= N; ++n) {
        rho(n);
        beta(n);
        tau(n);
        gamma(n);
    }
}

std::vector<ComplexPoly> gen_p(const R1Params& params, int N) {
    if (N < 0) throw Error("gen_p: N must be nonnegative");
    std::vector<ComplexPoly> P;
    P.reserve(static_cast<size_t>(N) + 1);
    P.push_back(ComplexPoly::one());
    if (N == 0) return P;
    P.push_back(ComplexPoly::linear(-params.rho(0) * params.beta(0), params.rho(0)));
    for (int n = 1; n < N; ++n) {
        const ComplexPoly a = ComplexPoly::linear(-params.beta(n), cplx(1.0));
        const ComplexPoly b = ComplexPoly::linear(-params.gamma(n), cplx(1.0));
        P.push_back(scaled(a * P[static_cast<size_t>(n)], params.rho(n)) +
                    scaled(b * P[static_cast<size_t>(n) - 1], params.tau(n)));
    }
    return P;
}

R1Params shift_to_zero_gamma(const R1Params& params) {
    const cplx g0 = params.gamma(0);
    // Capture by value; the source object stays usable independently.
    R1Params src = params;
    R1Params out(
        [src](int n) { return src.rho(n); },
        [src, g0](int n) { return src.beta(n) - g0; }, [src](int n) { return src.tau(n); },
        [src, g0](int n) -> cplx {
            const cplx g = src.gamma(n);
            if (std::abs(g - g0) > 1e-12 * std::max(1.0, std::abs(g0)))
                throw NonConstantGamma("gamma is not constant: gamma(" + std::to_string(n) +
                                       ") differs from gamma(0)");
            return cplx(0.0);
        },
        params.source() + "+shift");
    return out;
}

}  // namespace r1poly
