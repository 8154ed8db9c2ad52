#ifndef FKPP_SPECFUN_HPP
#define FKPP_SPECFUN_HPP

#include <cstddef>
#include <optional>

// The special functions behind the stationary closed form: the Gauss
// hypergeometric family 2F1(1/2, k2; 3/2; z) and the Beta function.

namespace fkpp {

enum class HypMethod { series, quadrature, gauss_limit };

struct HypEvalReport {
    double value;
    std::size_t terms_used;  // series terms or integrand evaluations
    HypMethod method;
};

// 2F1(1/2, k2; 3/2; z) for z in [0, 1]. Power series below the switch
// point z = 0.75, adaptive Gauss-Kronrod quadrature of the Euler integral
// representation above it. z = 1 is admitted only while the function is
// finite there (k2 < 1) and evaluates through the Gauss summation formula.
// Relative accuracy 1e-10 or better on z in [0, 0.99].
HypEvalReport hyp2f1_half(double k2, double z,
                          std::optional<HypMethod> force = std::nullopt);

// B(a, b) = Gamma(a) Gamma(b) / Gamma(a+b) through log-Gamma.
// a = 0 or b = 0 returns +infinity (the limit value); negative arguments
// are rejected.
double beta_fn(double a, double b);

}  // namespace fkpp

#endif
