#ifndef FKPP_STATIONARY_HPP
#define FKPP_STATIONARY_HPP

#include <cmath>
#include <span>
#include <vector>

#include "fkpp/model.hpp"

// Stationary separatrix profiles E(x) of the canonical equation.
//
// A stationary solution f satisfies
//   (f^(m-2) f')^2 - 2 f^(m+q-2)/(m+q) + 2 f^(m+p-2)/(m+p) = 0,
// and the substitution g = (m+q)/(m+p) f^(p-q) reduces it to
//   g' = +- k1 g^k2 sqrt(1-g),
// whose integral is the implicit closed form
//   +- k1 x + C = 2 * 2F1(1/2, k2; 3/2; 1-g) sqrt(1-g).
// The profile is compactly supported iff m > q (k2 < 1), with support size
// (2/k1) B(1-k2, 1/2).

namespace fkpp {

struct SupportDescriptor {
    enum class Kind { Compact, FullLine };
    Kind kind;
    double half_width;  // +infinity for FullLine

    bool compact() const { return kind == Kind::Compact; }
};

struct StationaryProfile {
    ModelParams params;
    double k1;      // (p-q) sqrt(2/(m+q)) ((m+p)/(m+q))^((q-m)/(2(p-q)))
    double k2;      // 1 + (q-m)/(2(p-q))
    double f_max;   // ((m+p)/(m+q))^(1/(p-q)), the peak amplitude, > 1
    double center;  // translation offset; g(center) = 1
    SupportDescriptor support;
};

StationaryProfile build_profile(const ModelParams& params, double center = 0.0);

// g at x: explicit formula when k2 is one of {0, 1/2, 1, 3/2}, otherwise
// inversion of the implicit closed form. Zero outside a compact support.
double g_value(const StationaryProfile& profile, double x);

// The generic implicit-relation inversion, available for every k2 (used to
// cross-check the explicit formulas).
double g_value_implicit(const StationaryProfile& profile, double x);

// The explicit formula alone; throws if k2 is not a special value.
double g_value_explicit(const StationaryProfile& profile, double x);

bool has_explicit_form(const StationaryProfile& profile);

// E(x) = ((m+p)/(m+q) g(x))^(1/(p-q)).
double E_value(const StationaryProfile& profile, double x);

// (2/k1) B(1-k2, 1/2) for k2 < 1, +infinity otherwise.
double support_width(const StationaryProfile& profile);

// Defect of the stationary ODE at x, with f' by central finite difference
// (step max(1e-6, 1e-6 |x|)). x must be strictly inside the support, at
// least one stencil step from the boundary.
double stationary_residual(const StationaryProfile& profile, double x);

// Same defect for an arbitrary profile function (used to show that
// perturbed profiles fail the equation).
template <typename F>
double stationary_defect(const F& f, const ModelParams& mp, double x, double h) {
    const double fm = f(x - h), f0 = f(x), fp = f(x + h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double flux = std::pow(f0, mp.m - 2.0) * d1;
    return flux * flux - 2.0 * std::pow(f0, mp.m + mp.q - 2.0) / (mp.m + mp.q) +
           2.0 * std::pow(f0, mp.m + mp.p - 2.0) / (mp.m + mp.p);
}

// Independent oracle: integrates g' = -k1 g^k2 sqrt(1-g) outward from the
// maximum with an adaptive Runge-Kutta scheme, switching to the local
// degenerate asymptotic g ~ (k1 (1-k2) d)^(1/(1-k2)) near the support edge.
// Returns g at each requested x (any order, either side of the center).
std::vector<double> ode_oracle(const ModelParams& params,
                               std::span<const double> x_samples,
                               double center = 0.0);

}  // namespace fkpp

#endif
