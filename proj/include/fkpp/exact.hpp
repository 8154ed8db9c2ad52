#ifndef FKPP_EXACT_HPP
#define FKPP_EXACT_HPP

#include <optional>

#include "fkpp/model.hpp"

// The two explicit separable families u(x,t) = phi(t) theta(x):
//
//  - SG (m = p > 1, q = 1), the Samarskii-Galaktionov family. Stationary
//    for C0 = 0, vanishing for C0 > 0, finite-time blow-up for C0 < 0.
//  - SV (q = m, p = 1), with the separation constant fixed to -1. Defined
//    here for 0 < m < 1, where p > q holds and the stated behaviors
//    (stationary / growth / finite-time extinction) check out.
//
// Both theta factors coincide, up to the amplitude convention, with the
// stationary profiles of the corresponding exponent triples, which makes
// the families exact-solution oracles for the PDE solver.

namespace fkpp {

struct SeparableSolution {
    enum class Family { SG, SV };
    enum class Behavior { Stationary, BlowUp, Vanishing, Growth, Extinction };

    Family family;
    double m;
    double constant;  // C0 for SG, C for SV

    SeparableSolution(Family family_, double m_, double constant_);

    ModelParams exponents() const;  // (m, m, 1) for SG, (m, 1, m) for SV
    Behavior behavior() const;
    // Finite blow-up (SG, C0 < 0) or extinction (SV, 0 < C < 1) time.
    std::optional<double> event_time() const;

    double phi(double t) const;
    double theta(double x) const;
    double u(double x, double t) const { return phi(t) * theta(x); }
};

// phi(t) = e^(-t) (e^(-(m-1)t)/(m-1) + C0)^(-1/(m-1)), m > 1.
double sg_phi(double m, double c0, double t);

// Compactly supported profile (2m/(m^2-1) cos^2(pi x / L))^(1/(m-1)),
// L = 2 pi sqrt(m)/(m-1).
double sg_theta(double m, double x);
double sg_support_half_width(double m);  // L/2

// phi(t) = (1 - C e^((1-m)t))^(1/(1-m)), 0 < m < 1, C < 1.
double sv_phi(double m, double c, double t);
// The same quantity written as e^t (e^(-(1-m)t) - C)^(1/(1-m)).
double sv_phi_alt(double m, double c, double t);

// theta(x) = ((m+1)/(2m) (1 - tanh^2(k1 x/2)))^(1/(1-m)), k1 = (1-m)/sqrt(m).
double sv_theta(double m, double x);

// Cross-check oracle: locates the zero of the phi bracket by bisection.
// Agrees with event_time() to 1e-10 or better.
double event_time_bisect(const SeparableSolution& sol);

// Finite-difference defect of the canonical equation on the closed form,
// u_t - (u^(m-1) u_x)_x - u^p + u^q, with central stencils of step h.
double separable_residual(const SeparableSolution& sol, double x, double t,
                          double h = 1e-4);

}  // namespace fkpp

#endif
