#include "fkpp/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace fkpp {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

SeparableSolution::SeparableSolution(Family family_, double m_, double constant_)
    : family(family_), m(m_), constant(constant_) {
    if (family == Family::SG) {
        require(m > 1.0, "SeparableSolution: SG family needs m > 1");
        require(constant > -1.0 / (m - 1.0),
                "SeparableSolution: SG amplitude undefined at t = 0 for C0 <= -1/(m-1)");
    } else {
        require(m > 0.0 && m < 1.0, "SeparableSolution: SV family needs 0 < m < 1");
        require(constant < 1.0,
                "SeparableSolution: SV amplitude undefined at t = 0 for C >= 1");
    }
}

ModelParams SeparableSolution::exponents() const {
    if (family == Family::SG) return ModelParams(m, m, 1.0);
    return ModelParams(m, 1.0, m);
}

SeparableSolution::Behavior SeparableSolution::behavior() const {
    if (constant == 0.0) return Behavior::Stationary;
    if (family == Family::SG)
        return constant < 0.0 ? Behavior::BlowUp : Behavior::Vanishing;
    return constant < 0.0 ? Behavior::Growth : Behavior::Extinction;
}

std::optional<double> SeparableSolution::event_time() const {
    if (family == Family::SG && constant < 0.0)
        return -std::log(-constant * (m - 1.0)) / (m - 1.0);
    if (family == Family::SV && constant > 0.0)
        return std::log(constant) / (m - 1.0);
    return std::nullopt;
}

double SeparableSolution::phi(double t) const {
    return family == Family::SG ? sg_phi(m, constant, t) : sv_phi(m, constant, t);
}

double SeparableSolution::theta(double x) const {
    return family == Family::SG ? sg_theta(m, x) : sv_theta(m, x);
}

double sg_phi(double m, double c0, double t) {
    require(m > 1.0, "sg_phi: m > 1 required");
    const double bracket = std::exp(-(m - 1.0) * t) / (m - 1.0) + c0;
    if (bracket <= 0.0)
        throw std::invalid_argument("sg_phi: t at or past the blow-up time");
    return std::exp(-t) * std::pow(bracket, -1.0 / (m - 1.0));
}

double sg_support_half_width(double m) {
    require(m > 1.0, "sg_support_half_width: m > 1 required");
    return M_PI * std::sqrt(m) / (m - 1.0);
}

double sg_theta(double m, double x) {
    require(m > 1.0, "sg_theta: m > 1 required");
    const double half = sg_support_half_width(m);
    if (std::abs(x) >= half) return 0.0;
    const double c = std::cos(M_PI * x / (2.0 * half));
    return std::pow(2.0 * m / (m * m - 1.0) * c * c, 1.0 / (m - 1.0));
}

double sv_phi(double m, double c, double t) {
    require(m > 0.0 && m < 1.0, "sv_phi: 0 < m < 1 required");
    const double bracket = 1.0 - c * std::exp((1.0 - m) * t);
    if (bracket <= 0.0)
        throw std::invalid_argument("sv_phi: t at or past the extinction time");
    return std::pow(bracket, 1.0 / (1.0 - m));
}

double sv_phi_alt(double m, double c, double t) {
    require(m > 0.0 && m < 1.0, "sv_phi_alt: 0 < m < 1 required");
    const double bracket = std::exp(-(1.0 - m) * t) - c;
    if (bracket <= 0.0)
        throw std::invalid_argument("sv_phi_alt: t at or past the extinction time");
    return std::exp(t) * std::pow(bracket, 1.0 / (1.0 - m));
}

double sv_theta(double m, double x) {
    require(m > 0.0 && m < 1.0, "sv_theta: 0 < m < 1 required");
    const double k1 = (1.0 - m) / std::sqrt(m);
    const double th = std::tanh(0.5 * k1 * x);
    return std::pow((m + 1.0) / (2.0 * m) * (1.0 - th * th), 1.0 / (1.0 - m));
}

double event_time_bisect(const SeparableSolution& sol) {
    if (!sol.event_time())
        throw std::invalid_argument("event_time_bisect: solution has no finite event");
    // The phi bracket is strictly decreasing in t and changes sign at the event.
    auto bracket = [&](double t) {
        if (sol.family == SeparableSolution::Family::SG)
            return std::exp(-(sol.m - 1.0) * t) / (sol.m - 1.0) + sol.constant;
        return 1.0 - sol.constant * std::exp((1.0 - sol.m) * t);
    };
    double lo = 0.0, hi = 1.0;
    while (bracket(hi) > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) throw std::runtime_error("event_time_bisect: no sign change found");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (bracket(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double separable_residual(const SeparableSolution& sol, double x, double t, double h) {
    const ModelParams mp = sol.exponents();
    auto u = [&](double xi, double ti) { return sol.u(xi, ti); };
    auto um = [&](double xi, double ti) { return std::pow(u(xi, ti), mp.m); };
    const double ut = (u(x, t + h) - u(x, t - h)) / (2.0 * h);
    const double uxx_m =
        (um(x + h, t) - 2.0 * um(x, t) + um(x - h, t)) / (h * h) / mp.m;
    const double u0 = u(x, t);
    return ut - uxx_m - std::pow(u0, mp.p) + std::pow(u0, mp.q);
}

}  // namespace fkpp
