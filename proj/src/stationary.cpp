#include "fkpp/stationary.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fkpp/specfun.hpp"

namespace fkpp {

namespace {

constexpr double special_tol = 1e-12;
constexpr double inf = std::numeric_limits<double>::infinity();

int special_case(double k2) {
    if (std::abs(k2) < special_tol) return 0;
    if (std::abs(k2 - 0.5) < special_tol) return 1;
    if (std::abs(k2 - 1.0) < special_tol) return 2;
    if (std::abs(k2 - 1.5) < special_tol) return 3;
    return -1;
}

// Right-hand side of the implicit relation, 2 * 2F1(1/2,k2;3/2;1-g) sqrt(1-g),
// strictly decreasing from B(1-k2,1/2) (or +inf if k2 >= 1) down to 0 at g = 1.
double implicit_rhs(double k2, double g) {
    if (g >= 1.0) return 0.0;
    const double z = 1.0 - g;
    return 2.0 * hyp2f1_half(k2, z).value * std::sqrt(z);
}

// d/dg of the right-hand side: -g^(-k2) / sqrt(1-g).
double implicit_rhs_slope(double k2, double g) {
    return -std::pow(g, -k2) / std::sqrt(std::max(1e-300, 1.0 - g));
}

// Solves implicit_rhs(k2, g) = target on (0, 1] by a bisection/secant
// hybrid on the bracket [eps, 1] followed by Newton polishing with the
// analytic slope. Returns 0 when the target lies beyond the support.
double solve_g(double k1, double k2, double target) {
    if (target <= 0.0) return 1.0;

    const double lo0 = (k2 < 1.0) ? 1e-300 : 1e-15;
    double a = lo0;
    double fa = implicit_rhs(k2, a) - target;
    if (fa <= 0.0) {
        // Past the reachable range: vacuum for a compact profile, the
        // bracket edge for a full-line one (x beyond the representable tail).
        return (k2 < 1.0) ? 0.0 : lo0;
    }
    double b = 1.0;
    double fb = -target;

    // Bracket down to 1e-6 alternating secant and bisection steps, then let
    // Newton (analytic slope) finish well below the 1e-12 tolerance.
    bool secant_turn = true;
    int iter = 0;
    while (b - a > 1e-6) {
        if (++iter > 200) {
            std::ostringstream os;
            os << "g_value: root-finder did not converge, bracket [" << a << ", "
               << b << "], target " << target / k1;
            throw std::runtime_error(os.str());
        }
        double mid = 0.5 * (a + b);
        if (secant_turn && fb != fa) {
            const double s = b - fb * (b - a) / (fb - fa);
            if (s > a && s < b) mid = s;
        }
        secant_turn = !secant_turn;
        const double fm = implicit_rhs(k2, mid) - target;
        if (fm > 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }

    double g = 0.5 * (a + b);
    for (int i = 0; i < 8; ++i) {
        const double r = implicit_rhs(k2, g) - target;
        const double s = implicit_rhs_slope(k2, g);
        if (!std::isfinite(s) || s == 0.0) break;
        double gn = std::clamp(g - r / s, a, b);
        if (std::abs(gn - g) < 1e-17) {
            g = gn;
            break;
        }
        g = gn;
    }
    return g;
}

}  // namespace

StationaryProfile build_profile(const ModelParams& params, double center) {
    const double m = params.m, p = params.p, q = params.q;
    if (p == q) throw std::invalid_argument("build_profile: p = q is not admitted");
    const double k2 = 1.0 + (q - m) / (2.0 * (p - q));
    const double k1 = (p - q) * std::sqrt(2.0 / (m + q)) *
                      std::pow((m + p) / (m + q), (q - m) / (2.0 * (p - q)));
    const double f_max = std::pow((m + p) / (m + q), 1.0 / (p - q));

    SupportDescriptor support{};
    if (m > q) {
        support.kind = SupportDescriptor::Kind::Compact;
        support.half_width = beta_fn(1.0 - k2, 0.5) / k1;
    } else {
        support.kind = SupportDescriptor::Kind::FullLine;
        support.half_width = inf;
    }
    return StationaryProfile{params, k1, k2, f_max, center, support};
}

bool has_explicit_form(const StationaryProfile& profile) {
    return special_case(profile.k2) >= 0;
}

double g_value_explicit(const StationaryProfile& profile, double x) {
    const double s = profile.k1 * (x - profile.center);
    switch (special_case(profile.k2)) {
        case 0: {  // p = (m+q)/2
            const double v = 1.0 - 0.25 * s * s;
            return v > 0.0 ? v : 0.0;
        }
        case 1: {  // p = m
            if (std::abs(s) >= M_PI) return 0.0;
            return 0.5 * (std::cos(s) + 1.0);
        }
        case 2: {  // q = m
            const double th = std::tanh(0.5 * s);
            return 1.0 - th * th;
        }
        case 3:  // q = (m+p)/2
            return 4.0 / (s * s + 4.0);
        default:
            throw std::invalid_argument("g_value_explicit: k2 has no explicit form");
    }
}

double g_value_implicit(const StationaryProfile& profile, double x) {
    const double s = x - profile.center;
    return solve_g(profile.k1, profile.k2, profile.k1 * std::abs(s));
}

double g_value(const StationaryProfile& profile, double x) {
    if (has_explicit_form(profile)) return g_value_explicit(profile, x);
    return g_value_implicit(profile, x);
}

double E_value(const StationaryProfile& profile, double x) {
    const double g = g_value(profile, x);
    if (g <= 0.0) return 0.0;
    const double ratio = (profile.params.m + profile.params.p) /
                         (profile.params.m + profile.params.q);
    return std::pow(ratio * g, 1.0 / (profile.params.p - profile.params.q));
}

double support_width(const StationaryProfile& profile) {
    if (profile.k2 < 1.0) return 2.0 * beta_fn(1.0 - profile.k2, 0.5) / profile.k1;
    return inf;
}

double stationary_residual(const StationaryProfile& profile, double x) {
    const double h = std::max(1e-6, 1e-6 * std::abs(x));
    const double s = std::abs(x - profile.center);
    if (profile.support.compact() && s + h >= profile.support.half_width)
        throw std::invalid_argument(
            "stationary_residual: stencil reaches the support boundary");
    auto f = [&](double xi) { return E_value(profile, xi); };
    if (f(x) <= 0.0)
        throw std::invalid_argument("stationary_residual: profile vanishes at x");
    return stationary_defect(f, profile.params, x, h);
}

std::vector<double> ode_oracle(const ModelParams& params,
                               std::span<const double> x_samples,
                               double center) {
    namespace odeint = boost::numeric::odeint;

    const StationaryProfile prof = build_profile(params, center);
    const double k1 = prof.k1, k2 = prof.k2;

    const std::size_t n = x_samples.size();
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) dist[i] = std::abs(x_samples[i] - center);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return dist[i] < dist[j]; });

    // Near the maximum the ODE is degenerate (g' = 0 at g = 1); start from
    // the local series g = 1 - w + (2 k2/3) w^2, w = (k1 d / 2)^2.
    const double d0 = 2e-4 / k1;
    auto series_g = [&](double d) {
        const double w = 0.25 * k1 * k1 * d * d;
        return 1.0 - w + (2.0 * k2 / 3.0) * w * w;
    };

    auto sys = [&](const double& g, double& dgdx, double) {
        const double gc = std::clamp(g, 0.0, 1.0);
        dgdx = -k1 * std::pow(gc, k2) * std::sqrt(1.0 - gc);
    };

    std::vector<double> out(n);
    auto stepper =
        odeint::make_controlled(1e-13, 1e-13, odeint::runge_kutta_cash_karp54<double>());

    double x = d0;
    double g = series_g(d0);
    double dt = 0.5 * d0;
    bool past_edge = false;
    double x_edge = inf;

    for (std::size_t idx : order) {
        const double d = dist[idx];
        if (d <= d0) {
            out[idx] = series_g(d);
            continue;
        }
        while (!past_edge && x < d) {
            if (k2 < 1.0 && g < 1e-10) {
                // Degenerate endpoint: g ~ ((1-k2) k1 dd)^(1/(1-k2)) at
                // distance dd from the edge.
                x_edge = x + std::pow(g, 1.0 - k2) / ((1.0 - k2) * k1);
                past_edge = true;
                break;
            }
            double trial = std::min(dt, d - x);
            int fails = 0;
            while (stepper.try_step(sys, g, x, trial) == odeint::fail) {
                if (++fails > 60 || trial < 1e-16 * std::max(1.0, x))
                    throw std::runtime_error(
                        "ode_oracle: step-size underflow near the degenerate endpoint");
            }
            dt = trial;
        }
        if (past_edge) {
            const double dd = x_edge - d;
            out[idx] =
                dd > 0.0 ? std::pow((1.0 - k2) * k1 * dd, 1.0 / (1.0 - k2)) : 0.0;
        } else {
            out[idx] = std::clamp(g, 0.0, 1.0);
        }
    }
    return out;
}

}  // namespace fkpp
