#include "fkpp/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fkpp {

namespace {

// With a = 1/2, c = 3/2 the Pochhammer ratio collapses to
// (1/2)_n / (3/2)_n = 1/(2n+1), so the series is
//   sum_n (k2)_n z^n / ((2n+1) n!).
HypEvalReport hyp_series(double k2, double z) {
    double term = 1.0;  // (k2)_n z^n / n!
    double sum = 1.0;
    std::size_t n = 0;
    constexpr std::size_t max_terms = 4000;
    while (n < max_terms) {
        term *= (k2 + static_cast<double>(n)) * z / (static_cast<double>(n) + 1.0);
        ++n;
        const double contrib = term / (2.0 * static_cast<double>(n) + 1.0);
        sum += contrib;
        if (std::abs(contrib) <= 1e-17 * std::abs(sum) && n > 4) break;
    }
    if (n >= max_terms)
        throw std::runtime_error("hyp2f1_half: series did not converge");
    return {sum, n, HypMethod::series};
}

// Euler integral after the substitution t = s^2, which removes the
// t^(-1/2) endpoint factor:
//   2F1(1/2, k2; 3/2; z) = int_0^1 (1 - z s^2)^(-k2) ds.
struct GaussKronrod {
    // 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule,
    // on [-1, 1].
    static constexpr std::array<double, 15> xk = {
        -0.9914553711208126, -0.9491079123427585, -0.8648644233597691,
        -0.7415311855993945, -0.5860872354676911, -0.4058451513773972,
        -0.2077849550078985, 0.0,                 0.2077849550078985,
        0.4058451513773972,  0.5860872354676911,  0.7415311855993945,
        0.8648644233597691,  0.9491079123427585,  0.9914553711208126};
    static constexpr std::array<double, 15> wk = {
        0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
        0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
        0.2044329400752989, 0.2094821410847278, 0.2044329400752989,
        0.1903505780647854, 0.1690047266392679, 0.1406532597155259,
        0.1047900103222502, 0.0630920926299786, 0.0229353220105292};
    static constexpr std::array<double, 4> wg = {
        0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
        0.4179591836734694};
};

struct PanelResult {
    double kronrod;
    double error;
};

template <typename F>
PanelResult gk15(const F& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    double resk = 0.0, resg = 0.0;
    std::array<double, 15> fv{};
    for (int i = 0; i < 15; ++i) {
        fv[i] = f(c + h * GaussKronrod::xk[i]);
        resk += GaussKronrod::wk[i] * fv[i];
    }
    resg = GaussKronrod::wg[3] * fv[7];
    for (int i = 0; i < 3; ++i)
        resg += GaussKronrod::wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    resk *= h;
    resg *= h;
    return {resk, std::abs(resk - resg)};
}

template <typename F>
double adaptive_quad(const F& f, double a, double b, double rel_tol,
                     double abs_tol, int max_depth, std::size_t& evals) {
    struct Frame {
        double a, b;
        int depth;
    };
    double total = 0.0;
    std::array<Frame, 256> stack;
    int top = 0;
    stack[top++] = {a, b, 0};
    while (top > 0) {
        Frame fr = stack[--top];
        PanelResult r = gk15(f, fr.a, fr.b);
        evals += 15;
        const double scale = std::max(std::abs(total), std::abs(r.kronrod));
        if (r.error <= abs_tol + rel_tol * scale || fr.depth >= max_depth ||
            top > 250) {
            total += r.kronrod;
        } else {
            const double mid = 0.5 * (fr.a + fr.b);
            stack[top++] = {fr.a, mid, fr.depth + 1};
            stack[top++] = {mid, fr.b, fr.depth + 1};
        }
    }
    return total;
}

// Stable (x2^e - x1^e)/e, including the e -> 0 limit log(x2/x1).
double power_difference_over_exponent(double x1, double x2, double e) {
    if (e == 0.0) return std::log(x2 / x1);
    if (std::abs(e) < 0.25)
        return (std::expm1(e * std::log(x2)) - std::expm1(e * std::log(x1))) / e;
    return (std::pow(x2, e) - std::pow(x1, e)) / e;
}

HypEvalReport hyp_quadrature(double k2, double z) {
    std::size_t evals = 0;
    auto integrand = [k2, z](double s) {
        return std::pow(1.0 - z * s * s, -k2);
    };
    const double delta = 1.0 - z;

    // Boundary layer: with v = 1 - z s^2 the tail over v in [delta, cut]
    // becomes (1/(2 sqrt(z))) Int v^(-k2) (1-v)^(-1/2) dv, whose binomial
    // series in (1-v) integrates term by term. This keeps the adaptive rule
    // on the smooth head only, however close z is to 1.
    constexpr double cut = 0.125;
    double value = 0.0;
    double head_end = 1.0;
    if (delta < cut) {
        head_end = std::sqrt((1.0 - cut) / z);
        double cj = 1.0;  // (1/2)_j / j!
        double tail = 0.0;
        for (int j = 0; j < 64; ++j) {
            const double term =
                cj * power_difference_over_exponent(delta, cut, 1.0 - k2 + j);
            tail += term;
            ++evals;
            if (std::abs(term) <= 1e-17 * std::abs(tail) && j > 2) break;
            cj *= (0.5 + j) / (j + 1.0);
        }
        value += tail / (2.0 * std::sqrt(z));
    }
    value += adaptive_quad(integrand, 0.0, 0.5 * head_end, 1e-14, 1e-16, 48, evals);
    value += adaptive_quad(integrand, 0.5 * head_end, head_end, 1e-14, 1e-16, 48, evals);
    return {value, evals, HypMethod::quadrature};
}

// 2F1(1/2, k2; 3/2; 1) = Gamma(3/2) Gamma(1-k2) / Gamma(3/2 - k2) for k2 < 1.
HypEvalReport hyp_gauss_limit(double k2) {
    const double lg = std::lgamma(1.5) + std::lgamma(1.0 - k2) - std::lgamma(1.5 - k2);
    return {std::exp(lg), 1, HypMethod::gauss_limit};
}

}  // namespace

HypEvalReport hyp2f1_half(double k2, double z, std::optional<HypMethod> force) {
    if (!(z >= 0.0)) throw std::invalid_argument("hyp2f1_half: z must be >= 0");
    if (z > 1.0) throw std::invalid_argument("hyp2f1_half: z must be <= 1");
    if (z == 1.0) {
        if (k2 >= 1.0)
            throw std::invalid_argument("hyp2f1_half: diverges at z = 1 for k2 >= 1");
        return hyp_gauss_limit(k2);
    }
    if (force) {
        switch (*force) {
            case HypMethod::series: return hyp_series(k2, z);
            case HypMethod::quadrature: return hyp_quadrature(k2, z);
            case HypMethod::gauss_limit:
                throw std::invalid_argument("hyp2f1_half: gauss_limit only applies at z = 1");
        }
    }
    // Strongly negative k2 makes the series alternate with large Pochhammer
    // factors (cancellation); the integrand is then a smooth positive power,
    // so quadrature is the accurate route at any z.
    if (z < 0.75 && k2 > -5.0) return hyp_series(k2, z);
    return hyp_quadrature(k2, z);
}

double beta_fn(double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0))
        throw std::invalid_argument("beta_fn: arguments must be positive");
    if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

}  // namespace fkpp
