#include "fkpp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace fkpp {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

bool minus_variant(ScaledVariant v) {
    return v == ScaledVariant::G_blowup || v == ScaledVariant::H_extinction;
}

bool g_variant(ScaledVariant v) {
    return v == ScaledVariant::G_blowup || v == ScaledVariant::G_growth;
}

void check_variant(const ModelParams& mp, ScaledVariant v) {
    if (!mp.separatrix_hypotheses())
        throw std::invalid_argument(
            "scaled sub/supersolution: needs p >= m > q, p >= 1, q <= 1");
    switch (v) {
        case ScaledVariant::G_blowup:
            if (!(mp.p > 1.0)) throw std::invalid_argument("G_blowup: needs p > 1");
            break;
        case ScaledVariant::G_growth:
            if (mp.p != 1.0) throw std::invalid_argument("G_growth: needs p = 1");
            break;
        case ScaledVariant::H_extinction:
            if (!(mp.q < 1.0)) throw std::invalid_argument("H_extinction: needs q < 1");
            break;
        case ScaledVariant::H_vanishing:
            if (mp.q != 1.0) throw std::invalid_argument("H_vanishing: needs q = 1");
            break;
    }
}

}  // namespace

double scaled_alpha(const ModelParams& mp, ScaledVariant variant) {
    const double m = mp.m, p = mp.p, q = mp.q;
    if (variant == ScaledVariant::G_growth) return 1.0 / (m - q);
    if (p == m || q == 1.0) {
        if (!(m > 1.0))
            throw std::invalid_argument("scaled_alpha: 1/(m-1) undefined for m <= 1");
        return 1.0 / (m - 1.0);
    }
    if (g_variant(variant)) return (p - q) / ((m - q) * (p - 1.0));
    return (p - q) / ((p - m) * (1.0 - q));
}

namespace {

double defect_from_E(const ScaledProfileSub& sub, double E, double t) {
    if (E <= 0.0) return 0.0;  // vacuum: the inequality is identically verified
    const ModelParams& mp = sub.profile.params;
    const double tau = minus_variant(sub.variant) ? sub.T - sub.a_speed * t
                                                  : sub.T + sub.a_speed * t;
    const double sigma = (sub.variant == ScaledVariant::G_blowup ||
                          sub.variant == ScaledVariant::H_vanishing)
                             ? -sub.alpha
                             : sub.alpha;
    const double Eq = std::pow(E, mp.q);
    const double Ep = std::pow(E, mp.p);
    const double tm = std::pow(tau, sigma * mp.m);
    const double tq = std::pow(tau, sigma * mp.q);
    const double tp = std::pow(tau, sigma * mp.p);
    const double drive = sub.a_speed * sub.alpha * std::pow(tau, sigma - 1.0) * E;

    if (g_variant(sub.variant)) return Eq * (tm - tq) + Ep * (tp - tm) - drive;
    return Eq * (tq - tm) + Ep * (tm - tp) - drive;
}

}  // namespace

double scaled_sub_defect(const ScaledProfileSub& sub, double x, double t) {
    return defect_from_E(sub, E_value(sub.profile, x), t);
}

ScaledCertReport verify_scaled_sub(const ScaledProfileSub& sub, SampleGrid grid) {
    if (grid.nx < 2 || grid.nt < 2)
        throw std::invalid_argument("verify_scaled_sub: sample grid too small");
    const double hw = sub.profile.support.half_width;
    const double c = sub.profile.center;
    const double t_hi = sub.T / sub.a_speed * (1.0 - 1e-3);

    std::vector<double> xs(grid.nx), Es(grid.nx);
    for (std::size_t j = 0; j < grid.nx; ++j) {
        xs[j] = c + hw * (-1.0 + (2.0 * static_cast<double>(j) + 1.0) /
                                     static_cast<double>(grid.nx));
        Es[j] = E_value(sub.profile, xs[j]);
    }

    ScaledCertReport rep;
    rep.min_defect = inf;
    for (std::size_t j = 0; j < grid.nx; ++j) {
        for (std::size_t k = 0; k < grid.nt; ++k) {
            const double t = t_hi * static_cast<double>(k) / static_cast<double>(grid.nt - 1);
            const double d = defect_from_E(sub, Es[j], t);
            ++rep.samples;
            if (d < rep.min_defect) {
                rep.min_defect = d;
                rep.worst_x = xs[j];
                rep.worst_t = t;
            }
        }
    }
    return rep;
}

ScaledProfileSub build_scaled_sub(const StationaryProfile& profile, const GridField& u0,
                                  ScaledVariant variant, SampleGrid grid) {
    const ModelParams& mp = profile.params;
    check_variant(mp, variant);
    if (!profile.support.compact())
        throw std::invalid_argument("build_scaled_sub: E must be compactly supported (m > q)");

    const double alpha = scaled_alpha(mp, variant);

    // Ratio of E against u0 over the relevant support, evaluated at the nodes.
    double ratio_max = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < u0.n(); ++i) {
        const double x = u0.x_at(i);
        const double E = E_value(profile, x);
        const double u = u0.values[i];
        if (g_variant(variant)) {
            if (E <= 0.0) continue;  // S = supp E
            any = true;
            if (u <= 0.0) {
                ratio_max = inf;
                break;
            }
            ratio_max = std::max(ratio_max, E / u);
        } else {
            if (u <= 0.0) continue;  // S = supp u0
            any = true;
            if (E <= 0.0) {
                ratio_max = inf;
                break;
            }
            ratio_max = std::max(ratio_max, u / E);
        }
    }
    if (!any) throw std::invalid_argument("build_scaled_sub: empty comparison support");
    if (!(ratio_max < 1.0))
        throw std::invalid_argument(
            "build_scaled_sub: u0 is not strictly ordered against E on the support "
            "(max ratio >= 1)");

    const double T =
        minus_variant(variant) ? std::pow(ratio_max, 1.0 / alpha)
                               : std::pow(1.0 / ratio_max, 1.0 / alpha);

    ScaledProfileSub sub{profile, variant, T, alpha, 1.0};
    while (!verify_scaled_sub(sub, grid).certified()) {
        sub.a_speed *= 0.5;
        if (sub.a_speed < 1e-12)
            throw CertificationFailure(
                "build_scaled_sub: no certified speed found above 1e-12");
    }
    return sub;
}

// ---------------------------------------------------------------------------
// Self-similar subsolution
// ---------------------------------------------------------------------------

double SelfSimilarSub::u0(double x) const {
    const double xi = x * std::pow(T, -beta);
    const double y = (xi / a_width) * (xi / a_width);
    if (y >= 1.0) return 0.0;
    return std::pow(T, -alpha) * A * std::pow(1.0 - y, b);
}

double SelfSimilarSub::support_half_width_t0() const {
    return a_width * std::pow(T, beta);
}

SelfSimilarSub make_selfsimilar_sub(const ModelParams& mp, double A) {
    if (!(mp.p > 1.0))
        throw std::invalid_argument("selfsimilar sub: needs p > 1");
    const double m = mp.m, p = mp.p, q = mp.q;
    const double kappa = std::max({m - q, m - 1.0, 0.0});
    const double b = kappa > 0.0 ? 0.5 * (1.0 / m + 1.0 / kappa) : 1.0 / m + 1.0;
    const double alpha = 1.0 / (p - 1.0);
    return SelfSimilarSub{mp,
                          A,
                          std::pow(A, 0.5 * (m - 1.0 - (p - 1.0) / 2.0)),
                          b,
                          std::pow(A, -(p - 1.0) * (p - 1.0) / (2.0 * (p - q))),
                          alpha,
                          alpha * (p - m) / 2.0,
                          kappa};
}

std::array<double, 6> selfsimilar_terms(const SelfSimilarSub& sub, double y, double t) {
    if (y >= 1.0) return {0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    const double m = sub.params.m, p = sub.params.p, q = sub.params.q;
    const double P = 1.0 - y;
    const double B = std::pow(sub.A, m - 1.0) / (sub.a_width * sub.a_width);
    const double b = sub.b;
    return {
        sub.alpha * std::pow(P, b),
        2.0 * b * sub.beta * y * std::pow(P, b - 1.0),
        4.0 * B * b * (m * b - 1.0) * y * std::pow(P, m * b - 2.0),
        2.0 * B * b * std::pow(P, m * b - 1.0),
        std::pow(sub.A, p - 1.0) * std::pow(P, b * p),
        std::pow(sub.T - t, sub.alpha * (p - q)) * std::pow(sub.A, q - 1.0) *
            std::pow(P, b * q),
    };
}

namespace {

std::array<double, 6> selfsimilar_constants(const SelfSimilarSub& sub) {
    const double m = sub.params.m, p = sub.params.p, q = sub.params.q;
    const double b = sub.b, A = sub.A, T = sub.T, alpha = sub.alpha;
    const double B = std::pow(A, m - 1.0) / (sub.a_width * sub.a_width);
    std::array<double, 6> C{};
    C[0] = alpha / (B * b * (m * b - 1.0));
    C[1] = 1.0 - std::pow(4.0 * alpha, 1.0 / (p - 1.0)) * std::pow(A, -1.0 / b);
    C[2] = 2.0 / (m * b + 1.0);
    C[3] = (b * (p - m) + 1.0 > 0.0)
               ? 1.0 - std::pow(2.0 * b * std::pow(A, -(p - 1.0) / 2.0),
                                1.0 / (b * (p - m) + 1.0))
               : nan;
    C[4] = 1.0 - std::pow(4.0, 1.0 / (b * (p - q))) * std::pow(A, -1.0 / b) *
                     std::pow(T, alpha / b);
    C[5] = std::pow(T, alpha * (p - q)) * std::pow(A, q - 1.0) / (B * b * (m * b - 1.0));
    return C;
}

}  // namespace

InequalityReport verify_selfsimilar(const SelfSimilarSub& sub, const ModelParams& params,
                                    SampleGrid grid) {
    if (params.m != sub.params.m || params.p != sub.params.p || params.q != sub.params.q)
        throw std::invalid_argument("verify_selfsimilar: parameter mismatch");
    if (grid.nx < 2 || grid.nt < 1)
        throw std::invalid_argument("verify_selfsimilar: sample grid too small");

    InequalityReport rep;
    rep.constants = selfsimilar_constants(sub);
    rep.min_ineq.fill(inf);
    rep.min_combined = inf;

    // xi/a samples on [0, 1], refined near the case-split pivot radii.
    std::vector<double> rs;
    rs.reserve(grid.nx + 24);
    for (std::size_t j = 0; j < grid.nx; ++j)
        rs.push_back(static_cast<double>(j) / static_cast<double>(grid.nx - 1));
    for (double c : rep.constants) {
        if (std::isnan(c) || c <= 0.0 || c >= 1.0) continue;
        const double r = std::sqrt(c);
        for (double d : {-1e-3, 0.0, 1e-3}) {
            const double v = r + d;
            if (v > 0.0 && v < 1.0) rs.push_back(v);
        }
    }
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

    double worst = inf;
    for (double r : rs) {
        const double y = r * r;
        for (std::size_t k = 0; k < grid.nt; ++k) {
            const double t = sub.T * static_cast<double>(k) / static_cast<double>(grid.nt);
            const auto I = selfsimilar_terms(sub, y, t);
            const double quarter = 0.25 * I[2] + 0.25 * I[4];
            const std::array<double, 4> vals{quarter - I[0], quarter - I[3],
                                             quarter - I[5], I[1] + 0.25 * I[2]};
            const double combined = I[1] - I[0] + I[2] - I[3] + I[4] - I[5];
            ++rep.samples;
            rep.min_combined = std::min(rep.min_combined, combined);
            for (int i = 0; i < 4; ++i) {
                rep.min_ineq[i] = std::min(rep.min_ineq[i], vals[i]);
                if (vals[i] < worst) {
                    worst = vals[i];
                    rep.worst_xi_over_a = r;
                    rep.worst_t = t;
                    rep.worst_inequality = i;
                    rep.terms_at_worst = I;
                }
            }
        }
    }
    return rep;
}

SelfSimilarSub build_selfsimilar_sub(const ModelParams& params, SampleGrid grid) {
    double A = 4.0;
    const double A_cap = std::ldexp(1.0, 60);
    while (true) {
        SelfSimilarSub sub = make_selfsimilar_sub(params, A);
        if (verify_selfsimilar(sub, params, grid).certified()) return sub;
        A *= 2.0;
        if (A > A_cap)
            throw CertificationFailure(
                "build_selfsimilar_sub: no certified amplitude found up to 2^60");
    }
}

GridField selfsimilar_initial_field(const SelfSimilarSub& sub, const SimConfig& cfg) {
    return sample_field([&](double x) { return sub.u0(x); }, cfg);
}

// ---------------------------------------------------------------------------
// Porous-medium supersolution comparison
// ---------------------------------------------------------------------------

PorousReport porous_supersolution_check(const GridField& u0, const ModelParams& params,
                                        const SimConfig& cfg) {
    if (u0.sup_norm() > 1.0)
        throw std::invalid_argument("porous_supersolution_check: needs ||u0|| <= 1");

    SimConfig cfg_porous = cfg;
    cfg_porous.reaction_enabled = false;
    SimConfig cfg_full = cfg;
    cfg_full.reaction_enabled = true;

    PdeSolver full(params, cfg_full);
    PdeSolver porous(params, cfg_porous);
    GridField uf = u0, up = u0;

    PorousReport rep;
    rep.initial_sup = u0.sup_norm();
    double prev_sup = rep.initial_sup;
    bool first_step = true;

    while (uf.t < cfg.t_max * (1.0 - 1e-15) && rep.steps < cfg.max_steps) {
        const double dt_limit = std::min(full.prepare(uf), porous.prepare(up));
        if (dt_limit <= cfg.thresholds.dt_floor) break;
        const double dt = std::min(dt_limit, cfg.t_max - uf.t);
        full.apply_prepared(uf, dt);
        porous.apply_prepared(up, dt);
        ++rep.steps;

        double excess = 0.0;
        for (std::size_t i = 0; i < uf.n(); ++i)
            excess = std::max(excess, uf.values[i] - up.values[i]);
        rep.max_excess = std::max(rep.max_excess, excess);

        const double sup = uf.sup_norm();
        if (!first_step && sup > prev_sup * (1.0 + 1e-14))
            rep.full_sup_monotone_after_first_step = false;
        prev_sup = sup;
        first_step = false;
        if (sup <= cfg.thresholds.extinction_norm) break;
    }
    rep.t_end = uf.t;
    rep.final_sup_full = uf.sup_norm();
    rep.final_sup_porous = up.sup_norm();
    return rep;
}

// ---------------------------------------------------------------------------
// Separatrix prediction
// ---------------------------------------------------------------------------

const char* to_string(SeparatrixPrediction p) {
    switch (p) {
        case SeparatrixPrediction::BlowUp: return "blow-up";
        case SeparatrixPrediction::Growth: return "growth";
        case SeparatrixPrediction::Extinction: return "extinction";
        case SeparatrixPrediction::Vanishing: return "vanishing";
        case SeparatrixPrediction::NotComparable: return "not-comparable";
    }
    return "not-comparable";
}

SeparatrixPrediction classify_by_separatrix(const GridField& u0,
                                            const StationaryProfile& profile) {
    const ModelParams& mp = profile.params;
    if (!mp.separatrix_hypotheses())
        throw std::invalid_argument(
            "classify_by_separatrix: needs p >= m > q, p >= 1, q <= 1");

    bool above = true;  // u0 > E on supp E
    bool below = true;  // u0 < E on supp u0
    for (std::size_t i = 0; i < u0.n(); ++i) {
        const double E = E_value(profile, u0.x_at(i));
        const double u = u0.values[i];
        if (E > 0.0 && u <= E) above = false;
        if (u > 0.0 && u >= E) below = false;
        if (!above && !below) return SeparatrixPrediction::NotComparable;
    }
    if (above) return mp.p > 1.0 ? SeparatrixPrediction::BlowUp : SeparatrixPrediction::Growth;
    if (below)
        return mp.q < 1.0 ? SeparatrixPrediction::Extinction : SeparatrixPrediction::Vanishing;
    return SeparatrixPrediction::NotComparable;
}

}  // namespace fkpp
