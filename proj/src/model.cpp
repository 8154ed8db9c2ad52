#include "fkpp/model.hpp"

#include <cmath>
#include <stdexcept>

namespace fkpp {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ModelParams::ModelParams(double m_, double p_, double q_) : m(m_), p(p_), q(q_) {
    require(std::isfinite(m) && std::isfinite(p) && std::isfinite(q),
            "ModelParams: exponents must be finite");
    require(m > 0.0, "ModelParams: m must be > 0");
    require(q > 0.0, "ModelParams: q must be > 0");
    require(p > q, "ModelParams: p > q required");
    require(m + q > 0.0, "ModelParams: m + q must be > 0");
}

bool ModelParams::separatrix_hypotheses() const {
    return p >= m && m > q && p >= 1.0 && q <= 1.0;
}

bool ModelParams::general_criterion_hypotheses() const {
    return p > 1.0 && p > q && q > 0.0 && m > 0.0;
}

RawParams::RawParams(double alpha_, double beta_, double kappa_,
                     double m_, double p_, double q_)
    : alpha(alpha_), beta(beta_), kappa(kappa_), m(m_), p(p_), q(q_) {
    require(alpha > 0.0 && beta > 0.0 && kappa > 0.0,
            "RawParams: alpha, beta, kappa must be > 0");
    require(m > 0.0, "RawParams: m must be > 0");
    require(p != q, "RawParams: p = q leaves the amplitude scale undefined");
}

ScalingFactors rescale_to_canonical(const RawParams& raw) {
    const double l = std::pow(raw.beta / raw.alpha, 1.0 / (raw.p - raw.q));
    const double b = std::pow(l, 1.0 - raw.p) / raw.alpha;
    const double a = std::sqrt(raw.kappa * std::pow(l, raw.m - raw.p) / raw.alpha);
    ScalingFactors s{a, b, l};
    if (!(std::isfinite(s.a) && std::isfinite(s.b) && std::isfinite(s.l)) ||
        s.a <= 0.0 || s.b <= 0.0 || s.l <= 0.0) {
        throw std::invalid_argument("rescale_to_canonical: scaling factors not representable");
    }
    return s;
}

RawParams raw_from_scaling(const ScalingFactors& s, double m, double p, double q) {
    const double alpha = std::pow(s.l, 1.0 - p) / s.b;
    const double beta = alpha * std::pow(s.l, p - q);
    const double kappa = s.a * s.a * alpha * std::pow(s.l, p - m);
    return RawParams(alpha, beta, kappa, m, p, q);
}

double reaction(double u, const ModelParams& params) {
    if (u < 0.0) throw std::invalid_argument("reaction: u must be nonnegative");
    if (u == 0.0) return 0.0;  // continuous extension, valid for p, q > 0
    if (u == 1.0) return 0.0;
    return std::pow(u, params.p) - std::pow(u, params.q);
}

Outcome Outcome::blow_up(double t) { return {Kind::BlowUp, t, 0.0}; }
Outcome Outcome::extinction(double t) { return {Kind::Extinction, t, 0.0}; }
Outcome Outcome::growth(double t_end) { return {Kind::Growth, t_end, 0.0}; }
Outcome Outcome::vanishing(double t_end) { return {Kind::Vanishing, t_end, 0.0}; }
Outcome Outcome::undecided(double t_end, double norm) { return {Kind::Undecided, t_end, norm}; }

std::string Outcome::tag() const {
    switch (kind) {
        case Kind::BlowUp: return "blow-up";
        case Kind::Extinction: return "extinction";
        case Kind::Growth: return "growth";
        case Kind::Vanishing: return "vanishing";
        case Kind::Undecided: return "undecided";
    }
    return "undecided";
}

void NormHistory::push(double t_, double sup_, double dt_) {
    if (!t.empty() && t_ <= t.back())
        throw std::invalid_argument("NormHistory: times must be strictly increasing");
    t.push_back(t_);
    sup.push_back(sup_);
    dt.push_back(dt_);
}

Outcome classify_trajectory(const NormHistory& h, const Thresholds& th) {
    if (h.size() == 0) throw std::invalid_argument("classify_trajectory: empty history");

    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h.sup[i] <= th.extinction_norm) return Outcome::extinction(h.t[i]);
        if (h.sup[i] >= th.blowup_norm && h.dt[i] <= th.dt_floor)
            return Outcome::blow_up(h.t[i]);
    }

    const double first = h.sup.front();
    const double last = h.sup.back();
    const double t_end = h.t.back();
    double lo = first, hi = first;
    for (double v : h.sup) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    // Trend test: the run must end at its extremum (so trailing no-event
    // padding at the final level cannot flip the label) and have moved by
    // the configured factor.
    const double slack = 1e-9;
    if (first > 0.0 && last >= th.growth_ratio * first && last >= hi * (1.0 - slack))
        return Outcome::growth(t_end);
    if (first > 0.0 && last <= th.decay_ratio * first && last <= lo * (1.0 + slack))
        return Outcome::vanishing(t_end);
    return Outcome::undecided(t_end, last);
}

}  // namespace fkpp
