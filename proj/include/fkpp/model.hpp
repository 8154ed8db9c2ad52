#ifndef FKPP_MODEL_HPP
#define FKPP_MODEL_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

// Parameter records for the reaction-diffusion equation
//
//   u_t = (u^(m-1) u_x)_x + u^p - u^q,   p > q > 0,  m > 0,
//
// the change of variables that reduces the coefficient form
// u_t = kappa (u^(m-1) u_x)_x + alpha u^p - beta u^q to it, the reaction
// term, and the outcome taxonomy shared by the solver and the analysis
// layers.

namespace fkpp {

struct ModelParams {
    double m;  // diffusion exponent, > 0
    double p;  // source exponent
    double q;  // sink exponent, p > q > 0

    ModelParams(double m_, double p_, double q_);

    // Hypothesis flags. The separatrix results need p >= m > q, p >= 1,
    // q <= 1; the blow-up/extinction criterion needs p > 1 only. The
    // Cauchy problem is usually stated with m > 1, but m in (0,1] is
    // accepted and simply flagged.
    bool separatrix_hypotheses() const;   // p >= m > q, p >= 1, q <= 1
    bool general_criterion_hypotheses() const;  // p > 1, p > q > 0, m > 0
    bool slow_diffusion() const { return m > 1.0; }
};

struct RawParams {
    double alpha;  // source coefficient, > 0
    double beta;   // sink coefficient, > 0
    double kappa;  // diffusion coefficient, > 0
    double m;
    double p;
    double q;

    RawParams(double alpha_, double beta_, double kappa_,
              double m_, double p_, double q_);

    ModelParams exponents() const { return ModelParams(m, p, q); }
};

// Factors of the substitution x -> a x, t -> b t, u -> l u that carries
// the coefficient equation into canonical form.
struct ScalingFactors {
    double a;  // space scale
    double b;  // time scale
    double l;  // amplitude scale
};

// a = (kappa l^(m-p) / alpha)^(1/2), b = l^(1-p)/alpha, l = (beta/alpha)^(1/(p-q))
ScalingFactors rescale_to_canonical(const RawParams& raw);

// Inverse map: recover the coefficients from the scaling factors and the
// exponents. rescale_to_canonical followed by this is the identity.
RawParams raw_from_scaling(const ScalingFactors& s, double m, double p, double q);

// u^p - u^q, with the continuous extension reaction(0) = 0.
double reaction(double u, const ModelParams& params);

// Trajectory classification per the blow-up / extinction / growth /
// vanishing taxonomy, applied to a recorded sup-norm history.
struct Outcome {
    enum class Kind { BlowUp, Extinction, Growth, Vanishing, Undecided };
    Kind kind;
    double t_detect = 0.0;        // event time (BlowUp/Extinction), horizon otherwise
    double final_sup_norm = 0.0;  // meaningful for Undecided

    static Outcome blow_up(double t);
    static Outcome extinction(double t);
    static Outcome growth(double t_end);
    static Outcome vanishing(double t_end);
    static Outcome undecided(double t_end, double norm);

    std::string tag() const;
    bool operator==(const Outcome&) const = default;
};

struct Thresholds {
    double blowup_norm = 1e6;     // sup-norm level for blow-up detection
    double extinction_norm = 1e-8;
    double dt_floor = 1e-12;      // blow-up requires dt collapse below this
    // Horizon-trend classification: Growth / Vanishing need the history to
    // end at its extremum and to have moved by at least these factors.
    double growth_ratio = 10.0;
    double decay_ratio = 0.1;
};

struct NormHistory {
    std::vector<double> t;    // strictly increasing
    std::vector<double> sup;  // sup norm after the step at t
    std::vector<double> dt;   // stability-limited dt at that step

    std::size_t size() const { return t.size(); }
    void push(double t_, double sup_, double dt_);
};

// Scans the history in order: first extinction or blow-up event wins
// (appending non-event samples never changes a detected event). With no
// event, the trend at the horizon decides Growth / Vanishing / Undecided.
Outcome classify_trajectory(const NormHistory& history, const Thresholds& thresholds);

}  // namespace fkpp

#endif
