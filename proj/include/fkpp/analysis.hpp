#ifndef FKPP_ANALYSIS_HPP
#define FKPP_ANALYSIS_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

#include "fkpp/pde.hpp"
#include "fkpp/stationary.hpp"

// Numerical certification of the comparison constructions:
//
//  - scaled-profile sub/supersolutions G(x,t) = (T -+ a t)^(-+alpha) E(x)
//    built on the separatrix profile, certified by sampling the defect of
//    the differential inequality (valid for a sufficiently small speed;
//    the largest passing a <= 1 is searched);
//  - the self-similar subsolution
//    (T-t)^(-alpha) A (1-(xi/a)^2)_+^b, xi = x (T-t)^(-beta),
//    with its four grouped term inequalities, certified after a doubling
//    search for a sufficiently large amplitude A;
//  - the porous-medium supersolution comparison for data below 1;
//  - separatrix-based outcome prediction.

namespace fkpp {

struct CertificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ScaledVariant { G_blowup, G_growth, H_extinction, H_vanishing };

struct ScaledProfileSub {
    StationaryProfile profile;
    ScaledVariant variant;
    double T;        // from the max-ratio formula; < 1 for the "-at" variants
    double alpha;    // amplitude-scaling exponent of the variant
    double a_speed;  // largest certified speed found, <= 1
};

struct SampleGrid {
    std::size_t nx = 200;
    std::size_t nt = 200;
};

struct ScaledCertReport {
    double min_defect = 0.0;
    double worst_x = 0.0;
    double worst_t = 0.0;
    std::size_t samples = 0;

    bool certified() const { return min_defect >= -1e-12; }
};

// Variant-appropriate alpha: (p-q)/((m-q)(p-1)) for p > m, q < 1;
// 1/(m-1) when p = m or q = 1; 1/(m-q) for the p = 1 growth variant.
double scaled_alpha(const ModelParams& params, ScaledVariant variant);

// T from the ratio of u0 against E on the relevant support, followed by a
// halving search for the largest certified a_speed (starting from 1).
ScaledProfileSub build_scaled_sub(const StationaryProfile& profile, const GridField& u0,
                                  ScaledVariant variant, SampleGrid grid = {});

// Minimum over the sample rectangle of the differential-inequality defect,
// evaluated through the stationary identity (E^(m-1) E')' = E^q - E^p.
ScaledCertReport verify_scaled_sub(const ScaledProfileSub& sub, SampleGrid grid = {});

// Defect at a single point (vacuum points return 0 identically).
double scaled_sub_defect(const ScaledProfileSub& sub, double x, double t);

struct SelfSimilarSub {
    ModelParams params;
    double A;          // amplitude
    double a_width;    // a^2 = A^(m-1-(p-1)/2)
    double b;          // profile exponent, 1/m < b < 1/kappa
    double T;          // A^(-(p-1)^2 / (2(p-q)))
    double alpha;      // 1/(p-1)
    double beta;       // alpha (p-m)/2
    double kappa_exp;  // max{m-q, m-1, 0}

    double u0(double x) const;  // T^(-alpha) A (1-(x T^(-beta)/a)^2)_+^b
    double support_half_width_t0() const;
};

struct InequalityReport {
    std::array<double, 4> min_ineq{};  // the four grouped term inequalities
    double min_combined = 0.0;         // I2-I1+I3-I4+I5-I6
    double worst_xi_over_a = 0.0;
    double worst_t = 0.0;
    int worst_inequality = 0;           // 0..3
    std::array<double, 6> terms_at_worst{};   // I1..I6
    std::array<double, 6> constants{};        // C1..C6 (NaN where undefined)
    std::size_t samples = 0;

    bool certified() const {
        for (double v : min_ineq)
            if (!(v >= -1e-12)) return false;
        return true;
    }
};

SelfSimilarSub make_selfsimilar_sub(const ModelParams& params, double A);

// Doubling search on A (from 4, capped at 2^60) until the four grouped
// inequalities certify on the sample grid.
SelfSimilarSub build_selfsimilar_sub(const ModelParams& params,
                                     SampleGrid grid = {300, 100});

InequalityReport verify_selfsimilar(const SelfSimilarSub& sub, const ModelParams& params,
                                    SampleGrid grid = {300, 100});

// The six terms I1..I6 at one sample (y = (xi/a)^2); all zero for y >= 1.
std::array<double, 6> selfsimilar_terms(const SelfSimilarSub& sub, double y, double t);

GridField selfsimilar_initial_field(const SelfSimilarSub& sub, const SimConfig& cfg);

struct PorousReport {
    double max_excess = 0.0;  // max nodewise (full - diffusion-only) over the run
    double initial_sup = 0.0;
    double final_sup_full = 0.0;
    double final_sup_porous = 0.0;
    bool full_sup_monotone_after_first_step = true;
    double t_end = 0.0;
    std::uint64_t steps = 0;
};

// Co-evolves the full equation and the diffusion-only equation from the
// same data with sup norm <= 1; the diffusion-only solution must dominate.
PorousReport porous_supersolution_check(const GridField& u0, const ModelParams& params,
                                        const SimConfig& cfg);

enum class SeparatrixPrediction { BlowUp, Growth, Extinction, Vanishing, NotComparable };

const char* to_string(SeparatrixPrediction p);

// Prediction from the strict ordering of u0 against E on the
// relevant support (E's support from above, u0's from below).
SeparatrixPrediction classify_by_separatrix(const GridField& u0,
                                            const StationaryProfile& profile);

}  // namespace fkpp

#endif
