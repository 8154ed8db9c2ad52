#ifndef FKPP_PDE_HPP
#define FKPP_PDE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fkpp/model.hpp"

// Explicit finite-difference solver for the Cauchy problem on a truncated
// line. The equation is advanced in the conservative form
//   u_t = (1/m) (u^m)_xx + u^p - u^q,
// with an adaptive time step limited by the degenerate-diffusion stability
// bound and a nodewise reaction cap. Collapse of dt below the configured
// floor while the sup norm sits above the blow-up threshold is the
// numerical blow-up signal.

namespace fkpp {

struct GridField {
    double x_left = 0.0;
    double dx = 0.0;
    std::vector<double> values;
    double t = 0.0;

    std::size_t n() const { return values.size(); }
    double x_at(std::size_t i) const { return x_left + dx * static_cast<double>(i); }
    double x_right() const { return x_at(n() - 1); }
    double sup_norm() const;
    double mass() const;  // trapezoid rule
};

enum class BoundaryKind { Dirichlet0, NeumannReflect };

struct SimConfig {
    double half_length = 12.5;  // domain [-half_length, half_length]
    std::size_t n = 1201;
    double t_max = 1.0;
    double cfl_safety = 0.4;
    BoundaryKind boundary = BoundaryKind::Dirichlet0;
    Thresholds thresholds{};
    std::vector<double> snapshot_times{};
    bool reaction_enabled = true;  // off: porous-medium co-evolution / test hook
    std::uint64_t max_steps = 20'000'000;

    double dx() const { return 2.0 * half_length / static_cast<double>(n - 1); }
    void validate() const;
};

// Nodal sampling of a nonnegative initial profile at t = 0.
GridField sample_field(const std::function<double(double)>& f, const SimConfig& cfg);

struct StepInfo {
    double dt_limit;   // stability-limited dt (cfl applied)
    double dt_applied; // actually taken (may be clamped to horizon/snapshot)
    double clip;       // magnitude of the largest negative value clipped
};

struct RunResult {
    Outcome outcome{Outcome::Kind::Undecided, 0.0, 0.0};
    NormHistory history;
    std::vector<GridField> snapshots;
    GridField final_state;
    double max_clip = 0.0;
    std::uint64_t steps = 0;
    std::string note;
};

class PdeSolver {
public:
    PdeSolver(const ModelParams& params, const SimConfig& cfg);

    // Stability-limited dt for the current field (pass 1; fills the power
    // caches used by apply_prepared).
    double prepare(const GridField& field);
    // One explicit update with the given dt; must follow prepare() on the
    // same field state. Negative round-off values are clipped to zero.
    StepInfo apply_prepared(GridField& field, double dt);
    // prepare + apply at the stability dt.
    StepInfo step(GridField& field);

    // Advances from u0 until a threshold event, dt stall, or t_max, and
    // classifies the recorded history.
    RunResult run(GridField u0);

    const ModelParams& params() const { return params_; }
    const SimConfig& config() const { return cfg_; }

private:
    ModelParams params_;
    SimConfig cfg_;
    std::vector<double> um_;        // u^m cache
    std::vector<double> react_;     // u^p - u^q cache
};

struct OrderedPairReport {
    double max_violation = 0.0;  // max over time and nodes of (u_low - u_high)+
    double t_end = 0.0;
    std::uint64_t steps = 0;
    Outcome outcome_low{Outcome::Kind::Undecided, 0.0, 0.0};
    Outcome outcome_high{Outcome::Kind::Undecided, 0.0, 0.0};
};

// Co-evolves an ordered pair on synchronized time steps and measures the
// worst ordering violation (the discrete comparison-principle check).
OrderedPairReport ordered_pair_test(const GridField& u0_low, const GridField& u0_high,
                                    const ModelParams& params, const SimConfig& cfg);

}  // namespace fkpp

#endif
