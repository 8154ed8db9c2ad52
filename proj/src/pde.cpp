#include "fkpp/pde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fkpp {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// pow with fast paths for the exponents that dominate the solver loops.
inline double pow_e(double base, double e) {
    if (e == 1.0) return base;
    if (e == 2.0) return base * base;
    if (e == 3.0) return base * base * base;
    if (e == 0.5) return std::sqrt(base);
    if (e == 1.5) return base * std::sqrt(base);
    return std::pow(base, e);
}

}  // namespace

double GridField::sup_norm() const {
    double s = 0.0;
    for (double v : values) s = std::max(s, v);
    return s;
}

double GridField::mass() const {
    if (values.size() < 2) return 0.0;
    double s = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) s += values[i];
    return s * dx;
}

void SimConfig::validate() const {
    if (!(half_length > 0.0)) throw std::invalid_argument("SimConfig: half_length must be > 0");
    if (n < 3) throw std::invalid_argument("SimConfig: at least 3 nodes required");
    if (!(t_max > 0.0)) throw std::invalid_argument("SimConfig: t_max must be > 0");
    if (!(cfl_safety > 0.0 && cfl_safety < 1.0))
        throw std::invalid_argument("SimConfig: cfl_safety must lie in (0,1)");
    if (!(thresholds.blowup_norm > 1.0) || !(thresholds.extinction_norm > 0.0) ||
        !(thresholds.extinction_norm < 1.0) || !(thresholds.dt_floor > 0.0))
        throw std::invalid_argument("SimConfig: implausible thresholds");
    for (double s : snapshot_times)
        if (s < 0.0 || s > t_max)
            throw std::invalid_argument("SimConfig: snapshot times must lie in [0, t_max]");
}

GridField sample_field(const std::function<double(double)>& f, const SimConfig& cfg) {
    cfg.validate();
    GridField field;
    field.x_left = -cfg.half_length;
    field.dx = cfg.dx();
    field.t = 0.0;
    field.values.resize(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) {
        const double v = f(field.x_at(i));
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("sample_field: initial data must be finite and nonnegative");
        field.values[i] = v;
    }
    return field;
}

PdeSolver::PdeSolver(const ModelParams& params, const SimConfig& cfg)
    : params_(params), cfg_(cfg) {
    cfg_.validate();
}

double PdeSolver::prepare(const GridField& field) {
    const std::size_t n = field.n();
    um_.resize(n);
    react_.resize(n);

    const double m = params_.m, p = params_.p, q = params_.q;
    const double ext = cfg_.thresholds.extinction_norm;

    double umax = 0.0, umin = inf;
    double dt_react = inf;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = field.values[i];
        umax = std::max(umax, u);
        umin = std::min(umin, u);
        um_[i] = u > 0.0 ? pow_e(u, m) : 0.0;
        double r = 0.0;
        if (cfg_.reaction_enabled && u > 0.0 && u != 1.0)
            r = pow_e(u, p) - pow_e(u, q);
        react_[i] = r;
        if (r != 0.0) dt_react = std::min(dt_react, 0.1 * std::max(u, ext) / std::abs(r));
    }
    if (umax <= 0.0) return inf;

    // Stability reference max(u^(m-1)): the peak value for m >= 1; for
    // m < 1 the diffusivity diverges at vacuum, so the reference value is
    // floored at the extinction threshold.
    const double uref = (m >= 1.0) ? umax : std::max(ext, umin);
    const double diff_ref = pow_e(uref, m - 1.0);
    const double dxx = field.dx * field.dx;
    const double dt_diff = diff_ref > 0.0 ? dxx * m / (2.0 * diff_ref) : inf;

    return cfg_.cfl_safety * std::min(dt_diff, dt_react);
}

StepInfo PdeSolver::apply_prepared(GridField& field, double dt) {
    const std::size_t n = field.n();
    const double inv_mdx2 = 1.0 / (params_.m * field.dx * field.dx);
    std::vector<double>& u = field.values;

    double clip = 0.0;
    // Interior nodes; the stencil reads the cached u^m of the old state, so
    // the in-place update is safe.
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double lap = um_[i - 1] - 2.0 * um_[i] + um_[i + 1];
        double v = u[i] + dt * (lap * inv_mdx2 + react_[i]);
        if (v < 0.0) {
            clip = std::max(clip, -v);
            v = 0.0;
        }
        u[i] = v;
    }
    // Boundary nodes
    if (cfg_.boundary == BoundaryKind::Dirichlet0) {
        u[0] = 0.0;
        u[n - 1] = 0.0;
    } else {  // reflecting ghosts: um[-1] = um[1], um[n] = um[n-2]
        double v0 = u[0] + dt * (2.0 * (um_[1] - um_[0]) * inv_mdx2 + react_[0]);
        double v1 = u[n - 1] +
                    dt * (2.0 * (um_[n - 2] - um_[n - 1]) * inv_mdx2 + react_[n - 1]);
        if (v0 < 0.0) { clip = std::max(clip, -v0); v0 = 0.0; }
        if (v1 < 0.0) { clip = std::max(clip, -v1); v1 = 0.0; }
        u[0] = v0;
        u[n - 1] = v1;
    }
    field.t += dt;
    return {dt, dt, clip};
}

StepInfo PdeSolver::step(GridField& field) {
    const double dt_limit = prepare(field);
    if (!std::isfinite(dt_limit)) return {dt_limit, 0.0, 0.0};  // identically zero field
    StepInfo info = apply_prepared(field, dt_limit);
    info.dt_limit = dt_limit;
    return info;
}

RunResult PdeSolver::run(GridField u0) {
    const double span = 2.0 * cfg_.half_length;
    if (u0.n() != cfg_.n ||
        std::abs((u0.x_right() - u0.x_left) - span) > 1e-9 * std::max(1.0, span))
        throw std::invalid_argument("run: field geometry does not match the configuration");
    for (double v : u0.values)
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("run: initial data must be finite and nonnegative");

    RunResult res;
    std::vector<double> snaps = cfg_.snapshot_times;
    std::sort(snaps.begin(), snaps.end());
    snaps.erase(std::unique(snaps.begin(), snaps.end()), snaps.end());
    std::size_t next_snap = 0;

    auto take_snapshot_at_current = [&](const GridField& f) { res.snapshots.push_back(f); };
    while (next_snap < snaps.size() && snaps[next_snap] <= u0.t + 1e-15) {
        take_snapshot_at_current(u0);
        ++next_snap;
    }

    const Thresholds& th = cfg_.thresholds;

    if (u0.sup_norm() == 0.0) {
        // Trivial equilibrium: nothing can evolve; report the horizon reached.
        u0.t = cfg_.t_max;
        res.history.push(cfg_.t_max, 0.0, cfg_.t_max);
        while (next_snap < snaps.size()) {
            take_snapshot_at_current(u0);
            ++next_snap;
        }
        res.outcome = Outcome::undecided(cfg_.t_max, 0.0);
        res.final_state = std::move(u0);
        res.note = "identically zero initial state";
        return res;
    }

    GridField field = std::move(u0);
    bool stalled = false;
    // Once dt sits below the floor the run is in its terminal phase; a
    // bounded number of further steps lets the norm catch up with the
    // blow-up threshold (each reaction-limited step grows the peak by a
    // fixed factor), after which both blow-up conditions hold.
    std::uint64_t floor_steps = 0;
    constexpr std::uint64_t max_floor_steps = 20000;
    while (true) {
        const double dt_limit = prepare(field);
        const bool floor_hit = dt_limit <= th.dt_floor;

        double dt = std::min(dt_limit, cfg_.t_max - field.t);
        bool snap_hit = false;
        if (next_snap < snaps.size() && field.t + dt >= snaps[next_snap] - 1e-15) {
            dt = snaps[next_snap] - field.t;
            snap_hit = true;
        }
        if (dt <= 0.0) dt = std::min(dt_limit, 1e-15);

        const double t_before = field.t;
        const StepInfo info = apply_prepared(field, dt);
        res.max_clip = std::max(res.max_clip, info.clip);
        ++res.steps;
        if (snap_hit) {
            field.t = snaps[next_snap];
            take_snapshot_at_current(field);
            ++next_snap;
        }
        if (!(field.t > t_before)) {
            stalled = true;
            res.note = "time stopped advancing at the dt floor";
            break;
        }
        const double sup = field.sup_norm();
        res.history.push(field.t, sup, dt_limit);

        if (sup <= th.extinction_norm) break;
        if (sup >= th.blowup_norm && floor_hit) break;
        if (floor_hit && sup < th.blowup_norm) {
            if (++floor_steps > max_floor_steps) {
                stalled = true;
                res.note = "dt floor reached without the norm threshold; run stalled";
                break;
            }
        } else {
            floor_steps = 0;
        }
        if (field.t >= cfg_.t_max * (1.0 - 1e-15)) break;
        if (res.steps >= cfg_.max_steps) {
            stalled = true;
            res.note = "maximum step count reached";
            break;
        }
    }

    res.outcome = classify_trajectory(res.history, th);
    if (res.outcome.kind == Outcome::Kind::Growth && params_.p > 1.0) {
        // Divergence without dt collapse cannot be separated from slow
        // blow-up when p > 1; the growth label is reserved for p = 1.
        res.outcome = Outcome::undecided(res.history.t.back(), res.history.sup.back());
        res.note = "monotone divergence at p > 1 left unclassified (no dt collapse)";
    } else if (res.outcome.kind == Outcome::Kind::Growth) {
        res.note = "growth label: finite-horizon heuristic (p = 1, monotone divergence, no dt collapse)";
    }
    if (stalled && res.outcome.kind == Outcome::Kind::Undecided && res.note.empty())
        res.note = "run stalled";
    res.final_state = std::move(field);
    return res;
}

OrderedPairReport ordered_pair_test(const GridField& u0_low, const GridField& u0_high,
                                    const ModelParams& params, const SimConfig& cfg) {
    if (u0_low.n() != u0_high.n())
        throw std::invalid_argument("ordered_pair_test: fields must share a grid");
    for (std::size_t i = 0; i < u0_low.n(); ++i)
        if (u0_low.values[i] > u0_high.values[i])
            throw std::invalid_argument("ordered_pair_test: initial data must be ordered");

    PdeSolver lo_solver(params, cfg);
    PdeSolver hi_solver(params, cfg);
    GridField lo = u0_low, hi = u0_high;

    OrderedPairReport rep;
    NormHistory hist_lo, hist_hi;
    const Thresholds& th = cfg.thresholds;

    while (true) {
        const double dt_lo = lo_solver.prepare(lo);
        const double dt_hi = hi_solver.prepare(hi);
        const double dt_limit = std::min(dt_lo, dt_hi);
        const bool floor_hit = dt_limit <= th.dt_floor;
        double dt = std::min(dt_limit, cfg.t_max - lo.t);
        if (dt <= 0.0) break;

        lo_solver.apply_prepared(lo, dt);
        hi_solver.apply_prepared(hi, dt);
        ++rep.steps;

        double viol = 0.0;
        for (std::size_t i = 0; i < lo.n(); ++i)
            viol = std::max(viol, lo.values[i] - hi.values[i]);
        rep.max_violation = std::max(rep.max_violation, viol);

        const double sup_lo = lo.sup_norm();
        const double sup_hi = hi.sup_norm();
        hist_lo.push(lo.t, sup_lo, dt_limit);
        hist_hi.push(hi.t, sup_hi, dt_limit);

        const bool event =
            sup_lo <= th.extinction_norm || sup_hi <= th.extinction_norm || floor_hit;
        if (event || lo.t >= cfg.t_max * (1.0 - 1e-15) || rep.steps >= cfg.max_steps)
            break;
    }
    rep.t_end = lo.t;
    rep.outcome_low = classify_trajectory(hist_lo, th);
    rep.outcome_high = classify_trajectory(hist_hi, th);
    return rep;
}

}  // namespace fkpp
