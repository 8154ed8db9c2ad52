// Command-line driver: stationary-profile tabulation, exact separable
// solutions, Cauchy-problem simulation with event detection, certification
// of the comparison constructions, and multiplier sweeps.
//
// One JSON config document (sections model/grid/ic/run/verify/sweep/...)
// drives everything; --set key=value overrides individual entries.
//
// Exit codes: 0 success/certified, 2 parameter error, 3 solver or config
// error, 4 certification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "fkpp/analysis.hpp"
#include "fkpp/exact.hpp"
#include "fkpp/io.hpp"
#include "fkpp/model.hpp"
#include "fkpp/pde.hpp"
#include "fkpp/stationary.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kParamError = 2;
constexpr int kConfigError = 3;
constexpr int kCertFailure = 4;

json default_config() {
    return json{
        {"model",
         {{"m", 2.0}, {"p", 2.0}, {"q", 0.9}, {"alpha", 1.0}, {"beta", 1.0}, {"kappa", 1.0}}},
        {"grid", {{"half_length", 12.5}, {"n", 1201}}},
        {"ic",
         {{"kind", "stationary-multiple"},
          {"c", 1.0},
          {"center", 0.0},
          {"height", 0.5},
          {"half_width", 2.0},
          {"family", "sg"},
          {"constant", 0.0},
          {"path", ""}}},
        {"run",
         {{"t_max", 1.0},
          {"cfl_safety", 0.4},
          {"boundary", "dirichlet0"},
          {"snapshots", json::array()},
          {"blowup_norm", 1e6},
          {"extinction_norm", 1e-8},
          {"dt_floor", 1e-12},
          {"max_steps", 20000000},
          {"reaction_enabled", true}}},
        {"verify",
         {{"construction", "selfsimilar"},
          {"variant", "auto"},
          {"samples_x", 300},
          {"samples_t", 100},
          {"multiplier", 2.0},
          {"a_inflate", 1.0}}},
        {"sweep", {{"multipliers", {0.5, 1.0, 2.0}}}},
        {"stationary", {{"points", 401}, {"span_factor", 1.2}}},
        {"exact",
         {{"family", "sg"},
          {"constant", 0.0},
          {"times", {0.0, 0.5, 1.0}},
          {"points", 201},
          {"span", 6.0}}}};
}

void deep_merge(json& base, const json& overlay) {
    if (!overlay.is_object() || !base.is_object()) {
        base = overlay;
        return;
    }
    for (auto it = overlay.begin(); it != overlay.end(); ++it) {
        if (base.contains(it.key()) && base[it.key()].is_object() && it->is_object())
            deep_merge(base[it.key()], *it);
        else
            base[it.key()] = *it;
    }
}

void apply_set(json& cfg, const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("--set expects key=value, got: " + kv);
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);

    json* node = &cfg;
    std::istringstream path(key);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(path, part, '.')) parts.push_back(part);
    if (parts.empty()) throw std::invalid_argument("--set: empty key");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) node = &((*node)[parts[i]]);

    json parsed;
    try {
        parsed = json::parse(value);
    } catch (const json::parse_error&) {
        parsed = value;  // plain string
    }
    (*node)[parts.back()] = parsed;
}

json load_config(const std::string& path, const std::vector<std::string>& sets) {
    json cfg = default_config();
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open config file: " + path);
        json file_cfg = json::parse(in);
        deep_merge(cfg, file_cfg);
    }
    for (const auto& kv : sets) apply_set(cfg, kv);
    return cfg;
}

fkpp::ModelParams model_from(const json& cfg) {
    const auto& m = cfg.at("model");
    return fkpp::ModelParams(m.at("m").get<double>(), m.at("p").get<double>(),
                             m.at("q").get<double>());
}

// Raw coefficients reduce to the canonical equation; the scaling factors
// are echoed in the manifest so results can be mapped back.
json scaling_echo(const json& cfg) {
    const auto& m = cfg.at("model");
    const double alpha = m.value("alpha", 1.0);
    const double beta = m.value("beta", 1.0);
    const double kappa = m.value("kappa", 1.0);
    if (alpha == 1.0 && beta == 1.0 && kappa == 1.0) return nullptr;
    fkpp::RawParams raw(alpha, beta, kappa, m.at("m").get<double>(),
                        m.at("p").get<double>(), m.at("q").get<double>());
    const fkpp::ScalingFactors s = fkpp::rescale_to_canonical(raw);
    return json{{"a", s.a}, {"b", s.b}, {"l", s.l}};
}

fkpp::SimConfig sim_config_from(const json& cfg) {
    fkpp::SimConfig sc;
    const auto& g = cfg.at("grid");
    sc.half_length = g.at("half_length").get<double>();
    sc.n = g.at("n").get<std::size_t>();
    const auto& r = cfg.at("run");
    sc.t_max = r.at("t_max").get<double>();
    sc.cfl_safety = r.at("cfl_safety").get<double>();
    const std::string b = r.at("boundary").get<std::string>();
    if (b == "dirichlet0")
        sc.boundary = fkpp::BoundaryKind::Dirichlet0;
    else if (b == "neumann-reflect")
        sc.boundary = fkpp::BoundaryKind::NeumannReflect;
    else
        throw std::runtime_error("unknown boundary kind: " + b);
    sc.thresholds.blowup_norm = r.at("blowup_norm").get<double>();
    sc.thresholds.extinction_norm = r.at("extinction_norm").get<double>();
    sc.thresholds.dt_floor = r.at("dt_floor").get<double>();
    sc.snapshot_times = r.at("snapshots").get<std::vector<double>>();
    sc.max_steps = r.at("max_steps").get<std::uint64_t>();
    sc.reaction_enabled = r.at("reaction_enabled").get<bool>();
    sc.validate();
    return sc;
}

std::function<double(double)> initial_condition(const json& cfg,
                                                const fkpp::ModelParams& params) {
    const auto& ic = cfg.at("ic");
    const std::string kind = ic.at("kind").get<std::string>();
    if (kind == "zero") return [](double) { return 0.0; };
    if (kind == "stationary-multiple") {
        const double c = ic.at("c").get<double>();
        const double center = ic.value("center", 0.0);
        if (c < 0.0) throw std::runtime_error("ic.c must be nonnegative");
        auto profile = fkpp::build_profile(params, center);
        return [profile, c](double x) { return c * fkpp::E_value(profile, x); };
    }
    if (kind == "bump") {
        const double h = ic.at("height").get<double>();
        const double w = ic.at("half_width").get<double>();
        const double center = ic.value("center", 0.0);
        if (h < 0.0 || w <= 0.0) throw std::runtime_error("ic.bump needs height >= 0, half_width > 0");
        return [h, w, center](double x) {
            const double s = (x - center) / w;
            if (std::abs(s) >= 1.0) return 0.0;
            const double c = std::cos(0.5 * M_PI * s);
            return h * c * c;
        };
    }
    if (kind == "sg" || kind == "sv") {
        const double c = ic.at("constant").get<double>();
        const auto family = kind == "sg" ? fkpp::SeparableSolution::Family::SG
                                         : fkpp::SeparableSolution::Family::SV;
        fkpp::SeparableSolution sol(family, cfg.at("model").at("m").get<double>(), c);
        return [sol](double x) { return sol.u(x, 0.0); };
    }
    if (kind == "file") {
        const std::string path = ic.at("path").get<std::string>();
        std::ifstream in(path);
        if (!in) throw std::runtime_error("ic.file: cannot open " + path);
        std::vector<double> xs, us;
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream row(line);
            std::string a, b;
            std::getline(row, a, ',');
            std::getline(row, b, ',');
            xs.push_back(std::stod(a));
            us.push_back(std::stod(b));
        }
        if (xs.size() < 2) throw std::runtime_error("ic.file: needs at least two samples");
        return [xs, us](double x) {
            if (x <= xs.front() || x >= xs.back()) return 0.0;
            auto it = std::upper_bound(xs.begin(), xs.end(), x);
            const std::size_t i = static_cast<std::size_t>(it - xs.begin());
            const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
            return us[i - 1] * (1.0 - w) + us[i] * w;
        };
    }
    throw std::runtime_error("unknown ic.kind: " + kind);
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

std::vector<std::array<double, 2>> thin_history(const fkpp::NormHistory& h,
                                                std::size_t cap = 1500) {
    std::vector<std::array<double, 2>> out;
    if (h.size() == 0) return out;
    const std::size_t stride = std::max<std::size_t>(1, (h.size() + cap - 1) / cap);
    for (std::size_t i = 0; i < h.size(); i += stride)
        out.push_back({h.t[i], h.sup[i]});
    if (out.back()[0] != h.t.back()) out.push_back({h.t.back(), h.sup.back()});
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void write_manifest(const fs::path& path, const fkpp::RunManifest& man) {
    json j = man;
    write_text(path, j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------

int cmd_stationary(const json& cfg, const fs::path& out_dir) {
    Timer timer;
    fkpp::ModelParams params = model_from(cfg);  // throws -> parameter error
    auto profile = fkpp::build_profile(params, cfg.at("ic").value("center", 0.0));
    const double width = fkpp::support_width(profile);

    std::cout << "k1 = " << fkpp::format_full(profile.k1) << "\n"
              << "k2 = " << fkpp::format_full(profile.k2) << "\n"
              << "f_max = " << fkpp::format_full(profile.f_max) << "\n"
              << "support_width = "
              << (std::isfinite(width) ? fkpp::format_full(width) : "infinite") << "\n";

    const auto& st = cfg.at("stationary");
    const std::size_t points = st.at("points").get<std::size_t>();
    const double span = profile.support.compact()
                            ? st.at("span_factor").get<double>() * profile.support.half_width
                            : cfg.at("grid").at("half_length").get<double>();

    std::ostringstream csv;
    csv << "x,g,E\n";
    for (std::size_t i = 0; i < points; ++i) {
        const double x = profile.center - span +
                         2.0 * span * static_cast<double>(i) / static_cast<double>(points - 1);
        csv << fkpp::format_full(x) << ',' << fkpp::format_full(fkpp::g_value(profile, x))
            << ',' << fkpp::format_full(fkpp::E_value(profile, x)) << '\n';
    }
    write_text(out_dir / "stationary.csv", csv.str());

    fkpp::RunManifest man;
    man.command = "stationary";
    man.params = cfg;
    man.params["scaling"] = scaling_echo(cfg);
    man.outcome_tag = "n/a";
    man.snapshot_files = {"stationary.csv"};
    man.note = std::isfinite(width) ? "" : "support reported as infinite (m <= q)";
    man.wall_seconds = timer.seconds();
    write_manifest(out_dir / "stationary_manifest.json", man);
    return kOk;
}

int cmd_exact(const json& cfg, const fs::path& out_dir) {
    Timer timer;
    const auto& ex = cfg.at("exact");
    const std::string family = ex.at("family").get<std::string>();
    const double constant = ex.at("constant").get<double>();
    const double m = cfg.at("model").at("m").get<double>();

    fkpp::SeparableSolution sol(family == "sv" ? fkpp::SeparableSolution::Family::SV
                                               : fkpp::SeparableSolution::Family::SG,
                                m, constant);

    const std::size_t points = ex.at("points").get<std::size_t>();
    const double span = ex.at("span").get<double>();
    const std::vector<double> times = ex.at("times").get<std::vector<double>>();

    std::ostringstream csv;
    csv << "x,t,u\n";
    for (double t : times) {
        for (std::size_t i = 0; i < points; ++i) {
            const double x =
                -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(points - 1);
            csv << fkpp::format_full(x) << ',' << fkpp::format_full(t) << ','
                << fkpp::format_full(sol.u(x, t)) << '\n';
        }
    }
    write_text(out_dir / "exact.csv", csv.str());

    fkpp::RunManifest man;
    man.command = "exact";
    man.params = cfg;
    man.outcome_tag = "n/a";
    man.snapshot_files = {"exact.csv"};
    if (auto et = sol.event_time())
        man.event_time = *et;
    man.wall_seconds = timer.seconds();
    write_manifest(out_dir / "exact_manifest.json", man);
    return kOk;
}

int cmd_simulate(const json& cfg, const fs::path& out_dir) {
    Timer timer;
    fkpp::ModelParams params = model_from(cfg);

    fkpp::SimConfig sc;
    fkpp::GridField u0;
    try {
        sc = sim_config_from(cfg);
        u0 = fkpp::sample_field(initial_condition(cfg, params), sc);
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kConfigError;
    }

    fkpp::PdeSolver solver(params, sc);
    fkpp::RunResult res = solver.run(std::move(u0));

    fkpp::RunManifest man;
    man.command = "simulate";
    man.params = cfg;
    man.params["scaling"] = scaling_echo(cfg);
    man.outcome_tag = res.outcome.tag();
    man.event_time = res.outcome.t_detect;
    man.final_sup_norm = res.history.sup.empty() ? 0.0 : res.history.sup.back();
    man.norm_history = thin_history(res.history);
    man.note = res.note;

    for (std::size_t i = 0; i < res.snapshots.size(); ++i) {
        std::ostringstream name;
        name << "snapshot_" << i << ".csv";
        std::ostringstream csv;
        csv << "x,u\n";
        const fkpp::GridField& f = res.snapshots[i];
        for (std::size_t k = 0; k < f.n(); ++k)
            csv << fkpp::format_full(f.x_at(k)) << ',' << fkpp::format_full(f.values[k])
                << '\n';
        write_text(out_dir / name.str(), csv.str());
        man.snapshot_files.push_back(name.str());
    }

    man.wall_seconds = timer.seconds();
    write_manifest(out_dir / "run_manifest.json", man);

    std::cout << "outcome: " << res.outcome.tag();
    if (res.outcome.kind == fkpp::Outcome::Kind::BlowUp ||
        res.outcome.kind == fkpp::Outcome::Kind::Extinction)
        std::cout << " (t = " << res.outcome.t_detect << ")";
    std::cout << "\n";
    return kOk;
}

int cmd_verify(const json& cfg, const fs::path& out_dir) {
    Timer timer;
    fkpp::ModelParams params = model_from(cfg);
    const auto& vf = cfg.at("verify");
    const std::string construction = vf.at("construction").get<std::string>();
    fkpp::SampleGrid grid{vf.at("samples_x").get<std::size_t>(),
                          vf.at("samples_t").get<std::size_t>()};

    json report;
    report["construction"] = construction;
    bool certified = false;

    // Grid/IC problems are configuration errors; everything inside the
    // certification block that fails (including hypothesis/ordering
    // violations) is reported as a certification failure.
    fkpp::SimConfig sc;
    fkpp::GridField u0;
    const bool needs_field = construction == "scaled-profile" || construction == "porous";
    if (needs_field) {
        try {
            sc = sim_config_from(cfg);
            if (construction == "scaled-profile") {
                auto profile = fkpp::build_profile(params);
                const double mult = vf.at("multiplier").get<double>();
                u0 = fkpp::sample_field(
                    [&](double x) { return mult * fkpp::E_value(profile, x); }, sc);
            } else {
                u0 = fkpp::sample_field(initial_condition(cfg, params), sc);
            }
        } catch (const std::runtime_error& e) {
            std::cerr << "configuration error: " << e.what() << "\n";
            return kConfigError;
        }
    }

    try {
        if (construction == "scaled-profile") {
            auto profile = fkpp::build_profile(params);
            const double mult = vf.at("multiplier").get<double>();

            std::string variant = vf.at("variant").get<std::string>();
            fkpp::ScaledVariant v;
            if (variant == "auto")
                v = mult > 1.0
                        ? (params.p > 1.0 ? fkpp::ScaledVariant::G_blowup
                                          : fkpp::ScaledVariant::G_growth)
                        : (params.q < 1.0 ? fkpp::ScaledVariant::H_extinction
                                          : fkpp::ScaledVariant::H_vanishing);
            else if (variant == "G-blowup") v = fkpp::ScaledVariant::G_blowup;
            else if (variant == "G-growth") v = fkpp::ScaledVariant::G_growth;
            else if (variant == "H-extinction") v = fkpp::ScaledVariant::H_extinction;
            else if (variant == "H-vanishing") v = fkpp::ScaledVariant::H_vanishing;
            else throw std::runtime_error("unknown verify.variant: " + variant);

            auto sub = fkpp::build_scaled_sub(profile, u0, v, grid);
            sub.a_speed *= vf.at("a_inflate").get<double>();
            auto rep = fkpp::verify_scaled_sub(sub, grid);
            certified = rep.certified();
            report["variant"] = variant;
            report["T"] = sub.T;
            report["alpha"] = sub.alpha;
            report["a_speed"] = sub.a_speed;
            report["min_defect"] = rep.min_defect;
            report["worst_x"] = rep.worst_x;
            report["worst_t"] = rep.worst_t;
        } else if (construction == "selfsimilar") {
            auto sub = fkpp::build_selfsimilar_sub(params, grid);
            auto rep = fkpp::verify_selfsimilar(sub, params, grid);
            certified = rep.certified();
            report["A"] = sub.A;
            report["b"] = sub.b;
            report["T"] = sub.T;
            report["alpha"] = sub.alpha;
            report["beta"] = sub.beta;
            report["a_width"] = sub.a_width;
            report["min_inequalities"] = rep.min_ineq;
            report["min_combined"] = rep.min_combined;
            report["constants"] = rep.constants;
            report["worst_xi_over_a"] = rep.worst_xi_over_a;
            report["worst_t"] = rep.worst_t;
            std::cout << "A = " << sub.A << ", b = " << sub.b << ", T = " << sub.T << "\n";
        } else if (construction == "porous") {
            auto rep = fkpp::porous_supersolution_check(u0, params, sc);
            certified = rep.max_excess <= 1e-10 && rep.full_sup_monotone_after_first_step;
            report["max_excess"] = rep.max_excess;
            report["initial_sup"] = rep.initial_sup;
            report["final_sup_full"] = rep.final_sup_full;
            report["final_sup_porous"] = rep.final_sup_porous;
            report["monotone_decay"] = rep.full_sup_monotone_after_first_step;
        } else {
            std::cerr << "unknown verify.construction: " << construction << "\n";
            return kConfigError;
        }
    } catch (const fkpp::CertificationFailure& e) {
        report["error"] = e.what();
        certified = false;
    } catch (const std::invalid_argument& e) {
        // Hypothesis or ordering violations of the requested construction.
        report["error"] = e.what();
        certified = false;
    }

    report["certified"] = certified;
    report["wall_seconds"] = timer.seconds();
    write_text(out_dir / "verify.json", report.dump(2) + "\n");
    std::cout << (certified ? "certified" : "certification FAILED") << "\n";
    return certified ? kOk : kCertFailure;
}

int cmd_sweep(const json& cfg, const fs::path& out_dir, unsigned workers) {
    Timer timer;
    fkpp::ModelParams params = model_from(cfg);
    const std::vector<double> mults =
        cfg.at("sweep").at("multipliers").get<std::vector<double>>();
    fkpp::SimConfig sc = sim_config_from(cfg);
    auto profile = fkpp::build_profile(params);

    struct Row {
        double c = 0.0;
        std::string outcome;
        double event_time = 0.0;
        double final_norm = 0.0;
        std::uint64_t steps = 0;
        std::string error;
    };
    std::vector<Row> rows(mults.size());

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i = next.fetch_add(1); i < mults.size(); i = next.fetch_add(1)) {
            Row& row = rows[i];
            row.c = mults[i];
            try {
                auto u0 = fkpp::sample_field(
                    [&](double x) { return mults[i] * fkpp::E_value(profile, x); }, sc);
                fkpp::PdeSolver solver(params, sc);
                auto res = solver.run(std::move(u0));
                row.outcome = res.outcome.tag();
                row.event_time = res.outcome.t_detect;
                row.final_norm = res.history.sup.empty() ? 0.0 : res.history.sup.back();
                row.steps = res.steps;
            } catch (const std::exception& e) {
                row.outcome = "error";
                row.error = e.what();
            }
        }
    };

    unsigned n_workers = workers ? workers : std::thread::hardware_concurrency();
    n_workers = std::max(1u, std::min<unsigned>(n_workers, static_cast<unsigned>(
                                                               std::max<std::size_t>(1, mults.size()))));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    std::ostringstream csv;
    csv << "m,p,q,c,outcome,event_time,final_sup_norm,steps,error\n";
    for (const Row& row : rows) {
        csv << fkpp::format_full(params.m) << ',' << fkpp::format_full(params.p) << ','
            << fkpp::format_full(params.q) << ',' << fkpp::format_full(row.c) << ','
            << row.outcome << ',' << fkpp::format_full(row.event_time) << ','
            << fkpp::format_full(row.final_norm) << ',' << row.steps << ',' << row.error
            << '\n';
    }
    write_text(out_dir / "sweep.csv", csv.str());

    fkpp::RunManifest man;
    man.command = "sweep";
    man.params = cfg;
    man.outcome_tag = "n/a";
    man.snapshot_files = {"sweep.csv"};
    man.wall_seconds = timer.seconds();
    write_manifest(out_dir / "sweep_manifest.json", man);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for the generalized Fisher-KPP equation "
                 "u_t = (u^(m-1) u_x)_x + u^p - u^q"};
    app.set_version_flag("--version", std::string("fkpplab ") + fkpp::tool_version);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::vector<std::string> sets;
    unsigned workers = 0;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--set", sets, "override a config entry, e.g. --set model.m=2.5")
        ->take_all();
    app.add_option("--workers", workers, "worker threads for sweeps");

    auto* c_stationary = app.add_subcommand("stationary", "tabulate the stationary profile");
    auto* c_exact = app.add_subcommand("exact", "tabulate an exact separable solution");
    auto* c_simulate = app.add_subcommand("simulate", "run the Cauchy problem");
    auto* c_verify = app.add_subcommand("verify", "certify a comparison construction");
    auto* c_sweep = app.add_subcommand("sweep", "run a multiplier sweep");
    for (auto* sub : {c_stationary, c_exact, c_simulate, c_verify, c_sweep})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    json cfg;
    try {
        cfg = load_config(config_path, sets);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    }

    fs::path out(out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) {
        std::cerr << "cannot create output directory " << out << "\n";
        return kConfigError;
    }

    try {
        if (c_stationary->parsed()) return cmd_stationary(cfg, out);
        if (c_exact->parsed()) return cmd_exact(cfg, out);
        if (c_simulate->parsed()) return cmd_simulate(cfg, out);
        if (c_verify->parsed()) return cmd_verify(cfg, out);
        if (c_sweep->parsed()) return cmd_sweep(cfg, out, workers);
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kParamError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kOk;
}
