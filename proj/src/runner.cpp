#include <chrono>
#include <cstdio>
#include <fstream>

#include "fsc/scenario.hpp"
#include "json.hpp"

namespace fsc {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double effective_T(const Scenario& sc, const RunOptions& opt) {
    return (!opt.long_run && sc.desk_T > 0.0) ? sc.desk_T : sc.T;
}

std::uint64_t effective_seed(const Scenario& sc, const RunOptions& opt) {
    return opt.seed_override.value_or(sc.seed);
}

/// Column-oriented moment table: t plus mean_<q>, var_<q> per quantity
/// (u1.., then v1..), written at full double precision so reruns are
/// byte-identical.
void write_moments_csv(const std::filesystem::path& path, const MomentSeries& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    const std::size_t n_dof = s.mean_u.size();
    out << "t";
    for (std::size_t d = 0; d < n_dof; ++d)
        out << ",mean_u" << d + 1 << ",var_u" << d + 1;
    for (std::size_t d = 0; d < n_dof; ++d)
        out << ",mean_v" << d + 1 << ",var_v" << d + 1;
    out << "\n";
    for (std::size_t i = 0; i < s.t.size(); ++i) {
        out << fmt(s.t[i]);
        for (std::size_t d = 0; d < n_dof; ++d)
            out << "," << fmt(s.mean_u[d][i]) << "," << fmt(s.var_u[d][i]);
        for (std::size_t d = 0; d < n_dof; ++d)
            out << "," << fmt(s.mean_v[d][i]) << "," << fmt(s.var_v[d][i]);
        out << "\n";
    }
}

struct ErrorRow {
    std::string quantity;
    ErrorReport report;
};

std::vector<ErrorRow> compare_series(const MomentSeries& fsc_s, const MomentSeries& ref,
                                     const TimeGrid& tg) {
    std::vector<ErrorRow> rows;
    const std::size_t n_dof = fsc_s.mean_u.size();
    for (std::size_t d = 0; d < n_dof; ++d) {
        const std::string sfx = std::to_string(d + 1);
        rows.push_back({"mean_u" + sfx, errors(fsc_s.mean_u[d], ref.mean_u[d], tg)});
        rows.push_back({"var_u" + sfx, errors(fsc_s.var_u[d], ref.var_u[d], tg)});
        rows.push_back({"mean_v" + sfx, errors(fsc_s.mean_v[d], ref.mean_v[d], tg)});
        rows.push_back({"var_v" + sfx, errors(fsc_s.var_v[d], ref.var_v[d], tg)});
    }
    return rows;
}

void write_errors_csv(const std::filesystem::path& path, const std::vector<ErrorRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "quantity,global_error,max_local_error\n";
    for (const auto& r : rows) {
        double mx = 0.0;
        for (double e : r.report.local) mx = std::max(mx, e);
        out << r.quantity << "," << fmt(r.report.global) << "," << fmt(mx) << "\n";
    }
}

void write_plot_stub(const std::filesystem::path& dir) {
    std::ofstream out(dir / "plot.py");
    out << R"(#!/usr/bin/env python3
"""Plot the moment histories found next to this script."""
import sys
from pathlib import Path

import matplotlib.pyplot as plt
import pandas as pd

here = Path(__file__).parent
frames = {p.stem: pd.read_csv(p) for p in sorted(here.glob("moments_*.csv"))}
if not frames:
    sys.exit("no moments_*.csv files found")
cols = [c for c in next(iter(frames.values())).columns if c != "t"]
fig, axes = plt.subplots(len(cols), 1, sharex=True, figsize=(8, 2.2 * len(cols)))
for ax, col in zip(axes, cols):
    for name, df in frames.items():
        if col in df.columns:
            ax.plot(df["t"], df[col], label=name.removeprefix("moments_"))
    ax.set_ylabel(col)
    ax.legend(loc="best", fontsize="small")
axes[-1].set_xlabel("t [s]")
fig.tight_layout()
fig.savefig(here / "moments.png", dpi=150)
print(f"wrote {here / 'moments.png'}")
)";
}

nlohmann::json scenario_json(const Scenario& sc) {
    nlohmann::json j;
    j["name"] = sc.name;
    switch (sc.model) {
        case ModelKind::FreeSdof: j["model"] = "free_sdof"; break;
        case ModelKind::ForcedSdof: j["model"] = "forced_sdof"; break;
        case ModelKind::NonlinearSdof: j["model"] = "nonlinear_sdof"; break;
        case ModelKind::Building3: j["model"] = "building3"; break;
    }
    j["mass"] = sc.mass;
    j["u0"] = sc.u0;
    j["v0"] = sc.v0;
    j["dt"] = sc.dt;
    j["T"] = sc.T;
    if (sc.desk_T > 0.0) j["desk_T"] = sc.desk_T;
    j["P"] = sc.P;
    j["flow_order"] = sc.flow_order;
    j["warmup"] = sc.warmup;
    j["warmup_index_bound"] = sc.warmup_index_bound;
    j["drop_tol"] = sc.drop_tol;
    j["update_every"] = sc.update_every;
    j["quad"] = sc.quad_counts;
    nlohmann::json axes = nlohmann::json::array();
    for (const auto& d : sc.axes) {
        nlohmann::json a;
        switch (d.kind) {
            case DistKind::Uniform: a = {{"kind", "uniform"}, {"a", d.a}, {"b", d.b}}; break;
            case DistKind::Beta:
                a = {{"kind", "beta"}, {"alpha", d.alpha}, {"beta", d.beta}, {"a", d.a},
                     {"b", d.b}};
                break;
            case DistKind::Gamma:
                a = {{"kind", "gamma"}, {"alpha", d.alpha}, {"beta", d.beta}, {"a", d.a}};
                break;
        }
        axes.push_back(a);
    }
    j["axes"] = axes;
    if (!sc.ground_motion.empty()) {
        j["ground_motion"] = sc.ground_motion.string();
        j["unit_scale"] = sc.unit_scale;
    }
    return j;
}

void write_manifest(const std::filesystem::path& dir, const Scenario& sc,
                    const RunOptions& opt, const nlohmann::json& timings,
                    const std::vector<std::string>& outputs) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["scenario"] = scenario_json(sc);
    j["effective_T"] = effective_T(sc, opt);
    j["long_run"] = opt.long_run;
    j["seed"] = effective_seed(sc, opt);
    if (sc.compare == CompareKind::MonteCarlo) j["mc_samples"] = sc.mc_samples;
    j["timings_seconds"] = timings;
    j["outputs"] = outputs;
    std::ofstream out(dir / "run.json");
    if (!out) throw std::runtime_error("cannot write " + (dir / "run.json").string());
    out << j.dump(2) << "\n";
}

class Timer {
  public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

  private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

MomentSeries reference_series(const Scenario& sc, const TimeGrid& tg) {
    MomentSeries ref;
    ref.mean_u.assign(1, {});
    ref.var_u.assign(1, {});
    ref.mean_v.assign(1, {});
    ref.var_v.assign(1, {});
    if (sc.model == ModelKind::FreeSdof) {
        const auto& k = sc.axes[0];
        ExactSDOFReference er(sc.mass, k.a, k.b, sc.u0, sc.v0);
        for (std::size_t i = 0; i <= tg.N; ++i) {
            const double t = tg.t(i);
            const ExactMoments em = exact_moments(er, t);
            ref.t.push_back(t);
            ref.mean_u[0].push_back(em.u.mean);
            ref.var_u[0].push_back(em.u.variance);
            ref.mean_v[0].push_back(em.v.mean);
            ref.var_v[0].push_back(em.v.variance);
        }
    } else {
        ForcedSdofReference fr(sc.mass, sc.axes[0], sc.axes[1], sc.u0, sc.v0,
                               sc.reference_points);
        for (std::size_t i = 0; i <= tg.N; ++i) {
            const double t = tg.t(i);
            const ForcedMoments fm = fr.moments(t);
            ref.t.push_back(t);
            ref.mean_u[0].push_back(fm.u.mean);
            ref.var_u[0].push_back(fm.u.variance);
            ref.mean_v[0].push_back(fm.v.mean);
            ref.var_v[0].push_back(fm.v.variance);
        }
    }
    return ref;
}

}  // namespace

ModelPtr build_model(const Scenario& sc, const RunOptions& opt, GridPtr* grid_out,
                     RandomDomain* domain_out) {
    const RandomDomain domain(sc.axes);
    GridPtr grid = tensor_grid(domain, sc.quad_counts);
    if (grid_out) *grid_out = grid;
    if (domain_out) *domain_out = domain;

    const auto p = [&](const char* name) { return sc.params.at(name); };
    switch (sc.model) {
        case ModelKind::FreeSdof:
            return make_free_sdof(grid, sc.mass, p("k"), sc.flow_order, sc.u0, sc.v0);
        case ModelKind::ForcedSdof:
            return make_forced_sdof(grid, sc.mass, p("k"), p("q"), sc.flow_order, sc.u0,
                                    sc.v0);
        case ModelKind::NonlinearSdof:
            return make_nonlinear_sdof(grid, sc.mass, p("k"), p("rho"), sc.flow_order, sc.u0,
                                       sc.v0);
        case ModelKind::Building3: {
            auto rec = std::make_shared<const GroundMotionRecord>(
                load_ground_motion(sc.ground_motion, sc.unit_scale));
            const double need = effective_T(sc, opt);
            if (rec->duration() < need)
                throw ValidationError("ground-motion record covers " +
                                      std::to_string(rec->duration()) + " s but the run needs " +
                                      std::to_string(need) + " s");
            return make_building3(grid, sc.mass, p("k1"), p("k2"), p("k3"), p("alpha"),
                                  p("beta"), {1.0, 1.0, 1.0}, rec);
        }
    }
    throw std::logic_error("unreachable model kind");
}

FscConfig build_config(const Scenario& sc, const RunOptions& opt) {
    FscConfig cfg{TimeGrid(sc.dt, effective_T(sc, opt))};
    cfg.flow_order = sc.flow_order;
    cfg.basis_size = sc.P;
    cfg.warmup_duration = sc.warmup;
    cfg.warmup_index_bound = sc.warmup_index_bound;
    cfg.drop_tol = sc.drop_tol;
    cfg.update_every = sc.update_every;
    return cfg;
}

int run_scenario(const Scenario& sc, const RunOptions& opt) {
    std::filesystem::create_directories(opt.out_dir);
    nlohmann::json timings;
    std::vector<std::string> outputs;
    Timer timer;

    GridPtr grid;
    RandomDomain domain(sc.axes);
    ModelPtr model = build_model(sc, opt, &grid, &domain);
    const FscConfig cfg = build_config(sc, opt);
    timings["setup"] = timer.lap();

    const FscResult result = run_fsc(model, cfg);
    timings["fsc"] = timer.lap();
    write_moments_csv(opt.out_dir / "moments_fsc.csv", result.series);
    outputs.push_back("moments_fsc.csv");

    if (sc.compare == CompareKind::Exact) {
        const MomentSeries ref = reference_series(sc, cfg.time);
        timings["exact"] = timer.lap();
        write_moments_csv(opt.out_dir / "moments_exact.csv", ref);
        write_errors_csv(opt.out_dir / "errors.csv",
                         compare_series(result.series, ref, cfg.time));
        outputs.push_back("moments_exact.csv");
        outputs.push_back("errors.csv");
    } else if (sc.compare == CompareKind::MonteCarlo) {
        const MomentSeries ref =
            monte_carlo(model, domain, sc.mc_samples, effective_seed(sc, opt), cfg.time);
        timings["mc"] = timer.lap();
        write_moments_csv(opt.out_dir / "moments_mc.csv", ref);
        write_errors_csv(opt.out_dir / "errors.csv",
                         compare_series(result.series, ref, cfg.time));
        outputs.push_back("moments_mc.csv");
        outputs.push_back("errors.csv");
    }

    write_plot_stub(opt.out_dir);
    outputs.push_back("plot.py");
    write_manifest(opt.out_dir, sc, opt, timings, outputs);
    return 0;
}

int run_monte_carlo(const Scenario& sc, const RunOptions& opt) {
    if (sc.mc_samples < 2)
        throw ValidationError("scenario '" + sc.name +
                              "' does not set 'compare mc <n>'; nothing to sample");
    std::filesystem::create_directories(opt.out_dir);
    nlohmann::json timings;
    Timer timer;

    GridPtr grid;
    RandomDomain domain(sc.axes);
    ModelPtr model = build_model(sc, opt, &grid, &domain);
    const FscConfig cfg = build_config(sc, opt);
    timings["setup"] = timer.lap();

    const MomentSeries series =
        monte_carlo(model, domain, sc.mc_samples, effective_seed(sc, opt), cfg.time);
    timings["mc"] = timer.lap();
    write_moments_csv(opt.out_dir / "moments_mc.csv", series);
    write_plot_stub(opt.out_dir);
    write_manifest(opt.out_dir, sc, opt, timings, {"moments_mc.csv", "plot.py"});
    return 0;
}

}  // namespace fsc
