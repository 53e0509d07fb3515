// End-to-end acceptance checks. Each numbered check prints one PASS/FAIL line;
// the process exits non-zero if any fails. Tolerances are fixed here.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include "fsc/scenario.hpp"

using namespace fsc;

namespace {

const std::filesystem::path kData = FSC_DATA_DIR;
int g_failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s (%s)\n", ok ? "PASS" : "FAIL", id, what, detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double global_mean_error(const MomentSeries& s, const std::vector<double>& ref,
                         const TimeGrid& tg) {
    return errors(s.mean_u[0], ref, tg).global;
}

std::vector<double> exact_mean_series(const ExactSDOFReference& ref, const TimeGrid& tg) {
    std::vector<double> out(tg.N + 1);
    for (std::size_t i = 0; i <= tg.N; ++i) out[i] = exact_moments(ref, tg.t(i)).u.mean;
    return out;
}

// ---- criterion 1: free oscillator vs the closed form, with a runtime cap ----
void criterion1() {
    const Scenario sc = parse_scenario(kData / "case1_free_sdof.scn");
    const RunOptions opt;  // desk scale, T = 15 s
    const auto t0 = std::chrono::steady_clock::now();

    GridPtr grid;
    RandomDomain dom(sc.axes);
    const auto model = build_model(sc, opt, &grid, &dom);
    const FscConfig cfg = build_config(sc, opt);
    const FscResult res = run_fsc(model, cfg);

    const ExactSDOFReference ref(sc.mass, sc.axes[0].a, sc.axes[0].b, sc.u0, sc.v0);
    std::vector<double> eu(cfg.time.N + 1), ev(cfg.time.N + 1);
    for (std::size_t i = 0; i <= cfg.time.N; ++i) {
        const auto m = exact_moments(ref, cfg.time.t(i));
        eu[i] = m.u.mean;
        ev[i] = m.v.mean;
    }
    const double e_u = errors(res.series.mean_u[0], eu, cfg.time).global;
    const double e_v = errors(res.series.mean_v[0], ev, cfg.time).global;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, "free-oscillator mean errors vs closed form at 1e-5, runtime < 30 s",
           e_u <= 1e-5 && e_v <= 1e-5 && secs < 30.0,
           "eG[E[u]]=" + fmt(e_u) + ", eG[E[v]]=" + fmt(e_v) + ", " + fmt(secs) + " s");
}

// ---- criterion 2: error drops >= 10x per basis vector P = 2 -> 3 -> 4 ----
void criterion2() {
    Scenario sc = parse_scenario(kData / "case1_free_sdof.scn");
    const RunOptions opt;
    const ExactSDOFReference ref(sc.mass, sc.axes[0].a, sc.axes[0].b, sc.u0, sc.v0);
    std::vector<double> eg;
    for (std::size_t P : {2, 3, 4, 5}) {
        sc.P = P;
        GridPtr grid;
        RandomDomain dom(sc.axes);
        const auto model = build_model(sc, opt, &grid, &dom);
        const FscConfig cfg = build_config(sc, opt);
        const FscResult res = run_fsc(model, cfg);
        eg.push_back(global_mean_error(res.series, exact_mean_series(ref, cfg.time),
                                       cfg.time));
    }
    const bool drops = eg[0] / eg[1] >= 10.0 && eg[1] / eg[2] >= 10.0;
    // plateau: the next refinement gains visibly less than the earlier ones
    const bool plateau = eg[2] / eg[3] < eg[1] / eg[2];
    std::string detail = "eG(P=2..5) = " + fmt(eg[0]) + ", " + fmt(eg[1]) + ", " +
                         fmt(eg[2]) + ", " + fmt(eg[3]);
    report(2, "mean error falls 10x per basis vector P=2->4, then plateaus",
           drops && plateau, detail);
}

// ---- criterion 3: long-run variances approach the infinite-time limits ----
void criterion3() {
    const Scenario sc = parse_scenario(kData / "case1_free_sdof.scn");
    RunOptions opt;
    opt.long_run = true;  // T = 150 s
    GridPtr grid;
    RandomDomain dom(sc.axes);
    const auto model = build_model(sc, opt, &grid, &dom);
    const FscConfig cfg = build_config(sc, opt);
    const FscResult res = run_fsc(model, cfg);
    const double vu = res.series.var_u[0].back();
    const double vv = res.series.var_v[0].back();
    const double du = std::abs(vu - 0.0062880) / 0.0062880;
    const double dv = std::abs(vv - 0.025) / 0.025;
    report(3, "variances at t=150 s within 2% of the limits 0.0062880 / 0.025",
           du < 0.02 && dv < 0.02,
           "Var[u]=" + fmt(vu) + " (" + fmt(100 * du) + "%), Var[v]=" + fmt(vv) + " (" +
               fmt(100 * dv) + "%)");
}

// ---- criterion 4: forced oscillator vs the high-resolution reference ----
void criterion4() {
    Scenario sc = parse_scenario(kData / "forced_sdof.scn");
    sc.P = 4;
    const RunOptions opt;
    GridPtr grid;
    RandomDomain dom(sc.axes);
    const auto model = build_model(sc, opt, &grid, &dom);
    const FscConfig cfg = build_config(sc, opt);
    const FscResult res = run_fsc(model, cfg);
    const ForcedSdofReference ref(sc.mass, sc.axes[0], sc.axes[1], sc.u0, sc.v0,
                                  sc.reference_points);
    std::vector<double> eu(cfg.time.N + 1);
    for (std::size_t i = 0; i <= cfg.time.N; ++i) eu[i] = ref.moments(cfg.time.t(i)).u.mean;
    const double e_u = errors(res.series.mean_u[0], eu, cfg.time).global;
    report(4, "forced-oscillator mean error at P=4 within 1e-5", e_u <= 1e-5,
           "eG[E[u]]=" + fmt(e_u));
}

// ---- criterion 5: nonlinear oscillator vs plain sampling, CLT band ----
void criterion5() {
    Scenario sc = parse_scenario(kData / "nonlinear_sdof.scn");
    const RunOptions opt;
    GridPtr grid;
    RandomDomain dom(sc.axes);
    const auto model = build_model(sc, opt, &grid, &dom);
    const FscConfig cfg = build_config(sc, opt);
    const FscResult res = run_fsc(model, cfg);
    const std::size_t n = 20000;
    const MomentSeries mc = monte_carlo(model, dom, n, 42, cfg.time);
    double dev = 0.0, vmax = 0.0;
    for (std::size_t i = 0; i <= cfg.time.N; ++i) {
        dev = std::max(dev, std::abs(res.series.mean_u[0][i] - mc.mean_u[0][i]));
        vmax = std::max(vmax, mc.var_u[0][i]);
    }
    const double band = 5.0 * std::sqrt(vmax / static_cast<double>(n));
    report(5, "nonlinear-oscillator mean within the 5-sigma band of n=2e4 sampling",
           dev <= band, "max dev=" + fmt(dev) + ", band=" + fmt(band));
}

// ---- criterion 6: three-story building: modal check + CLT band on the roof ----
void criterion6() {
    const Scenario sc = parse_scenario(kData / "building_3story.scn");

    // fundamental period from the generalized eigenproblem at mean stiffness
    const double m = sc.mass;
    double km[3];
    for (int i = 0; i < 3; ++i) km[i] = moments(sc.axes[static_cast<std::size_t>(i)]).mean;
    Eigen::Matrix3d K, M = Eigen::Matrix3d::Identity() * m;
    K << km[0] + km[1], -km[1], 0.0, -km[1], km[1] + km[2], -km[2], 0.0, -km[2], km[2];
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix3d> es(K, M);
    const double period = 2.0 * M_PI / std::sqrt(es.eigenvalues()(0));
    const bool period_ok = period >= 0.31 && period <= 0.35;

    const RunOptions opt;  // desk scale, T = 5 s
    GridPtr grid;
    RandomDomain dom(sc.axes);
    const auto model = build_model(sc, opt, &grid, &dom);
    const FscConfig cfg = build_config(sc, opt);
    const FscResult res = run_fsc(model, cfg);
    const std::size_t n = 10000;
    const MomentSeries mc = monte_carlo(model, dom, n, 42, cfg.time);
    double dev = 0.0, vmax = 0.0;
    for (std::size_t i = 0; i <= cfg.time.N; ++i) {
        dev = std::max(dev, std::abs(res.series.mean_u[2][i] - mc.mean_u[2][i]));
        vmax = std::max(vmax, mc.var_u[2][i]);
    }
    const double band = 5.0 * std::sqrt(vmax / static_cast<double>(n));
    report(6, "building: fundamental period in [0.31, 0.35] s and roof mean in CLT band",
           period_ok && dev <= band,
           "T1=" + fmt(period) + " s, max dev=" + fmt(dev) + ", band=" + fmt(band));
}

// ---- criterion 7: structural property checks ----
void criterion7() {
    std::ostringstream detail;
    bool ok = true;

    {  // quadrature exactness to degree 2n-1
        const auto d = Distribution::make_uniform(-1.0, 1.0);
        const auto r = gauss_rule(d, 6);
        double worst = 0.0;
        for (unsigned p = 0; p <= 11; ++p) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i)
                s += std::pow(r.nodes[i], p) * r.weights[i];
            const double ref = (p % 2 == 0) ? 1.0 / (p + 1.0) : 0.0;
            worst = std::max(worst, std::abs(s - ref));
        }
        ok = ok && worst < 1e-9;
        detail << "quad=" << fmt(worst);
    }

    {  // orthogonality of the rebuilt basis
        const auto g = tensor_grid(RandomDomain({Distribution::make_uniform(340, 460)}), {40});
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        std::vector<GridFunction> cands{GridFunction(g, 1.0)};
        for (int j = 0; j < 5; ++j) {
            std::vector<double> vals(g->size());
            for (std::size_t i = 0; i < vals.size(); ++i) {
                const double y = (g->node(i, 0) - 400.0) / 60.0;
                vals[i] = coef(rng) + y * (coef(rng) + y * (coef(rng) + y * coef(rng)));
            }
            cands.emplace_back(g, std::move(vals));
        }
        const Basis b = gram_schmidt(cands);
        double worst = 0.0;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                worst = std::max(worst,
                                 std::abs(inner(b.psi(i), b.psi(j))) /
                                     std::sqrt(b.squared_norm(i) * b.squared_norm(j)));
        ok = ok && worst < 1e-10;
        detail << ", orth=" << fmt(worst);

        {  // modal transfer: mean preserved, variance not inflated
            const Basis small = gpc_basis(g, 4);
            const Basis big = gpc_basis(g, 2);
            ModalState st;
            st.basis = std::make_shared<const Basis>(small);
            st.U = Eigen::MatrixXd::Zero(1, static_cast<Eigen::Index>(small.size()));
            st.V = st.U;
            for (std::size_t j = 0; j < small.size(); ++j)
                st.U(0, static_cast<Eigen::Index>(j)) = coef(rng);
            const ModalState moved =
                transfer_modes(st, std::make_shared<const Basis>(big));
            std::vector<double> c_old(small.size()), c_new(big.size());
            for (std::size_t j = 0; j < c_old.size(); ++j)
                c_old[j] = st.U(0, static_cast<Eigen::Index>(j));
            for (std::size_t j = 0; j < c_new.size(); ++j)
                c_new[j] = moved.U(0, static_cast<Eigen::Index>(j));
            const Moments before = mean_var(small, c_old);
            const Moments after = mean_var(big, c_new);
            const double mean_dev = std::abs(after.mean - before.mean);
            ok = ok && mean_dev < 1e-12 && after.variance <= before.variance + 1e-12;
            detail << ", transfer=" << fmt(mean_dev);
        }
    }

    {  // RK4 observed order
        auto accel = [](double, const double* u, const double*, double* a) {
            a[0] = -4.0 * u[0];
        };
        auto err = [&](double h) {
            double u = 1.0, v = 0.0;
            const auto steps = static_cast<std::size_t>(std::llround(5.0 / h));
            for (std::size_t i = 0; i < steps; ++i)
                rk4_step_scalar(accel, i * h, h, 1, &u, &v);
            return std::abs(u - std::cos(10.0));
        };
        const double order = std::log2(err(0.01) / err(0.005));
        ok = ok && order >= 3.8 && order <= 4.2;
        detail << ", rk4=" << fmt(order);
    }

    {  // sampling error slope vs n
        const auto g = tensor_grid(RandomDomain({Distribution::make_uniform(340, 460)}), {1});
        const auto model = make_free_sdof(g, 100.0, Param::axis(0), 3, 0.05, 0.2);
        RandomDomain dom({Distribution::make_uniform(340.0, 460.0)});
        const TimeGrid tg(0.05, 10.0);
        const ExactSDOFReference ref(100.0, 340.0, 460.0, 0.05, 0.2);
        const double exact = exact_moments(ref, 10.0).u.mean;
        double e_small = 0.0, e_big = 0.0;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            e_small += std::abs(monte_carlo(model, dom, 500, seed, tg).mean_u[0].back() -
                                exact);
            e_big += std::abs(monte_carlo(model, dom, 32000, seed, tg).mean_u[0].back() -
                              exact);
        }
        const double slope = std::log(e_big / e_small) / std::log(64.0);
        ok = ok && slope >= -0.65 && slope <= -0.35;
        detail << ", mc_slope=" << fmt(slope);
    }

    {  // error-metric axioms
        const TimeGrid tg(0.5, 5.0);
        std::vector<double> f(tg.N + 1, 0.37), zero(tg.N + 1, 0.0);
        const double off = errors(f, zero, tg).global;
        const bool metric_ok = errors(zero, zero, tg).global == 0.0 &&
                               std::abs(off - 0.37 * 11.0 / 10.0) < 1e-14;
        ok = ok && metric_ok;
        detail << ", metric=" << (metric_ok ? "ok" : "bad");
    }

    report(7, "property suite: quadrature, orthogonality, transfer, rk4, sampling, metric",
           ok, detail.str());
}

// ---- criterion 8: byte-identical reruns ----
void criterion8() {
    const Scenario sc = parse_scenario(kData / "nonlinear_sdof.scn");
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const auto base = std::filesystem::temp_directory_path() / "fsc_acceptance";
    RunOptions a, b;
    a.out_dir = base / "rerun_a";
    b.out_dir = base / "rerun_b";
    std::filesystem::remove_all(a.out_dir);
    std::filesystem::remove_all(b.out_dir);
    run_scenario(sc, a);
    run_scenario(sc, b);
    bool ok = true;
    for (const char* name : {"moments_fsc.csv", "moments_mc.csv", "errors.csv"})
        ok = ok && slurp(a.out_dir / name) == slurp(b.out_dir / name) &&
             !slurp(a.out_dir / name).empty();
    report(8, "identical scenario and seed produce byte-identical CSV output", ok,
           ok ? "3 files compared equal" : "byte mismatch");
}

}  // namespace

int main(int argc, char** argv) {
    bool long_run = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--long") == 0) long_run = true;
    (void)long_run;  // all checks fit the fast budget; kept for symmetry

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();

    if (g_failures > 0) {
        std::printf("%d criterion check(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
