#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fsc/scenario.hpp"

namespace py = pybind11;
using namespace fsc;

namespace {

py::dict series_to_dict(const MomentSeries& s) {
    py::dict out;
    out["t"] = s.t;
    py::list mu, vu, mv, vv;
    for (std::size_t d = 0; d < s.mean_u.size(); ++d) {
        mu.append(s.mean_u[d]);
        vu.append(s.var_u[d]);
        mv.append(s.mean_v[d]);
        vv.append(s.var_v[d]);
    }
    out["mean_u"] = mu;
    out["var_u"] = vu;
    out["mean_v"] = mv;
    out["var_v"] = vv;
    return out;
}

RunOptions make_options(const std::filesystem::path& out_dir, bool long_run,
                        std::optional<std::uint64_t> seed) {
    RunOptions opt;
    opt.out_dir = out_dir;
    opt.long_run = long_run;
    opt.seed_override = seed;
    return opt;
}

}  // namespace

PYBIND11_MODULE(_fscpy, m) {
    m.doc() = "spectral propagation of parametric uncertainty through "
              "second-order dynamical systems";

    py::register_exception<ParseError>(m, "ScenarioParseError");
    py::register_exception<ValidationError>(m, "ScenarioValidationError");
    py::register_exception<DegenerateBasisError>(m, "DegenerateBasisError");
    py::register_exception<DivergenceError>(m, "DivergenceError");

    py::class_<Distribution>(m, "Distribution")
        .def_static("uniform", &Distribution::make_uniform, py::arg("a"), py::arg("b"))
        .def_static("beta", &Distribution::make_beta, py::arg("alpha"), py::arg("beta"),
                    py::arg("a"), py::arg("b"))
        .def_static("gamma", &Distribution::make_gamma, py::arg("shape"), py::arg("scale"),
                    py::arg("shift"))
        .def("pdf", [](const Distribution& d, double x) { return density(d, x); },
             py::arg("x"))
        .def("mean", [](const Distribution& d) { return moments(d).mean; })
        .def("variance", [](const Distribution& d) { return moments(d).variance; });

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("name", &Scenario::name)
        .def_readonly("mass", &Scenario::mass)
        .def_readonly("dt", &Scenario::dt)
        .def_readonly("T", &Scenario::T)
        .def_readonly("desk_T", &Scenario::desk_T)
        .def_readonly("P", &Scenario::P)
        .def_readonly("seed", &Scenario::seed)
        .def_readonly("quad_counts", &Scenario::quad_counts)
        .def_property_readonly("n_axes",
                               [](const Scenario& s) { return s.axes.size(); });

    m.def("parse_scenario", &parse_scenario, py::arg("path"),
          "Load and validate a .scn scenario file.");

    m.def(
        "run_scenario",
        [](const Scenario& sc, const std::filesystem::path& out_dir, bool long_run,
           std::optional<std::uint64_t> seed) {
            return run_scenario(sc, make_options(out_dir, long_run, seed));
        },
        py::arg("scenario"), py::arg("out_dir"), py::arg("long_run") = false,
        py::arg("seed") = py::none(),
        "Execute the full pipeline and write CSV/JSON outputs; returns the exit status.");

    m.def(
        "propagate",
        [](const Scenario& sc, bool long_run) {
            const RunOptions opt = make_options(".", long_run, std::nullopt);
            GridPtr grid;
            RandomDomain dom(sc.axes);
            const ModelPtr model = build_model(sc, opt, &grid, &dom);
            const FscConfig cfg = build_config(sc, opt);
            const FscResult res = run_fsc(model, cfg);
            return series_to_dict(res.series);
        },
        py::arg("scenario"), py::arg("long_run") = false,
        "Run the spectral propagation in memory and return the moment histories.");

    m.def(
        "monte_carlo",
        [](const Scenario& sc, std::size_t n, std::uint64_t seed, bool long_run) {
            const RunOptions opt = make_options(".", long_run, std::nullopt);
            GridPtr grid;
            RandomDomain dom(sc.axes);
            const ModelPtr model = build_model(sc, opt, &grid, &dom);
            const FscConfig cfg = build_config(sc, opt);
            return series_to_dict(monte_carlo(model, dom, n, seed, cfg.time));
        },
        py::arg("scenario"), py::arg("n"), py::arg("seed") = 42,
        py::arg("long_run") = false,
        "Plain sampling reference for the same scenario; returns moment histories.");

    m.def(
        "exact_free_sdof",
        [](double mass, double k_lo, double k_hi, double u0, double v0, double t) {
            const ExactSDOFReference ref(mass, k_lo, k_hi, u0, v0);
            const ExactMoments em = exact_moments(ref, t);
            py::dict out;
            out["mean_u"] = em.u.mean;
            out["var_u"] = em.u.variance;
            out["mean_v"] = em.v.mean;
            out["var_v"] = em.v.variance;
            out["mean_a"] = em.a.mean;
            out["var_a"] = em.a.variance;
            return out;
        },
        py::arg("mass"), py::arg("k_lo"), py::arg("k_hi"), py::arg("u0"), py::arg("v0"),
        py::arg("t"),
        "Closed-form statistics of the free oscillator with uniform stiffness.");

    m.def(
        "global_error",
        [](const std::vector<double>& f, const std::vector<double>& ref, double dt,
           double T) { return errors(f, ref, TimeGrid(dt, T)).global; },
        py::arg("f"), py::arg("reference"), py::arg("dt"), py::arg("T"),
        "Time-averaged absolute deviation between two sampled histories.");

    m.def("convert_at2", &convert_at2, py::arg("input"), py::arg("output"),
          "Convert a PEER AT2 accelerogram to the plain-text record format.");
}
