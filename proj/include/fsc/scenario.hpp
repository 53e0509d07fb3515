#pragma once

#include <filesystem>
#include <map>

#include "fsc/validate.hpp"

namespace fsc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ModelKind { FreeSdof, ForcedSdof, NonlinearSdof, Building3 };
enum class CompareKind { None, Exact, MonteCarlo };

/// Declarative description of one run: model, random domain, quadrature,
/// FSC configuration and comparison target.
struct Scenario {
    std::string name;
    ModelKind model = ModelKind::FreeSdof;
    double mass = 1.0;
    /// Model parameters by name; constants or distributions. Distribution
    /// parameters occupy random-domain axes in declaration order.
    std::map<std::string, Param> params;
    std::vector<Distribution> axes;
    std::vector<std::size_t> quad_counts;
    double u0 = 0.0, v0 = 0.0;
    double dt = 0.0;
    double T = 0.0;       // full duration, used under --long
    double desk_T = 0.0;  // default (short) duration; 0 means same as T
    std::size_t P = 5;
    std::size_t flow_order = 3;
    double warmup = 0.0;
    std::size_t warmup_index_bound = 6;
    double drop_tol = 1e-10;
    std::size_t update_every = 1;
    CompareKind compare = CompareKind::None;
    std::size_t mc_samples = 0;
    std::uint64_t seed = 0;
    std::filesystem::path ground_motion;  // building3 only
    double unit_scale = 9.80665;
    std::size_t reference_points = 400;  // forced-reference stiffness rule
};

/// Parse and validate a scenario file. Unknown keys are rejected; parse
/// errors carry the line number, validation errors the field name.
Scenario parse_scenario(const std::filesystem::path& path);

/// Plain-text record: header line "dt <seconds>", then one acceleration per
/// line in g units; unit_scale is applied on load.
GroundMotionRecord load_ground_motion(const std::filesystem::path& path,
                                      double unit_scale = 9.80665);
void save_ground_motion(const std::filesystem::path& path, const GroundMotionRecord& record,
                        double unit_scale = 9.80665);

/// Convert a PEER AT2 record to the plain-text format.
void convert_at2(const std::filesystem::path& in, const std::filesystem::path& out);

struct RunOptions {
    std::filesystem::path out_dir = ".";
    bool long_run = false;
    std::optional<std::uint64_t> seed_override;
};

/// Execute the scenario pipelines and write moments_fsc.csv, optional
/// moments_exact.csv / moments_mc.csv, errors.csv and a run.json manifest.
/// Returns the process exit status.
int run_scenario(const Scenario& scenario, const RunOptions& options);

/// Monte Carlo pipeline only: writes moments_mc.csv and the manifest.
int run_monte_carlo(const Scenario& scenario, const RunOptions& options);

/// Pieces reused by the acceptance suite.
ModelPtr build_model(const Scenario& scenario, const RunOptions& options, GridPtr* grid_out,
                     RandomDomain* domain_out);
FscConfig build_config(const Scenario& scenario, const RunOptions& options);

}  // namespace fsc
