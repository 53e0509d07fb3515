#include <atomic>
#include <cstdio>
#include <thread>

#include "CLI11.hpp"
#include "fsc/scenario.hpp"

namespace {

struct SweepRange {
    std::string key;
    std::vector<std::size_t> values;
};

// "P=3..7" or "P=3,5,7"
SweepRange parse_sweep_param(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
        throw CLI::ValidationError("--param", "expected <key>=<lo>..<hi> or <key>=v1,v2,...");
    SweepRange r;
    r.key = spec.substr(0, eq);
    const std::string rest = spec.substr(eq + 1);
    try {
        if (const auto dots = rest.find(".."); dots != std::string::npos) {
            const auto lo = std::stoul(rest.substr(0, dots));
            const auto hi = std::stoul(rest.substr(dots + 2));
            if (hi < lo) throw std::invalid_argument("empty range");
            for (auto v = lo; v <= hi; ++v) r.values.push_back(v);
        } else {
            std::size_t pos = 0;
            while (pos < rest.size()) {
                auto comma = rest.find(',', pos);
                if (comma == std::string::npos) comma = rest.size();
                r.values.push_back(std::stoul(rest.substr(pos, comma - pos)));
                pos = comma + 1;
            }
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--param", "malformed value list '" + rest + "'");
    }
    if (r.values.empty()) throw CLI::ValidationError("--param", "no values given");
    return r;
}

void apply_sweep_value(fsc::Scenario& sc, const std::string& key, std::size_t v) {
    if (key == "P") sc.P = v;
    else if (key == "flow_order") sc.flow_order = v;
    else if (key == "update_every") sc.update_every = v;
    else if (key == "warmup_index_bound") sc.warmup_index_bound = v;
    else throw CLI::ValidationError("--param", "unsupported sweep key '" + key + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flow-driven spectral propagation of uncertainty in structural dynamics"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = "out";
    std::string param_spec;
    std::string at2_in, at2_out;
    std::optional<std::uint64_t> seed;
    std::size_t jobs = 1;
    bool long_run = false;

    auto add_common = [&](CLI::App* cmd, bool with_jobs) {
        cmd->add_option("scenario", scenario_path, "scenario file")->required();
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--seed", seed, "override the scenario seed");
        cmd->add_flag("--long", long_run, "use the scenario's long duration");
        if (with_jobs) cmd->add_option("--jobs", jobs, "parallel worker count");
    };

    CLI::App* run = app.add_subcommand("run", "run one scenario and write moment histories");
    add_common(run, false);

    CLI::App* sweep = app.add_subcommand("sweep", "run a scenario across a parameter range");
    add_common(sweep, true);
    sweep->add_option("--param", param_spec, "range, e.g. P=3..7")->required();

    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo reference run only");
    add_common(mc, false);

    CLI::App* conv =
        app.add_subcommand("convert-at2", "convert a PEER AT2 record to the plain format");
    conv->add_option("input", at2_in, "AT2 file")->required();
    conv->add_option("output", at2_out, "plain-text record")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (conv->parsed()) {
            fsc::convert_at2(at2_in, at2_out);
            return 0;
        }

        fsc::Scenario sc = fsc::parse_scenario(scenario_path);
        fsc::RunOptions opt;
        opt.out_dir = out_dir;
        opt.long_run = long_run;
        opt.seed_override = seed;

        if (run->parsed()) return fsc::run_scenario(sc, opt);
        if (mc->parsed()) return fsc::run_monte_carlo(sc, opt);

        // sweep
        const SweepRange range = parse_sweep_param(param_spec);
        std::atomic<std::size_t> next{0};
        std::atomic<int> status{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= range.values.size()) return;
                fsc::Scenario variant = sc;
                apply_sweep_value(variant, range.key, range.values[i]);
                fsc::RunOptions vopt = opt;
                vopt.out_dir =
                    opt.out_dir / (range.key + std::to_string(range.values[i]));
                try {
                    fsc::run_scenario(variant, vopt);
                    std::printf("%s=%zu done -> %s\n", range.key.c_str(), range.values[i],
                                vopt.out_dir.string().c_str());
                } catch (const std::exception& e) {
                    std::fprintf(stderr, "%s=%zu failed: %s\n", range.key.c_str(),
                                 range.values[i], e.what());
                    status.store(1);
                }
            }
        };
        const std::size_t n_workers = std::max<std::size_t>(1, std::min(jobs, range.values.size()));
        std::vector<std::thread> pool;
        for (std::size_t w = 1; w < n_workers; ++w) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        return status.load();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
