#include "fsc/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fsc {

namespace {

[[noreturn]] void fail_line(const std::filesystem::path& path, std::size_t line,
                            const std::string& what) {
    throw ParseError(path.string() + ":" + std::to_string(line) + ": " + what);
}

double to_double(const std::string& tok, const std::filesystem::path& path, std::size_t line) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &pos);
    } catch (const std::exception&) {
        fail_line(path, line, "expected a number, got '" + tok + "'");
    }
    if (pos != tok.size()) fail_line(path, line, "expected a number, got '" + tok + "'");
    return v;
}

std::size_t to_size(const std::string& tok, const std::filesystem::path& path,
                    std::size_t line) {
    const double v = to_double(tok, path, line);
    if (v < 0 || v != std::floor(v))
        fail_line(path, line, "expected a non-negative integer, got '" + tok + "'");
    return static_cast<std::size_t>(v);
}

struct ParamSpec {
    bool is_const = false;
    double const_value = 0.0;
    Distribution dist;
};

}  // namespace

Scenario parse_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file " + path.string());

    Scenario sc;
    sc.name = path.stem().string();

    std::map<std::string, ParamSpec> specs;
    std::vector<std::string> axis_names;  // declaration order of random params
    std::vector<std::size_t> quad_counts;
    std::map<std::string, bool> seen;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        const std::string& key = tok[0];
        const auto args = tok.size() - 1;
        auto arg = [&](std::size_t i) -> const std::string& { return tok[i + 1]; };
        auto need = [&](std::size_t n) {
            if (args != n)
                fail_line(path, lineno, "key '" + key + "' takes " + std::to_string(n) +
                                            " value(s), got " + std::to_string(args));
        };
        if (key != "param" && key != "quad" && seen[key])
            fail_line(path, lineno, "duplicate key '" + key + "'");
        seen[key] = true;

        if (key == "name") {
            need(1);
            sc.name = arg(0);
        } else if (key == "model") {
            need(1);
            const std::string& m = arg(0);
            if (m == "free_sdof") sc.model = ModelKind::FreeSdof;
            else if (m == "forced_sdof") sc.model = ModelKind::ForcedSdof;
            else if (m == "nonlinear_sdof") sc.model = ModelKind::NonlinearSdof;
            else if (m == "building3") sc.model = ModelKind::Building3;
            else fail_line(path, lineno, "unknown model '" + m + "'");
        } else if (key == "mass") {
            need(1);
            sc.mass = to_double(arg(0), path, lineno);
        } else if (key == "param") {
            if (args < 3) fail_line(path, lineno, "param needs: <name> <kind> <values...>");
            const std::string& pname = arg(0);
            if (specs.count(pname)) fail_line(path, lineno, "duplicate param '" + pname + "'");
            const std::string& kind = arg(1);
            ParamSpec spec;
            try {
                if (kind == "const") {
                    need(3);
                    spec.is_const = true;
                    spec.const_value = to_double(arg(2), path, lineno);
                } else if (kind == "uniform") {
                    need(4);
                    spec.dist = Distribution::make_uniform(to_double(arg(2), path, lineno),
                                                     to_double(arg(3), path, lineno));
                } else if (kind == "beta") {
                    need(6);
                    spec.dist = Distribution::make_beta(
                        to_double(arg(2), path, lineno), to_double(arg(3), path, lineno),
                        to_double(arg(4), path, lineno), to_double(arg(5), path, lineno));
                } else if (kind == "gamma") {
                    need(5);
                    spec.dist = Distribution::make_gamma(to_double(arg(2), path, lineno),
                                                    to_double(arg(3), path, lineno),
                                                    to_double(arg(4), path, lineno));
                } else {
                    fail_line(path, lineno, "unknown distribution '" + kind + "'");
                }
            } catch (const std::invalid_argument& e) {
                fail_line(path, lineno, std::string("param '") + pname + "': " + e.what());
            }
            specs.emplace(pname, spec);
            if (!spec.is_const) axis_names.push_back(pname);
        } else if (key == "quad") {
            if (args == 0) fail_line(path, lineno, "quad needs at least one point count");
            for (std::size_t i = 0; i < args; ++i)
                quad_counts.push_back(to_size(arg(i), path, lineno));
        } else if (key == "u0") {
            need(1);
            sc.u0 = to_double(arg(0), path, lineno);
        } else if (key == "v0") {
            need(1);
            sc.v0 = to_double(arg(0), path, lineno);
        } else if (key == "dt") {
            need(1);
            sc.dt = to_double(arg(0), path, lineno);
        } else if (key == "T") {
            need(1);
            sc.T = to_double(arg(0), path, lineno);
        } else if (key == "desk_T") {
            need(1);
            sc.desk_T = to_double(arg(0), path, lineno);
        } else if (key == "P") {
            need(1);
            sc.P = to_size(arg(0), path, lineno);
        } else if (key == "flow_order") {
            need(1);
            sc.flow_order = to_size(arg(0), path, lineno);
        } else if (key == "warmup") {
            need(1);
            sc.warmup = to_double(arg(0), path, lineno);
        } else if (key == "warmup_index_bound") {
            need(1);
            sc.warmup_index_bound = to_size(arg(0), path, lineno);
        } else if (key == "drop_tol") {
            need(1);
            sc.drop_tol = to_double(arg(0), path, lineno);
        } else if (key == "update_every") {
            need(1);
            sc.update_every = to_size(arg(0), path, lineno);
        } else if (key == "compare") {
            if (args == 1 && arg(0) == "none") {
                sc.compare = CompareKind::None;
            } else if (args == 1 && arg(0) == "exact") {
                sc.compare = CompareKind::Exact;
            } else if (args == 2 && arg(0) == "mc") {
                sc.compare = CompareKind::MonteCarlo;
                sc.mc_samples = to_size(arg(1), path, lineno);
            } else {
                fail_line(path, lineno, "compare takes 'none', 'exact' or 'mc <n>'");
            }
        } else if (key == "seed") {
            need(1);
            sc.seed = to_size(arg(0), path, lineno);
        } else if (key == "ground_motion") {
            need(1);
            std::filesystem::path p = arg(0);
            sc.ground_motion = p.is_absolute() ? p : path.parent_path() / p;
        } else if (key == "unit_scale") {
            need(1);
            sc.unit_scale = to_double(arg(0), path, lineno);
        } else if (key == "reference_points") {
            need(1);
            sc.reference_points = to_size(arg(0), path, lineno);
        } else {
            fail_line(path, lineno, "unknown key '" + key + "'");
        }
    }

    // ---- validation ----
    auto require = [&](const char* field, bool ok) {
        if (!ok) throw ValidationError(path.string() + ": field '" + std::string(field) +
                                       "' is missing or invalid");
    };
    require("dt", sc.dt > 0.0);
    require("T", sc.T > 0.0);
    require("desk_T", sc.desk_T == 0.0 || sc.desk_T <= sc.T);
    require("P", sc.P >= 2);
    require("flow_order", sc.flow_order >= 1);
    require("warmup", sc.warmup >= 0.0 &&
                          sc.warmup <= (sc.desk_T > 0.0 ? sc.desk_T : sc.T));
    require("update_every", sc.update_every >= 1);
    require("mass", sc.mass > 0.0);
    require("unit_scale", sc.unit_scale > 0.0);
    require("reference_points", sc.reference_points >= 2);

    std::vector<const char*> wanted;
    switch (sc.model) {
        case ModelKind::FreeSdof: wanted = {"k"}; break;
        case ModelKind::ForcedSdof: wanted = {"k", "q"}; break;
        case ModelKind::NonlinearSdof: wanted = {"k", "rho"}; break;
        case ModelKind::Building3: wanted = {"k1", "k2", "k3", "alpha", "beta"}; break;
    }
    for (const char* w : wanted)
        if (!specs.count(w))
            throw ValidationError(path.string() + ": model requires param '" +
                                  std::string(w) + "'");
    for (const auto& [pname, spec] : specs) {
        (void)spec;
        if (std::find_if(wanted.begin(), wanted.end(),
                         [&](const char* w) { return pname == w; }) == wanted.end())
            throw ValidationError(path.string() + ": param '" + pname +
                                  "' is not used by this model");
    }
    require("param", !axis_names.empty());
    for (std::size_t n : quad_counts)
        if (n == 0)
            throw ValidationError(path.string() + ": quadrature counts must be positive");
    if (quad_counts.size() != axis_names.size())
        throw ValidationError(path.string() + ": quad lists " +
                              std::to_string(quad_counts.size()) + " counts for " +
                              std::to_string(axis_names.size()) + " random parameter(s)");
    if (sc.model == ModelKind::Building3)
        require("ground_motion", !sc.ground_motion.empty());
    if (sc.compare == CompareKind::Exact && sc.model != ModelKind::FreeSdof &&
        sc.model != ModelKind::ForcedSdof)
        throw ValidationError(path.string() +
                              ": compare 'exact' is only available for free_sdof (uniform "
                              "stiffness) and forced_sdof");
    if (sc.compare == CompareKind::Exact && sc.model == ModelKind::FreeSdof &&
        specs.at("k").dist.kind != DistKind::Uniform)
        throw ValidationError(path.string() +
                              ": compare 'exact' for free_sdof needs uniform stiffness");
    if (sc.compare == CompareKind::MonteCarlo && sc.mc_samples < 2)
        throw ValidationError(path.string() + ": compare 'mc' needs at least 2 samples");

    for (const std::string& an : axis_names) sc.axes.push_back(specs.at(an).dist);
    sc.quad_counts = quad_counts;
    for (const auto& [pname, spec] : specs) {
        if (spec.is_const) {
            sc.params.emplace(pname, Param::constant(spec.const_value));
        } else {
            const auto it = std::find(axis_names.begin(), axis_names.end(), pname);
            sc.params.emplace(pname, Param::axis(static_cast<std::size_t>(
                                         std::distance(axis_names.begin(), it))));
        }
    }
    return sc;
}

GroundMotionRecord load_ground_motion(const std::filesystem::path& path, double unit_scale) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ground-motion file " + path.string());
    std::string raw;
    std::size_t lineno = 0;
    GroundMotionRecord rec;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!have_header) {
            if (tok.size() != 2 || tok[0] != "dt")
                fail_line(path, lineno, "expected header 'dt <seconds>'");
            rec.dt = to_double(tok[1], path, lineno);
            if (rec.dt <= 0.0) fail_line(path, lineno, "dt must be positive");
            have_header = true;
        } else {
            if (tok.size() != 1) fail_line(path, lineno, "expected one acceleration per line");
            rec.samples.push_back(to_double(tok[0], path, lineno) * unit_scale);
        }
    }
    if (!have_header) throw ParseError(path.string() + ": missing 'dt' header");
    if (rec.samples.size() < 2)
        throw ParseError(path.string() + ": record needs at least 2 samples");
    return rec;
}

void save_ground_motion(const std::filesystem::path& path, const GroundMotionRecord& record,
                        double unit_scale) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    char buf[64];
    std::snprintf(buf, sizeof buf, "dt %.17g\n", record.dt);
    out << buf;
    for (double a : record.samples) {
        std::snprintf(buf, sizeof buf, "%.17g\n", a / unit_scale);
        out << buf;
    }
}

void convert_at2(const std::filesystem::path& in_path, const std::filesystem::path& out_path) {
    std::ifstream in(in_path);
    if (!in) throw ParseError("cannot open " + in_path.string());
    // PEER AT2: text header lines, one of which carries "NPTS= n, DT= x SEC",
    // followed by whitespace-separated accelerations in g.
    GroundMotionRecord rec;
    std::string raw;
    std::size_t lineno = 0;
    bool have_dt = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string upper = raw;
        std::transform(upper.begin(), upper.end(), upper.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        const auto dt_pos = upper.find("DT=");
        if (!have_dt && dt_pos != std::string::npos) {
            std::istringstream ds(raw.substr(dt_pos + 3));
            if (!(ds >> rec.dt) || rec.dt <= 0.0)
                fail_line(in_path, lineno, "malformed DT= field");
            have_dt = true;
            continue;
        }
        if (!have_dt) continue;  // still in the header
        std::istringstream ls(raw);
        double v = 0.0;
        while (ls >> v) rec.samples.push_back(v);  // stays in g units
    }
    if (!have_dt) throw ParseError(in_path.string() + ": no 'DT=' header found");
    if (rec.samples.size() < 2)
        throw ParseError(in_path.string() + ": record needs at least 2 samples");
    save_ground_motion(out_path, rec, 1.0);  // values already in g
}

}  // namespace fsc
